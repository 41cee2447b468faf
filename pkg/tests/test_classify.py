from __future__ import annotations

import json
from math import comb

import pytest

from conftest import find_class
from flagroots.classify import (CheckReport, _classes_as_reference,
                                cross_group_families, emit_table,
                                load_reference_table, verify_paper_claims)
from flagroots.isomorph import find_isomorphism
from flagroots.rootsys import CartanType

EXPECTED_CLASS_COUNTS = {"E6": 12, "E7": 24, "E8": 32, "F4": 7, "G2": 1}


def test_class_counts(records):
    for lbl, want in EXPECTED_CLASS_COUNTS.items():
        assert len(records[CartanType.from_label(lbl)]) == want


def test_classification_matches_reference_table(records):
    reference = sorted(load_reference_table(),
                       key=lambda r: (r["group"], r["b2"], -r["d"], r["c"],
                                      r["v"], r["w"]))
    assert _classes_as_reference(records) == reference


def test_forms_per_rank_are_binomial(records):
    for group, recs in records.items():
        by_rank: dict[int, int] = {}
        for rec in recs:
            by_rank[rec.tuple.k] = by_rank.get(rec.tuple.k, 0) + rec.f
        for rank, total in by_rank.items():
            assert total == comb(group.rank, rank)


def test_class_members_share_isotropy(records):
    from flagroots.painted import isotropy_descriptor
    for recs in records.values():
        for rec in recs:
            keys = {isotropy_descriptor(p).factor_key for p in rec.paintings}
            assert len(keys) == 1


def test_class_separation_by_either_subkey(records):
    # both (k,d,c,v) and (k,d,v,w) separate the classes of each group
    for recs in records.values():
        kdcv = {(r.tuple.k, r.tuple.d, r.tuple.c, r.tuple.v) for r in recs}
        kdvw = {(r.tuple.k, r.tuple.d, r.tuple.v, r.tuple.w) for r in recs}
        assert len(kdcv) == len(recs)
        assert len(kdvw) == len(recs)


def test_prime_tags(records):
    e7 = records[CartanType.from_label("E7")]
    tags = {rec.isotropy_name for rec in e7 if rec.isotropy.prime_tag}
    assert tags == {
        "T^2·[A5]'", "T^2·[A5]''",
        "T^3·[A1·A3]'", "T^3·[A1·A3]''",
        "T^4·[A1·A1·A1]'", "T^4·[A1·A1·A1]''",
    }
    for rec in e7:
        if rec.isotropy.prime_tag == "'":
            assert rec.tuple.c > 1
        if rec.isotropy.prime_tag == "''":
            assert rec.tuple.c == 1
    for lbl in ("E6", "E8", "F4", "G2"):
        assert all(not rec.isotropy.prime_tag
                   for rec in records[CartanType.from_label(lbl)])


def test_within_class_paintings_are_isomorphic(records):
    from flagroots.classify import projected_system
    # spot-check: every painting of a rank <= 3 class with several members
    checked = 0
    for recs in records.values():
        for rec in recs:
            if rec.tuple.k > 3 or rec.f < 2:
                continue
            base = projected_system(rec.paintings[0])
            for other in rec.paintings[1:3]:
                assert find_isomorphism(base, projected_system(other)) is not None
                checked += 1
    assert checked > 20


def test_families(records):
    families = cross_group_families(records)
    multi3 = [(fam.tuple.key, tuple(g.label for g, _ in fam.members))
              for fam in families if fam.tuple.k >= 3 and len(fam.members) > 1]
    assert ((3, 16, 8, 7, 8), ("E7", "E8", "F4")) in multi3
    assert ((3, 13, 1, 6, 1), ("E7", "E8", "F4")) in multi3
    assert ((3, 10, 1, 7, 1), ("E6", "E7")) in multi3
    assert ((4, 24, 1, 12, 1), ("E7", "E8", "F4")) in multi3
    assert len(multi3) == 4
    for fam in families:
        if fam.tuple.k <= 3 and len(fam.members) > 1:
            assert fam.witnessed


def test_family_classical_labels(records):
    families = cross_group_families(records)
    by_key = {fam.tuple.key: fam for fam in families}
    assert by_key[(3, 9, 1, 3, 1)].classical == "C3"
    assert by_key[(3, 8, 1, 6, 1)].classical == "C3,2"
    assert by_key[(2, 6, 4, 2, 4)].classical == "BC2"
    assert by_key[(3, 16, 8, 7, 8)].classical is None


def test_emit_table_formats(records):
    md = emit_table(records, "markdown")
    assert "## rank 2" in md and "## rank 8" in md
    assert "A1·A1·A2·A2" in md
    assert md == emit_table(records, "markdown")  # deterministic

    csv = emit_table(records, "csv")
    lines = csv.strip().splitlines()
    assert lines[0] == "rank,d,c,v,w,group,isotropy,f,classical"
    assert len(lines) == 1 + 76

    rows = json.loads(emit_table(records, "json"))
    assert len(rows) == 55  # class families across the five groups
    assert {r["rank"] for r in rows} == {2, 3, 4, 5, 6, 7, 8}
    with pytest.raises(ValueError):
        emit_table(records, "html")


def test_golden_f_values(records):
    assert find_class(records, "E8", (2, 14, 144, 4, 36)).f == 2
    assert find_class(records, "E8", (3, 21, 6, 10, 3)).f == 8
    assert find_class(records, "E7", (3, 9, 1, 3, 1)).f == 1
    assert find_class(records, "F4", (4, 24, 1, 12, 1)).f == 1
    assert find_class(records, "E8", (5, 50, 2, 37, 2)).f == 21
    assert find_class(records, "E6", (2, 6, 2, 3, 2)).f == 5


def test_record_json(records):
    rec = find_class(records, "E7", (3, 9, 1, 3, 1))
    payload = rec.to_json()
    assert payload["isotropy"] == "T^3·D4"
    assert payload["classical"] == "C3"
    assert payload["paintings"] == ["E7:1000011"]


def test_check_report_mechanics():
    report = CheckReport()
    report.add("a", 1, 1)
    report.add("b", 1, 2)
    report.add("corollary_count_E8", 33, 32, documented=True)
    assert [c.status for c in report.claims] == ["pass", "fail", "discrepancy"]
    assert not report.ok()
    solo = CheckReport()
    solo.add("corollary_count_E8", 33, 32, documented=True)
    assert solo.ok() and not solo.ok(strict=True)
    assert "| fail | b | 1 | 2 |" in report.to_markdown()
    parsed = json.loads(report.to_json())
    assert parsed["summary"] == {"pass": 1, "fail": 1, "discrepancy": 1}


@pytest.fixture(scope="session")
def check_report():
    return verify_paper_claims()


def test_verify_paper_claims_passes(check_report):
    assert check_report.ok()
    by_name = {c.claim: c for c in check_report.claims}
    assert by_name["rank2_classes"].status == "pass"
    assert by_name["classification_table_rows"].status == "pass"
    assert by_name["corollary_count_E8"].status == "discrepancy"
    assert by_name["corollary_count_E8"].computed == 32
    assert by_name["corollary_count_total"].computed == 76
    assert by_name["kind1_count_E8"].computed == 7
    statuses = {c.status for c in check_report.claims}
    assert statuses == {"pass", "discrepancy"}


def test_verify_catches_corrupted_reference(tmp_path, records):
    rows = load_reference_table()
    rows[0]["f"] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rows), encoding="utf-8")
    report = verify_paper_claims(reference_path=str(bad))
    by_name = {c.claim: c for c in report.claims}
    assert by_name["classification_table_rows"].status == "fail"
    assert not report.ok()
