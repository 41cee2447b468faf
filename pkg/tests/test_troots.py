from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from flagroots.painted import enumerate_paintings, parse_painting
from flagroots.rootsys import (CartanType, ClassicalTRootSpec,
                               classical_troot_system, positive_roots)
from flagroots.troots import (NotPositivelyGenerated, TRootError, TRootSystem,
                              g_of, module_dimension, positive_part, project,
                              scaled)

E7_D4 = parse_painting("E7:1000011")


def _proj(text):
    d = parse_painting(text)
    return project(positive_roots(d.group), d)


def test_projection_d9_example():
    omega = _proj("E7:1000011")
    assert len(omega.vectors) == 18
    assert omega.d == 9
    assert omega.k == 3


def test_projection_all_painted_is_bijective():
    omega = _proj("E6:111111")
    assert omega.d == 36
    assert set(omega.multiplicities.values()) == {1}


def test_projection_rank1():
    omega = _proj("A1:1")
    assert omega.vectors == ((-1,), (1,))


def test_projection_type_mismatch():
    d = parse_painting("E6:111111")
    with pytest.raises(TRootError):
        project(positive_roots(CartanType.from_label("E7")), d)


def test_positive_part_counts():
    omega = _proj("E8:00010010")
    assert len(positive_part(omega)) == 14
    omega = _proj("E7:1000011")
    assert len(positive_part(omega)) == 9


def test_positive_part_splits_system():
    omega = _proj("F4:0101")
    pos = positive_part(omega)
    neg = {tuple(-x for x in v) for v in pos}
    assert set(omega.vectors) == set(pos) | neg
    assert not set(pos) & neg


def test_positive_part_rejects_mixed_signs():
    omega = TRootSystem.from_vectors(2, [(1, -1), (-1, 1), (1, 0), (-1, 0)])
    with pytest.raises(NotPositivelyGenerated):
        positive_part(omega)


def test_fiber_sum_conservation_exhaustive():
    for lbl in ("E6", "E7", "F4", "G2"):
        group = CartanType.from_label(lbl)
        rs = positive_roots(group)
        for diagram in enumerate_paintings(group, 1):
            omega = project(rs, diagram)
            unpainted = [i for i, b in enumerate(diagram.paint) if not b]
            kernel = sum(
                1 for r in rs.positive_roots
                if all(r[i] == 0 for i in range(group.rank) if i not in unpainted))
            assert sum(omega.multiplicities.values()) \
                == 2 * (len(rs.positive_roots) - kernel)


def test_projection_kernel_is_unpainted_span():
    # a root restricts to zero iff it is supported on unpainted nodes
    group = CartanType.from_label("E7")
    rs = positive_roots(group)
    diagram = parse_painting("E7:1000011")
    painted = [i for i, b in enumerate(diagram.paint) if b]
    for root in rs.positive_roots:
        zero = all(root[i] == 0 for i in painted)
        supported_unpainted = all(root[i] == 0 for i in painted)
        assert zero == supported_unpainted
        if not zero:
            assert any(root[i] for i in painted)


def test_g_of_examples():
    assert g_of((2, 4, 6)) == 2
    assert g_of((1, 0, 3)) == 1
    omega = _proj("E6:010101")
    for i in range(omega.k):
        e = tuple(int(i == j) for j in range(omega.k))
        assert g_of(e, omega) == 1
    with pytest.raises(TRootError):
        g_of((0, 0))


def test_g_of_gcd_matches_definitional_everywhere():
    for lbl in ("E6", "E7", "F4", "G2"):
        group = CartanType.from_label(lbl)
        rs = positive_roots(group)
        for diagram in enumerate_paintings(group, 1):
            omega = project(rs, diagram)
            for v in omega.vectors:
                g_of(v, omega)  # raises on any disagreement


def test_module_dimensions_d9_example():
    omega = _proj("E7:1000011")
    mults = sorted(omega.multiplicities.values())
    assert mults.count(1) == 6
    assert mults.count(8) == 12
    assert sum(mults) == 102
    with pytest.raises(TRootError):
        module_dimension(omega, (9, 9, 9))


def test_negation_symmetry():
    omega = _proj("E8:00010010")
    for v in omega.vectors:
        neg = tuple(-x for x in v)
        assert neg in omega
        assert omega.multiplicity(v) == omega.multiplicity(neg)


def test_json_roundtrip():
    omega = _proj("F4:1010")
    again = TRootSystem.from_json(omega.to_json())
    assert again.k == omega.k
    assert again.vectors == omega.vectors
    assert again.multiplicities == omega.multiplicities


def test_abstract_systems_have_unit_multiplicity():
    omega = classical_troot_system(ClassicalTRootSpec("C", 3))
    assert set(omega.multiplicities.values()) == {1}


def test_validation_rejects_broken_systems():
    with pytest.raises(TRootError):
        TRootSystem.from_vectors(2, [(1, 0)])  # not symmetric
    with pytest.raises(TRootError):
        TRootSystem.from_vectors(2, [(0, 0), (1, 0), (-1, 0)])  # zero vector
    with pytest.raises(TRootError):
        TRootSystem(2, ((1, 0), (-1, 0)), {(1, 0): 2, (-1, 0): 1})


@given(st.integers(min_value=1, max_value=5),
       st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5))
def test_g_of_is_scale_covariant(s, coords):
    if not any(coords):
        coords[0] = 1
    v = tuple(coords)
    assert g_of(tuple(s * x for x in v)) == s * g_of(v)


def test_scaled_helper():
    omega = _proj("G2:11")
    dbl = scaled(omega, 2)
    assert dbl.d == omega.d
    assert all(tuple(2 * x for x in v) in dbl for v in omega.vectors)
