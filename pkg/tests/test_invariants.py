from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagroots.invariants import (InvariantTuple, UnsupportedRank,
                                  chambers_by_sign_vectors, count_chambers,
                                  distinct_lines, doubling_vertex_positives,
                                  doubling_vertices, hull_vertices,
                                  invariant_tuple, proportionality_profile,
                                  rank2_area_invariant)
from flagroots.painted import parse_painting
from flagroots.rootsys import (ClassicalTRootSpec, classical_troot_system,
                               positive_roots)
from flagroots.troots import TRootSystem, project
from oracles import brute_force_hull_vertices


def _proj(text):
    d = parse_painting(text)
    return project(positive_roots(d.group), d)


GOLDEN_TUPLES = [
    ("E8:00010010", (2, 14, 144, 4, 36)),   # T^2.A1A1A2A2
    ("E7:1000011", (3, 9, 1, 3, 1)),        # T^3.D4
    ("F4:1111", (4, 24, 1, 12, 1)),         # T^4
    ("E6:001010", (2, 6, 2, 3, 2)),         # T^2.A1A1A2
    ("E6:010011", (3, 8, 1, 6, 1)),         # T^3.A3
    ("F4:0011", (2, 9, 8, 3, 8)),           # T^2.A2
    ("G2:11", (2, 6, 1, 3, 1)),
    ("E6:111111", (6, 36, 1, 36, 1)),
]


@pytest.mark.parametrize("painting,key", GOLDEN_TUPLES)
def test_invariant_tuples(painting, key):
    assert invariant_tuple(_proj(painting)).key == key


def test_invariant_tuple_validation():
    with pytest.raises(ValueError):
        InvariantTuple(2, 3, 1, 4, 1)  # v > d
    with pytest.raises(ValueError):
        InvariantTuple(2, 3, 2, 3, 4)  # w does not divide c
    t = InvariantTuple(2, 14, 144, 4, 36)
    assert str(t) == "k=2, d=14, c=144, v=4, w=36"


def test_hull_square_with_midpoints():
    pts = [(1, 0), (-1, 0), (0, 1), (0, -1),
           (1, 1), (1, -1), (-1, 1), (-1, -1)]
    omega = TRootSystem.from_vectors(2, pts)
    assert hull_vertices(omega) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_hull_g2_long_roots():
    omega = _proj("G2:11")
    verts = hull_vertices(omega)
    assert len(verts) == 6
    assert verts == brute_force_hull_vertices(omega.vectors)


def test_hull_rank1():
    omega = TRootSystem.from_vectors(1, [(1,), (-1,), (2,), (-2,)])
    assert hull_vertices(omega) == {(2,), (-2,)}


def test_hull_matches_bruteforce_oracle():
    for text in ("E6:010101", "F4:0101", "E6:001010", "E7:1000011"):
        omega = _proj(text)
        assert hull_vertices(omega) == brute_force_hull_vertices(omega.vectors)
    for spec in (("C", 3, 1), ("BC", 2, 0)):
        omega = classical_troot_system(ClassicalTRootSpec(*spec))
        assert hull_vertices(omega) == brute_force_hull_vertices(omega.vectors)


def test_doubling_criterion_examples():
    omega = _proj("E7:1000011")
    verts = doubling_vertices(omega)
    assert len(verts) == 6
    assert verts == hull_vertices(omega)
    pos = doubling_vertex_positives(omega)
    assert len(pos) == 3
    omega = _proj("E8:00010010")
    assert len(hull_vertices(omega)) == 8


def test_doubling_rank1_variants():
    omega = TRootSystem.from_vectors(1, [(1,), (-1,), (2,), (-2,)])
    assert doubling_vertices(omega) == {(2,), (-2,)}
    single = TRootSystem.from_vectors(1, [(1,), (-1,)])
    assert doubling_vertices(single) == {(1,), (-1,)}


def test_proportionality_profile():
    omega = _proj("E7:1000011")
    i_map, j_map = proportionality_profile(omega)
    assert i_map[2] == 0 and i_map[3] == 0
    omega = _proj("F4:0011")  # c = 8 = 2^3
    i_map, j_map = proportionality_profile(omega)
    assert i_map[2] == 3 and i_map[3] == 0
    assert j_map[2] == 3
    # the alpha,3alpha class
    omega = _proj("E8:01100100")
    tup = invariant_tuple(omega)
    assert tup.key == (3, 21, 6, 10, 3)
    i_map, _ = proportionality_profile(omega)
    assert i_map[3] >= 1


def test_area_invariant_hexagon():
    omega = TRootSystem.from_vectors(
        2, [(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)])
    assert rank2_area_invariant(omega) == 6


def test_area_invariant_unit_cross():
    omega = TRootSystem.from_vectors(2, [(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert rank2_area_invariant(omega) == 4


def test_area_invariant_scale_invariance():
    from flagroots.troots import scaled
    omega = _proj("E6:001010")
    assert rank2_area_invariant(omega) == rank2_area_invariant(scaled(omega, 2))


def test_area_invariant_rank_guard():
    with pytest.raises(UnsupportedRank):
        rank2_area_invariant(_proj("E7:1000011"))


@given(st.sampled_from([(1, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1),
                        (2, 1, 1, 1), (1, 2, 1, 3), (0, 1, -1, 0),
                        (3, 2, 1, 1), (1, -1, 0, 1)]),
       st.sampled_from(["E6:001010", "G2:11", "F4:0011"]))
def test_area_invariant_unimodular_invariance(mat, painting):
    a, b, c, d = mat
    assert a * d - b * c != 0
    omega = _proj(painting)
    image = TRootSystem.from_vectors(
        2, [(a * x + b * y, c * x + d * y) for x, y in omega.vectors])
    assert rank2_area_invariant(image) == rank2_area_invariant(omega)


def test_invariant_tuple_independent_of_input_order():
    omega = _proj("F4:0011")
    shuffled = TRootSystem.from_vectors(
        omega.k, sorted(omega.vectors, reverse=True))
    assert invariant_tuple(shuffled).key == invariant_tuple(omega).key


def test_chambers_rank1():
    omega = TRootSystem.from_vectors(1, [(1,), (-1,)])
    assert count_chambers(omega) == 2


def test_chambers_rank2_is_twice_line_count():
    for text in ("G2:11", "F4:0011", "E6:001010", "E8:00010010"):
        omega = _proj(text)
        assert count_chambers(omega) == 2 * len(distinct_lines(omega))


def test_chambers_d9_rank3():
    omega = _proj("E7:1000011")
    assert count_chambers(omega) == 48
    assert chambers_by_sign_vectors(omega) == 48


def test_chambers_rank_bound():
    with pytest.raises(UnsupportedRank):
        count_chambers(_proj("F4:1111"))


def test_sign_oracle_guard():
    with pytest.raises(UnsupportedRank):
        chambers_by_sign_vectors(_proj("E8:00010010"), max_lines=3)


def test_b3_chambers():
    omega = classical_troot_system(ClassicalTRootSpec("B", 3))
    assert count_chambers(omega) == 48
    assert chambers_by_sign_vectors(omega) == 48
