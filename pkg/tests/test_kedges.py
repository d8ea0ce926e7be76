import itertools
from math import comb

import pytest

from kncross.drawing import k4_census
from kncross.generators import gen_convex, gen_random_points
from kncross.kedges import (
    crossings_from_cumulative,
    crossings_from_k_edges,
    cumulative_sums,
    double_cumulative_bound_holds,
    hill_number,
    k_edge_vector,
    k_value,
    side_of,
)

from conftest import brute_k_vector


def test_hill_number_table():
    table = {5: 1, 6: 3, 7: 9, 8: 18, 9: 36, 10: 60, 11: 100, 12: 150}
    for n, value in table.items():
        assert hill_number(n) == value
    assert hill_number(3) == 0 and hill_number(4) == 0


def test_side_of_convex_k5():
    d = gen_convex(5)
    assert side_of(d, 0, 1, 2) == "L"
    assert side_of(d, 0, 2, 1) == "R"


def test_side_swap_property(small_corpus):
    # relative to edges from a common vertex a: if v is L for a->u
    # then u is R for a->v
    for _name, n, drawing in small_corpus[:6]:
        for a, u, v in itertools.permutations(range(min(n, 5)), 3):
            lhs = side_of(drawing, a, u, v)
            rhs = side_of(drawing, a, v, u)
            assert (lhs == "L") == (rhs == "R")


def test_k_value_orientation_independent(small_corpus):
    for _name, _n, drawing in small_corpus:
        for (u, v) in drawing.edges:
            assert k_value(drawing, (u, v)) == k_value(drawing, (v, u))


def test_k_values_convex_k5():
    d = gen_convex(5)
    assert k_value(d, (0, 1)) == 0    # hull edge
    assert k_value(d, (0, 2)) == 1    # diagonal


def test_k_vector_planar_k4(k4_planar):
    assert k_edge_vector(k4_planar).counts == (3, 3)


def test_k_vector_crossed_k4_both_face_types(k4_crossed):
    assert k_edge_vector(k4_crossed).counts == (4, 2)
    for face in range(k4_crossed.face_count):
        if face == k4_crossed.reference_face:
            continue
        assert k_edge_vector(k4_crossed.with_reference(face)).counts == (4, 2)


def test_k_vector_convex_k6():
    d = gen_convex(6)
    vec = k_edge_vector(d)
    assert vec.counts == (6, 6, 3)
    sums = cumulative_sums(vec)
    assert sums.single == (6, 12, 15)
    assert sums.double == (6, 18, 33)


def test_k_vector_sums_to_edge_count(small_corpus):
    for _name, n, drawing in small_corpus:
        assert sum(k_edge_vector(drawing).counts) == comb(n, 2)


def test_vector_matches_geometric_oracle():
    # independent oracle: orientation side counts on the raw points
    for seed in range(10):
        n = 5 + seed % 4
        d = gen_random_points(n, 40 + seed)
        assert k_edge_vector(d).counts == brute_k_vector(d.geometry.points)
    for n in range(4, 9):
        d = gen_convex(n)
        assert k_edge_vector(d).counts == brute_k_vector(d.geometry.points)


def test_crossing_identities(small_corpus):
    for _name, _n, drawing in small_corpus:
        assert crossings_from_k_edges(drawing) == drawing.crossings
        assert crossings_from_cumulative(drawing) == drawing.crossings


def test_weighted_pair_count_identity(small_corpus):
    # 3P + 2N equals the weighted k-edge sum
    for _name, n, drawing in small_corpus:
        census = k4_census(drawing)
        vec = k_edge_vector(drawing).counts
        weighted = sum(k * (n - 2 - k) * ek for k, ek in enumerate(vec))
        assert 3 * census.planar + 2 * census.crossed == weighted


def test_zero_edges_on_reference_face(small_corpus):
    for _name, _n, drawing in small_corpus:
        ref = drawing.reference_face
        for eid, segs in enumerate(drawing.seg_faces):
            if any(ref in pair for pair in segs):
                assert k_value(drawing, drawing.edges[eid]) == 0


def test_double_cumulative_bound():
    d = gen_convex(5)
    assert double_cumulative_bound_holds(d, 0)     # 5 >= 3
    d6 = gen_convex(6)
    assert double_cumulative_bound_holds(d6, 1)    # 18 >= 12
    with pytest.raises(ValueError):
        double_cumulative_bound_holds(d6, 5)


def test_vector_equal_across_weak_iso_realizations():
    # the all-top book drawing and the convex drawing are the same map up
    # to relabelling, with matching unbounded reference faces, so their
    # k-edge vectors coincide
    from kncross.generators import gen_twopage, twopage_all_top
    for n in range(4, 8):
        assert (k_edge_vector(gen_twopage(twopage_all_top(n))).counts
                == k_edge_vector(gen_convex(n)).counts)


def test_k3_degenerate_sums():
    d3 = gen_convex(3)
    assert k_edge_vector(d3).counts == (3,)
    assert crossings_from_k_edges(d3) == 0
    assert crossings_from_cumulative(d3) == 0


def test_identity_example_values():
    d4 = gen_convex(4)
    assert crossings_from_k_edges(d4) == 1
    d5 = gen_convex(5)
    assert crossings_from_k_edges(d5) == 15 - 2 * 5 == 5
    d6 = gen_convex(6)
    assert crossings_from_k_edges(d6) == 45 - (1 * 3 * 6 + 2 * 2 * 3) == 15
    assert crossings_from_cumulative(d6) == 2 * (6 + 18) - 15 - 18 == 15
