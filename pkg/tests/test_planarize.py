import pytest

from kncross.drawing import validate_good
from kncross.generators import gen_random_points
from kncross.geom import circle_point, point
from kncross.planarize import (
    DegenerateInput,
    brute_force_crossing_count,
    planarize_points,
    validate_points,
)


def test_square_has_one_crossing():
    d = planarize_points([point(0, 0), point(1, 0), point(1, 1), point(0, 1)])
    assert d.crossings == 1


def test_point_in_triangle_no_crossing():
    d = planarize_points([point(0, 0), point(4, 0), point(0, 4), point(1, 1)])
    assert d.crossings == 0
    assert d.face_count == 4


def test_pentagon_counts():
    d = planarize_points([circle_point(i) for i in range(5)])
    assert d.crossings == 5
    assert d.face_count == 12


def test_degeneracies_rejected():
    with pytest.raises(DegenerateInput) as err:
        validate_points([point(0, 0), point(1, 1), point(0, 0)])
    assert err.value.kind == "coincident"

    with pytest.raises(DegenerateInput) as err:
        planarize_points([point(0, 0), point(1, 1), point(2, 2), point(0, 3)])
    assert err.value.kind == "collinear"

    # three concurrent diagonals: regular hexagon on rational-ish coordinates
    hexagon = [point(2, 0), point(1, 2), point(-1, 2),
               point(-2, 0), point(-1, -2), point(1, -2)]
    with pytest.raises(DegenerateInput) as err:
        planarize_points(hexagon)
    assert err.value.kind == "concurrent"


def test_crossing_count_matches_brute_force_on_random_inputs():
    for seed in range(12):
        n = 5 + seed % 4
        d = gen_random_points(n, seed)
        pts = d.geometry.points
        assert d.crossings == brute_force_crossing_count(pts)


def test_planarized_drawings_are_good():
    for seed in range(8):
        d = gen_random_points(6, seed + 100)
        assert validate_good(d).ok


def test_unbounded_reference_face():
    # the reference face of a geometric drawing touches every hull vertex
    from kncross.drawing import delete_view, reference_class_vertices
    d = planarize_points([circle_point(i) for i in range(7)])
    assert sorted(reference_class_vertices(delete_view(d, set()))) == list(range(7))
