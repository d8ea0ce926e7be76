"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import itertools

import pytest

from kncross.drawing import Drawing, build_drawing, delete_view
from kncross.generators import (
    TwoPageSpec,
    gen_convex,
    gen_cylindrical,
    gen_random_points,
    gen_twopage,
    regenerate_subdrawing,
    twopage_all_top,
)
from kncross.geom import orient


# ---------------------------------------------------------------------------
# hand-built K4 fixtures
# ---------------------------------------------------------------------------


def planar_k4() -> Drawing:
    """Outer triangle 0,1,2 counterclockwise, vertex 3 at the centroid.

    Reference face: outer (left of the dart 1->0).
    """
    paths = {e: [] for e in itertools.combinations(range(4), 2)}
    rotations = [(1, 3, 2), (2, 3, 0), (0, 3, 1), (2, 0, 1)]
    return build_drawing(4, paths, [], rotations, reference=(1, 0))


@pytest.fixture(scope="session")
def k4_planar():
    return planar_k4()


@pytest.fixture(scope="session")
def k4_crossed():
    return gen_convex(4)


# ---------------------------------------------------------------------------
# corpus of generated drawings (session scoped; tests share it)
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def small_corpus():
    """Mixed families with n <= 7, all with geometric provenance."""
    drawings = []
    for n in range(4, 8):
        drawings.append(("convex", n, gen_convex(n)))
        drawings.append(("cylindrical", n, gen_cylindrical(n)))
    for n in (4, 5, 6):
        drawings.append(("twopage", n, gen_twopage(twopage_all_top(n))))
    pages = {e: ("T" if sum(e) % 2 else "B")
             for e in itertools.combinations(range(6), 2)}
    drawings.append(("twopage-mixed", 6, gen_twopage(TwoPageSpec(tuple(range(6)), pages))))
    for n, seed in ((5, 11), (6, 5), (7, 3)):
        drawings.append(("random", n, gen_random_points(n, seed)))
    return drawings


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def brute_k_vector(points) -> tuple:
    """k-edge vector of a rectilinear drawing straight from orientations.

    With the unbounded face as reference, w gets side L relative to the
    directed edge uv exactly when it lies left of the line through uv.
    """
    n = len(points)
    counts = [0] * (n // 2)
    for u, v in itertools.combinations(range(n), 2):
        lefts = sum(1 for w in range(n)
                    if w not in (u, v) and orient(points[u], points[v], points[w]) > 0)
        counts[min(lefts, n - 2 - lefts)] += 1
    return tuple(counts)


def _crossing_alive(drawing: Drawing, k: int, survivors: set) -> bool:
    e1, e2 = drawing.crossing_edges[k]
    return all(v in survivors
               for e in (e1, e2) for v in drawing.edges[e])


def assert_view_matches_replanarization(drawing: Drawing, deleted: set) -> None:
    """Face classes of a deletion view vs a fresh subdrawing, face by face."""
    survivors = set(range(drawing.n)) - set(deleted)
    sub, relabel = regenerate_subdrawing(drawing, survivors)
    view = delete_view(drawing, set(deleted))
    find = view.uf.find

    class_to_face = {}
    faces_seen = set()
    for u, v in itertools.combinations(sorted(survivors), 2):
        old_eid = drawing.edge_id(u, v)
        new_eid = sub.edge_id(relabel[u], relabel[v])
        old_path = drawing.edge_paths[old_eid]
        new_path = sub.edge_paths[new_eid]
        surviving = [k for k in old_path if _crossing_alive(drawing, k, survivors)]
        assert len(surviving) == len(new_path), "crossing counts differ on an edge"
        for old_k, new_k in zip(surviving, new_path):
            old_pair = sorted(
                tuple(sorted((relabel[a], relabel[b])))
                for a, b in (drawing.edges[e] for e in drawing.crossing_edges[old_k]))
            new_pair = sorted(
                tuple(sorted(sub.edges[e])) for e in sub.crossing_edges[new_k])
            assert old_pair == new_pair, "crossing identities differ on an edge"

        old_base = drawing.dart_base[old_eid]
        new_base = sub.dart_base[new_eid]
        alive_prefix = 0
        for seg in range(len(old_path) + 1):
            for offset in (0, 1):
                old_dart = old_base + 2 * seg + offset
                new_dart = new_base + 2 * alive_prefix + offset
                cls = find(drawing.dart_face[old_dart])
                face = sub.dart_face[new_dart]
                if cls in class_to_face:
                    assert class_to_face[cls] == face, "face classes split"
                else:
                    class_to_face[cls] = face
                faces_seen.add(face)
            if seg < len(old_path) and _crossing_alive(drawing, old_path[seg], survivors):
                alive_prefix += 1

    assert len(set(class_to_face.values())) == len(class_to_face), "classes merged"
    assert faces_seen == set(range(sub.face_count))
    assert view.class_count() == sub.face_count
