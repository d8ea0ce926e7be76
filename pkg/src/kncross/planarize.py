"""Planarization of straight-line drawings of complete graphs.

Given n points in general position, all C(n,2) segments are drawn and
every proper pairwise crossing becomes a crossing node.  Degenerate
configurations (coincident points, collinear triples, three segments
through one point) are rejected, never perturbed silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .drawing import Drawing, PointsGeometry, build_drawing
from .geom import Point, ccw_order, orient, proper_intersection, segment_parameter


class DegenerateInput(Exception):
    """Input violates general position; `kind` names the failure."""

    def __init__(self, kind: str, witness: tuple):
        self.kind = kind          # "coincident" | "collinear" | "concurrent"
        self.witness = witness
        super().__init__(f"{kind}: {witness}")


@dataclass(frozen=True)
class Arrangement:
    """Raw intersection structure of all segments among a point set."""

    crossings: Tuple[Tuple[int, int, Point], ...]   # (edge a, edge b, point), a<b
    edge_paths: Tuple[Tuple[int, ...], ...]         # ordered crossing ids per edge
    bits: Tuple[str, ...]                           # rotation orientation per crossing
    vertex_orders: Tuple[Tuple[int, ...], ...]      # ccw neighbor order per vertex


def validate_points(points: Sequence[Point]) -> None:
    pts = list(points)
    for i, j in itertools.combinations(range(len(pts)), 2):
        if pts[i] == pts[j]:
            raise DegenerateInput("coincident", (i, j))
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        if orient(pts[i], pts[j], pts[k]) == 0:
            raise DegenerateInput("collinear", (i, j, k))


def segment_arrangement(points: Sequence[Point]) -> Arrangement:
    """Intersect all segments of the complete graph on the given points.

    Assumes `validate_points` passed.  Raises DegenerateInput when three
    segments meet in a common interior point (detected as two crossings
    at the same parameter along one segment).
    """
    pts = list(points)
    n = len(pts)
    edges = list(itertools.combinations(range(n), 2))

    crossings: List[Tuple[int, int, Point]] = []
    per_edge: List[List[Tuple[Fraction, int]]] = [[] for _ in edges]
    for ea, eb in itertools.combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[ea], edges[eb]
        if {a, b} & {c, d}:
            continue
        hit = proper_intersection(pts[a], pts[b], pts[c], pts[d])
        if hit is None:
            continue
        k = len(crossings)
        crossings.append((ea, eb, hit))
        per_edge[ea].append((segment_parameter(pts[a], pts[b], hit), k))
        per_edge[eb].append((segment_parameter(pts[c], pts[d], hit), k))

    edge_paths: List[Tuple[int, ...]] = []
    for eid, hits in enumerate(per_edge):
        hits.sort()
        for (t1, k1), (t2, k2) in zip(hits, hits[1:]):
            if t1 == t2:
                u, v = edges[eid]
                raise DegenerateInput("concurrent", ((u, v), k1, k2))
        edge_paths.append(tuple(k for _, k in hits))

    bits = []
    for ea, eb, _ in crossings:
        (a, b), (c, d) = edges[ea], edges[eb]
        turn = (pts[b] - pts[a]).cross(pts[d] - pts[c])
        bits.append("+" if turn > 0 else "-")

    vertex_orders = []
    for u in range(n):
        dirs = [(pts[w] - pts[u], w) for w in range(n) if w != u]
        vertex_orders.append(tuple(ccw_order(dirs)))

    return Arrangement(
        crossings=tuple(crossings),
        edge_paths=tuple(edge_paths),
        bits=tuple(bits),
        vertex_orders=tuple(vertex_orders),
    )


def unbounded_reference(points: Sequence[Point]) -> Tuple[int, int]:
    """Directed hull edge whose left side is the unbounded region.

    Starting from the lexicographically largest point p, the hull
    neighbor q with every other point strictly to the right of p->q is
    unique; hull edges are never crossed, so the face left of that first
    dart is the unbounded face.
    """
    pts = list(points)
    n = len(pts)
    p = max(range(n), key=lambda i: (pts[i].x, pts[i].y))
    for q in range(n):
        if q == p:
            continue
        if all(orient(pts[p], pts[q], pts[w]) < 0
               for w in range(n) if w not in (p, q)):
            return (p, q)
    raise DegenerateInput("collinear", (p,))  # unreachable after validation


def planarize_points(points: Sequence[Point]) -> Drawing:
    """Validated Drawing of the straight-line complete graph on `points`.

    The reference face is the unbounded one.
    """
    pts = list(points)
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    validate_points(pts)
    arr = segment_arrangement(pts)
    edges = list(itertools.combinations(range(len(pts)), 2))
    paths = {edges[eid]: arr.edge_paths[eid] for eid in range(len(edges))}
    return build_drawing(
        n=len(pts),
        edge_paths=paths,
        crossing_orientations=arr.bits,
        vertex_rotations=arr.vertex_orders,
        reference=unbounded_reference(pts),
        geometry=PointsGeometry(points=tuple(pts)),
    )


def brute_force_crossing_count(points: Sequence[Point]) -> int:
    """Independent double loop over segment pairs; test oracle."""
    pts = list(points)
    edges = list(itertools.combinations(range(len(pts)), 2))
    count = 0
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if {a, b} & {c, d}:
            continue
        if proper_intersection(pts[a], pts[b], pts[c], pts[d]) is not None:
            count += 1
    return count
