"""Canonical drawing families: convex, cylindrical, 2-page, random.

All constructions are exact and deterministic.  The cylindrical (tin
can) drawing is assembled from three regions: straight chords among the
inner-circle vertices, chords among the outer-circle vertices drawn in
the region outside their circle (a mirrored disk, so all its rotations
are reversed), and side edges running through the annulus as curves
linear in (radius, angle).  Two side edges cross exactly when their
angular difference passes through an integer number of turns, which
happens at a rational parameter; each side edge takes the strictly
shorter angular direction, so any pair crosses at most once.

Vertex angles and disk coordinates carry small distinct rational
perturbations; whenever a degeneracy survives (a half-turn side edge,
two crossings at one parameter, three concurrent chords) the whole
construction retries with smaller perturbations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, List, Mapping, Sequence, Set, Tuple

from .drawing import (
    CylindricalGeometry,
    Drawing,
    PointsGeometry,
    TwoPageGeometry,
    build_drawing,
    validate_good,
)
from .geom import Point, circle_point
from .planarize import DegenerateInput, planarize_points, segment_arrangement, validate_points

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (SplitMix64), stable across platforms.

    state += 0x9E3779B97F4A7C15; z = state; z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB;
    z ^= z >> 31; yield z.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, bound: int) -> int:
        return self.next() % bound


class _RetryPerturbation(Exception):
    """Internal: a degeneracy survived, retry with smaller perturbations."""


# ---------------------------------------------------------------------------
# convex and random rectilinear drawings
# ---------------------------------------------------------------------------


def gen_convex(n: int) -> Drawing:
    """Rectilinear drawing of K_n on n rational points in convex position."""
    if n < 3:
        raise ValueError("need n >= 3")
    for attempt in range(40):
        if attempt == 0:
            params = [Fraction(i) for i in range(n)]
        else:
            base = 10_000 * 3 ** attempt
            params = [Fraction(i) + Fraction((i + 1) ** 2, base) for i in range(n)]
        points = [circle_point(u) for u in params]
        try:
            return planarize_points(points)
        except DegenerateInput:
            continue
    raise RuntimeError("could not find a nondegenerate convex configuration")


_GRID = 1_000_000


def gen_random_points(n: int, seed: int) -> Drawing:
    """Seeded random rectilinear drawing on a 10^6 grid.

    Coordinates are consecutive SplitMix64 outputs reduced mod 10^6
    (x then y per point); degenerate configurations are rejected and the
    stream continues, so the result is a pure function of (n, seed).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = SplitMix64(seed)
    while True:
        points = [Point(Fraction(rng.below(_GRID)), Fraction(rng.below(_GRID)))
                  for _ in range(n)]
        try:
            return planarize_points(points)
        except DegenerateInput:
            continue


# ---------------------------------------------------------------------------
# 2-page book drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoPageSpec:
    order: Tuple[int, ...]                      # spine order, left to right
    pages: Mapping[Tuple[int, int], str]        # (u,v) u<v -> "T" | "B"

    def page(self, u: int, v: int) -> str:
        return self.pages[(u, v) if u < v else (v, u)]


def _validate_twopage(spec: TwoPageSpec) -> int:
    n = len(spec.order)
    if sorted(spec.order) != list(range(n)):
        raise ValueError("spine order must be a permutation of 0..n-1")
    edges = set(itertools.combinations(range(n), 2))
    keys = {tuple(sorted(k)) for k in spec.pages}
    if keys != edges:
        raise ValueError("pages must assign every edge exactly once")
    for v in spec.pages.values():
        if v not in ("T", "B"):
            raise ValueError(f"bad page {v!r}")
    return n


def gen_twopage(spec: TwoPageSpec) -> Drawing:
    """Semicircle drawing of a 2-page book embedding.

    Vertices sit on the x axis in spine order; an edge is the half
    circle over its endpoints on its page.  Same-page edges cross
    exactly when their spine intervals interleave, at abscissa
    (ab - cd) / ((a+b) - (c+d)).  Spine positions receive tiny distinct
    rational offsets so that no three semicircles are concurrent; the
    offsets never change the spine order, hence never the crossing set.
    """
    n = _validate_twopage(spec)
    if n < 3:
        raise ValueError("need n >= 3")
    for attempt in range(40):
        base = 100_000 * 7 ** attempt
        positions = [Fraction(0)] * n
        for slot, v in enumerate(spec.order):
            positions[v] = Fraction(slot) + Fraction((slot + 1) ** 2, base)
        try:
            return _assemble_twopage(spec, positions)
        except _RetryPerturbation:
            continue
    raise RuntimeError("could not resolve semicircle concurrences")


def _assemble_twopage(spec: TwoPageSpec, positions: Sequence[Fraction]) -> Drawing:
    n = len(spec.order)
    edges = list(itertools.combinations(range(n), 2))

    def interval(eid: int) -> Tuple[Fraction, Fraction]:
        u, v = edges[eid]
        a, b = positions[u], positions[v]
        return (a, b) if a < b else (b, a)

    crossings: List[Tuple[int, int, Fraction]] = []   # (edge a, edge b, abscissa)
    per_edge: List[List[Tuple[Fraction, int]]] = [[] for _ in edges]
    for ea, eb in itertools.combinations(range(len(edges)), 2):
        (u1, v1), (u2, v2) = edges[ea], edges[eb]
        if {u1, v1} & {u2, v2}:
            continue
        if spec.page(u1, v1) != spec.page(u2, v2):
            continue
        (l1, r1), (l2, r2) = interval(ea), interval(eb)
        if not (l1 < l2 < r1 < r2 or l2 < l1 < r2 < r1):
            continue
        x = (l1 * r1 - l2 * r2) / ((l1 + r1) - (l2 + r2))
        k = len(crossings)
        crossings.append((ea, eb, x))
        per_edge[ea].append((x, k))
        per_edge[eb].append((x, k))

    paths: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for eid, hits in enumerate(per_edge):
        hits.sort()
        for (x1, _), (x2, _) in zip(hits, hits[1:]):
            if x1 == x2:
                raise _RetryPerturbation
        u, v = edges[eid]
        ordered = [k for _, k in hits]
        if positions[u] > positions[v]:
            ordered.reverse()   # path runs from u to v, here right to left
        paths[(u, v)] = tuple(ordered)

    bits: List[str] = []
    for ea, eb, x in crossings:
        (u1, v1), (u2, v2) = edges[ea], edges[eb]
        c1 = (positions[u1] + positions[v1]) / 2
        c2 = (positions[u2] + positions[v2]) / 2
        sign = 1 if c2 > c1 else -1
        if positions[u1] > positions[v1]:
            sign = -sign
        if positions[u2] > positions[v2]:
            sign = -sign
        if spec.page(u1, v1) == "B":
            sign = -sign
        bits.append("+" if sign > 0 else "-")

    rotations: List[Tuple[int, ...]] = []
    for v in range(n):
        x_v = positions[v]
        others = [w for w in range(n) if w != v]
        tr = sorted((w for w in others
                     if spec.page(v, w) == "T" and positions[w] > x_v),
                    key=lambda w: positions[w])
        tl = sorted((w for w in others
                     if spec.page(v, w) == "T" and positions[w] < x_v),
                    key=lambda w: positions[w])
        bl = sorted((w for w in others
                     if spec.page(v, w) == "B" and positions[w] < x_v),
                    key=lambda w: positions[w], reverse=True)
        br = sorted((w for w in others
                     if spec.page(v, w) == "B" and positions[w] > x_v),
                    key=lambda w: positions[w], reverse=True)
        rotations.append(tuple(tr + tl + bl + br))

    v0 = spec.order[0]
    tops = [w for w in range(n) if w != v0 and spec.page(v0, w) == "T"]
    if tops:
        ref = (v0, max(tops, key=lambda w: positions[w]))
    else:
        bottoms = [w for w in range(n) if w != v0]
        ref = (v0, min(bottoms, key=lambda w: positions[w]))

    geometry = TwoPageGeometry(
        order=tuple(spec.order),
        pages=tuple(sorted((tuple(sorted(k)), spec.pages[k]) for k in spec.pages)),
        positions=tuple(positions),
    )
    return build_drawing(n, paths, bits, rotations, ref, geometry=geometry)


def twopage_all_top(n: int) -> TwoPageSpec:
    """Every edge on the top page with the identity spine order."""
    pages = {e: "T" for e in itertools.combinations(range(n), 2)}
    return TwoPageSpec(order=tuple(range(n)), pages=pages)


# ---------------------------------------------------------------------------
# cylindrical (tin can) drawings
# ---------------------------------------------------------------------------


def _wrap_half(x: Fraction) -> Fraction:
    """Representative of x mod 1 in (-1/2, 1/2); exactly 1/2 retries."""
    f = x % 1
    if f == Fraction(1, 2):
        raise _RetryPerturbation
    return f if f < Fraction(1, 2) else f - 1


def _cyclic_offset(a: Fraction, b: Fraction) -> Fraction:
    """(b - a) mod 1 in (0, 1)."""
    return (b - a) % 1


def gen_cylindrical(n: int) -> Drawing:
    """Tin can drawing: ceil(n/2) outer and floor(n/2) inner vertices.

    Outer vertices are 0..ceil(n/2)-1 counterclockwise, inner vertices
    follow, also counterclockwise.  The reference face is the outer rim
    face between outer vertices 0 and 1.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    m_outer = (n + 1) // 2
    m_inner = n // 2
    for attempt in range(30):
        # Perturbation multipliers are powers of 3: linear-in-index offsets
        # would keep angle differences translation invariant and preserve
        # the symmetric coincidences of the regular construction.
        eps = Fraction(1, 1000 * n ** 3 * 3 ** (n + 2) * 5 ** attempt)
        lid_base = 10_000 * 3 ** attempt
        outer_angles = [Fraction(i, m_outer) + 3 ** (i + 1) * eps
                        for i in range(m_outer)]
        inner_angles = [Fraction(2 * j + 1, 2 * m_inner) + 3 ** (m_outer + j + 1) * eps
                        for j in range(m_inner)]
        outer_params = [Fraction(i) + Fraction((i + 1) ** 2, lid_base)
                        for i in range(m_outer)]
        inner_params = [Fraction(j) + Fraction((j + 1) ** 2, lid_base)
                        for j in range(m_inner)]
        try:
            return _assemble_cylindrical(
                outer_angles, inner_angles, outer_params, inner_params,
                reference=(0, 1),
            )
        except (_RetryPerturbation, DegenerateInput):
            continue
    raise RuntimeError("could not resolve cylindrical degeneracies")


def _assemble_cylindrical(
    outer_angles: Sequence[Fraction],
    inner_angles: Sequence[Fraction],
    outer_params: Sequence[Fraction],
    inner_params: Sequence[Fraction],
    reference: Tuple[int, int],
) -> Drawing:
    """Stitch the two lids and the annulus into one combinatorial map.

    Vertices are numbered: outer 0..M-1 in the given (ccw) order, inner
    M..M+m-1 likewise.
    """
    M, m = len(outer_angles), len(inner_angles)
    n = M + m
    if n < 3:
        raise ValueError("need at least 3 vertices")
    angles = list(outer_angles) + list(inner_angles)
    if len({a % 1 for a in angles}) != n:
        raise _RetryPerturbation

    # side edges: (outer i, inner j), parametrized from the outer circle
    # (t=0, r=2) to the inner circle (t=1, r=1); theta(t) = A_i + delta*t
    delta: Dict[Tuple[int, int], Fraction] = {}
    for i in range(M):
        for j in range(m):
            delta[(i, j)] = _wrap_half(inner_angles[j] - outer_angles[i])

    # lid arrangements (exact coordinates on the circles)
    inner_points = [circle_point(u) for u in inner_params]
    outer_points = [Point(2 * p.x, 2 * p.y)
                    for p in (circle_point(u) for u in outer_params)]
    if m >= 2:
        validate_points(inner_points)
        inner_arr = segment_arrangement(inner_points)
    else:
        inner_arr = None
    validate_points(outer_points)
    outer_arr = segment_arrangement(outer_points)

    # global edge ids
    edges = list(itertools.combinations(range(n), 2))

    crossing_bits: List[str] = []
    paths: Dict[Tuple[int, int], List[int]] = {e: [] for e in edges}

    def lid_local_edges(count: int) -> List[Tuple[int, int]]:
        return list(itertools.combinations(range(count), 2))

    # inner lid: local vertex j -> global M + j, orientation kept
    if inner_arr is not None:
        inner_base = len(crossing_bits)
        crossing_bits.extend(inner_arr.bits)
        for le, (j1, j2) in enumerate(lid_local_edges(m)):
            paths[(M + j1, M + j2)] = [
                inner_base + local_k for local_k in inner_arr.edge_paths[le]]

    # outer lid: mirrored into the region outside the circle, so every
    # rotation there is reversed and each crossing bit flips
    outer_base = len(crossing_bits)
    crossing_bits.extend("-" if bit == "+" else "+" for bit in outer_arr.bits)
    outer_local_edges = lid_local_edges(M)
    for le, path in enumerate(outer_arr.edge_paths):
        i1, i2 = outer_local_edges[le]
        paths[(i1, i2)] = [outer_base + local_k for local_k in path]

    # annulus: side edge pairs crossing where the angular difference
    # passes through an integer
    side_edges = [(i, j) for i in range(M) for j in range(m)]
    per_side: Dict[Tuple[int, int], List[Tuple[Fraction, int]]] = {
        se: [] for se in side_edges}
    for (i1, j1), (i2, j2) in itertools.combinations(side_edges, 2):
        if i1 == i2 or j1 == j2:
            continue
        d0 = outer_angles[i1] - outer_angles[i2]
        slope = delta[(i1, j1)] - delta[(i2, j2)]
        if slope == 0:
            continue
        d1 = d0 + slope
        lo, hi = (d0, d1) if d0 < d1 else (d1, d0)
        level = floor(hi)
        if not lo < level:
            continue
        t = (level - d0) / slope
        k = len(crossing_bits)
        small, large = sorted(((i1, j1), (i2, j2)),
                              key=lambda e: (e[0], M + e[1]))
        crossing_bits.append("+" if delta[small] > delta[large] else "-")
        per_side[(i1, j1)].append((t, k))
        per_side[(i2, j2)].append((t, k))
    for (i, j), hits in per_side.items():
        hits.sort()
        for (t1, _), (t2, _) in zip(hits, hits[1:]):
            if t1 == t2:
                raise _RetryPerturbation
        paths[(i, M + j)] = [k for _, k in hits]

    # rotations
    rotations: List[Tuple[int, ...]] = []
    for i in range(M):
        chords = sorted((k for k in range(M) if k != i),
                        key=lambda k: _cyclic_offset(outer_angles[i], outer_angles[k]),
                        reverse=True)
        sides = sorted(range(m), key=lambda j: delta[(i, j)], reverse=True)
        rotations.append(tuple(chords + [M + j for j in sides]))
    for j in range(m):
        sides = sorted(range(M), key=lambda i: delta[(i, j)], reverse=True)
        chords = sorted((k for k in range(m) if k != j),
                        key=lambda k: _cyclic_offset(inner_angles[j], inner_angles[k]))
        rotations.append(tuple(sides + [M + k for k in chords]))

    geometry = CylindricalGeometry(
        outer=tuple(range(M)),
        inner=tuple(range(M, n)),
        angles=tuple(angles),
        lid_params=tuple(outer_params) + tuple(inner_params),
    )
    drawing = build_drawing(
        n, {e: tuple(p) for e, p in paths.items()}, crossing_bits,
        rotations, reference, geometry=geometry)
    report = validate_good(drawing)
    if not report.ok:
        raise _RetryPerturbation
    return drawing


# ---------------------------------------------------------------------------
# subdrawing regeneration (oracle support)
# ---------------------------------------------------------------------------


def regenerate_subdrawing(drawing: Drawing,
                          survivors: Set[int]) -> Tuple[Drawing, Dict[int, int]]:
    """Fresh drawing of the subgraph on `survivors`, from the provenance.

    Returns the rebuilt drawing together with the old-to-new vertex
    relabelling (order preserving).  Requires geometric provenance.
    """
    geom = drawing.geometry
    keep = sorted(survivors)
    if len(keep) < 3:
        raise ValueError("need at least 3 survivors")
    relabel = {old: new for new, old in enumerate(keep)}

    if isinstance(geom, PointsGeometry):
        return planarize_points([geom.points[v] for v in keep]), relabel

    if isinstance(geom, TwoPageGeometry):
        order = tuple(relabel[v] for v in geom.order if v in survivors)
        pages = {}
        for (u, v), page in geom.pages:
            if u in survivors and v in survivors:
                pages[(relabel[u], relabel[v])] = page
        positions = [geom.positions[v] for v in keep]
        spec = TwoPageSpec(order=order, pages=pages)
        return _assemble_twopage(spec, positions), relabel

    if isinstance(geom, CylindricalGeometry):
        outer_keep = [v for v in geom.outer if v in survivors]
        inner_keep = [v for v in geom.inner if v in survivors]
        sub = _assemble_cylindrical(
            [geom.angles[v] for v in outer_keep],
            [geom.angles[v] for v in inner_keep],
            [geom.lid_params[v] for v in outer_keep],
            [geom.lid_params[v] for v in inner_keep],
            reference=(0, 1),
        )
        return sub, relabel

    raise ValueError("drawing has no geometric provenance")
