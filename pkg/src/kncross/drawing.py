"""Planarized combinatorial maps of good drawings of complete graphs.

A drawing of K_n is stored as the planar map obtained by turning every
crossing into a degree-4 node.  Nodes are integers: real vertices are
0..n-1 and crossing k is n+k.  Every planarized segment contributes a
pair of twin darts; dart 2i runs along segment i of its edge in the
stored path direction (from the smaller endpoint to the larger), dart
2i+1 is its twin.  `rot_next` is the next dart counterclockwise around
the origin node, and faces are the orbits of the face walk successor

    succ(d) = rot_next(twin(d)).

With counterclockwise rotations such an orbit walks its face keeping it
on the right, so `dart_face[d]`, the face on the LEFT of d, is the orbit
of twin(d); every left/right statement below refers to that table.  The
map lives on the sphere: the unbounded face of a geometric input is an
ordinary face, merely remembered as the reference.

Deletion of real vertices never rebuilds the map.  A DeletionView keeps
a union-find over the base faces: removing an edge unions the two faces
on the sides of each of its segments, and a crossing that loses one of
its edges is implicitly smoothed (subdivision does not affect faces).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from .geom import Point


class EulerViolation(Exception):
    """Face count inconsistent with a sphere embedding."""


class BadCrossingDegree(Exception):
    """A crossing node is not met by exactly two edge passes."""


class EdgePathInconsistent(Exception):
    """Edge paths / rotations do not describe a coherent map."""


# ---------------------------------------------------------------------------
# union-find over face indices
# ---------------------------------------------------------------------------


class UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def clone(self) -> "UnionFind":
        other = UnionFind.__new__(UnionFind)
        other.parent = self.parent.copy()
        return other

    def find(self, i: int) -> int:
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def flatten(self) -> List[int]:
        return [self.find(i) for i in range(len(self.parent))]


# ---------------------------------------------------------------------------
# geometry provenance carried by drawings that came from coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointsGeometry:
    points: Tuple[Point, ...]


@dataclass(frozen=True)
class TwoPageGeometry:
    order: Tuple[int, ...]                       # spine order, left to right
    pages: Tuple[Tuple[Tuple[int, int], str], ...]  # ((u,v), "T"|"B") sorted
    positions: Tuple  # x coordinate per vertex id (Fractions)


@dataclass(frozen=True)
class CylindricalGeometry:
    outer: Tuple[int, ...]      # vertex ids on the outer circle, ccw
    inner: Tuple[int, ...]      # vertex ids on the inner circle, ccw
    angles: Tuple               # angle in turns per vertex id (Fractions)
    lid_params: Tuple           # circle_point parameter per vertex id


Geometry = object  # one of the provenance classes above, or None


# ---------------------------------------------------------------------------
# the drawing itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class K4Census:
    planar: int
    crossed: int


@dataclass(frozen=True)
class GoodnessViolation:
    kind: str                      # "self_cross" | "adjacent_cross" | "double_cross"
    edges: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class GoodnessReport:
    ok: bool
    violations: Tuple[GoodnessViolation, ...]


@dataclass(frozen=True, eq=False)
class Drawing:
    n: int
    edges: Tuple[Tuple[int, int], ...]            # lexicographic, id = index
    edge_paths: Tuple[Tuple[int, ...], ...]       # crossing ids, smaller->larger endpoint
    crossing_edges: Tuple[Tuple[int, int], ...]   # per crossing: (edge id, edge id), lex
    orientation_bits: Tuple[str, ...]             # '+' or '-' per crossing
    vertex_rotations: Tuple[Tuple[int, ...], ...]  # ccw neighbor cycle per vertex
    dart_base: Tuple[int, ...]                    # first dart id per edge
    dart_count: int
    rot_next: Tuple[int, ...]
    dart_face: Tuple[int, ...]                    # face on the left of each dart
    face_darts: Tuple[Tuple[int, ...], ...]
    reference_face: int
    seg_faces: Tuple[Tuple[Tuple[int, int], ...], ...]  # per edge: (left, right) per segment
    out_left_face: Tuple[Tuple[int, ...], ...]    # [u][w]: face left of first dart u->w
    geometry: Optional[Geometry] = None

    # -- basic accessors ----------------------------------------------------

    @property
    def crossings(self) -> int:
        return len(self.crossing_edges)

    @property
    def face_count(self) -> int:
        return len(self.face_darts)

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        if u == v or u < 0 or v >= self.n:
            raise ValueError(f"bad edge ({u},{v})")
        # edges are listed lexicographically
        return u * self.n - u * (u + 1) // 2 + (v - u - 1)

    def first_dart(self, u: int, w: int) -> int:
        """Dart with origin u heading along edge (u,w)."""
        eid = self.edge_id(u, w)
        base = self.dart_base[eid]
        if u < w:
            return base
        return base + 2 * len(self.edge_paths[eid]) + 1

    def with_reference(self, face: int) -> "Drawing":
        if not 0 <= face < self.face_count:
            raise ValueError(f"face {face} out of range")
        return replace(self, reference_face=face)


def crossing_count(drawing: Drawing) -> int:
    """Number of crossing nodes of the planarized map."""
    return drawing.crossings


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _all_edges(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def build_drawing(
    n: int,
    edge_paths: Mapping[Tuple[int, int], Sequence[int]],
    crossing_orientations: Sequence[str],
    vertex_rotations: Sequence[Sequence[int]],
    reference: Tuple[int, int],
    geometry: Optional[Geometry] = None,
) -> Drawing:
    """Assemble and validate a Drawing from its map description.

    `edge_paths` maps every pair u<v to the crossing ids met on the way
    from u to v; `crossing_orientations[k]` is '+' when the rotation at
    crossing k reads (first edge forward, second edge forward, first
    edge backward, second edge backward) counterclockwise, where "first"
    is the lexicographically smaller edge.  `reference` is a directed
    pair (u, v): the reference face is to the left of the first dart of
    that edge leaving u.  Construction fails on any inconsistency rather
    than producing a broken map.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    edges = _all_edges(n)
    c = len(crossing_orientations)
    for bit in crossing_orientations:
        if bit not in ("+", "-"):
            raise ValueError(f"bad orientation bit {bit!r}")

    paths: List[Tuple[int, ...]] = []
    for (u, v) in edges:
        if (u, v) not in edge_paths:
            raise EdgePathInconsistent(f"missing path for edge ({u},{v})")
        paths.append(tuple(edge_paths[(u, v)]))
    if len(edge_paths) != len(edges):
        raise EdgePathInconsistent("unexpected extra edge paths")

    # each crossing must be an interior point of exactly two edges
    usage: List[List[Tuple[int, int]]] = [[] for _ in range(c)]
    for eid, path in enumerate(paths):
        if len(set(path)) != len(path):
            raise EdgePathInconsistent(
                f"edge {edges[eid]} visits a crossing twice")
        for pos, k in enumerate(path):
            if not 0 <= k < c:
                raise EdgePathInconsistent(f"crossing id {k} out of range")
            usage[k].append((eid, pos))
    for k, us in enumerate(usage):
        if len(us) != 2:
            raise BadCrossingDegree(
                f"crossing {k} met by {len(us)} edge passes, expected 2")

    if len(vertex_rotations) != n:
        raise ValueError("need one rotation per vertex")
    for u, rot in enumerate(vertex_rotations):
        if sorted(rot) != [w for w in range(n) if w != u]:
            raise EdgePathInconsistent(
                f"rotation at {u} is not a permutation of the other vertices")

    # dart layout: per edge, (forward, backward) per segment
    dart_base: List[int] = []
    total = 0
    for path in paths:
        dart_base.append(total)
        total += 2 * (len(path) + 1)

    def fwd(eid: int, seg: int) -> int:
        return dart_base[eid] + 2 * seg

    def first_dart(u: int, w: int) -> int:
        a, b = (u, w) if u < w else (w, u)
        eid = a * n - a * (a + 1) // 2 + (b - a - 1)
        if u < w:
            return dart_base[eid]
        return dart_base[eid] + 2 * len(paths[eid]) + 1

    rot_next = [-1] * total

    def set_next(d: int, e: int) -> None:
        if rot_next[d] != -1:
            raise EdgePathInconsistent("rotation assigns a dart twice")
        rot_next[d] = e

    for u, rot in enumerate(vertex_rotations):
        darts = [first_dart(u, w) for w in rot]
        for i, d in enumerate(darts):
            set_next(d, darts[(i + 1) % len(darts)])

    for k, us in enumerate(usage):
        (e1, p1), (e2, p2) = sorted(us)
        e_fwd = fwd(e1, p1 + 1)
        e_bwd = fwd(e1, p1) + 1
        f_fwd = fwd(e2, p2 + 1)
        f_bwd = fwd(e2, p2) + 1
        if crossing_orientations[k] == "+":
            cycle = (e_fwd, f_fwd, e_bwd, f_bwd)
        else:
            cycle = (e_fwd, f_bwd, e_bwd, f_fwd)
        for i, d in enumerate(cycle):
            set_next(d, cycle[(i + 1) % 4])

    if -1 in rot_next:
        raise EdgePathInconsistent("some dart never appears in a rotation")

    # faces: orbits of succ(d) = rot_next(twin(d)), twin(d) = d ^ 1.
    # With counterclockwise rotations such an orbit walks the face lying to
    # the RIGHT of its darts, so the face to the left of d is the orbit of
    # its twin.
    orbit = [-1] * total
    face_darts: List[Tuple[int, ...]] = []
    for d0 in range(total):
        if orbit[d0] != -1:
            continue
        fid = len(face_darts)
        walk = []
        d = d0
        while orbit[d] == -1:
            orbit[d] = fid
            walk.append(d)
            d = rot_next[d ^ 1]
        if d != d0:
            raise EdgePathInconsistent("face walk does not close")
        face_darts.append(tuple(walk))
    dart_face = [orbit[d ^ 1] for d in range(total)]

    nodes = n + c
    nedges = len(edges) + 2 * c
    if nodes - nedges + len(face_darts) != 2:
        raise EulerViolation(
            f"V-E+F = {nodes}-{nedges}+{len(face_darts)} != 2")

    ru, rv = reference
    if ru == rv or not (0 <= ru < n and 0 <= rv < n):
        raise ValueError(f"bad reference dart ({ru},{rv})")
    reference_face = dart_face[first_dart(ru, rv)]

    seg_faces = tuple(
        tuple((dart_face[fwd(eid, s)], dart_face[fwd(eid, s) + 1])
              for s in range(len(paths[eid]) + 1))
        for eid in range(len(edges))
    )
    out_left = tuple(
        tuple(dart_face[first_dart(u, w)] if w != u else -1 for w in range(n))
        for u in range(n)
    )
    crossing_edge_pairs = tuple(
        (min(us[0][0], us[1][0]), max(us[0][0], us[1][0])) for us in usage)

    return Drawing(
        n=n,
        edges=tuple(edges),
        edge_paths=tuple(paths),
        crossing_edges=crossing_edge_pairs,
        orientation_bits=tuple(crossing_orientations),
        vertex_rotations=tuple(tuple(r) for r in vertex_rotations),
        dart_base=tuple(dart_base),
        dart_count=total,
        rot_next=tuple(rot_next),
        dart_face=tuple(dart_face),
        face_darts=tuple(face_darts),
        reference_face=reference_face,
        seg_faces=seg_faces,
        out_left_face=out_left,
        geometry=geometry,
    )


# ---------------------------------------------------------------------------
# goodness
# ---------------------------------------------------------------------------


def validate_good(drawing: Drawing) -> GoodnessReport:
    """Check the three goodness conditions of a drawing.

    No edge crosses itself, no two adjacent edges cross, and no pair of
    edges crosses more than once.  Violations are reported with the
    offending edges.
    """
    violations: List[GoodnessViolation] = []
    pair_counts: Dict[Tuple[int, int], int] = {}
    for (e1, e2) in drawing.crossing_edges:
        if e1 == e2:
            violations.append(GoodnessViolation(
                "self_cross", (drawing.edges[e1],)))
            continue
        a, b = drawing.edges[e1], drawing.edges[e2]
        if set(a) & set(b):
            violations.append(GoodnessViolation("adjacent_cross", (a, b)))
        pair_counts[(e1, e2)] = pair_counts.get((e1, e2), 0) + 1
    for (e1, e2), cnt in sorted(pair_counts.items()):
        if cnt > 1:
            violations.append(GoodnessViolation(
                "double_cross", (drawing.edges[e1], drawing.edges[e2])))
    return GoodnessReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# deletion views
# ---------------------------------------------------------------------------


class DeletionView:
    """A drawing together with a set of deleted real vertices.

    Faces of the base drawing are merged through the sides of deleted
    segments.  Views never mutate the base; `child` clones the
    union-find so search trees can branch cheaply.
    """

    __slots__ = ("base", "deleted", "uf")

    def __init__(self, base: Drawing, deleted: frozenset = frozenset(),
                 _uf: Optional[UnionFind] = None):
        self.base = base
        if _uf is not None:
            self.deleted = deleted
            self.uf = _uf
            return
        self.deleted = frozenset()
        self.uf = UnionFind(base.face_count)
        for v in sorted(deleted):
            self._delete(v)
            self.deleted = self.deleted | {v}

    def _delete(self, v: int) -> None:
        base = self.base
        union = self.uf.union
        for w in range(base.n):
            if w == v or w in self.deleted:
                continue
            for left, right in base.seg_faces[base.edge_id(v, w)]:
                union(left, right)

    def child(self, v: int) -> "DeletionView":
        if v in self.deleted:
            raise ValueError(f"vertex {v} already deleted")
        view = DeletionView(self.base, self.deleted, _uf=self.uf.clone())
        view._delete(v)
        view.deleted = self.deleted | {v}
        return view

    def face_class(self, face: int) -> int:
        return self.uf.find(face)

    def class_count(self) -> int:
        roots = set()
        for f in range(self.base.face_count):
            roots.add(self.uf.find(f))
        return len(roots)

    def surviving_edges(self) -> List[int]:
        dead = self.deleted
        return [eid for eid, (u, v) in enumerate(self.base.edges)
                if u not in dead and v not in dead]


def delete_view(drawing: Drawing, deleted: Set[int]) -> DeletionView:
    """View of the drawing with the given real vertices removed."""
    for v in deleted:
        if not 0 <= v < drawing.n:
            raise ValueError(f"vertex {v} out of range")
    return DeletionView(drawing, frozenset(deleted))


def reference_class_vertices(view: DeletionView,
                             face: Optional[int] = None) -> Set[int]:
    """Surviving vertices incident with the merged face containing `face`.

    `face` defaults to the base drawing's reference face.  A vertex is
    incident when one of its surviving darts has its left face in the
    class; for a surviving vertex this captures exactly the corners that
    remain after merging.
    """
    base = view.base
    if face is None:
        face = base.reference_face
    find = view.uf.find
    root = find(face)
    out_left = base.out_left_face
    dead = view.deleted
    result = set()
    for u in range(base.n):
        if u in dead:
            continue
        row = out_left[u]
        for w in range(base.n):
            if w == u or w in dead:
                continue
            if find(row[w]) == root:
                result.add(u)
                break
    return result


# ---------------------------------------------------------------------------
# rotation systems and weak isomorphism
# ---------------------------------------------------------------------------

RotationSystem = Tuple[Tuple[int, ...], ...]


def _canon_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def rotation_system(drawing: Drawing) -> RotationSystem:
    """Cyclic ccw neighbor order at every vertex, canonically rotated."""
    return tuple(_canon_cycle(rot) for rot in drawing.vertex_rotations)


def _reverse_system(system: RotationSystem) -> RotationSystem:
    return tuple(_canon_cycle(tuple(reversed(cycle))) for cycle in system)


def _relabelled(system: RotationSystem, perm: Sequence[int]) -> RotationSystem:
    return tuple(
        _canon_cycle([perm[w] for w in system[u]])
        for u in sorted(range(len(system)), key=lambda u: perm[u])
    )


def weak_iso_equal(r1: RotationSystem, r2: RotationSystem,
                   relabel: bool = False) -> bool:
    """True when the two rotation systems agree up to global reversal.

    With `relabel`, vertices may additionally be renamed by any
    permutation; candidate maps are generated by aligning the rotation
    at vertex 0, which is exhaustive for complete graphs.
    """
    if len(r1) != len(r2):
        return False
    n = len(r1)
    variants = (r2, _reverse_system(r2))
    if not relabel:
        return any(r1 == v for v in variants)
    cycle0 = r1[0]
    for target in variants:
        for image in range(n):
            other = target[image]
            for shift in range(n - 1):
                perm = [-1] * n
                perm[0] = image
                ok = True
                for k, w in enumerate(cycle0):
                    z = other[(k + shift) % (n - 1)]
                    if perm[w] != -1 and perm[w] != z:
                        ok = False
                        break
                    perm[w] = z
                if not ok or len(set(perm)) != n:
                    continue
                if _relabelled(r1, perm) == target:
                    return True
    return False


# ---------------------------------------------------------------------------
# K4 census
# ---------------------------------------------------------------------------


def k4_census(drawing: Drawing) -> K4Census:
    """Count planar vs crossed K4 subdrawings.

    In a good drawing each K4 carries at most one crossing, so the
    crossed count equals the crossing number.
    """
    crossing_pairs = {frozenset(pair) for pair in drawing.crossing_edges}
    eid = drawing.edge_id
    crossed = 0
    for a, b, c, d in itertools.combinations(range(drawing.n), 4):
        if (frozenset((eid(a, b), eid(c, d))) in crossing_pairs
                or frozenset((eid(a, c), eid(b, d))) in crossing_pairs
                or frozenset((eid(a, d), eid(b, c))) in crossing_pairs):
            crossed += 1
    return K4Census(planar=comb(drawing.n, 4) - crossed, crossed=crossed)
