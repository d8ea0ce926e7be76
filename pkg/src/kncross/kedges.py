"""k-edge statistics and the crossing number identities they satisfy.

For a drawing with a reference face F, every edge uv and every other
vertex w span a triangle that separates the sphere into two regions;
w is labelled R when F lies on the left of the directed cycle u,v,w and
L otherwise, and uv is a k-edge for k the smaller label count.  The
labels are computed combinatorially from deletion views (keep only the
triangle, merge everything else), so map-format inputs work without any
coordinates.  Vectors are always taken relative to the drawing's stored
reference face; use Drawing.with_reference to re-reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Tuple
from weakref import WeakKeyDictionary

from .drawing import DeletionView, Drawing

Side = str  # "L" or "R"

_triple_cache: "WeakKeyDictionary[Drawing, Dict[FrozenSet[int], List[int]]]" = WeakKeyDictionary()


@dataclass(frozen=True)
class KEdgeVector:
    """Counts E_0 .. E_{floor(n/2)-1} relative to `reference_face`."""

    counts: Tuple[int, ...]
    reference_face: int


@dataclass(frozen=True)
class CumulativeSums:
    single: Tuple[int, ...]   # E_{<=k}
    double: Tuple[int, ...]   # E_{<=<=k}


def _triple_classes(drawing: Drawing, triple: FrozenSet[int]) -> List[int]:
    """Flattened face-class array of the view keeping only `triple`."""
    per_drawing = _triple_cache.setdefault(drawing, {})
    arr = per_drawing.get(triple)
    if arr is None:
        deleted = frozenset(range(drawing.n)) - triple
        view = DeletionView(drawing, deleted)
        arr = view.uf.flatten()
        if len(set(arr)) != 2:
            raise ValueError(
                f"triangle {sorted(triple)} does not split the sphere in "
                "two; the drawing is not good")
        per_drawing[triple] = arr
    return arr


def side_of(drawing: Drawing, u: int, v: int, w: int) -> Side:
    """Label of w relative to the directed edge u->v and the reference face.

    Returns "R" exactly when the reference face falls in the class of
    the face left of the u->v dart within the triangle subdrawing.
    """
    if len({u, v, w}) != 3:
        raise ValueError("u, v, w must be distinct")
    classes = _triple_classes(drawing, frozenset((u, v, w)))
    left = classes[drawing.out_left_face[u][v]]
    ref = classes[drawing.reference_face]
    return "R" if ref == left else "L"


def k_value(drawing: Drawing, edge: Tuple[int, int]) -> int:
    """Smaller of the two side counts over all w outside the edge."""
    u, v = edge
    rights = 0
    total = 0
    for w in range(drawing.n):
        if w == u or w == v:
            continue
        total += 1
        if side_of(drawing, u, v, w) == "R":
            rights += 1
    return min(rights, total - rights)


def k_value_within(drawing: Drawing, edge: Tuple[int, int],
                   alive: Iterable[int]) -> int:
    """k-value of an edge inside the subdrawing on `alive` vertices.

    Side labels are triangle-local, hence identical in the subdrawing
    and the full drawing; only the range of w shrinks.
    """
    u, v = edge
    rights = 0
    total = 0
    for w in alive:
        if w == u or w == v:
            continue
        total += 1
        if side_of(drawing, u, v, w) == "R":
            rights += 1
    return min(rights, total - rights)


def k_edge_vector(drawing: Drawing) -> KEdgeVector:
    """Histogram of k-values over all edges, relative to the reference face."""
    counts = [0] * (drawing.n // 2)
    for edge in drawing.edges:
        counts[k_value(drawing, edge)] += 1
    return KEdgeVector(counts=tuple(counts), reference_face=drawing.reference_face)


def cumulative_sums(vector: KEdgeVector) -> CumulativeSums:
    single: List[int] = []
    double: List[int] = []
    run = 0
    run2 = 0
    for count in vector.counts:
        run += count
        single.append(run)
        run2 += run
        double.append(run2)
    return CumulativeSums(single=tuple(single), double=tuple(double))


def hill_number(n: int) -> int:
    """Conjectured crossing number of K_n (exact integer)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4


def crossings_from_k_edges(drawing: Drawing) -> int:
    """3*C(n,4) minus the weighted k-edge sum; equals the crossing count."""
    n = drawing.n
    vec = k_edge_vector(drawing).counts
    weighted = sum(k * (n - 2 - k) * ek for k, ek in enumerate(vec))
    return 3 * comb(n, 4) - weighted


def crossings_from_cumulative(drawing: Drawing) -> int:
    """Crossing count from the double cumulative sums.

    2 * sum_{k<=floor(n/2)-2} E_{<=<=k} - C(n,2)*floor((n-2)/2)/2
    - (1+(-1)^n)/2 * E_{<=<=floor(n/2)-2}.
    """
    n = drawing.n
    sums = cumulative_sums(k_edge_vector(drawing)).double
    top = n // 2 - 2
    body = 2 * sum(sums[k] for k in range(top + 1))
    middle = comb(n, 2) * ((n - 2) // 2) // 2  # always integral
    parity_term = sums[top] if n % 2 == 0 and top >= 0 else 0
    return body - middle - parity_term


def double_cumulative_bound_holds(drawing: Drawing, k: int) -> bool:
    """Whether E_{<=<=k} >= 3*C(k+3,3), the bound bishellability forces."""
    if not 0 <= k <= drawing.n // 2 - 2:
        raise ValueError(f"k={k} out of range for n={drawing.n}")
    sums = cumulative_sums(k_edge_vector(drawing)).double
    return sums[k] >= 3 * comb(k + 3, 3)
