"""Shellability and bishellability: witnesses, search, and diagnostics.

A shell witness is a vertex sequence v_1..v_s such that, relative to a
reference face F, every pair r < t leaves both v_r and v_t incident with
the face containing F after deleting the prefix v_1..v_{r-1} and the
suffix v_{t+1}..v_s.  A bishell witness of order s consists of two
sequences a_0..a_s and b_0..b_s growing away from the same face, with
the complementary prefixes disjoint: a_i != b_j whenever i + j <= s.

Searches are exhaustive and deterministic (faces ascending, candidate
vertices ascending), so the returned witness only depends on the
drawing.  Verification never searches: it replays the deletion views a
witness claims and checks incidences directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .drawing import DeletionView, Drawing, reference_class_vertices
from .kedges import k_value, k_value_within


class MalformedWitness(Exception):
    """Witness is structurally broken (duplicates, ranges, lengths)."""


class WitnessInvalid(Exception):
    """Witness fails verification where a verified one is required."""


@dataclass(frozen=True)
class ShellWitness:
    face: int
    seq: Tuple[int, ...]          # v_1 .. v_s

    @property
    def order(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class BishellWitness:
    face: int
    a_seq: Tuple[int, ...]        # a_0 .. a_s
    b_seq: Tuple[int, ...]        # b_0 .. b_s (b_0 first)

    @property
    def order(self) -> int:
        return len(self.a_seq) - 1


@dataclass(frozen=True)
class InvariantEdgeReport:
    order: int
    a0_contribution: int
    invariant_count: int


@dataclass(frozen=True)
class SufficientConditions:
    uncrossed_cycle_len: int      # edges of the longest uncrossed simple cycle
    uncrossed_path_len: int       # edges of the longest uncrossed simple path
    implies_shellable: bool
    implies_bishellable: bool


# ---------------------------------------------------------------------------
# incidence helpers over memoized deletion classes
# ---------------------------------------------------------------------------


def _classes(drawing: Drawing, deleted: FrozenSet[int],
             memo: Dict[FrozenSet[int], List[int]]) -> List[int]:
    arr = memo.get(deleted)
    if arr is None:
        arr = DeletionView(drawing, deleted).uf.flatten()
        memo[deleted] = arr
    return arr


def _incident(drawing: Drawing, classes: List[int], face: int, u: int,
              deleted: FrozenSet[int]) -> bool:
    root = classes[face]
    row = drawing.out_left_face[u]
    for w in range(drawing.n):
        if w != u and w not in deleted and classes[row[w]] == root:
            return True
    return False


def _check_witness_face(drawing: Drawing, face: int) -> None:
    if not 0 <= face < drawing.face_count:
        raise MalformedWitness(f"face {face} out of range")


def _check_seq(drawing: Drawing, seq: Sequence[int], what: str) -> None:
    if len(set(seq)) != len(seq):
        raise MalformedWitness(f"duplicate vertex in {what}")
    for v in seq:
        if not 0 <= v < drawing.n:
            raise MalformedWitness(f"vertex {v} out of range in {what}")


# ---------------------------------------------------------------------------
# sequence enumeration
# ---------------------------------------------------------------------------


def shelling_sequences(drawing: Drawing, face: int,
                       length: int) -> Iterator[Tuple[int, ...]]:
    """All sequences of `length` vertices peeling away from `face`.

    Each x_i must be incident with the face class of `face` after the
    prefix x_0..x_{i-1} has been deleted.  Depth-first, children in
    ascending vertex order.
    """
    if length > drawing.n:
        raise ValueError("length exceeds vertex count")
    _check_witness_face(drawing, face)

    def rec(view: DeletionView, seq: List[int]) -> Iterator[Tuple[int, ...]]:
        if len(seq) == length:
            yield tuple(seq)
            return
        for v in sorted(reference_class_vertices(view, face)):
            seq.append(v)
            yield from rec(view.child(v), seq)
            seq.pop()

    yield from rec(DeletionView(drawing), [])


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def shell_witness_violation(drawing: Drawing, witness: ShellWitness,
                            memo: Optional[dict] = None) -> Optional[str]:
    """First violated pair condition, or None when the witness verifies."""
    seq = witness.seq
    s = len(seq)
    if not 1 <= s <= drawing.n:
        raise MalformedWitness(f"sequence length {s} out of range")
    _check_seq(drawing, seq, "v-sequence")
    _check_witness_face(drawing, witness.face)
    if memo is None:
        memo = {}
    for r, t in itertools.combinations(range(1, s + 1), 2):
        deleted = frozenset(seq[:r - 1]) | frozenset(seq[t:])
        classes = _classes(drawing, deleted, memo)
        for v in (seq[r - 1], seq[t - 1]):
            if not _incident(drawing, classes, witness.face, v, deleted):
                return (f"vertex {v} not incident with the reference class "
                        f"for pair (r,t)=({r},{t})")
    return None


def verify_shell_witness(drawing: Drawing, witness: ShellWitness) -> bool:
    return shell_witness_violation(drawing, witness) is None


def bishell_witness_violation(drawing: Drawing, witness: BishellWitness,
                              memo: Optional[dict] = None) -> Optional[str]:
    """First violated condition (1)/(2)/(3), or None when it verifies."""
    a, b = witness.a_seq, witness.b_seq
    if len(a) != len(b) or not a:
        raise MalformedWitness("a- and b-sequences must have equal length >= 1")
    _check_seq(drawing, a, "a-sequence")
    _check_seq(drawing, b, "b-sequence")
    _check_witness_face(drawing, witness.face)
    s = len(a) - 1
    if memo is None:
        memo = {}
    for name, seq in (("1", a), ("2", b)):
        for i in range(s + 1):
            deleted = frozenset(seq[:i])
            classes = _classes(drawing, deleted, memo)
            if not _incident(drawing, classes, witness.face, seq[i], deleted):
                return f"condition ({name}) violated at i={i}"
    for i in range(s + 1):
        for j in range(s + 1 - i):
            if a[i] == b[j]:
                return f"condition (3) violated at i={s - j}"
    return None


def verify_bishell_witness(drawing: Drawing, witness: BishellWitness) -> bool:
    return bishell_witness_violation(drawing, witness) is None


# ---------------------------------------------------------------------------
# witness transformations
# ---------------------------------------------------------------------------


def shell_to_bishell(witness: ShellWitness) -> BishellWitness:
    """Turn a shell witness v_1..v_s into the order s-2 bishell witness.

    a_i = v_{i+1} and b_i = v_{s-i}; requires s >= 2.
    """
    seq = witness.seq
    s = len(seq)
    if s < 2:
        raise WitnessInvalid("need a shell witness of length >= 2")
    a = seq[:s - 1]
    b = tuple(seq[s - 1 - i] for i in range(s - 1))
    return BishellWitness(face=witness.face, a_seq=a, b_seq=b)


def truncate_bishell(witness: BishellWitness) -> BishellWitness:
    """Drop a_s and b_s, reducing the order by one."""
    if witness.order < 1:
        raise WitnessInvalid("cannot truncate an order-0 witness")
    return BishellWitness(face=witness.face,
                          a_seq=witness.a_seq[:-1],
                          b_seq=witness.b_seq[:-1])


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def check_bishellable(drawing: Drawing, s: int,
                      face: Optional[int] = None) -> Optional[BishellWitness]:
    """Exhaustive search for an order-s bishell witness.

    Scans all faces unless one is fixed; within a face both sequences
    are grown depth-first with the disjointness constraint applied at
    every extension (b_j is never one of a_0..a_{s-j}).  Returns the
    first witness in the deterministic search order, or None.
    """
    if not 0 <= s <= drawing.n - 2:
        raise ValueError(f"order s={s} out of range for n={drawing.n}")
    faces = (face,) if face is not None else range(drawing.face_count)
    for f in faces:
        _check_witness_face(drawing, f)
        found = _bishell_at_face(drawing, s, f)
        if found is not None:
            return found
    return None


def _bishell_at_face(drawing: Drawing, s: int, face: int) -> Optional[BishellWitness]:
    root = DeletionView(drawing)
    a_seq: List[int] = []

    def extend_b(view: DeletionView, b_seq: List[int]) -> Optional[Tuple[int, ...]]:
        if len(b_seq) == s + 1:
            return tuple(b_seq)
        j = len(b_seq)
        forbidden = set(a_seq[:s - j + 1])
        for v in sorted(reference_class_vertices(view, face)):
            if v in forbidden:
                continue
            b_seq.append(v)
            result = extend_b(view.child(v), b_seq)
            if result is not None:
                return result
            b_seq.pop()
        return None

    def extend_a(view: DeletionView) -> Optional[BishellWitness]:
        if len(a_seq) == s + 1:
            b = extend_b(root, [])
            if b is not None:
                return BishellWitness(face=face, a_seq=tuple(a_seq), b_seq=b)
            return None
        for v in sorted(reference_class_vertices(view, face)):
            a_seq.append(v)
            result = extend_a(view.child(v))
            if result is not None:
                return result
            a_seq.pop()
        return None

    return extend_a(root)


def check_s_shellable(drawing: Drawing, s: int,
                      face: Optional[int] = None) -> Optional[ShellWitness]:
    """Exhaustive backtracking search for an s-shell witness.

    Sequence positions are assigned outside-in (v_1, v_s, v_2, v_{s-1},
    ...), so a pair (r,t) becomes checkable as soon as its prefix,
    suffix and endpoints are known and failing branches die early.
    """
    if not 1 <= s <= drawing.n:
        raise ValueError(f"s={s} out of range for n={drawing.n}")
    fill_order: List[int] = []
    lo, hi = 0, s - 1
    while lo <= hi:
        fill_order.append(lo)
        if hi != lo:
            fill_order.append(hi)
        lo += 1
        hi -= 1

    memo: Dict[FrozenSet[int], List[int]] = {}
    faces = (face,) if face is not None else range(drawing.face_count)
    for f in faces:
        _check_witness_face(drawing, f)
        seq: List[Optional[int]] = [None] * s
        found = _shell_dfs(drawing, f, seq, fill_order, 0, set(), memo)
        if found is not None:
            return ShellWitness(face=f, seq=found)
    return None


def _pair_decided(seq: List[Optional[int]], r: int, t: int) -> bool:
    # needs v_1..v_r and v_t..v_s (1-indexed) assigned
    return (all(seq[i] is not None for i in range(r))
            and all(seq[i] is not None for i in range(t - 1, len(seq))))


def _pair_holds(drawing: Drawing, face: int, seq: List[Optional[int]],
                r: int, t: int, memo: dict) -> bool:
    s = len(seq)
    deleted = frozenset(seq[i] for i in range(r - 1)) | \
        frozenset(seq[i] for i in range(t, s))
    classes = _classes(drawing, deleted, memo)
    return (_incident(drawing, classes, face, seq[r - 1], deleted)
            and _incident(drawing, classes, face, seq[t - 1], deleted))


def _shell_dfs(drawing: Drawing, face: int, seq: List[Optional[int]],
               fill_order: List[int], step: int, used: Set[int],
               memo: dict) -> Optional[Tuple[int, ...]]:
    s = len(seq)
    if step == len(fill_order):
        return tuple(seq)  # all pairs were checked along the way
    pos = fill_order[step]
    for v in range(drawing.n):
        if v in used:
            continue
        seq[pos] = v
        used.add(v)
        ok = True
        for r, t in itertools.combinations(range(1, s + 1), 2):
            if (_pair_decided(seq, r, t)
                    and not _was_decided_before(seq, fill_order, step, r, t)
                    and not _pair_holds(drawing, face, seq, r, t, memo)):
                ok = False
                break
        if ok:
            result = _shell_dfs(drawing, face, seq, fill_order, step + 1, used, memo)
            if result is not None:
                return result
        used.remove(v)
        seq[pos] = None
    return None


def _was_decided_before(seq: List[Optional[int]], fill_order: List[int],
                        step: int, r: int, t: int) -> bool:
    # replay decidability without the position filled at `step`
    pos = fill_order[step]
    saved = seq[pos]
    seq[pos] = None
    decided = _pair_decided(seq, r, t)
    seq[pos] = saved
    return decided


def is_shellable(drawing: Drawing) -> bool:
    """s-shellable for some s >= floor(n/2); each s is tried separately."""
    for s in range(drawing.n // 2, drawing.n + 1):
        if check_s_shellable(drawing, s) is not None:
            return True
    return False


def is_bishellable(drawing: Drawing) -> bool:
    """(floor(n/2) - 2)-bishellable; vacuously true when that is negative."""
    s = drawing.n // 2 - 2
    if s < 0:
        return True
    return check_bishellable(drawing, s) is not None


# ---------------------------------------------------------------------------
# sufficient conditions from uncrossed substructure
# ---------------------------------------------------------------------------


def sufficient_conditions(drawing: Drawing) -> SufficientConditions:
    """Longest uncrossed cycle/path and the implied shellability flags.

    A simple cycle of >= floor(n/2) uncrossed edges forces shellability
    (hence bishellability); an uncrossed simple path of 2*floor(n/2)-3
    edges forces bishellability.
    """
    n = drawing.n
    adj: List[List[int]] = [[] for _ in range(n)]
    for eid, path in enumerate(drawing.edge_paths):
        if not path:
            u, v = drawing.edges[eid]
            adj[u].append(v)
            adj[v].append(u)

    best_path = 0
    best_cycle = 0

    def dfs(u: int, start: int, visited: Set[int], length: int) -> None:
        nonlocal best_path, best_cycle
        best_path = max(best_path, length)
        for w in adj[u]:
            if w == start and length >= 2:
                best_cycle = max(best_cycle, length + 1)
            elif w not in visited:
                visited.add(w)
                dfs(w, start, visited, length + 1)
                visited.remove(w)

    for v in range(n):
        dfs(v, v, {v}, 0)

    shellable = best_cycle >= max(3, n // 2)
    bishellable = shellable or best_path >= 2 * (n // 2) - 3
    return SufficientConditions(
        uncrossed_cycle_len=best_cycle,
        uncrossed_path_len=best_path,
        implies_shellable=shellable,
        implies_bishellable=bishellable,
    )


# ---------------------------------------------------------------------------
# invariant edge diagnostics
# ---------------------------------------------------------------------------


def invariant_edge_report(drawing: Drawing,
                          witness: BishellWitness) -> InvariantEdgeReport:
    """Proof-accounting quantities of a verified bishell witness.

    `a0_contribution` sums max(0, k+1-j) over the edges at a_0, their
    j-values taken relative to the witness face.  `invariant_count`
    totals, over the chain D_i = D - {b_0..b_{i-1}}, the edges at b_i
    whose j-value is the same in D_i and D_i - a_0.
    """
    if not verify_bishell_witness(drawing, witness):
        raise WitnessInvalid("witness does not verify")
    ref = (drawing if drawing.reference_face == witness.face
           else drawing.with_reference(witness.face))
    k = witness.order
    a0 = witness.a_seq[0]

    contribution = 0
    for x in range(ref.n):
        if x == a0:
            continue
        j = k_value(ref, (a0, x))
        contribution += max(0, k + 1 - j)

    invariant = 0
    alive = set(range(ref.n))
    for i in range(k + 1):
        b_i = witness.b_seq[i]
        without_a0 = [v for v in alive if v != a0]
        for x in alive:
            if x in (b_i, a0):
                continue
            j_full = k_value_within(ref, (b_i, x), alive)
            j_cut = k_value_within(ref, (b_i, x), without_a0)
            if j_full == j_cut:
                invariant += 1
        alive.remove(b_i)

    return InvariantEdgeReport(order=k, a0_contribution=contribution,
                               invariant_count=invariant)
