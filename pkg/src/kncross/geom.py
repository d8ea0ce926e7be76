"""Exact rational plane geometry.

Every predicate and construction here works on `fractions.Fraction`
coordinates, so there are no epsilons anywhere: orientation, proper
segment crossings and circle membership are decided exactly.  Degenerate
inputs (collinear triples, tangencies, overlaps) are never "resolved";
they simply fall on the zero branch of a predicate and it is up to the
caller to reject them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence, Tuple, Union

RationalLike = Union[int, str, Fraction]


@dataclass(frozen=True)
class Point:
    """A point of the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x


def point(x: RationalLike, y: RationalLike) -> Point:
    """Convenience constructor coercing ints/strings to Fractions."""
    return Point(Fraction(x), Fraction(y))


def _sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of det(q - p, r - p): +1 counterclockwise, 0 collinear, -1 clockwise."""
    return _sign((q - p).cross(r - p))


def proper_intersection(a1: Point, a2: Point, b1: Point, b2: Point) -> Optional[Point]:
    """Interior crossing point of two open segments, or None.

    Shared endpoints, touchings and collinear overlaps all return None;
    only a transversal crossing of both open segments counts.
    """
    d1 = a2 - a1
    d2 = b2 - b1
    denom = d1.cross(d2)
    if denom == 0:
        return None  # parallel or collinear: never a proper crossing
    w = b1 - a1
    t = w.cross(d2) / denom
    s = w.cross(d1) / denom
    if 0 < t < 1 and 0 < s < 1:
        return Point(a1.x + t * d1.x, a1.y + t * d1.y)
    return None


def segment_parameter(a1: Point, a2: Point, p: Point) -> Fraction:
    """Parameter t of p = a1 + t*(a2 - a1); p is assumed to lie on the line."""
    d = a2 - a1
    if d.x != 0:
        return (p.x - a1.x) / d.x
    return (p.y - a1.y) / d.y


def circle_point(u: RationalLike) -> Point:
    """Exact rational point on the unit circle via the tangent half-angle map.

    ((1-u^2)/(1+u^2), 2u/(1+u^2)); strictly monotone in angle over all
    rational u, covering the whole circle except (-1, 0).
    """
    u = Fraction(u)
    den = 1 + u * u
    return Point((1 - u * u) / den, 2 * u / den)


def _direction_cmp(a: Point, b: Point) -> int:
    # Counterclockwise order starting at angle 0 (the +x axis).
    ha = 0 if (a.y > 0 or (a.y == 0 and a.x > 0)) else 1
    hb = 0 if (b.y > 0 or (b.y == 0 and b.x > 0)) else 1
    if ha != hb:
        return ha - hb
    return -_sign(a.cross(b))


def ccw_order(directions: Sequence[Tuple[Point, object]]) -> list:
    """Sort (direction, payload) pairs counterclockwise from the +x axis.

    Directions must be pairwise non-parallel within a half turn; equal
    directions would compare as ties and indicate degenerate input.
    """
    ordered = sorted(directions, key=cmp_to_key(lambda p, q: _direction_cmp(p[0], q[0])))
    return [payload for _, payload in ordered]
