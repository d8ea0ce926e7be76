"""Drawing and witness files, plus SVG export.

Three line-based UTF-8 formats share the header ``kncross v1`` and a
``format points|twopage|map`` tag; '#' starts a comment.  The map format
is the minimal information determining a spherical embedding: one
counterclockwise rotation line per real vertex, the crossing ids along
every edge path (from the smaller endpoint to the larger), one
orientation bit per crossing, and a reference dart.  The bit is '+' when
the rotation at the crossing reads (first edge forward, second edge
forward, first edge backward, second edge backward) counterclockwise,
"first" being the lexicographically smaller edge and "forward" its
stored direction.  Reference faces and witness faces are named by a
directed pair ``u v``: the face to the left of the first dart of that
edge leaving u.

Serialization is canonical (crossings renumbered by first appearance
along lexicographic edges, rotations started at the smallest neighbor,
reduced rationals printed as p/q), so equal maps produce equal bytes.
"""

from __future__ import annotations

from fractions import Fraction
from math import cos, floor, pi, sin, sqrt
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .drawing import (
    CylindricalGeometry,
    Drawing,
    PointsGeometry,
    TwoPageGeometry,
    build_drawing,
)
from .geom import Point, proper_intersection
from .planarize import planarize_points
from .generators import TwoPageSpec, gen_twopage, _wrap_half
from .shelling import BishellWitness, ShellWitness

MAGIC = "kncross v1"
WITNESS_MAGIC = "kncross-witness v1"


class ParseError(Exception):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NoGeometry(Exception):
    """Operation needs coordinates the drawing does not carry."""


# ---------------------------------------------------------------------------
# low-level line handling
# ---------------------------------------------------------------------------


def _lines(data: Union[bytes, str]) -> List[Tuple[int, str]]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _fraction(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"bad rational {token!r}") from None


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"bad integer {token!r}") from None


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def parse(data: Union[bytes, str]) -> Drawing:
    """Parse any of the three drawing formats into a validated Drawing."""
    lines = _lines(data)
    if not lines or lines[0][1] != MAGIC:
        raise ParseError(lines[0][0] if lines else 1, f"expected {MAGIC!r}")
    if len(lines) < 3:
        raise ParseError(1, "truncated header")
    no, fmt_line = lines[1]
    parts = fmt_line.split()
    if len(parts) != 2 or parts[0] != "format":
        raise ParseError(no, "expected 'format points|twopage|map'")
    fmt = parts[1]
    no, n_line = lines[2]
    nparts = n_line.split()
    if len(nparts) != 2 or nparts[0] != "n":
        raise ParseError(no, "expected 'n <int>'")
    n = _int(nparts[1], no)
    body = lines[3:]
    if fmt == "points":
        return _parse_points(n, body)
    if fmt == "twopage":
        return _parse_twopage(n, body)
    if fmt == "map":
        return _parse_map(n, body)
    raise ParseError(no, f"unknown format {fmt!r}")


def _parse_points(n: int, body: List[Tuple[int, str]]) -> Drawing:
    points: Dict[int, Point] = {}
    for no, line in body:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "v":
            raise ParseError(no, "expected 'v <id> <p/q> <p/q>'")
        vid = _int(parts[1], no)
        if not 0 <= vid < n or vid in points:
            raise ParseError(no, f"bad or repeated vertex id {vid}")
        points[vid] = Point(_fraction(parts[2], no), _fraction(parts[3], no))
    if len(points) != n:
        raise ParseError(body[-1][0] if body else 4, "missing vertex lines")
    return planarize_points([points[i] for i in range(n)])


def _parse_twopage(n: int, body: List[Tuple[int, str]]) -> Drawing:
    order: Optional[Tuple[int, ...]] = None
    pages: Dict[Tuple[int, int], str] = {}
    for no, line in body:
        parts = line.split()
        if parts[0] == "order":
            if order is not None:
                raise ParseError(no, "duplicate order line")
            order = tuple(_int(p, no) for p in parts[1:])
        elif parts[0] == "e":
            if len(parts) != 4 or parts[3] not in ("T", "B"):
                raise ParseError(no, "expected 'e <u> <v> <T|B>'")
            u, v = _int(parts[1], no), _int(parts[2], no)
            key = (min(u, v), max(u, v))
            if u == v or key in pages:
                raise ParseError(no, f"bad or repeated edge {u} {v}")
            pages[key] = parts[3]
        else:
            raise ParseError(no, f"unexpected line {line!r}")
    if order is None or sorted(order) != list(range(n)):
        raise ParseError(body[0][0] if body else 4, "order line missing or invalid")
    if len(pages) != n * (n - 1) // 2:
        raise ParseError(body[-1][0] if body else 4, "missing edge lines")
    return gen_twopage(TwoPageSpec(order=order, pages=pages))


def _parse_map(n: int, body: List[Tuple[int, str]]) -> Drawing:
    c: Optional[int] = None
    rotations: Dict[int, Tuple[int, ...]] = {}
    paths: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    bits: Dict[int, str] = {}
    ref: Optional[Tuple[int, int]] = None
    for no, line in body:
        parts = line.split()
        if parts[0] == "c":
            if c is not None or len(parts) != 2:
                raise ParseError(no, "bad crossing count line")
            c = _int(parts[1], no)
        elif parts[0] == "rot":
            if len(parts) < 3 or parts[2] != ":":
                raise ParseError(no, "expected 'rot <u> : <neighbors>'")
            u = _int(parts[1], no)
            if u in rotations:
                raise ParseError(no, f"duplicate rotation for {u}")
            rotations[u] = tuple(_int(p, no) for p in parts[3:])
        elif parts[0] == "e":
            if len(parts) < 4 or parts[3] != ":":
                raise ParseError(no, "expected 'e <u> <v> : <crossings>'")
            u, v = _int(parts[1], no), _int(parts[2], no)
            if not u < v:
                raise ParseError(no, "edge lines must be ordered u < v")
            if (u, v) in paths:
                raise ParseError(no, f"duplicate edge line {u} {v}")
            paths[(u, v)] = tuple(_int(p, no) for p in parts[4:])
        elif parts[0] == "x":
            if len(parts) != 4 or parts[2] != ":" or parts[3] not in ("+", "-"):
                raise ParseError(no, "expected 'x <k> : <+|->'")
            k = _int(parts[1], no)
            if k in bits:
                raise ParseError(no, f"duplicate orientation for crossing {k}")
            bits[k] = parts[3]
        elif parts[0] == "ref":
            if ref is not None or len(parts) != 3:
                raise ParseError(no, "bad ref line")
            ref = (_int(parts[1], no), _int(parts[2], no))
        else:
            raise ParseError(no, f"unexpected line {line!r}")
    last = body[-1][0] if body else 4
    if c is None:
        raise ParseError(last, "missing crossing count")
    if sorted(rotations) != list(range(n)):
        raise ParseError(last, "missing rotation lines")
    if sorted(bits) != list(range(c)):
        raise ParseError(last, "missing orientation lines")
    if ref is None:
        raise ParseError(last, "missing ref line")
    return build_drawing(
        n, paths, [bits[k] for k in range(c)],
        [rotations[u] for u in range(n)], ref)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _reference_pair(drawing: Drawing) -> Tuple[int, int]:
    for u in range(drawing.n):
        for v in range(drawing.n):
            if u != v and drawing.out_left_face[u][v] == drawing.reference_face:
                return (u, v)
    raise ValueError("reference face touches no vertex; cannot serialize")


def _face_pair(drawing: Drawing, face: int) -> Tuple[int, int]:
    for u in range(drawing.n):
        for v in range(drawing.n):
            if u != v and drawing.out_left_face[u][v] == face:
                return (u, v)
    raise ValueError(f"face {face} touches no vertex; cannot serialize")


def serialize(drawing: Drawing, fmt: str) -> bytes:
    """Canonical byte serialization in the requested format."""
    if fmt == "points":
        geom = drawing.geometry
        if not isinstance(geom, PointsGeometry):
            raise NoGeometry("drawing has no point coordinates")
        out = [MAGIC, "format points", f"n {drawing.n}"]
        for i, p in enumerate(geom.points):
            out.append(f"v {i} {_frac_str(p.x)} {_frac_str(p.y)}")
        return ("\n".join(out) + "\n").encode()

    if fmt == "twopage":
        geom = drawing.geometry
        if not isinstance(geom, TwoPageGeometry):
            raise NoGeometry("drawing has no 2-page structure")
        out = [MAGIC, "format twopage", f"n {drawing.n}"]
        out.append("order " + " ".join(str(v) for v in geom.order))
        for (u, v), page in geom.pages:
            out.append(f"e {u} {v} {page}")
        return ("\n".join(out) + "\n").encode()

    if fmt == "map":
        out = [MAGIC, "format map", f"n {drawing.n}", f"c {drawing.crossings}"]
        for u, rot in enumerate(drawing.vertex_rotations):
            k = rot.index(min(rot))
            cyc = rot[k:] + rot[:k]
            out.append(f"rot {u} : " + " ".join(str(w) for w in cyc))
        renum: Dict[int, int] = {}
        for eid, _ in enumerate(drawing.edges):
            for k in drawing.edge_paths[eid]:
                if k not in renum:
                    renum[k] = len(renum)
        for eid, (u, v) in enumerate(drawing.edges):
            ids = " ".join(str(renum[k]) for k in drawing.edge_paths[eid])
            out.append(f"e {u} {v} :" + (" " + ids if ids else ""))
        for old, new in sorted(renum.items(), key=lambda kv: kv[1]):
            out.append(f"x {new} : {drawing.orientation_bits[old]}")
        ru, rv = _reference_pair(drawing)
        out.append(f"ref {ru} {rv}")
        return ("\n".join(out) + "\n").encode()

    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# witness files
# ---------------------------------------------------------------------------


def parse_witness(data: Union[bytes, str],
                  drawing: Drawing) -> Union[ShellWitness, BishellWitness]:
    """Parse a witness certificate; the face is resolved on `drawing`."""
    lines = _lines(data)
    if not lines or lines[0][1] != WITNESS_MAGIC:
        raise ParseError(lines[0][0] if lines else 1, f"expected {WITNESS_MAGIC!r}")
    if len(lines) < 3:
        raise ParseError(1, "truncated witness")
    no, kind = lines[1]
    if kind not in ("shell", "bishell"):
        raise ParseError(no, f"unknown witness kind {kind!r}")
    no, face_line = lines[2]
    parts = face_line.split()
    if len(parts) != 3 or parts[0] != "face":
        raise ParseError(no, "expected 'face <u> <v>'")
    fu, fv = _int(parts[1], no), _int(parts[2], no)
    if not (0 <= fu < drawing.n and 0 <= fv < drawing.n) or fu == fv:
        raise ParseError(no, f"bad face dart ({fu},{fv})")
    face = drawing.out_left_face[fu][fv]

    seqs: Dict[str, Tuple[int, ...]] = {}
    for no, line in lines[3:]:
        parts = line.split()
        if len(parts) < 2 or parts[0] not in ("v:", "a:", "b:"):
            raise ParseError(no, f"unexpected line {line!r}")
        key = parts[0][0]
        if key in seqs:
            raise ParseError(no, f"duplicate {parts[0]} line")
        seq = tuple(_int(p, no) for p in parts[1:])
        if len(set(seq)) != len(seq):
            raise ParseError(no, f"duplicate vertex in {parts[0]} sequence")
        for v in seq:
            if not 0 <= v < drawing.n:
                raise ParseError(no, f"vertex {v} out of range")
        seqs[key] = seq

    if kind == "shell":
        if set(seqs) != {"v"}:
            raise ParseError(lines[-1][0], "shell witness needs exactly a v: line")
        return ShellWitness(face=face, seq=seqs["v"])
    if set(seqs) != {"a", "b"}:
        raise ParseError(lines[-1][0], "bishell witness needs a: and b: lines")
    if len(seqs["a"]) != len(seqs["b"]):
        raise ParseError(lines[-1][0], "a: and b: must have equal length")
    return BishellWitness(face=face, a_seq=seqs["a"], b_seq=seqs["b"])


def serialize_witness(drawing: Drawing,
                      witness: Union[ShellWitness, BishellWitness]) -> bytes:
    fu, fv = _face_pair(drawing, witness.face)
    out = [WITNESS_MAGIC]
    if isinstance(witness, ShellWitness):
        out.append("shell")
        out.append(f"face {fu} {fv}")
        out.append("v: " + " ".join(str(v) for v in witness.seq))
    else:
        out.append("bishell")
        out.append(f"face {fu} {fv}")
        out.append("a: " + " ".join(str(v) for v in witness.a_seq))
        out.append("b: " + " ".join(str(v) for v in witness.b_seq))
    return ("\n".join(out) + "\n").encode()


# ---------------------------------------------------------------------------
# SVG export
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Svg:
    def __init__(self) -> None:
        self.parts: List[str] = []

    def polyline(self, pts: Sequence[Tuple[float, float]], color: str = "#222",
                 width: float = 1.2) -> None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        self.parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"/>')

    def line(self, a, b, color="#222", width=1.2):
        self.polyline([a, b], color, width)

    def circle(self, c, r, color="#222", fill="none", width=1.0):
        self.parts.append(
            f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="{_fmt(r)}" '
            f'fill="{fill}" stroke="{color}" stroke-width="{width}"/>')

    def dot(self, c, r, fill):
        self.parts.append(
            f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="{_fmt(r)}" '
            f'fill="{fill}" stroke="none"/>')

    def label(self, c, text):
        self.parts.append(
            f'<text x="{_fmt(c[0] + 6)}" y="{_fmt(c[1] - 6)}" '
            f'font-size="11" font-family="sans-serif">{text}</text>')

    def document(self, width: float, height: float) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
                f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
        bg = f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>'
        return "\n".join([head, bg] + self.parts + ["</svg>"]) + "\n"


def _transform(points: Sequence[Tuple[float, float]], size: float = 600.0,
               margin: float = 40.0):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def to_screen(p: Tuple[float, float]) -> Tuple[float, float]:
        return (margin + (p[0] - x0) * scale, margin + (y1 - p[1]) * scale)

    return to_screen


def export_svg(drawing: Drawing, path: str) -> None:
    """Render a drawing with geometric provenance to an SVG file.

    Map-format drawings carry no coordinates and are rejected.
    """
    geom = drawing.geometry
    if isinstance(geom, PointsGeometry):
        doc = _svg_points(drawing, geom)
    elif isinstance(geom, TwoPageGeometry):
        doc = _svg_twopage(drawing, geom)
    elif isinstance(geom, CylindricalGeometry):
        doc = _svg_cylindrical(drawing, geom)
    else:
        raise NoGeometry("map-format drawings carry no coordinates")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(doc)


def _svg_points(drawing: Drawing, geom: PointsGeometry) -> str:
    pts = [(float(p.x), float(p.y)) for p in geom.points]
    to = _transform(pts)
    svg = _Svg()
    for (u, v) in drawing.edges:
        svg.line(to(pts[u]), to(pts[v]))
    for e1, e2 in drawing.crossing_edges:
        (a, b), (c, d) = drawing.edges[e1], drawing.edges[e2]
        hit = proper_intersection(*(geom.points[i] for i in (a, b, c, d)))
        if hit is not None:
            svg.dot(to((float(hit.x), float(hit.y))), 3.0, "#c22")
    for i, p in enumerate(pts):
        svg.dot(to(p), 4.0, "#06c")
        svg.label(to(p), str(i))
    return svg.document(600, 600)


def _svg_twopage(drawing: Drawing, geom: TwoPageGeometry) -> str:
    pos = [float(x) for x in geom.positions]
    lo, hi = min(pos), max(pos)
    rad = (hi - lo) / 2 or 1.0
    corners = [(lo - 1, -rad - 1), (hi + 1, rad + 1)]
    to = _transform(corners, size=700)
    svg = _Svg()
    svg.line(to((lo - 0.5, 0)), to((hi + 0.5, 0)), color="#bbb", width=0.8)
    pages = dict(geom.pages)
    for (u, v) in drawing.edges:
        a, b = sorted((pos[u], pos[v]))
        c, r = (a + b) / 2, (b - a) / 2
        sign = 1.0 if pages[(u, v)] == "T" else -1.0
        samples = [(c + r * cos(pi * k / 32), sign * r * sin(pi * k / 32))
                   for k in range(33)]
        svg.polyline([to(p) for p in samples])
    for e1, e2 in drawing.crossing_edges:
        (u1, v1), (u2, v2) = drawing.edges[e1], drawing.edges[e2]
        l1, r1 = sorted((pos[u1], pos[v1]))
        l2, r2 = sorted((pos[u2], pos[v2]))
        x = (l1 * r1 - l2 * r2) / ((l1 + r1) - (l2 + r2))
        y = sqrt(max(0.0, -(x - l1) * (x - r1)))
        sign = 1.0 if pages[(u1, v1)] == "T" else -1.0
        svg.dot(to((x, sign * y)), 3.0, "#c22")
    for v in range(drawing.n):
        svg.dot(to((pos[v], 0)), 4.0, "#06c")
        svg.label(to((pos[v], 0)), str(v))
    return svg.document(700, 700)


def _svg_cylindrical(drawing: Drawing, geom: CylindricalGeometry) -> str:
    def at(vertex: int) -> Tuple[float, float]:
        r = 2.0 if vertex in geom.outer else 1.0
        ang = 2 * pi * float(geom.angles[vertex])
        return (r * cos(ang), r * sin(ang))

    def invert(p: Tuple[float, float]) -> Tuple[float, float]:
        s = 4.0 / (p[0] * p[0] + p[1] * p[1])
        return (p[0] * s, p[1] * s)

    corners = [(-3.2, -3.2), (3.2, 3.2)]
    to = _transform(corners, size=700)
    svg = _Svg()
    svg.circle(to((0.0, 0.0)), abs(to((1.0, 0.0))[0] - to((0.0, 0.0))[0]),
               color="#ccc", width=0.8)
    svg.circle(to((0.0, 0.0)), abs(to((2.0, 0.0))[0] - to((0.0, 0.0))[0]),
               color="#ccc", width=0.8)
    outer = set(geom.outer)
    for (u, v) in drawing.edges:
        if u in outer and v in outer:
            chord = [_lerp(at(u), at(v), k / 32) for k in range(33)]
            svg.polyline([to(invert(p)) for p in chord])
        elif u not in outer and v not in outer:
            svg.line(to(at(u)), to(at(v)))
        else:
            o, i = (u, v) if u in outer else (v, u)
            a0 = float(geom.angles[o])
            dlt = float(_wrap_half(geom.angles[i] - geom.angles[o]))
            samples = []
            for k in range(33):
                t = k / 32
                r = 2.0 - t
                ang = 2 * pi * (a0 + dlt * t)
                samples.append((r * cos(ang), r * sin(ang)))
            svg.polyline([to(p) for p in samples])
    for e1, e2 in drawing.crossing_edges:
        hit = _cyl_crossing_marker(drawing, geom, e1, e2, at, invert)
        if hit is not None:
            svg.dot(to(hit), 3.0, "#c22")
    for v in range(drawing.n):
        svg.dot(to(at(v)), 4.0, "#06c")
        svg.label(to(at(v)), str(v))
    return svg.document(700, 700)


def _cyl_crossing_marker(drawing, geom, e1, e2, at, invert):
    outer = set(geom.outer)
    (u1, v1), (u2, v2) = drawing.edges[e1], drawing.edges[e2]
    kinds = [sum(1 for w in e if w in outer) for e in ((u1, v1), (u2, v2))]
    if kinds == [1, 1]:  # side/side: exact parameter from the angles
        o1, i1 = (u1, v1) if u1 in outer else (v1, u1)
        o2, i2 = (u2, v2) if u2 in outer else (v2, u2)
        d0 = geom.angles[o1] - geom.angles[o2]
        slope = (_wrap_half(geom.angles[i1] - geom.angles[o1])
                 - _wrap_half(geom.angles[i2] - geom.angles[o2]))
        if slope == 0:
            return None
        d1 = d0 + slope
        lo, hi = (d0, d1) if d0 < d1 else (d1, d0)
        level = floor(hi)
        if not lo < level:
            return None
        t = float((level - d0) / slope)
        r = 2.0 - t
        ang = 2 * pi * (float(geom.angles[o1])
                        + float(_wrap_half(geom.angles[i1] - geom.angles[o1])) * t)
        return (r * cos(ang), r * sin(ang))
    hit = _segment_hit(at(u1), at(v1), at(u2), at(v2))
    if hit is None:
        return None
    return invert(hit) if kinds == [2, 2] else hit


def _segment_hit(a1, a2, b1, b2):
    d1 = (a2[0] - a1[0], a2[1] - a1[1])
    d2 = (b2[0] - b1[0], b2[1] - b1[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    w = (b1[0] - a1[0], b1[1] - a1[1])
    t = (w[0] * d2[1] - w[1] * d2[0]) / den
    return (a1[0] + t * d1[0], a1[1] + t * d1[1])


def _lerp(a: Tuple[float, float], b: Tuple[float, float], t: float):
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)
