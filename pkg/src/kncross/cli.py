"""Command line interface.

Exit codes: 0 success / property holds, 1 clean negative answer (for
example "not bishellable"), 2 input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .drawing import (
    BadCrossingDegree,
    EdgePathInconsistent,
    EulerViolation,
    k4_census,
    rotation_system,
    weak_iso_equal,
)
from .generators import (
    gen_convex,
    gen_cylindrical,
    gen_random_points,
    gen_twopage,
    twopage_all_top,
)
from .io import NoGeometry, ParseError, export_svg, parse, parse_witness, serialize, serialize_witness
from .kedges import (
    crossings_from_cumulative,
    crossings_from_k_edges,
    cumulative_sums,
    hill_number,
    k_edge_vector,
)
from .planarize import DegenerateInput
from .shelling import (
    MalformedWitness,
    ShellWitness,
    bishell_witness_violation,
    check_bishellable,
    check_s_shellable,
    is_bishellable,
    shell_witness_violation,
)

_INPUT_ERRORS = (ParseError, DegenerateInput, EulerViolation,
                 BadCrossingDegree, EdgePathInconsistent, NoGeometry,
                 MalformedWitness, OSError, ValueError)


def _load(path: str):
    with open(path, "rb") as fh:
        return parse(fh.read())


def _analyze(args) -> int:
    drawing = _load(args.file)
    vec = k_edge_vector(drawing)
    sums = cumulative_sums(vec)
    eq3 = crossings_from_k_edges(drawing)
    eq5 = crossings_from_cumulative(drawing)
    census = k4_census(drawing)
    identity = eq3 == eq5 == drawing.crossings
    if args.json:
        payload = {
            "n": drawing.n,
            "crossings": drawing.crossings,
            "h": hill_number(drawing.n),
            "k_edge_vector": list(vec.counts),
            "e_le": list(sums.single),
            "e_lele": list(sums.double),
            "cr_from_k_edges": eq3,
            "cr_from_cumulative": eq5,
            "identity_pass": identity,
            "k4_planar": census.planar,
            "k4_crossed": census.crossed,
        }
        print(json.dumps(payload, indent=2))
    else:
        e = "[" + ",".join(str(x) for x in vec.counts) + "]"
        verdict = "PASS" if identity else "FAIL"
        print(f"n={drawing.n} cr={drawing.crossings} H={hill_number(drawing.n)} "
              f"E={e} identity {verdict}")
        print("E<=  = [" + ",".join(str(x) for x in sums.single) + "]")
        print("E<<= = [" + ",".join(str(x) for x in sums.double) + "]")
        print(f"eq3={eq3} eq5={eq5}")
        print(f"K4 census: planar={census.planar} crossed={census.crossed}")
    return 0


def _resolve_face(drawing, pair):
    u, v = pair
    if not (0 <= u < drawing.n and 0 <= v < drawing.n) or u == v:
        raise ValueError(f"bad face dart ({u},{v})")
    return drawing.out_left_face[u][v]


def _check(args) -> int:
    drawing = _load(args.file)
    face = _resolve_face(drawing, args.face) if args.face else None
    if args.mode == "bishell":
        s = args.s if args.s is not None else drawing.n // 2 - 2
        if not 0 <= s <= drawing.n - 2:
            raise ValueError(f"bishell order {s} out of range")
        witness = check_bishellable(drawing, s, face=face)
    else:
        if args.s is not None:
            if not 1 <= args.s <= drawing.n:
                raise ValueError(f"shell length {args.s} out of range")
            witness = check_s_shellable(drawing, args.s, face=face)
        else:
            witness = None
            for s in range(drawing.n // 2, drawing.n + 1):
                witness = check_s_shellable(drawing, s, face=face)
                if witness is not None:
                    break
    if witness is None:
        print("no witness (exhaustive search)")
        return 1
    blob = serialize_witness(drawing, witness)
    sys.stdout.write(blob.decode())
    if args.witness_out:
        with open(args.witness_out, "wb") as fh:
            fh.write(blob)
    return 0


def _verify(args) -> int:
    drawing = _load(args.file)
    with open(args.witness, "rb") as fh:
        witness = parse_witness(fh.read(), drawing)
    if isinstance(witness, ShellWitness):
        violation = shell_witness_violation(drawing, witness)
    else:
        violation = bishell_witness_violation(drawing, witness)
    if violation is None:
        print("witness verifies")
        return 0
    print(violation)
    return 1


def _generate(args) -> int:
    n = args.n
    if args.family == "convex":
        drawing, fmt = gen_convex(n), "points"
    elif args.family == "cylindrical":
        drawing, fmt = gen_cylindrical(n), "map"
    elif args.family == "random":
        drawing, fmt = gen_random_points(n, args.seed), "points"
    else:
        if args.spec:
            drawing = _load(args.spec)
            if drawing.n != n:
                raise ValueError("spec file disagrees with --n")
        else:
            drawing = gen_twopage(twopage_all_top(n))
        fmt = "twopage"
    with open(args.out, "wb") as fh:
        fh.write(serialize(drawing, fmt))
    if args.svg:
        export_svg(drawing, args.svg)
    print(f"cr={drawing.crossings} H={hill_number(drawing.n)}")
    return 0


def _hunt(args) -> int:
    n = args.n
    found = []
    seen = []  # (signature bucket, rotation system) for weak-iso dedup
    for trial in range(args.trials):
        drawing = gen_random_points(n, args.seed + trial)
        rot = rotation_system(drawing)
        sig = drawing.crossings
        duplicate = any(sig == s and weak_iso_equal(rot, r, relabel=True)
                        for s, r in seen)
        if duplicate:
            continue
        seen.append((sig, rot))
        if args.target == "optimal":
            if drawing.crossings == hill_number(n):
                found.append((trial, drawing))
        else:
            if not is_bishellable(drawing):
                found.append((trial, drawing))
    print(f"trials={args.trials} distinct={len(seen)} matches={len(found)}")
    for trial, drawing in found:
        print(f"  seed={args.seed + trial} cr={drawing.crossings}")
    if args.out and found:
        with open(args.out, "wb") as fh:
            fh.write(serialize(found[0][1], "points"))
    return 0


def _export_svg(args) -> int:
    drawing = _load(args.file)
    export_svg(drawing, args.out)
    print(f"wrote {args.out}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kncross",
        description="good drawings of complete graphs: k-edges, crossing "
                    "identities, shellability and bishellability")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="k-edge vector, identities, K4 census")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_analyze)

    p = sub.add_parser("check", help="search for a shell/bishell witness")
    p.add_argument("file")
    p.add_argument("--mode", choices=("shell", "bishell"), required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--face", nargs=2, type=int, metavar=("U", "V"))
    p.add_argument("--witness-out", default=None)
    p.set_defaults(func=_check)

    p = sub.add_parser("verify", help="verify a witness certificate")
    p.add_argument("file")
    p.add_argument("--witness", required=True)
    p.set_defaults(func=_verify)

    p = sub.add_parser("generate", help="write a drawing of a canonical family")
    p.add_argument("family", choices=("convex", "cylindrical", "twopage", "random"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spec", default=None,
                   help="twopage drawing file supplying spine order and pages")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--svg", default=None,
                   help="also render the generated drawing (before any "
                        "geometry is lost to the map format)")
    p.set_defaults(func=_generate)

    p = sub.add_parser("hunt", help="exploratory random search, never exhaustive "
                                    "(n <= 9 recommended)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", choices=("optimal", "non-bishellable"),
                   default="optimal")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_hunt)

    p = sub.add_parser("export-svg", help="render a geometric drawing")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=_export_svg)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
