"""Command-line front end.

Exit codes: 0 accept/success, 1 reject (the input failed a check; a witness is
printed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classify as cl
from .ringcore import INFINITE_CYCLIC, FiniteCyclic, format_element, format_rational
from .schurmod import WINDOW, NotHadamardClosed, decompose_span, validate_partition
from .schurring import (
    SchurRing,
    Subgroup,
    format_structure,
    orbit_ring,
    restrict,
    structure_constants,
    symmetric_ring,
    tensor_ring,
    trivial_ring,
    verify_schur_ring,
)
from .textio import (
    ParseError,
    format_partition,
    parse_elements,
    parse_exponent,
    read_partition,
    write_enumeration,
)

AXIOMS = ("identity", "star", "product")


class UsageError(Exception):
    pass


class Rejected(Exception):
    pass


def _load(path, need_window=True):
    P = read_partition(path)
    if need_window and P.ctx.kind == "Z" and P.universe != WINDOW:
        raise UsageError(f"{path}: group Z input needs a 'window -N N' line")
    return P


def _ring(path, out) -> SchurRing:
    P = _load(path)
    v = verify_schur_ring(P)
    if not v:
        raise Rejected(f"{path}: not a Schur ring ({v.rule}): {v.message}")
    return SchurRing(P, check=False)


def cmd_verify(args, out):
    P = _load(args.file)
    out.write(format_partition(P))
    v = verify_schur_ring(P)
    if not v and v.rule not in AXIOMS:
        out.write(f"partition fail: {v.message}\n")
        out.write("verdict reject\n")
        return 1
    failed = False
    for ax in AXIOMS:
        if failed:
            out.write(f"axiom {ax} skipped\n")
        elif not v and v.rule == ax:
            out.write(f"axiom {ax} fail: {v.message}\n")
            failed = True
        else:
            out.write(f"axiom {ax} ok\n")
    if v:
        out.write("verdict accept (fragment)\n" if v.fragment else "verdict accept\n")
        return 0
    out.write("verdict reject\n")
    return 1


def cmd_structure(args, out):
    R = _ring(args.file, out)
    k = len(R.classes)
    for idx in (args.c, args.d):
        if not 0 <= idx < k:
            raise UsageError(f"class index {idx} out of range 0..{k - 1}")
    C, D = R.classes[args.c], R.classes[args.d]
    try:
        table = structure_constants(R, C, D)
    except ValueError as exc:
        raise Rejected(str(exc)) from None
    for line in format_structure(R, table):
        out.write(line + "\n")
    total, expect = table.conservation()
    out.write(f"conservation {format_rational(total)} {expect}\n")
    return 0 if total == expect else 1


def _mults(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad multiplier list {text!r}") from None


def cmd_orbit(args, out):
    try:
        R = orbit_ring(args.n, _mults(args.mult))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_partition(R.partition))
    return 0


def cmd_symmetric(args, out):
    if args.n is not None:
        R = symmetric_ring(FiniteCyclic(args.n))
    else:
        lo, hi = args.window
        if lo != -hi or hi < 0:
            raise UsageError("window must be symmetric: --window -N N")
        R = symmetric_ring(INFINITE_CYCLIC, window=(lo, hi))
    out.write(format_partition(R.partition))
    return 0


def cmd_trivial(args, out):
    R = trivial_ring(FiniteCyclic(args.n))
    out.write(format_partition(R.partition))
    return 0


def cmd_tensor(args, out):
    R1, R2 = _ring(args.file1, out), _ring(args.file2, out)
    try:
        R = tensor_ring(R1, R2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_partition(R.partition))
    return 0


def cmd_decompose(args, out):
    path = Path(args.file)
    ctx, elems = parse_elements(path.read_text(), source=str(path))
    try:
        P = decompose_span(elems, strict=args.strict)
    except NotHadamardClosed as exc:
        if exc.product is None:
            raise Rejected(str(exc)) from None
        raise Rejected(f"{exc}; product {format_element(exc.product)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_partition(P))
    return 0


def _report(verdict, out):
    if verdict:
        out.write(f"pattern {verdict.pattern}\n")
        return 0
    out.write(f"inconsistent {verdict.rule}: {verdict.message}\n")
    return 1


def cmd_classify_window(args, out):
    P = _load(args.file)
    if P.ctx.kind != "Z":
        raise UsageError("classify-window needs a group Z partition")
    return _report(cl.classify_window(P), out)


def cmd_classify_rational(args, out):
    P = _load(args.file, need_window=False)
    if P.ctx.is_finite:
        raise UsageError("classify-rational needs a group Q or group Z partition")
    v = validate_partition(P)
    if not v:
        raise UsageError(v.message)
    try:
        verdict = cl.classify_rational(P.classes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report(verdict, out)


def cmd_enumerate(args, out):
    try:
        rings = cl.enumerate_schur_rings(args.n, force=args.force)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"n {args.n} count {len(rings)}\n")
    for i, R in enumerate(rings):
        out.write(f"ring {i} sizes {','.join(str(len(c)) for c in R.classes)}\n")
    if args.out:
        write_enumeration(args.n, rings, args.out)
    return 0


def cmd_restrict(args, out):
    R = _ring(args.file, out)
    try:
        g = parse_exponent(R.ctx, args.generator) if R.ctx.kind == "Q" else int(args.generator)
        H = Subgroup(R.ctx, g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        S = restrict(R, H)
    except ValueError as exc:
        raise Rejected(str(exc)) from None
    out.write(format_partition(S.partition))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="schurcyclic", description="Schur rings over cyclic groups")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check the Schur-ring axioms of a partition file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("structure", help="structure constants of a class pair")
    s.add_argument("file")
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("orbit", help="orbit ring of Z/n under a multiplier group")
    s.add_argument("n", type=int)
    s.add_argument("--mult", required=True, help="comma-separated unit residues")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("symmetric", help="symmetric ring over Z/n or a window of Z")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))
    s.set_defaults(func=cmd_symmetric)

    s = sub.add_parser("trivial", help="trivial ring over Z/n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_trivial)

    s = sub.add_parser("tensor", help="dot product of rings over coprime orders")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("decompose", help="primitive partition of a Hadamard-closed span")
    s.add_argument("file")
    s.add_argument("--strict", action="store_true",
                   help="require the generators' own span to be Hadamard-closed")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("classify-window", help="classify a window fragment over Z")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify_window)

    s = sub.add_parser("classify-rational", help="classify a class family over Q")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify_rational)

    s = sub.add_parser("enumerate", help="all Schur rings over Z/n")
    s.add_argument("n", type=int)
    s.add_argument("--out")
    s.add_argument("--force", action="store_true", help=f"allow n > {cl.MAX_ENUMERATION_ORDER}")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("restrict", help="restrict a ring to the S-subgroup <d>")
    s.add_argument("file")
    s.add_argument("--generator", required=True)
    s.set_defaults(func=cmd_restrict)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except Rejected as exc:
        out.write(f"reject: {exc}\n")
        return 1
    except (ParseError, UsageError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
