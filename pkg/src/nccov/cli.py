"""``nccov`` command line: run the property suites or print worked examples."""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import ConfigError, ParseError, ShapeMismatch, Singular
from .geometry import (
    apply_polylinear,
    covariance_check_polylinear,
    endo_transform,
    format_tensor,
    parse_tensor,
    skew_apply,
    skew_transform_check,
    transform_polylinear,
)
from .ncmatrix import NcMatrix, format_matrix, identity, parse_matrix
from .scalar import Quaternion
from .suites import FORMATS, SUITES, SuiteConfig, run_suite
from .transform import PassiveTransform, passive_apply_basis, passive_coords_backward, passive_coords_forward
from .vspace import Basis, CoordRow, HomMatrix, apply_hom, expand_in_reference

DEMO_KINDS = ("basis-change", "endo", "polylinear", "skew")
DEFAULT_TENSOR = "0.0.0=i|j|k & 1|i|1"


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nccov",
        description="Exact covariance checks for vector spaces over the quaternions.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run randomized exact property suites")
    check.add_argument("--suite", choices=SUITES + ("all",), default="all")
    check.add_argument("--dim", type=int, default=3, help="maximum dimension (1..8)")
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--arity", type=int, default=2, help="arity for the polylinear suite (1..3)")
    check.add_argument("--max-terms", type=int, default=3, help="terms per tensor component")
    check.add_argument("--seed", type=_u64, default=0)
    check.add_argument("--format", choices=FORMATS, default="json")
    check.add_argument("--timing", action="store_true",
                       help="record elapsed_ms (reports are then no longer byte-reproducible)")
    check.add_argument("--output", "-o", help="write the report here instead of stdout")

    demo = sub.add_parser("demo", help="print a worked change-of-basis example")
    demo.add_argument("--kind", choices=DEMO_KINDS, required=True)
    demo.add_argument("--g", help="passive transformation matrix, e.g. 'i,0;0,1'")
    demo.add_argument("--f", help="endomorphism matrix (endo)")
    demo.add_argument("--a", help="tensor map, e.g. '0.0.1=i|j|k & 1|1|1; 1.1.0=j|1|1'")
    demo.add_argument("--u", action="append",
                      help="coordinates in the new basis; repeat for several arguments")
    demo.add_argument("--v", help="coordinates in the new basis")
    return parser


def cmd_check(args) -> int:
    try:
        cfg = SuiteConfig(suite=args.suite, dim=args.dim, trials=args.trials, arity=args.arity,
                          max_terms=args.max_terms, seed=args.seed, format=args.format)
    except ConfigError as exc:
        print(f"nccov: config error: {exc}", file=sys.stderr)
        return 2
    report = run_suite(cfg, timing=args.timing)
    text = report.to_json() if cfg.format == "json" else report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def _ones(n: int) -> CoordRow:
    return CoordRow(NcMatrix(1, n, (Quaternion.one(),) * n))


def _g(args, default_dim: int = 2) -> PassiveTransform:
    return PassiveTransform(parse_matrix(args.g) if args.g else identity(default_dim))


def _row(text: Optional[str], n: int) -> CoordRow:
    if text is None:
        return _ones(n)
    row = CoordRow.parse(text)
    if row.n != n:
        raise ParseError(f"expected {n} coordinates, got {row.n}", 0, text)
    return row


def _verdict(lhs: CoordRow, rhs: CoordRow, out) -> bool:
    equal = lhs == rhs
    print(f"verdict: {'EQUAL' if equal else 'UNEQUAL'}", file=out)
    return equal


def demo_basis_change(args, out) -> bool:
    g = _g(args)
    n = g.n
    e1 = Basis.reference(n)
    e2 = passive_apply_basis(g, e1)
    v2 = _row(args.v or (args.u[0] if args.u else None), n)
    v1 = passive_coords_forward(g, v2)
    print("passive change of basis  e2 = g e1", file=out)
    print(f"  g                     = {format_matrix(g.g)}", file=out)
    print(f"  e2                    = {format_matrix(e2.e)}", file=out)
    print(f"  v2 (coords in e2)     = {v2}", file=out)
    print(f"  v1 = v2 g             = {v1}", file=out)
    print(f"  v2 = v1 g^-1          = {passive_coords_backward(g, v1)}", file=out)
    lhs, rhs = expand_in_reference(v2, e2), expand_in_reference(v1, e1)
    print(f"  v2 e2 (reference)     = {lhs}", file=out)
    print(f"  v1 e1 (reference)     = {rhs}", file=out)
    return _verdict(lhs, rhs, out)


def demo_endo(args, out) -> bool:
    g = _g(args)
    n = g.n
    e1 = Basis.reference(n)
    f1 = HomMatrix(parse_matrix(args.f) if args.f else identity(n), e1, e1)
    f2 = endo_transform(f1, g)
    v2 = _row(args.v or (args.u[0] if args.u else None), n)
    v1 = passive_coords_forward(g, v2)
    print("endomorphism under e2 = g e1:  f2 = g f1 g^-1", file=out)
    print(f"  g                     = {format_matrix(g.g)}", file=out)
    print(f"  f1                    = {format_matrix(f1.f)}", file=out)
    print(f"  f2                    = {format_matrix(f2.f)}", file=out)
    print(f"  v2 (coords in e2)     = {v2}", file=out)
    print(f"  v1 = v2 g             = {v1}", file=out)
    lhs = expand_in_reference(apply_hom(f2, v2), f2.basis_out)
    rhs = expand_in_reference(apply_hom(f1, v1), e1)
    print(f"  (v2 f2) e2            = {lhs}", file=out)
    print(f"  (v1 f1) e1            = {rhs}", file=out)
    return _verdict(lhs, rhs, out)


def _tensor_inputs(args, n: int, arity: int) -> list[CoordRow]:
    texts = list(args.u or [])
    if args.v is not None:
        texts.append(args.v)
    texts += [None] * (arity - len(texts))
    return [_row(t, n) for t in texts[:arity]]


def demo_polylinear(args, out) -> bool:
    g = _g(args)
    n = g.n
    a1 = parse_tensor(args.a or DEFAULT_TENSOR, n)
    a2 = transform_polylinear(a1, g)
    vs2 = _tensor_inputs(args, n, a1.arity)
    vs1 = [passive_coords_forward(g, v) for v in vs2]
    e1, e2 = Basis.reference(n), passive_apply_basis(g, Basis.reference(n))
    print("polylinear map under e2 = g e1:", file=out)
    print("  a2 terms = (a0, g[k1,j1] a1, ..., g[kn,jn] an g^-1[i,l])", file=out)
    print(f"  g                     = {format_matrix(g.g)}", file=out)
    print(f"  a1                    = {format_tensor(a1)}", file=out)
    print(f"  a2                    = {format_tensor(a2)}", file=out)
    for t, (v2, v1) in enumerate(zip(vs2, vs1), start=1):
        print(f"  arg {t}: v2 = {v2}   v1 = v2 g = {v1}", file=out)
    lhs = expand_in_reference(apply_polylinear(a2, vs2), e2)
    rhs = expand_in_reference(apply_polylinear(a1, vs1), e1)
    print(f"  a2(v2...) e2          = {lhs}", file=out)
    print(f"  a1(v1...) e1          = {rhs}", file=out)
    return _verdict(lhs, rhs, out) and covariance_check_polylinear(a1, g, vs2)


def demo_skew(args, out) -> bool:
    g = _g(args)
    n = g.n
    h1 = parse_tensor(args.a or DEFAULT_TENSOR, n, arity=2)
    h2 = transform_polylinear(h1, g)
    u2 = _row(args.u[0] if args.u else None, n)
    v2 = _row(args.v, n)
    if args.v is None:
        v2 = CoordRow.unit(n, n - 1, Quaternion(0, 0, 1))
    u1, v1 = passive_coords_forward(g, u2), passive_coords_forward(g, v2)
    e1, e2 = Basis.reference(n), passive_apply_basis(g, Basis.reference(n))
    print("skew-symmetric map  w = 1/2 (h(u, v) - h(v, u)) under e2 = g e1", file=out)
    print(f"  g                     = {format_matrix(g.g)}", file=out)
    print(f"  h1                    = {format_tensor(h1)}", file=out)
    print(f"  u2, v2                = {u2}, {v2}", file=out)
    w2 = skew_apply(h2, u2, v2)
    print(f"  w2 = h2(u2 ^ v2)      = {w2}", file=out)
    print(f"  h2(v2 ^ u2)           = {skew_apply(h2, v2, u2)}", file=out)
    law = skew_transform_check(h1, g)
    print(f"  det* selector law     : {'holds' if law else 'FAILS'}", file=out)
    lhs = expand_in_reference(w2, e2)
    rhs = expand_in_reference(skew_apply(h1, u1, v1), e1)
    print(f"  w2 e2                 = {lhs}", file=out)
    print(f"  w1 e1                 = {rhs}", file=out)
    return _verdict(lhs, rhs, out) and law


def cmd_demo(args) -> int:
    runner = {"basis-change": demo_basis_change, "endo": demo_endo,
              "polylinear": demo_polylinear, "skew": demo_skew}[args.kind]
    try:
        ok = runner(args, sys.stdout)
    except ParseError as exc:
        print(f"nccov: parse error: {exc}", file=sys.stderr)
        return 2
    except (Singular, ShapeMismatch) as exc:
        print(f"nccov: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args)
    return cmd_demo(args)


if __name__ == "__main__":
    sys.exit(main())
