"""Command-line surface.

Exit codes: 0 success, 1 domain error (a named precondition failed),
2 usage or parse error, 3 verification mismatch.  With --output json the
whole stdout is a single JSON document; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .cfrac import ContinuedFraction, IntMatrix2, QuadSurd, expand
from .dynsys import periodic_points
from .errors import DomainError, ParseError
from .exactnum import Poly, QuadElem
from .lattes import EllipticCurve, RationalMap, duplication_map
from .lattice import PseudoLattice, scale_lattice
from .pipeline import apply_functor, comparison_report, functor_invariants
from .sft import SFTMatrix, ZetaRational, shift_equivalent, zeta_sft

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass(frozen=True)
class CliConfig:
    precision_bits: int = 128
    entry_bound: int = 10
    lag_bound: int = 6
    output: str = "text"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise DomainError("precision must be at least 64 bits")
        if self.entry_bound < 1 or self.lag_bound < 1:
            raise DomainError("search bounds must be >= 1")
        if self.output not in ("text", "json"):
            raise DomainError("output must be 'text' or 'json'")


def _emit(doc: dict, text_lines: list[str], cfg: CliConfig) -> None:
    if cfg.output == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _functor_text(out) -> list[str]:
    return [
        f"D: {out.D}",
        f"epsilon: {out.epsilon}",
        f"A: {out.A}",
        f"theta_prime: {out.theta_prime}",
        f"cf: {out.cf}",
        f"T: {out.T}",
        f"zeta: {out.zeta}",
        f"K0: {out.K0}",
    ]


def cmd_functor(args, cfg: CliConfig) -> int:
    eps = QuadElem.parse(args.eps)
    if args.curve is not None:
        E = EllipticCurve.parse(args.curve, cm_D=args.D)
        out = apply_functor(E, eps)
    else:
        out = functor_invariants(args.D, eps)
    _emit(out.to_json_dict(), _functor_text(out), cfg)
    return EXIT_OK


def cmd_zeta(args, cfg: CliConfig) -> int:
    A = SFTMatrix.parse(args.matrix)
    z = zeta_sft(A)
    doc = {"matrix": [list(r) for r in A.rows], "zeta": z.to_json_dict()}
    _emit(doc, [str(z)], cfg)
    return EXIT_OK


def _map_from_args(args) -> RationalMap:
    if args.map is not None:
        return RationalMap.parse(args.map)
    if args.curve is not None:
        return duplication_map(EllipticCurve.parse(args.curve))
    raise ParseError("one of --map or --curve is required")


def cmd_periodic(args, cfg: CliConfig) -> int:
    phi = _map_from_args(args)
    rep = periodic_points(phi, args.n, cfg.precision_bits)
    lines = [
        f"n: {rep.n}",
        f"degree: {rep.degree}",
        f"count_with_multiplicity: {rep.count_with_multiplicity}",
        f"count_distinct: {rep.count_distinct}",
        f"infinity_fixed: {rep.infinity_fixed}",
        "finite_points: "
        + "; ".join(f"{z.real:.12g}{z.imag:+.12g}i" for z in rep.finite_points),
    ]
    _emit(rep.to_json_dict(), lines, cfg)
    return EXIT_OK


def cmd_shift_equiv(args, cfg: CliConfig) -> int:
    A = SFTMatrix.parse(args.A)
    B = SFTMatrix.parse(args.B)
    res = shift_equivalent(A, B, cfg.entry_bound, cfg.lag_bound)
    lines = [f"status: {res.status}"]
    if res.certificate is not None:
        c = res.certificate
        lines += [
            f"R: {';'.join(','.join(map(str, r)) for r in c.R)}",
            f"S: {';'.join(','.join(map(str, r)) for r in c.S)}",
            f"k: {c.k}",
        ]
    if res.witness is not None:
        lines.append(f"witness: {res.witness}")
    _emit(res.to_json_dict(), lines, cfg)
    return EXIT_OK


def cmd_cfrac(args, cfg: CliConfig) -> int:
    surd = QuadSurd.parse(args.surd)
    cf = expand(surd)
    doc = {
        "surd": str(surd),
        "cf": {"preperiod": list(cf.preperiod), "period": list(cf.period)},
    }
    _emit(doc, [str(cf)], cfg)
    return EXIT_OK


def cmd_compare(args, cfg: CliConfig) -> int:
    eps = QuadElem.parse(args.eps)
    E = EllipticCurve.parse(args.curve, cm_D=args.D)
    rows = comparison_report(E, eps, args.n, cfg.precision_bits)
    phi = duplication_map(E)
    doc = {
        "curve": str(E),
        "D": args.D,
        "epsilon": str(eps),
        "map_degree": phi.degree,
        "epsilon_norm": str(eps.norm()),
        "rows": [r.to_json_dict() for r in rows],
    }
    lines = [
        f"curve: {E}",
        f"D: {args.D}",
        f"epsilon: {eps}",
        f"map_degree: {phi.degree}",
        f"epsilon_norm: {eps.norm()}",
        "n\ttrace_count\tdistinct_count\tmultiplicity_count",
    ]
    lines += [
        f"{r.n}\t{r.trace_count}\t{r.distinct_count}\t{r.multiplicity_count}"
        for r in rows
    ]
    _emit(doc, lines, cfg)
    return EXIT_OK


def _verify_checks() -> list[tuple[str, str, str]]:
    """Replay the worked doubling example; returns (name, expected, got)."""
    checks: list[tuple[str, str, str]] = []
    curve = EllipticCurve(4, 2, 0, cm_D=2)
    eps = QuadElem(0, 1, 2)

    phi = duplication_map(curve)
    expected_phi = RationalMap(Poly((4, 0, -4, 0, 1)), Poly((0, 8, 16, 4)))
    checks.append(("duplication_map", str(expected_phi), str(phi)))

    sub = scale_lattice(PseudoLattice.from_sqrt(2), eps)
    checks.append(("sublattice_index", "2", str(sub.index)))
    checks.append(
        ("normalized_lattice", str(PseudoLattice(QuadSurd(0, 2, 2))), str(sub.normalized))
    )

    out = apply_functor(curve, eps)
    checks.append(("A", str(IntMatrix2(0, 1, 2, 0)), str(out.A)))
    checks.append(("theta_prime", str(QuadSurd(0, 2, 2)), str(out.theta_prime)))
    checks.append(("cf", str(ContinuedFraction((0, 1), (2,))), str(out.cf)))
    checks.append(("T", str(IntMatrix2(2, 1, 1, 0)), str(out.T)))
    checks.append(
        ("zeta", str(ZetaRational(Poly.one(), Poly((1, 0, -2)))), str(out.zeta))
    )
    checks.append(("K0", "trivial", str(out.K0)))
    return checks


def cmd_verify(args, cfg: CliConfig) -> int:
    checks = _verify_checks()
    mismatches = [(n, e, g) for n, e, g in checks if e != g]
    doc = {
        "status": "ok" if not mismatches else "mismatch",
        "checks": [
            {"name": n, "expected": e, "got": g, "ok": e == g} for n, e, g in checks
        ],
    }
    lines = []
    for n, e, g in checks:
        if e == g:
            lines.append(f"ok {n}: {g}")
        else:
            lines.append(f"MISMATCH {n}: expected {e}, got {g}")
    lines.append("verify: " + ("OK" if not mismatches else "MISMATCH"))
    _emit(doc, lines, cfg)
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattes",
        description=(
            "Exact reduction of elliptic-curve doubling dynamics to "
            "integer-matrix shift dynamics"
        ),
    )
    parser.add_argument(
        "--output", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=128,
        help="float precision in bits (>= 64); env LATTES_PRECISION overrides",
    )
    parser.add_argument(
        "--entry-bound", type=int, default=10, help="entry bound for searches"
    )
    parser.add_argument(
        "--lag-bound", type=int, default=6, help="lag bound for shift equivalence"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("functor", help="full invariant chain for (curve, D, eps)")
    p.add_argument("--D", type=int, required=True, help="CM discriminant")
    p.add_argument("--eps", required=True, help="field element 'a+b*sqrt(D)'")
    p.add_argument("--curve", help="curve 'a,b,c' (optional annotation)")
    p.set_defaults(func=cmd_functor)

    p = sub.add_parser("zeta", help="zeta function of an edge shift")
    p.add_argument("--matrix", required=True, help="matrix 'a,b;c,d' (rows by ';')")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("periodic", help="periodic points of a rational map")
    p.add_argument("--map", help="rational map 'num_coeffs / den_coeffs'")
    p.add_argument("--curve", help="curve 'a,b,c' (its doubling map is used)")
    p.add_argument("-n", type=int, required=True, help="period")
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("shift-equiv", help="bounded shift-equivalence decision")
    p.add_argument("--A", required=True, help="matrix text")
    p.add_argument("--B", required=True, help="matrix text")
    p.set_defaults(func=cmd_shift_equiv)

    p = sub.add_parser("cfrac", help="periodic continued fraction of a surd")
    p.add_argument("--surd", required=True, help="surd '(P+sqrt(D))/Q'")
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("compare", help="periodic-point count comparison table")
    p.add_argument("--curve", required=True, help="curve 'a,b,c'")
    p.add_argument("--D", type=int, required=True, help="CM discriminant")
    p.add_argument("--eps", required=True, help="field element 'a+b*sqrt(D)'")
    p.add_argument("-n", type=int, required=True, help="max period (<= 4)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="replay the worked example and diff")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    precision = args.precision
    env = os.environ.get("LATTES_PRECISION")
    if env is not None:
        try:
            precision = int(env)
        except ValueError:
            print(f"error: bad LATTES_PRECISION value {env!r}", file=sys.stderr)
            return EXIT_USAGE

    try:
        cfg = CliConfig(
            precision_bits=precision,
            entry_bound=args.entry_bound,
            lag_bound=args.lag_bound,
            output=args.output,
        )
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args, cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())
