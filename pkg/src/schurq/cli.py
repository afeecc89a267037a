"""Command-line front end.

Subcommands: qk, qfun, apply, eigen, verify, char-map, tableaux, expand.
Output is deterministic: grevlex term order, "p/q" coefficient strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import operators, spectra
from .algebra import Polynomial, RationalFunction, format_fraction
from .qfunctions import (
    OddCycleType,
    StrictPartition,
    char_map,
    expand_in_power_sums,
    q_series,
    schur_q,
    shifted_tableaux_count,
)

MAX_N = 6
MAX_DEG = 12


class GuardrailError(Exception):
    pass


def _guard(args, n: int | None = None, deg: int | None = None) -> None:
    if args.force:
        return
    if n is not None and n > MAX_N:
        raise GuardrailError(f"n={n} exceeds the guardrail {MAX_N}; pass --force")
    if deg is not None and deg > MAX_DEG:
        raise GuardrailError(f"degree {deg} exceeds the guardrail {MAX_DEG}; pass --force")


def _emit_poly(p: Polynomial, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(p.to_json_obj(), sort_keys=True))
    else:
        print(p.to_text())


def _emit_value(v, fmt: str) -> None:
    if isinstance(v, RationalFunction) and v.is_polynomial():
        v = v.as_polynomial()
    if isinstance(v, Polynomial):
        _emit_poly(v, fmt)
    elif fmt == "json":
        print(json.dumps({"rational_function": v.to_text()}, sort_keys=True))
    else:
        print(v.to_text())


def cmd_qk(args) -> int:
    _guard(args, n=args.n, deg=args.max)
    qs = q_series(args.n, args.max)
    if args.format == "json":
        print(json.dumps([q.to_json_obj() for q in qs], sort_keys=True))
    else:
        for k, q in enumerate(qs):
            print(f"q{k} = {q.to_text()}")
    return 0


def cmd_qfun(args) -> int:
    lam = StrictPartition.parse(args.lam)
    _guard(args, n=args.n, deg=lam.weight)
    _emit_poly(schur_q(lam, args.n), args.format)
    return 0


def cmd_apply(args) -> int:
    lam = StrictPartition.parse(args.lam)
    _guard(args, n=args.n, deg=lam.weight)
    f = schur_q(lam, args.n)
    _emit_value(spectra.apply_operator(args.op, f, args.n), args.format)
    return 0


def cmd_eigen(args) -> int:
    lam = StrictPartition.parse(args.lam)
    _guard(args, n=args.n, deg=lam.weight)
    report = spectra.eigen_check(lam, args.op, args.n)
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), sort_keys=True))
    else:
        if report.is_eigen:
            print(f"eigenvalue {format_fraction(report.eigenvalue)}")
        else:
            print(f"not an eigenfunction; residual {report.residual.to_text()}")
    return 0


SUITES = {
    "skew": lambda n, d: spectra.skew_symmetry_sweep(n, d),
    "supersym": lambda n, d: spectra.supersymmetry_sweep(n, d),
    "stability": lambda n, d: spectra.stability_sweep(n, d),
    "lemma121": lambda n, d: spectra.lemma_121_sweep(n, d),
    "lemma123i": lambda n, d: spectra.conjugation_sweep(n, d),
    "lemma123ii": lambda n, d: spectra.eigenfunction_sweep(n, d),
    "lemma123iii": lambda n, d: spectra.uniqueness_sweep(n, d),
    "aux35": lambda n, d: spectra.auxiliary_sweep(n),
}


def cmd_verify(args) -> int:
    _guard(args, n=args.n, deg=args.max)
    report = SUITES[args.suite](args.n, args.max)
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), sort_keys=True))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{report.name}: {status} ({report.checked} checks)")
        for failure in report.failures:
            print(f"  {failure}")
    return 0 if report.passed else 1


def cmd_char_map(args) -> int:
    nu = OddCycleType.parse(args.nu)
    _guard(args, n=args.n, deg=nu.weight)
    _emit_poly(char_map(nu, args.n), args.format)
    return 0


def cmd_tableaux(args) -> int:
    lam = StrictPartition.parse(args.lam)
    count = shifted_tableaux_count(lam)
    if args.format == "json":
        print(json.dumps({"partition": str(lam), "count": count}, sort_keys=True))
    else:
        print(count)
    return 0


def cmd_expand(args) -> int:
    lam = StrictPartition.parse(args.lam)
    _guard(args, deg=max(args.max, lam.weight))
    n = max(lam.weight, 1)
    expansion = expand_in_power_sums(schur_q(lam, n), n, args.max)
    items = sorted(expansion.items(), key=lambda kv: (kv[0].weight, kv[0].parts))
    obj = {str(nu): format_fraction(c) for nu, c in items}
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for nu, c in items:
            print(f"p[{nu}] : {format_fraction(c)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurq",
        description="Exact Schur Q-functions, radial operators, and identity sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--force", action="store_true", help="override size guardrails")

    p = sub.add_parser("qk", help="generating-series coefficients q_0..q_K")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_qk)

    p = sub.add_parser("qfun", help="the Q-function of a strict partition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_qfun)

    p = sub.add_parser("apply", help="apply an operator to Q_lambda")
    p.add_argument("--op", choices=sorted(spectra.OPERATORS), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("eigen", help="eigenvalue report for Q_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--op", choices=sorted(spectra.OPERATORS), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("verify", help="run an identity sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("char-map", help="characteristic map of an odd cycle type")
    p.add_argument("--nu", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_char_map)

    p = sub.add_parser("tableaux", help="shifted standard tableau count")
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("expand", help="odd power-sum expansion of Q_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--max", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardrailError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
