"""Command-line front end; every command prints exactly one JSON document.

Exit status: 0 on success, 1 on a domain error (JSON ``{"error", "detail"}``
on stdout), 2 on a usage error. Timing goes to stderr so that stdout is
byte-identical across identical invocations.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional, Sequence

from .aseq import identity_suite
from .errors import QSolveError
from .gf import Field, FieldSpec, field_create
from .oracle import MODES, brute_roots, census, census_identities
from .solver import invert_psi, psi, psi_roots, solve

EXHAUSTIVE_IDENTITY_LIMIT = 1 << 10


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _enc(values) -> list[str]:
    return [str(v) for v in values]


def _field_args(parser: argparse.ArgumentParser):
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--modulus", type=_csv_ints, help="monic modulus coefficients c0,...,cn")


def _element_args(parser: argparse.ArgumentParser, name: str):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--{name}", type=int, help="canonical decimal encoding")
    group.add_argument("--coeffs", type=_csv_ints, help="coefficients c0,c1,... over Z_p")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsolve", description="Roots of X^(q+1) + X + a over GF(p^n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="classify and solve P_a")
    _field_args(p)
    _element_args(p, "a")
    p.add_argument("--zeta-path", action="store_true", help="use the mu_(Q+1) formula for two roots (p = 2)")

    p = sub.add_parser("census", help="count a by number of roots")
    _field_args(p)
    p.add_argument("--mode", choices=MODES, default="formula")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("param", help="a = psi(u) and its p^d + 1 roots")
    _field_args(p)
    _element_args(p, "u")

    p = sub.add_parser("invert", help="smallest u with psi(u) = a")
    _field_args(p)
    _element_args(p, "a")

    p = sub.add_parser("identities", help="check the sequence identities")
    _field_args(p)
    p.add_argument("--samples", type=int, help="random draws (default: exhaustive for small fields, else 1000)")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("oracle-check", help="compare solve against brute force for every a")
    _field_args(p)
    return parser


def _element(ctx: Field, args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        value = ctx.from_coeffs(args.coeffs)
    return ctx.check(value)


def _cmd_solve(ctx: Field, args) -> tuple[dict, int]:
    res = solve(ctx, _element(ctx, args, "a"), zeta_path=args.zeta_path)
    diag = {key: None if val is None else str(val) for key, val in res.diagnostics.items()}
    return {
        "class": res.root_class.value,
        "roots": _enc(res.roots),
        "a": str(res.a),
        "witness_u": None if res.witness_u is None else str(res.witness_u),
        "diagnostics": diag,
    }, 0


def _cmd_census(ctx: Field, args) -> tuple[dict, int]:
    rep = census(ctx, args.mode, workers=args.workers)
    checks = census_identities(ctx, rep)
    return {
        "M0": rep.M0,
        "M1": rep.M1,
        "M2": rep.M2,
        "Mfull": rep.Mfull,
        "full_size": ctx.p**ctx.d + 1,
        "mode": rep.mode,
        "checks": checks,
    }, 0


def _cmd_param(ctx: Field, args) -> tuple[dict, int]:
    u = _element(ctx, args, "u")
    return {"u": str(u), "a": str(psi(ctx, u)), "roots": _enc(psi_roots(ctx, u))}, 0


def _cmd_invert(ctx: Field, args) -> tuple[dict, int]:
    a = _element(ctx, args, "a")
    return {"a": str(a), "u": str(invert_psi(ctx, a))}, 0


def _cmd_identities(ctx: Field, args) -> tuple[dict, int]:
    if args.samples is None and ctx.Q - 1 <= EXHAUSTIVE_IDENTITY_LIMIT:
        points = list(range(1, ctx.Q))
        how = "exhaustive"
    else:
        rng = random.Random(args.seed)
        points = [rng.randrange(1, ctx.Q) for _ in range(args.samples or 1000)]
        how = "sampled"
    results: dict[str, bool] = {}
    failures: list[dict] = []
    for a in points:
        rep = identity_suite(ctx, a, args.rmax)
        for name, holds in rep.results.items():
            results[name] = results.get(name, True) and holds
        failures.extend(rep.failures)
    payload = {
        "selection": how,
        "checked": len(points),
        "r_max": args.rmax,
        "ok": not failures,
        "results": dict(sorted(results.items())),
        "failures": failures[:20],
    }
    return payload, 0 if not failures else 1


def _cmd_oracle_check(ctx: Field, args) -> tuple[dict, int]:
    for a in range(1, ctx.Q):
        got = solve(ctx, a).roots
        want = brute_roots(ctx, a)
        if got != want:
            return {"status": "mismatch", "a": str(a), "solve": _enc(got), "oracle": _enc(want)}, 1
    return {"status": "ok", "checked": ctx.Q - 1}, 0


COMMANDS = {
    "solve": _cmd_solve,
    "census": _cmd_census,
    "param": _cmd_param,
    "invert": _cmd_invert,
    "identities": _cmd_identities,
    "oracle-check": _cmd_oracle_check,
}


def _emit(payload: dict):
    sys.stdout.write(json.dumps(payload) + "\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    start = time.perf_counter()
    try:
        ctx = field_create(FieldSpec(args.p, args.n, args.k), modulus=args.modulus)
        payload, status = COMMANDS[args.command](ctx, args)
    except QSolveError as exc:
        _emit({"error": exc.code, "detail": str(exc)})
        return 1
    payload["field"] = ctx.describe()
    _emit(payload)
    print(f"{args.command} elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
