"""Ground truth by exhaustive evaluation, and whole-field root censuses.

``brute_roots`` deliberately stays naive (one Frobenius and one product per
candidate) so that it remains independent of the closed forms it checks.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .errors import LimitExceeded, ZeroA
from .gf import Field, FieldSpec, field_create
from .solver import RootClass, classify

FORMULA = "formula"
ORACLE = "oracle"
MODES = (FORMULA, ORACLE)


def brute_roots(ctx: Field, a: int, limit: Optional[int] = None) -> list[int]:
    """All x in GF(Q) with x^(q+1) + x + a = 0, ascending."""
    if not a:
        raise ZeroA("a must be nonzero")
    if limit is not None and ctx.Q > limit:
        raise LimitExceeded(f"Q = {ctx.Q} exceeds scan bound {limit}")
    minus_a = ctx.neg(a)
    mul, add, frob_q = ctx.mul, ctx.add, ctx.frob_q
    # x^(q+1) + x = x (x^q + 1)
    return [x for x in range(ctx.Q) if mul(x, add(frob_q(x), 1)) == minus_a]


def expected_full_count(spec: FieldSpec) -> int:
    """Number of a in GF(Q)* with p^d + 1 roots."""
    p, d, m = spec.p, spec.d, spec.m
    return (p ** ((m - 1) * d) - p ** ((1 - m % 2) * d)) // (p ** (2 * d) - 1)


def admissible_x(ctx: Field) -> int:
    """#{x in GF(Q) : x^(q+1) + x != 0}."""
    return sum(1 for x in range(ctx.Q) if ctx.mul(x, ctx.add(ctx.frob_q(x), 1)))


@dataclass
class CensusReport:
    spec: FieldSpec
    M0: int
    M1: int
    M2: int
    Mfull: int
    mode: str
    elapsed: float = 0.0

    def counts(self) -> tuple[int, int, int, int]:
        return (self.M0, self.M1, self.M2, self.Mfull)


def _tally(ctx: Field, mode: str, lo: int, hi: int) -> list[int]:
    full = ctx.p**ctx.d + 1
    slot = {0: 0, 1: 1, 2: 2, full: 3}
    order = [RootClass.ZERO, RootClass.ONE, RootClass.TWO, RootClass.FULL]
    out = [0, 0, 0, 0]
    for a in range(max(lo, 1), hi):
        if mode == FORMULA:
            out[order.index(classify(ctx, a))] += 1
        else:
            n = len(brute_roots(ctx, a))
            if n not in slot:
                raise AssertionError(f"{n} roots for a={a} over {ctx!r}")
            out[slot[n]] += 1
    return out


def _tally_job(args) -> list[int]:
    spec, modulus, max_q, mode, lo, hi = args
    return _tally(field_create(spec, modulus, max_q), mode, lo, hi)


def census(ctx: Field, mode: str = FORMULA, workers: int = 1, chunks: Optional[int] = None) -> CensusReport:
    """Count a in GF(Q)* by number of rational roots.

    The a-range is cut into disjoint encoding intervals whose tallies are
    summed, so the result does not depend on ``workers``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    start = time.perf_counter()
    chunks = chunks or max(1, workers)
    step = -(-ctx.Q // chunks)
    bounds = [(lo, min(lo + step, ctx.Q)) for lo in range(0, ctx.Q, step)]
    if workers > 1:
        jobs = [(ctx.spec, ctx.modulus, ctx.max_q, mode, lo, hi) for lo, hi in bounds]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_job, jobs))
    else:
        parts = [_tally(ctx, mode, lo, hi) for lo, hi in bounds]
    totals = [sum(col) for col in zip(*parts)]
    return CensusReport(ctx.spec, *totals, mode=mode, elapsed=time.perf_counter() - start)


def census_identities(ctx: Field, report: CensusReport) -> dict[str, bool]:
    """The three counting laws every census must satisfy."""
    full = ctx.p**ctx.d + 1
    return {
        "total": sum(report.counts()) == ctx.Q - 1,
        "root_total": report.M1 + 2 * report.M2 + full * report.Mfull == admissible_x(ctx),
        "full_count": report.Mfull == expected_full_count(ctx.spec),
    }
