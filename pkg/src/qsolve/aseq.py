"""Point evaluation of the sequence A_r and the quantities derived from it.

``A_1 = 1``, ``A_2 = -1`` and ``A_{r+2}(a) = -A_{r+1}(a) - a^(q^r) A_r(a)``.
With ``m = n / gcd(n, k)`` the coefficients of the quadratic satisfied by the
rational roots of ``X^(q+1) + X + a`` are

    F = A_m(a),   G = -A_{m+1}(a) - a * A_{m-1}(a)^q.

Sequences are returned with ``A_0 = 0`` in front so that ``seq[r] == A_r(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import EvenChar, IdentityFailure, InternalVerificationFailure, NotARoot, OddCharNotSupported, ZeroA, ZeroG
from .gf import Field


def pa(ctx: Field, a: int, x: int) -> int:
    """Value of X^(q+1) + X + a at x."""
    return ctx.add(ctx.mul(ctx.frob_q(x), x), ctx.add(x, a))


def _need_nonzero(a: int):
    if not a:
        raise ZeroA("a must be nonzero")


def a_eval(ctx: Field, a: int, r_max: int) -> list[int]:
    """[A_0(a), A_1(a), ..., A_{r_max}(a)] via the first-order-in-a recurrence."""
    _need_nonzero(a)
    seq = [0, 1, ctx.neg(1)]
    for r in range(1, r_max - 1):
        seq.append(ctx.sub(ctx.neg(seq[r + 1]), ctx.mul(ctx.frob_q(a, r), seq[r])))
    return seq[: r_max + 1]


def a_eval_frobenius_form(ctx: Field, a: int, r_max: int) -> list[int]:
    """Same values via A_{r+2} = -A_{r+1}^q - a^q A_r^(q^2); used as a cross-check."""
    _need_nonzero(a)
    seq = [0, 1, ctx.neg(1)]
    aq = ctx.frob_q(a)
    for r in range(1, r_max - 1):
        seq.append(ctx.sub(ctx.neg(ctx.frob_q(seq[r + 1])), ctx.mul(aq, ctx.frob_q(seq[r], 2))))
    return seq[: r_max + 1]


def _fg_from_seq(ctx: Field, a: int, seq: list[int]) -> tuple[int, int]:
    m = ctx.m
    F = seq[m]
    G = ctx.sub(ctx.neg(seq[m + 1]), ctx.mul(a, ctx.frob_q(seq[m - 1])))
    return F, G


def fg(ctx: Field, a: int) -> tuple[int, int]:
    return _fg_from_seq(ctx, a, a_eval(ctx, a, ctx.m + 1))


def _disc_odd(ctx: Field, a: int, F: int, G: int) -> int:
    four_a = ctx.times(4, a)
    return ctx.sub(ctx.mul(G, G), ctx.mul(four_a, ctx.mul(ctx.frob_q(F), F)))


def disc_odd(ctx: Field, a: int) -> int:
    """E = G^2 - 4 a F^(q+1); lies in GF(p^d)."""
    if ctx.p == 2:
        raise EvenChar("disc_odd needs odd p")
    F, G = fg(ctx, a)
    return _disc_odd(ctx, a, F, G)


def _eh_char2(ctx: Field, a: int, F: int, G: int) -> tuple[int, int]:
    g2 = ctx.mul(G, G)
    E = ctx.div(ctx.mul(a, ctx.mul(ctx.frob_q(F), F)), g2)
    H = ctx.t_sum(ctx.div(ctx.rel_norm(a, ctx.d), g2), 1, ctx.d)
    return E, H


def eh_char2(ctx: Field, a: int) -> tuple[int, int]:
    """E = a F^(q+1) / G^2 and H = tr_d(Nr_d(a) / G^2) for p = 2."""
    if ctx.p != 2:
        raise OddCharNotSupported("eh_char2 needs p = 2")
    F, G = fg(ctx, a)
    if not G:
        raise ZeroG(f"G({a}) = 0")
    return _eh_char2(ctx, a, F, G)


@dataclass(frozen=True)
class ASeqEval:
    a: int
    values: list[int]
    F: int
    G: int
    disc: Optional[int] = None
    H: Optional[int] = None


def evaluate(ctx: Field, a: int) -> ASeqEval:
    seq = a_eval(ctx, a, ctx.m + 1)
    F, G = _fg_from_seq(ctx, a, seq)
    if ctx.p != 2:
        return ASeqEval(a, seq, F, G, disc=_disc_odd(ctx, a, F, G))
    if G:
        E, H = _eh_char2(ctx, a, F, G)
        return ASeqEval(a, seq, F, G, disc=E, H=H)
    return ASeqEval(a, seq, F, G)


def _xqr_denominator(ctx: Field, a: int, seq: list[int], x: int, r: int) -> int:
    if r == 0:
        # A_{-1} continues the recurrence backwards and makes this exactly 1
        return 1
    return ctx.sub(ctx.mul(seq[r], x), ctx.mul(a, ctx.frob_q(seq[r - 1])))


def xqr_eval(ctx: Field, a: int, x: int, r: int) -> int:
    """x^(q^r) for a root x of P_a, as a Moebius transform of x."""
    if pa(ctx, a, x):
        raise NotARoot(f"{x} is not a root of P_{a}")
    seq = a_eval(ctx, a, r + 1)
    num = ctx.sub(ctx.mul(seq[r + 1], x), ctx.mul(a, ctx.frob_q(seq[r])))
    den = _xqr_denominator(ctx, a, seq, x, r)
    if not den:
        raise InternalVerificationFailure(f"zero denominator at r={r} for root {x} of P_{a}")
    return ctx.div(num, den)


@dataclass
class IdentityReport:
    field: dict
    a: int
    r_max: int
    results: dict[str, bool] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, holds: bool, r: Optional[int] = None):
        self.results[name] = self.results.get(name, True) and holds
        if not holds:
            self.failures.append({"identity": name, "a": self.a, "r": r})


def identity_suite(ctx: Field, a: int, r_max: int = 12) -> IdentityReport:
    """Check the A_r / F / G identities at a; every check must hold."""
    _need_nonzero(a)
    rep = IdentityReport(ctx.describe(), a, r_max)
    seq = a_eval(ctx, a, max(r_max + 2, ctx.m + 9))

    # A_{r+1}^(q+1) - A_r^q A_{r+2} = a^(q + q^2 + ... + q^r)
    power = 1
    for r in range(1, r_max + 1):
        power = ctx.mul(power, ctx.frob_q(a, r))
        lhs = ctx.sub(ctx.mul(ctx.frob_q(seq[r + 1]), seq[r + 1]), ctx.mul(ctx.frob_q(seq[r]), seq[r + 2]))
        rep.record("norm_identity", lhs == power, r)

    alt = a_eval_frobenius_form(ctx, a, r_max + 2)
    rep.record("recurrence_agreement", alt == seq[: r_max + 3])

    F, G = _fg_from_seq(ctx, a, seq)
    two_f = ctx.times(2, F)
    rep.record("frobenius_relation", ctx.frob_q(ctx.sub(G, two_f)) == ctx.neg(G))
    E = _disc_odd(ctx, a, F, G)
    rep.record("discriminant_fixed", ctx.frobenius(E, ctx.d) == E and ctx.frob_q(E) == E)
    expansion = ctx.add(
        ctx.neg(ctx.mul(ctx.frob_q(a), ctx.frob_q(F, 2))),
        ctx.add(ctx.frob_q(F), ctx.mul(a, F)),
    )
    rep.record("g_expansion", G == expansion)

    if ctx.p == 2 and G:
        E2, H = _eh_char2(ctx, a, F, G)
        rep.record("trace_n", ctx.t_sum(E2, 1, ctx.n) == ctx.times(ctx.m, H))
        rhs = ctx.add(ctx.div(ctx.add(G, ctx.frob_q(F)), G), ctx.times(ctx.k // ctx.d, H))
        rep.record("trace_k", ctx.t_sum(E2, 1, ctx.k) == rhs)

    if not F:
        m = ctx.m
        for t in range(9):
            rep.record("shift_product", seq[m + t] == ctx.mul(seq[m + 1], seq[t]), t)
    return rep


def check_identities(ctx: Field, a: int, r_max: int = 12) -> IdentityReport:
    rep = identity_suite(ctx, a, r_max)
    if not rep.ok:
        first = rep.failures[0]
        raise IdentityFailure(f"{first['identity']} failed for {ctx!r}, a={a}, r={first['r']}")
    return rep
