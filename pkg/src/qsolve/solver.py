"""Classification and explicit roots of P_a(X) = X^(q+1) + X + a over GF(Q).

The number of rational roots is 0, 1, 2 or p^d + 1. ``classify`` decides
which from F, G, E, H alone; ``solve`` additionally returns the roots, using
closed forms in the first three cases and the parametrization

    psi(u) = (u - u^q)^(q^2 + 1) / (u - u^(q^2))^(q + 1)

of the full-split values of a in the last one. There is no known closed-form
inverse of psi, so ``invert_psi`` scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .aseq import ASeqEval, evaluate, fg, pa
from .errors import (
    InternalVerificationFailure,
    NotApplicable,
    NotFullSplit,
    UInSmallSubfield,
    ZeroA,
)
from .gf import Elt2, Field, Quadratic


class RootClass(Enum):
    ZERO = "zero"
    ONE = "one"
    TWO = "two"
    FULL = "full"

    def count(self, ctx: Field) -> int:
        return {"zero": 0, "one": 1, "two": 2}.get(self.value, ctx.p**ctx.d + 1)


@dataclass
class SolveResult:
    a: int
    root_class: RootClass
    roots: list[int]
    witness_u: Optional[int] = None
    diagnostics: dict = field(default_factory=dict)


def _classify(ctx: Field, ev: ASeqEval) -> RootClass:
    if not ev.F:
        return RootClass.FULL
    if ctx.p == 2:
        if not ev.G:
            return RootClass.ONE
        return RootClass.TWO if ev.H == 0 else RootClass.ZERO
    if not ev.disc:
        return RootClass.ONE
    if ctx.qr_indicator(ev.disc, ctx.d) is Quadratic.RESIDUE:
        return RootClass.TWO
    return RootClass.ZERO


def classify(ctx: Field, a: int) -> RootClass:
    if not a:
        raise ZeroA("a must be nonzero")
    return _classify(ctx, evaluate(ctx, a))


def _verified(ctx: Field, a: int, roots, what: str) -> list[int]:
    for x in roots:
        if pa(ctx, a, x):
            raise InternalVerificationFailure(f"{what}: {x} is not a root of P_{a} over {ctx!r}")
    return sorted(set(roots))


def zeta_pair(ctx: Field, a: int, F: int, G: int, E: int) -> list[int]:
    """Two roots as (G/F) T_n(E/(zeta+1)) and that plus G/F, zeta in mu_{Q+1} \\ {1}."""
    zeta = ctx.mu_zeta()
    y = ctx.ext_mul(Elt2(E, 0), ctx.ext_inv(ctx.ext_add(zeta, Elt2(1, 0))))
    z = ctx.ext_t_sum(y, 1, ctx.n)
    if z.hi:
        raise InternalVerificationFailure(f"T_n(E/(zeta+1)) left GF(Q) for a={a}")
    g_over_f = ctx.div(G, F)
    x1 = ctx.mul(g_over_f, z.lo)
    return [x1, ctx.add(x1, g_over_f)]


def solve(ctx: Field, a: int, zeta_path: bool = False) -> SolveResult:
    if not a:
        raise ZeroA("a must be nonzero")
    ev = evaluate(ctx, a)
    cls = _classify(ctx, ev)
    F, G, E = ev.F, ev.G, ev.disc
    diag = {"F": F, "G": G, "E": E, "H": ev.H}
    witness = None

    if cls is RootClass.FULL:
        witness = invert_psi(ctx, a)
        roots = psi_roots(ctx, witness)
    elif cls is RootClass.ZERO:
        roots = []
    elif ctx.p == 2:
        if cls is RootClass.ONE:
            # sqrt(a F^(q-1))
            roots = [ctx.sqrt(ctx.mul(a, ctx.div(ctx.frob_q(F), F)))]
        elif zeta_path:
            roots = zeta_pair(ctx, a, F, G, E)
        else:
            g_over_f = ctx.div(G, F)
            roots = [ctx.mul(g_over_f, z) for z in ctx.artin_schreier_solve(E)]
    else:
        two_f = ctx.times(2, F)
        if cls is RootClass.ONE:
            roots = [ctx.neg(ctx.div(G, two_f))]
        else:
            s = ctx.sqrt(E)
            if ctx.frobenius(s, ctx.d) != s:
                raise InternalVerificationFailure(f"sqrt(E) not in GF(p^d) for a={a}")
            roots = [ctx.div(ctx.sub(t, G), two_f) for t in (s, ctx.neg(s))]

    roots = _verified(ctx, a, roots, f"class {cls.value}")
    if len(roots) != cls.count(ctx):
        raise InternalVerificationFailure(f"class {cls.value} but {len(roots)} roots for a={a}")
    return SolveResult(a, cls, roots, witness, diag)


def _psi_parts(ctx: Field, u: int) -> tuple[int, int]:
    if ctx.in_subfield(u, 2 * ctx.d):
        raise UInSmallSubfield(f"u={u} lies in GF(p^{2 * ctx.d}) ∩ GF(Q)")
    v = ctx.sub(u, ctx.frob_q(u))
    w = ctx.sub(u, ctx.frob_q(u, 2))
    return v, w


def psi(ctx: Field, u: int) -> int:
    v, w = _psi_parts(ctx, u)
    num = ctx.mul(ctx.frob_q(v, 2), v)
    den = ctx.mul(ctx.frob_q(w), w)
    return ctx.div(num, den)


def psi_roots(ctx: Field, u: int) -> list[int]:
    """The p^d + 1 roots of P_psi(u), sorted."""
    v, _ = _psi_parts(ctx, u)
    # 1 + (u - u^q)^(q-1)
    den = ctx.add(1, ctx.div(ctx.frob_q(v), v))
    roots = [ctx.neg(ctx.inv(den))]
    for alpha in ctx.subfield_elements(ctx.d):
        s = ctx.add(u, alpha)
        roots.append(ctx.neg(ctx.div(ctx.div(ctx.frob_q(s, 2), ctx.frob_q(s)), den)))
    return sorted(roots)


def invert_psi(ctx: Field, a: int) -> int:
    """Smallest-encoding u with psi(u) = a."""
    if not a:
        raise ZeroA("a must be nonzero")
    F, _ = fg(ctx, a)
    if F:
        raise NotFullSplit(f"F({a}) != 0, so P_{a} does not have p^d + 1 roots")
    small = 2 * ctx.d
    for u in range(ctx.Q):
        if not ctx.in_subfield(u, small) and psi(ctx, u) == a:
            return u
    raise InternalVerificationFailure(f"no psi-preimage for a={a} although F(a) = 0")


def special_root(ctx: Field, a: int) -> list[int]:
    """Roots from the closed forms known for m = 3, and m = 4, 5, 6 when p = 2.

    m = 3 gives the whole root set; the others give one root. Raises
    NotApplicable where a closed form has a zero denominator, and
    InternalVerificationFailure if a value it produces is not a root.
    """
    m = ctx.m
    if not (m == 3 or (ctx.p == 2 and m in (4, 5, 6))):
        raise NotApplicable(f"no closed form for p={ctx.p}, m={m}")
    if not a:
        raise ZeroA("a must be nonzero")
    F, _ = fg(ctx, a)
    if F:
        raise NotFullSplit(f"F({a}) != 0")

    add, mul, fq = ctx.add, ctx.mul, ctx.frob_q
    if m == 3:
        # A_3(a) = 1 - a^q vanishes only at a = 1
        if a != 1:
            raise NotApplicable("m = 3 closed form needs a = 1")
        roots = set()
        for b in range(ctx.Q):
            if not ctx.in_subfield(b, ctx.d):
                v = ctx.sub(b, fq(b))
                roots.add(ctx.div(fq(v), v))
        return _verified(ctx, a, roots, "m=3 closed form")
    if m == 4:
        root = ctx.sqrt(a)
    elif m == 5:
        aq = fq(a)
        den = add(add(1, aq), mul(aq, a))
        if not den:
            raise NotApplicable(f"m=5 closed form is undefined at a={a} (zero denominator)")
        root = ctx.div(mul(a, add(a, aq)), den)
    else:
        aq, aqq = fq(a), fq(a, 2)
        one_a_aq = add(add(1, a), aq)
        num = add(
            mul(mul(a, a), add(add(1, a), add(aq, mul(aqq, a)))),
            mul(mul(mul(aqq, aq), a), fq(one_a_aq)),
        )
        den = add(
            mul(mul(aqq, aqq), aq),
            mul(one_a_aq, fq(add(add(1, mul(a, a)), aq))),
        )
        if not den:
            raise NotApplicable(f"m=6 closed form is undefined at a={a} (zero denominator)")
        root = ctx.sqrt(ctx.div(num, den))
    return _verified(ctx, a, [root], f"m={m} closed form")
