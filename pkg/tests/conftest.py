import pytest
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from qsolve.gf import FieldSpec, field_create

CATALOG = [
    (2, 4, 2),
    (2, 6, 2),
    (2, 6, 3),
    (2, 8, 2),
    (2, 9, 3),
    (2, 4, 1),
    (2, 5, 1),
    (2, 6, 1),
    (3, 2, 1),
    (3, 3, 1),
    (3, 4, 2),
    (3, 6, 2),
    (5, 2, 1),
    (5, 4, 2),
    (7, 2, 1),
]

SMALL = [s for s in CATALOG if s[0] ** s[1] <= 256]


def make(p, n, k):
    return field_create(FieldSpec(p, n, k))


@pytest.fixture(params=CATALOG, ids=lambda s: "GF({}^{})k{}".format(*s))
def catalog_field(request):
    return make(*request.param)


@pytest.fixture(params=SMALL, ids=lambda s: "GF({}^{})k{}".format(*s))
def small_field(request):
    return make(*request.param)


# -- independent route: sympy dense polynomials, highest degree first ------


def _to_sym(ctx, x):
    coeffs = ctx.to_coeffs(x)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return [ZZ(c) for c in reversed(coeffs)]


def _from_sym(ctx, poly):
    coeffs = [int(c) % ctx.p for c in reversed(poly)]
    coeffs += [0] * (ctx.n - len(coeffs))
    return ctx.from_coeffs(coeffs)


def _sym_mod(ctx):
    return [ZZ(c) for c in reversed(ctx.modulus)]


def ref_mul(ctx, x, y):
    prod = gf_mul(_to_sym(ctx, x), _to_sym(ctx, y), ctx.p, ZZ)
    return _from_sym(ctx, gf_rem(prod, _sym_mod(ctx), ctx.p, ZZ))


def ref_add(ctx, x, y):
    return _from_sym(ctx, gf_add(_to_sym(ctx, x), _to_sym(ctx, y), ctx.p, ZZ))


def ref_pow(ctx, x, e):
    return _from_sym(ctx, gf_pow_mod(_to_sym(ctx, x), e, _sym_mod(ctx), ctx.p, ZZ))


def ref_irreducible(coeffs, p):
    return gf_irreducible_p([ZZ(c) for c in reversed(coeffs)], p, ZZ)
