"""Rational roots of X^(q+1) + X + a over GF(p^n)."""

from .aseq import ASeqEval, a_eval, evaluate, fg, identity_suite, pa, xqr_eval
from .errors import QSolveError
from .gf import Elt2, Field, FieldSpec, Quadratic, field_create
from .oracle import CensusReport, brute_roots, census
from .solver import RootClass, SolveResult, classify, invert_psi, psi, psi_roots, solve, special_root

__all__ = [
    "ASeqEval",
    "CensusReport",
    "Elt2",
    "Field",
    "FieldSpec",
    "QSolveError",
    "Quadratic",
    "RootClass",
    "SolveResult",
    "a_eval",
    "brute_roots",
    "census",
    "classify",
    "evaluate",
    "fg",
    "field_create",
    "identity_suite",
    "invert_psi",
    "pa",
    "psi",
    "psi_roots",
    "solve",
    "special_root",
    "xqr_eval",
]
