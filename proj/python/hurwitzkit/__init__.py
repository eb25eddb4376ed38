"""Hurwitz stability of real polynomials with exact rational arithmetic.

Three independent, mutually cross-checking methods: the Routh reduction
recursion, positivity of the leading principal minors of the Hurwitz matrix,
and root interlacing of the even/odd parts, plus a floating-point root
oracle. Coefficients are exact rationals given as strings ("3", "6/11",
"1.25"), ascending by power.
"""

from hurwitzkit._core import (
    check,
    generate_random,
    generate_stable,
    hurwitz_matrix,
    interlacing,
    leading_principal_minors,
    oracle_margin,
    roots,
    routh_chain,
    totally_nonnegative,
    verify_factorization,
)

__all__ = [
    "check",
    "generate_random",
    "generate_stable",
    "hurwitz_matrix",
    "interlacing",
    "leading_principal_minors",
    "oracle_margin",
    "roots",
    "routh_chain",
    "totally_nonnegative",
    "verify_factorization",
]
