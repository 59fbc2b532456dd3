"""Pfaffian / determinant relations on symbolic matrices, checked exactly.

``M`` has entries ``m_ij`` and the second matrix ``M'`` has ``n_ij``.
Every check returns a :class:`Verdict` whose ``details["residual"]`` is
``lhs - rhs`` as a polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .exact_math import perfect_matchings
from .invariants import sum_pf_sq_poly
from .mpoly import MPolynomial, mat_add, mat_det, mat_mul, mat_pf, symbolic_matrix
from .verdict import Verdict

HALF = Fraction(1, 2)


def _m(i, j):
    return MPolynomial.m(i, j, "m")


def _n(i, j):
    return MPolynomial.m(i, j, "n")


def _verdict(lhs: MPolynomial, rhs: MPolynomial, **details) -> Verdict:
    residual = lhs - rhs
    return Verdict(residual.is_zero(), None if residual.is_zero() else residual,
                   {"residual": residual, "lhs_terms": len(lhs), **details})


def relation_1(n: int = 2) -> Verdict:
    """``(Pf M)^2 = det M`` for skew ``M`` of even size ``n``."""
    if n % 2:
        raise ValueError("relation 1 needs an even size")
    m = symbolic_matrix(n, skew=True)
    return _verdict(mat_pf(m) ** 2, mat_det(m), size=n)


def relation_2() -> Verdict:
    """``Det(M+M') - Det M - Det M'`` for general 2x2 matrices against the printed right side."""
    m = symbolic_matrix(2, "m")
    mp = symbolic_matrix(2, "n")
    lhs = mat_det(mat_add(m, mp)) - mat_det(m) - mat_det(mp)
    rhs = HALF * (
        _m(1, 1) * _n(2, 2) - _m(2, 1) * _n(1, 2) - _m(1, 2) * _n(2, 1) + _m(2, 2) * _n(1, 1)
        + _n(2, 2) * _m(1, 1) - _n(1, 2) * _m(2, 1) - _n(2, 1) * _m(1, 2) + _n(1, 1) * _m(2, 2)
    )
    return _verdict(lhs, rhs)


def _relation_3_printed() -> MPolynomial:
    # transcription of the right-hand side as printed: only the "M first pair, M' second pair" terms
    return HALF * (
        _m(1, 2) * _n(3, 4) - _m(1, 3) * _n(2, 4) + _m(1, 4) * _n(2, 3)
        + _n(3, 4) * _m(1, 2) - _n(2, 4) * _m(1, 3) + _n(2, 3) * _m(1, 4)
    )


def _relation_3_polarized() -> MPolynomial:
    # symmetrized mixed terms: every matching, both ways of giving its pairs to M and M'
    out = MPolynomial()
    for ((a, b), (c, d)), sign in perfect_matchings(range(1, 5)):
        mixed = _m(a, b) * _n(c, d) + _n(a, b) * _m(c, d)
        out = out + HALF * sign * (mixed + mixed)
    return out


def relation_3() -> Verdict:
    """``Pf(M+M') - Pf M - Pf M'`` for skew 4x4 matrices.

    The verdict compares against the symmetrized polarization (all six mixed
    terms).  ``details["printed_residual"]`` is the difference from the
    printed three-term form, which lacks the terms with ``M'`` on the first pair.
    """
    m = symbolic_matrix(4, "m", skew=True)
    mp = symbolic_matrix(4, "n", skew=True)
    lhs = mat_pf(mat_add(m, mp)) - mat_pf(m) - mat_pf(mp)
    printed = lhs - _relation_3_printed()
    return _verdict(lhs, _relation_3_polarized(), printed_residual=printed,
                    printed_holds=printed.is_zero())


def relation_4(k: int = 3, n: int = 4) -> Verdict:
    """``Pf(M^k) = (Pf M)^k`` for skew ``n x n`` ``M`` and odd ``k``.

    ``details["ratio"]`` records ``Pf(M^k) / (Pf M)^k``; it is
    ``(-1)^(n (k-1) / 4)``, so the relation holds as written when ``n = 0 mod 4``.
    """
    if k % 2 == 0:
        raise ValueError(f"M^{k} is symmetric, not skew, for even k; relation 4 needs odd k")
    if n % 2:
        raise ValueError("relation 4 needs an even size")
    m = symbolic_matrix(n, skew=True)
    power = m
    for _ in range(k - 1):
        power = mat_mul(power, m)
    lhs = mat_pf(power)
    rhs = mat_pf(m) ** k
    return _verdict(lhs, rhs, ratio=lhs.ratio_to(rhs), k=k, size=n)


def check_relation(rel_id: int, **params) -> Verdict:
    fns = {1: relation_1, 2: relation_2, 3: relation_3, 4: relation_4}
    if rel_id not in fns:
        raise ValueError(f"relation id must be 1..4, got {rel_id}")
    return fns[rel_id](**params)


def charpoly_pfaffian_identity(n: int) -> Verdict:
    """``det(lam I - M) = sum_k lam^(N-2k) sum_{|I|=2k} (Pf M_I)^2`` for skew ``M``."""
    if n % 2 or n < 2:
        raise ValueError("the identity is checked for even N")
    lam = MPolynomial.var(("lam",))
    m = symbolic_matrix(n, skew=True)
    shifted: List[List[MPolynomial]] = [
        [(lam if i == j else MPolynomial()) - m[i][j] for j in range(n)] for i in range(n)
    ]
    lhs = mat_det(shifted)
    rhs = lam ** n
    for k in range(1, n // 2 + 1):
        rhs = rhs + lam ** (n - 2 * k) * sum_pf_sq_poly(n, k)
    return _verdict(lhs, rhs, size=n)
