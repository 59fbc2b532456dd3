"""Sparse commutative polynomials with exact rational coefficients.

Variables are tuples whose first element is a name, e.g. ``("m", 1, 2)`` for
``m_12`` (1-based), ``("n", 1, 2)`` for a second matrix and ``("lam",)`` for
a spectral parameter.  A monomial is a sorted tuple of ``(variable, exponent)``
pairs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .exact_math import ONE, ZERO, as_rational, perfect_matchings, perm_sign

Var = tuple
Monomial = Tuple[Tuple[Var, int], ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def const(cls, c) -> "MPolynomial":
        c = as_rational(c)
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, v: Var) -> "MPolynomial":
        return cls({((tuple(v), 1),): ONE})

    @classmethod
    def m(cls, i: int, j: int, name: str = "m") -> "MPolynomial":
        return cls.var((name, i, j))

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, MPolynomial):
            other = MPolynomial.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return MPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return MPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPolynomial):
            other = MPolynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPolynomial):
            c = as_rational(other)
            if not c:
                return MPolynomial()
            return MPolynomial({k: v * c for k, v in self.terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                k = mono_mul(m1, m2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return MPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MPolynomial):
            other = MPolynomial.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def variables(self) -> List[Var]:
        return sorted({v for m in self.terms for v, _ in m})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            name = "*".join(_var_str(v) + (f"^{e}" if e > 1 else "") for v, e in mono) or "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)

    # substitution
    def substitute(self, image: Callable[[Var], "MPolynomial"]) -> "MPolynomial":
        """Ring homomorphism sending each variable ``v`` to ``image(v)``."""
        cache: Dict[Var, MPolynomial] = {}
        out = MPolynomial()
        acc: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            term = MPolynomial.const(c)
            for v, e in mono:
                if v not in cache:
                    cache[v] = image(v)
                term = term * (cache[v] ** e)
                if term.is_zero():
                    break
            for k, val in term.terms.items():
                acc[k] = acc.get(k, ZERO) + val
        out.terms = {k: v for k, v in acc.items() if v}
        return out

    def ratio_to(self, other: "MPolynomial") -> Optional[Fraction]:
        """``c`` with ``self == c * other`` if it exists (``other`` nonzero), else ``None``."""
        if other.is_zero():
            return None
        mono, c0 = next(iter(other.terms.items()))
        c = self.terms.get(mono, ZERO) / c0
        return c if self == other * c else None


def accumulate(acc: Dict[Monomial, Fraction], p: MPolynomial, c=ONE) -> None:
    """In-place ``acc += c * p``; zero entries may remain until wrapped in ``MPolynomial``."""
    for k, v in p.terms.items():
        acc[k] = acc.get(k, ZERO) + c * v


def _var_str(v: Var) -> str:
    name, *idx = v
    return name + "".join(str(i) for i in idx)


def skew_image(v: Var) -> MPolynomial:
    """``m_ji -> -m_ij`` for ``j > i``, ``m_ii -> 0``; other variables fixed."""
    if len(v) == 3:
        name, i, j = v
        if i == j:
            return MPolynomial()
        if i > j:
            return -MPolynomial.var((name, j, i))
    return MPolynomial.var(v)


def skew_substitute(p: MPolynomial) -> MPolynomial:
    """Impose ``m_ij = -m_ji`` on every matrix-entry variable."""
    return p.substitute(skew_image)


# symbolic matrices and their functions

def symbolic_matrix(n: int, name: str = "m", skew: bool = False) -> List[List[MPolynomial]]:
    """``n x n`` matrix of independent variables (upper triangle only when ``skew``)."""
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            v = MPolynomial.m(i, j, name)
            row.append(skew_substitute(v) if skew else v)
        out.append(row)
    return out


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k)), MPolynomial()) for j in range(m)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_det(a) -> MPolynomial:
    """Determinant by the signed permutation sum."""
    n = len(a)
    acc: Dict[Monomial, Fraction] = {}
    for perm in itertools.permutations(range(n)):
        term = MPolynomial.const(perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * a[i][j]
            if term.is_zero():
                break
        accumulate(acc, term)
    return MPolynomial(acc)


def mat_pf(a) -> MPolynomial:
    """Pfaffian of a (skew) matrix from its upper triangle, by perfect matchings."""
    acc: Dict[Monomial, Fraction] = {}
    for matching, sign in perfect_matchings(range(len(a))):
        term = MPolynomial.const(sign)
        for p, q in matching:
            term = term * a[p][q]
        accumulate(acc, term)
    return MPolynomial(acc)
