"""Universal enveloping algebra in PBW normal form.

Elements are sparse maps from nondecreasing tuples of basis positions to
rationals.  Products are computed by :class:`PBWEngine`, which left-multiplies
a normal monomial by one generator at a time, straightening with
``x_a x_b = x_b x_a + [x_a, x_b]`` and memoizing every ``(a, monomial)``
product.  :func:`brute_force_normalize` rewrites words naively and exists
only as an independent oracle.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from .exact_math import ONE, ZERO, as_rational
from .invariants import act
from .lie_algebras import LieAlgebra, LieVector, LMatrix, build_L, make_algebra
from .mpoly import MPolynomial
from .verdict import Verdict

Mono = Tuple[int, ...]
Terms = Dict[Mono, object]  # coefficients are int or Fraction


def _add_into(acc: Terms, terms: Terms, c=1):
    for m, v in terms.items():
        acc[m] = acc.get(m, 0) + c * v


def _clean(terms: Terms) -> Terms:
    return {m: v for m, v in terms.items() if v}


class PBWEngine:
    """Memoized straightening for one algebra (get it with :func:`engine`)."""

    def __init__(self, alg: LieAlgebra):
        self.alg = alg
        # integral structure constants stay Python ints: much faster than Fraction
        self.tab = [[{c: (int(v) if v.denominator == 1 else v) for c, v in row.items()}
                     for row in brow] for brow in alg.bracket_table]
        self._lmul: Dict[Tuple[int, Mono], Terms] = {}

    def lmul(self, a: int, mono: Mono) -> Terms:
        """Normal form of ``x_a * mono`` (``mono`` already normal)."""
        key = (a, mono)
        hit = self._lmul.get(key)
        if hit is not None:
            return hit
        if not mono or a <= mono[0]:
            res = {(a,) + mono: 1}
        else:
            b, rest = mono[0], mono[1:]
            acc: Terms = {}
            # x_a x_b rest = x_b (x_a rest) + [x_a, x_b] rest
            for m, c in self.lmul(a, rest).items():
                _add_into(acc, self.lmul(b, m), c)
            for g, cg in self.tab[a][b].items():
                _add_into(acc, self.lmul(g, rest), cg)
            res = _clean(acc)
        self._lmul[key] = res
        return res

    def lmul_terms(self, a: int, terms: Terms) -> Terms:
        acc: Terms = {}
        for m, c in terms.items():
            _add_into(acc, self.lmul(a, m), c)
        return _clean(acc)

    def mono_times(self, u: Mono, terms: Terms) -> Terms:
        """``u * terms`` for a normal monomial ``u``."""
        for a in reversed(u):
            terms = self.lmul_terms(a, terms)
        return terms

    def word(self, word: Sequence[int]) -> Terms:
        """Normal form of a word in basis positions."""
        return self.mono_times(tuple(word), {(): 1})

    def mul(self, x: Terms, y: Terms) -> Terms:
        acc: Terms = {}
        for u, c in x.items():
            _add_into(acc, self.mono_times(u, y), c)
        return _clean(acc)

    def sym_monomial(self, ms: Mono) -> Terms:
        """Symmetrization of the commutative monomial ``ms`` (average over its arrangements)."""
        key = ("sym", ms)
        hit = self._lmul.get(key)
        if hit is not None:
            return hit
        acc: Terms = {}
        count = 0
        for w in multiset_permutations(list(ms)):
            _add_into(acc, self.word(w))
            count += 1
        res = _clean({m: Fraction(v, count) for m, v in acc.items()})
        self._lmul[key] = res
        return res


def engine(alg: LieAlgebra) -> PBWEngine:
    eng = alg.cache.get("pbw")
    if eng is None:
        eng = alg.cache["pbw"] = PBWEngine(alg)
    return eng


class UEAElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebra, terms: Optional[Terms] = None):
        self.algebra = algebra
        clean = {}
        for m, v in (terms or {}).items():
            if v:
                m = tuple(m)
                if any(m[i] > m[i + 1] for i in range(len(m) - 1)):
                    raise ValueError(f"monomial {m} is not nondecreasing")
                clean[m] = as_rational(v) if not isinstance(v, Fraction) else v
        self.terms = clean

    @classmethod
    def one(cls, alg: LieAlgebra) -> "UEAElement":
        return cls(alg, {(): 1})

    @classmethod
    def from_vector(cls, alg: LieAlgebra, x: LieVector) -> "UEAElement":
        return cls(alg, {(a,): c for a, c in x.items()})

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise ValueError(f"elements of different algebras ({self.algebra.name}, {other.algebra.name})")

    def __add__(self, other):
        self._same(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return UEAElement(self.algebra, acc)

    def __neg__(self):
        return UEAElement(self.algebra, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            self._same(other)
            return UEAElement(self.algebra, engine(self.algebra).mul(self.terms, other.terms))
        c = as_rational(other)
        return UEAElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra.name, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def ratio_to(self, other: "UEAElement") -> Optional[Fraction]:
        if other.is_zero():
            return None
        m, c0 = next(iter(other.terms.items()))
        c = self.terms.get(m, ZERO) / c0
        return c if self == other * c else None

    def __repr__(self):
        if not self.terms:
            return "0"
        labs = self.algebra.basis_labels
        return " + ".join(f"{c}*" + ("*".join(labs[a] for a in m) or "1") for m, c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "terms": [{"monomial": list(m), "coeff": str(c)} for m, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, doc: dict, alg: Optional[LieAlgebra] = None) -> "UEAElement":
        if alg is None:
            alg = make_algebra(doc["algebra"])
        elif alg.name != doc["algebra"]:
            raise ValueError(f"document is over {doc['algebra']}, not {alg.name}")
        terms: Dict[Mono, Fraction] = {}
        for t in doc["terms"]:
            m = tuple(int(a) for a in t["monomial"])
            if any(not 0 <= a < alg.dim for a in m):
                raise ValueError(f"monomial {m} has basis positions outside 0..{alg.dim - 1}")
            terms[m] = terms.get(m, ZERO) + Fraction(t["coeff"])
        return cls(alg, terms)


Factor = Union[LieVector, int]


def _as_vector(alg: LieAlgebra, x: Factor) -> LieVector:
    if isinstance(x, LieVector):
        if x.dim != alg.dim:
            raise ValueError(f"vector of dimension {x.dim} is not in {alg.name} (dim {alg.dim})")
        return x
    return alg.basis_vector(int(x))


def pbw_normalize(alg: LieAlgebra, word: Sequence[Factor]) -> UEAElement:
    """Normal form of the product of ``word`` (vectors or basis positions)."""
    eng = engine(alg)
    terms: Terms = {(): 1}
    for x in reversed([_as_vector(alg, x) for x in word]):
        acc: Terms = {}
        for a, c in x.items():
            _add_into(acc, eng.lmul_terms(a, terms), c)
        terms = _clean(acc)
    return UEAElement(alg, terms)


def brute_force_normalize(alg: LieAlgebra, word: Sequence[Factor]) -> UEAElement:
    """Naive rewriting: expand into basis words, then repeatedly fix the leftmost inversion."""
    tab = alg.bracket_table
    words: Dict[Tuple[int, ...], Fraction] = {(): ONE}
    for x in word:
        x = _as_vector(alg, x)
        nxt: Dict[Tuple[int, ...], Fraction] = {}
        for w, c in words.items():
            for a, ca in x.items():
                nxt[w + (a,)] = nxt.get(w + (a,), ZERO) + c * ca
        words = nxt
    done: Dict[Tuple[int, ...], Fraction] = {}
    todo = [(w, c) for w, c in words.items() if c]
    while todo:
        w, c = todo.pop()
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                todo.append((w[:i] + (w[i + 1], w[i]) + w[i + 2:], c))
                for g, v in tab[w[i]][w[i + 1]].items():
                    todo.append((w[:i] + (g,) + w[i + 2:], c * v))
                break
        else:
            done[w] = done.get(w, ZERO) + c
    return UEAElement(alg, done)


def sym_product(alg: LieAlgebra, factors: Sequence[Factor]) -> UEAElement:
    """``(1/k!) sum`` of the normal forms of all orderings of ``factors``."""
    k = len(factors)
    acc: Terms = {}
    for order in itertools.permutations(range(k)):
        _add_into(acc, pbw_normalize(alg, [factors[i] for i in order]).terms)
    f = factorial(k)
    return UEAElement(alg, {m: Fraction(v) / f for m, v in acc.items()})


def _expand_commutative(factors: Iterable[LieVector]) -> Dict[Mono, Fraction]:
    """Product of linear forms in the symmetric algebra, keyed by sorted basis multisets."""
    cur: Dict[Mono, Fraction] = {(): ONE}
    for x in factors:
        items = x.items()
        nxt: Dict[Mono, Fraction] = {}
        for ms, c in cur.items():
            for a, ca in items:
                key = tuple(sorted(ms + (a,)))
                nxt[key] = nxt.get(key, ZERO) + c * ca
        cur = {k: v for k, v in nxt.items() if v}
    return cur


def symmetrize_poly(alg: LieAlgebra, p: MPolynomial, L: Optional[LMatrix] = None,
                    route: str = "collect") -> UEAElement:
    """Image of ``p`` under ``m_ij -> L_ij`` with the symmetrized product.

    ``route="collect"`` first multiplies out in the symmetric algebra (so
    cancellations happen before any straightening) and then symmetrizes each
    basis monomial; ``route="direct"`` applies :func:`sym_product` to every
    monomial of ``p``.  Both give the same element.
    """
    L = build_L(alg) if L is None else L
    if L.algebra is not alg:
        raise ValueError("L belongs to a different algebra")
    for v in p.variables():
        if len(v) != 3 or v[0] != "m":
            raise ValueError(f"cannot symmetrize variable {v}; only m_ij maps into U(g)")
        if not (1 <= v[1] <= L.n and 1 <= v[2] <= L.n):
            raise ValueError(f"variable {v} does not fit the {L.n}x{L.n} matrix L")
    if route == "direct":
        out = UEAElement(alg)
        for mono, c in p.terms.items():
            factors = [L[i, j] for (_, i, j), e in mono for _ in range(e)]
            out = out + sym_product(alg, factors) * c
        return out
    if route != "collect":
        raise ValueError(f"unknown route {route!r}")
    sym: Dict[Mono, Fraction] = {}
    for mono, c in p.terms.items():
        factors = [L[i, j] for (_, i, j), e in mono for _ in range(e)]
        for ms, v in _expand_commutative(factors).items():
            sym[ms] = sym.get(ms, ZERO) + c * v
    eng = engine(alg)
    acc: Terms = {}
    for ms, c in sym.items():
        if c:
            _add_into(acc, eng.sym_monomial(ms), c)
    return UEAElement(alg, acc)


def commutator(g: Union[LieVector, int], T: UEAElement) -> UEAElement:
    """``[g, T]`` via the derivation rule on each PBW monomial."""
    alg = T.algebra
    g = _as_vector(alg, g)
    eng = engine(alg)
    tab = eng.tab
    acc: Terms = {}
    for mono, c in T.terms.items():
        for t, x in enumerate(mono):
            br: Dict[int, object] = {}
            for a, ca in g.items():
                for gam, v in tab[a][x].items():
                    br[gam] = br.get(gam, 0) + ca * v
            suffix = {mono[t + 1:]: 1}
            for gam, v in br.items():
                if v:
                    inner = eng.lmul_terms(gam, suffix)
                    _add_into(acc, eng.mono_times(mono[:t], inner), c * v)
    return UEAElement(alg, _clean(acc))


def is_central(alg: LieAlgebra, T: UEAElement, threads: int = 1) -> Verdict:
    """True iff ``[v_a, T] = 0`` for every basis element (enough: ad is linear).

    With ``threads > 1`` the generators are split over a thread pool; the
    witness is still the first failing generator in basis order.
    """
    if T.algebra is not alg:
        raise ValueError(f"element is over {T.algebra.name}, not {alg.name}")
    basis = range(alg.dim)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda a: commutator(a, T), basis))
    else:
        results = [commutator(a, T) for a in basis]
    for a, r in zip(basis, results):
        if not r.is_zero():
            return Verdict(False, {"basis_index": a, "label": alg.basis_labels[a], "residual": r})
    return Verdict(True, details={"checked": alg.dim, "terms": len(T), "degree": T.degree()})


def equivariance_check(alg: LieAlgebra, p: MPolynomial, g: Union[LieVector, int],
                       L: Optional[LMatrix] = None) -> Verdict:
    """Check that symmetrization turns the action on ``p`` into commutation.

    With the coordinate action of :func:`invariants.act` the exact law is
    ``sym(g . p) = -[g, sym(p)]`` (the variables transform contragrediently
    to the generators ``L_ij``); the sign does not affect which polynomials
    are invariant.
    """
    g = _as_vector(alg, g)
    lhs = symmetrize_poly(alg, act(alg, g, p), L)
    rhs = commutator(g, symmetrize_poly(alg, p, L))
    ok = (lhs + rhs).is_zero()
    return Verdict(ok, None if ok else {"lhs": lhs, "rhs": rhs}, {"sign": -1, "degree": p.degree()})


def is_central_bruteforce(alg: LieAlgebra, T: UEAElement) -> Verdict:
    """Oracle for :func:`is_central`: ``x_a m - m x_a`` rewritten naively for every monomial."""
    if T.algebra is not alg:
        raise ValueError(f"element is over {T.algebra.name}, not {alg.name}")
    for a in range(alg.dim):
        res = UEAElement(alg)
        for mono, c in T.terms.items():
            diff = brute_force_normalize(alg, (a,) + mono) - brute_force_normalize(alg, mono + (a,))
            res = res + diff * c
        if not res.is_zero():
            return Verdict(False, {"basis_index": a, "label": alg.basis_labels[a], "residual": res})
    return Verdict(True, details={"checked": alg.dim})
