"""Exact rational arithmetic substrate.

Scalars are :class:`fractions.Fraction`.  This module adds sparse tensors,
permutation / subset / perfect-matching enumeration, antisymmetrization and a
small exact echelon solver used to find coordinates in a Lie algebra basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, Sequence, Tuple

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def perm_sign(perm: Sequence[int]) -> int:
    """Parity sign of a permutation given as a sequence of distinct keys."""
    # cycle count on the relative order; works for any distinct comparable keys
    order = sorted(range(len(perm)), key=lambda i: perm[i])
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_permutations(n: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """All permutations of ``1..n`` in lexicographic order with their signs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for p in itertools.permutations(range(1, n + 1)):
        yield p, perm_sign(p)


def subsets(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Sorted ``k``-subsets of ``1..n`` in lexicographic order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return itertools.combinations(range(1, n + 1), k)


def perfect_matchings(indexset: Iterable[int]) -> Iterator[Tuple[Tuple[Tuple[int, int], ...], int]]:
    """Perfect matchings of an even-size index set, with pfaffian signs.

    Each matching is a tuple of pairs ``(p, q)`` with ``p < q`` and the pairs
    sorted by first element; the sign is that of the permutation
    ``(p1 q1 p2 q2 ...)`` relative to the sorted index set.
    """
    items = sorted(indexset)
    if len(items) % 2:
        raise ValueError(f"perfect matchings need an even-size set, got {len(items)} elements")
    if len(set(items)) != len(items):
        raise ValueError("index set has repeated elements")

    def rec(rest):
        if not rest:
            yield (), 1
            return
        first = rest[0]
        for pos in range(1, len(rest)):
            # moving rest[pos] next to first costs pos-1 transpositions
            sign = -1 if (pos - 1) % 2 else 1
            remaining = rest[1:pos] + rest[pos + 1:]
            for sub, s in rec(remaining):
                yield ((first, rest[pos]),) + sub, sign * s

    yield from rec(tuple(items))


@dataclass(frozen=True)
class SparseTensor:
    """Sparse tensor with exact entries.

    Indices along every axis run over ``base .. base + dims[axis] - 1``.
    Zero entries are never stored.
    """

    dims: Tuple[int, ...]
    entries: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    base: int = 0

    def __post_init__(self):
        clean = {}
        for idx, val in self.entries.items():
            idx = tuple(idx)
            if len(idx) != len(self.dims):
                raise ValueError(f"index {idx} has wrong order for dims {self.dims}")
            for i, d in zip(idx, self.dims):
                if not self.base <= i < self.base + d:
                    raise ValueError(f"index {idx} outside dims {self.dims} (base {self.base})")
            val = as_rational(val)
            if val:
                clean[idx] = val
        object.__setattr__(self, "entries", clean)

    @property
    def order(self) -> int:
        return len(self.dims)

    def __getitem__(self, idx) -> Fraction:
        return self.entries.get(tuple(idx), ZERO)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return self.dims == other.dims and self.base == other.base and self.entries == other.entries

    def __hash__(self):
        return hash((self.dims, self.base, frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "SparseTensor":
        c = as_rational(c)
        return SparseTensor(self.dims, {k: v * c for k, v in self.entries.items()}, self.base)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        if self.dims != other.dims or self.base != other.base:
            raise ValueError("tensor shapes differ")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return SparseTensor(self.dims, out, self.base)

    def __sub__(self, other):
        return self + (-other)

    def permute_axes(self, perm: Sequence[int]) -> "SparseTensor":
        """Tensor ``u`` with ``u[i_0..i_{k-1}] = t[i_perm(0) .. i_perm(k-1)]``."""
        inv = [0] * len(perm)
        for a, p in enumerate(perm):
            inv[p] = a
        out = {}
        for idx, val in self.entries.items():
            out[tuple(idx[inv[a]] for a in range(len(perm)))] = val
        return SparseTensor(tuple(self.dims[perm[a]] for a in range(len(perm))), out, self.base)

    def sorted_items(self):
        return sorted(self.entries.items())


def antisymmetrize(t: SparseTensor, axes: Sequence[int] | None = None) -> SparseTensor:
    """Alternating projection ``(1/k!) sum_sigma sgn(sigma) t o sigma`` over ``axes``.

    Works group-by-group: entries sharing the same multiset of indices on
    ``axes`` (and the same indices elsewhere) combine into one alternating
    orbit, so the cost is linear in the number of stored entries plus the
    output size rather than ``k!`` times the input.
    """
    axes = tuple(range(t.order)) if axes is None else tuple(sorted(set(axes)))
    if not axes:
        return t
    d0 = t.dims[axes[0]]
    if any(t.dims[a] != d0 for a in axes):
        raise ValueError(f"axes {axes} have unequal dimensions {[t.dims[a] for a in axes]}")
    k = len(axes)
    groups: Dict[tuple, Fraction] = {}
    for idx, val in t.entries.items():
        sub = tuple(idx[a] for a in axes)
        if len(set(sub)) < k:
            continue
        key_rest = tuple(idx[a] for a in range(t.order) if a not in axes)
        key = (tuple(sorted(sub)), key_rest)
        groups[key] = groups.get(key, ZERO) + perm_sign(sub) * val
    norm = Fraction(1, factorial(k))
    out = {}
    rest_axes = [a for a in range(t.order) if a not in axes]
    for (srt, rest), total in groups.items():
        if not total:
            continue
        total = total * norm
        for p, s in zip(itertools.permutations(srt), _perm_signs(k)):
            idx = [0] * t.order
            for a, v in zip(axes, p):
                idx[a] = v
            for a, v in zip(rest_axes, rest):
                idx[a] = v
            out[tuple(idx)] = total if s > 0 else -total
    return SparseTensor(t.dims, out, t.base)


_SIGN_CACHE: Dict[int, Tuple[int, ...]] = {}


def _perm_signs(k: int) -> Tuple[int, ...]:
    # signs of itertools.permutations(range(k)) in generation order
    if k not in _SIGN_CACHE:
        _SIGN_CACHE[k] = tuple(perm_sign(p) for p in itertools.permutations(range(k)))
    return _SIGN_CACHE[k]


def alternator(n: int, base: int = 1) -> SparseTensor:
    """Rank-``n`` Levi-Civita tensor on ``n`` indices."""
    return SparseTensor(
        (n,) * n,
        {tuple(base - 1 + i for i in p): s for p, s in signed_permutations(n)},
        base,
    )


def is_alternating(t: SparseTensor, axes: Sequence[int] | None = None) -> bool:
    axes = tuple(range(t.order)) if axes is None else tuple(axes)
    for idx, val in t.entries.items():
        sub = [idx[a] for a in axes]
        if len(set(sub)) < len(sub):
            return False
        for i in range(len(axes) - 1):
            swapped = list(idx)
            swapped[axes[i]], swapped[axes[i + 1]] = idx[axes[i + 1]], idx[axes[i]]
            if t[swapped] != -val:
                return False
    return True


class EchelonBasis:
    """Incremental exact row echelon form over the rationals.

    Vectors are sparse dicts ``{position: value}``.  Each stored row keeps its
    expansion in the labels of the vectors that were added, so
    :meth:`coordinates` solves ``sum_l x_l v_l = w`` exactly.
    """

    def __init__(self):
        self._rows = []  # (pivot, vec, combo)
        self.labels = []

    def __len__(self):
        return len(self._rows)

    def _reduce(self, vec, combo):
        vec = {k: as_rational(v) for k, v in vec.items() if v}
        combo = dict(combo)
        for pivot, row, rcombo in self._rows:
            c = vec.get(pivot)
            if not c:
                continue
            for k, v in row.items():
                nv = vec.get(k, ZERO) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in rcombo.items():
                nv = combo.get(k, ZERO) - c * v
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)
        return vec, combo

    def add(self, vec, label) -> bool:
        """Add ``vec`` if it is independent of the current span; report whether it was."""
        red, combo = self._reduce(vec, {label: ONE})
        if not red:
            return False
        pivot = min(red)
        inv = 1 / red[pivot]
        red = {k: v * inv for k, v in red.items()}
        combo = {k: v * inv for k, v in combo.items()}
        self._rows.append((pivot, red, combo))
        self.labels.append(label)
        return True

    def coordinates(self, vec) -> Dict[object, Fraction]:
        """Exact coordinates of ``vec`` in the added vectors; ``ValueError`` if outside the span."""
        red, combo = self._reduce(vec, {})
        if red:
            raise ValueError("vector is not in the span")
        return {k: -v for k, v in combo.items() if v}
