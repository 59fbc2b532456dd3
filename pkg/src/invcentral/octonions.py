"""Octonions over the rationals and the omega tensor family.

The multiplication is produced by Cayley-Dickson doubling
``(a, b)(c, d) = (ac - d*b, da + bc*)`` starting from the rationals, so the
basis is ``1, i, j, k`` of the quaternions followed by ``(0,1), (0,i), (0,j),
(0,k)``.  With this labelling ``e1 e2 = e3`` and the oriented Fano lines are::

    (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5)

``omega3`` holds the structure constants, ``omega_chain(k)`` the real part of
the left-associated product ``((e_i1 e_i2) e_i3) ... e_ik`` and
``omega_skew(k)`` its alternating part.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .exact_math import ZERO, SparseTensor, antisymmetrize, as_rational


def _conj(x):
    return (x[0],) + tuple(-c for c in x[1:])


def _cd_mul(x, y):
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = _cd_mul(a, c)
    db = _cd_mul(_conj(d), b)
    da = _cd_mul(d, a)
    bc = _cd_mul(b, _conj(c))
    return tuple(p - q for p, q in zip(ac, db)) + tuple(p + q for p, q in zip(da, bc))


@dataclass(frozen=True)
class Octonion:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        """``1`` for ``i = 0``, otherwise the imaginary unit ``e_i``."""
        if not 0 <= i <= 7:
            raise ValueError(f"octonion basis index must be in 0..7, got {i}")
        return cls(tuple(1 if t == i else 0 for t in range(8)))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    def __str__(self):
        parts = [f"{c}*e{i}" if i else str(c) for i, c in enumerate(self.coords) if c]
        return " + ".join(parts) or "0"

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        c = as_rational(other)
        return Octonion(tuple(a * c for a in self.coords))

    __rmul__ = __mul__

    @property
    def real(self) -> Fraction:
        return self.coords[0]

    def is_imaginary(self) -> bool:
        return self.coords[0] == 0

    def conjugate(self):
        return Octonion(_conj(self.coords))

    def norm(self) -> Fraction:
        return sum((c * c for c in self.coords), ZERO)


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    return Octonion(_cd_mul(a.coords, b.coords))


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return x * y - y * x


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


@lru_cache(maxsize=None)
def basis_table() -> Dict[Tuple[int, int], Tuple[int, int]]:
    """``(i, j) -> (k, s)`` with ``e_i e_j = s e_k`` (index 0 is the unit)."""
    table = {}
    for i in range(8):
        for j in range(8):
            p = oct_mul(Octonion.unit(i), Octonion.unit(j)).coords
            nz = [t for t in range(8) if p[t]]
            if len(nz) != 1 or abs(p[nz[0]]) != 1:
                raise RuntimeError("basis product is not a signed basis element")
            table[i, j] = (nz[0], int(p[nz[0]]))
    return table


def fano_triples() -> List[Tuple[int, int, int]]:
    """Oriented lines ``(a, b, c)`` with ``e_a e_b = e_c``, rotated so ``a`` is smallest."""
    tab = basis_table()
    lines = set()
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            k, s = tab[i, j]
            if s == 1:
                trip = (i, j, k)
                r = trip.index(min(trip))
                lines.add(trip[r:] + trip[:r])
    return sorted(lines)


def table_fingerprint() -> str:
    """Short sha256 of the imaginary-unit multiplication table; pins the convention."""
    tab = basis_table()
    rows = [[i, j, tab[i, j][0], tab[i, j][1]] for i in range(1, 8) for j in range(1, 8)]
    return hashlib.sha256(json.dumps(rows).encode()).hexdigest()[:16]


@lru_cache(maxsize=None)
def omega3() -> "OmegaTensor":
    tab = basis_table()
    entries = {}
    for i in range(1, 8):
        for j in range(1, 8):
            k, s = tab[i, j]
            if k != 0:
                entries[i, j, k] = s
    return OmegaTensor(3, SparseTensor((7, 7, 7), entries, base=1), Fraction(1))


@dataclass(frozen=True)
class OmegaTensor:
    """Order-``k`` tensor over the imaginary units ``1..7``.

    ``scale`` is the factor that was applied to the raw antisymmetrized chain
    tensor to make its entries ``+-1`` (``None`` when the tensor vanishes).
    """

    order: int
    tensor: SparseTensor
    scale: Optional[Fraction]

    def __getitem__(self, idx):
        return self.tensor[idx]

    def nonzero(self):
        return self.tensor.sorted_items()

    def is_zero(self):
        return self.tensor.is_zero()

    @property
    def raw(self) -> SparseTensor:
        """The tensor before normalization."""
        if self.scale is None or self.scale == 1:
            return self.tensor
        return self.tensor.scale(1 / self.scale)


@lru_cache(maxsize=None)
def omega_chain(k: int) -> SparseTensor:
    """``T[i1..ik] = Re(((e_i1 e_i2) e_i3) ... e_ik)``."""
    if not 2 <= k <= 7:
        raise ValueError(f"chain order must be in 2..7, got {k}")
    tab = basis_table()
    entries = {}

    # depth-first over prefixes; a prefix product is always a signed basis element
    def walk(prefix, unit, sign):
        if len(prefix) == k:
            if unit == 0:
                entries[prefix] = sign
            return
        for t in range(1, 8):
            u, s = tab[unit, t]
            walk(prefix + (t,), u, sign * s)

    for first in range(1, 8):
        walk((first,), first, 1)
    return SparseTensor((7,) * k, entries, base=1)


@lru_cache(maxsize=None)
def omega_skew(k: int) -> OmegaTensor:
    """Alternating omega tensor of order ``k`` with entries normalized to ``+-1``.

    Order 2 returns the chain tensor ``-delta`` unchanged (it is symmetric;
    this is the tensor the order-2 invariant contracts with).
    """
    if k == 2:
        return OmegaTensor(2, omega_chain(2), Fraction(1))
    if not 3 <= k <= 7:
        raise ValueError(f"omega order must be in 2..7, got {k}")
    alt = antisymmetrize(omega_chain(k))
    if alt.is_zero():
        return OmegaTensor(k, alt, None)
    mags = {abs(v) for v in alt.entries.values()}
    if len(mags) != 1:
        raise RuntimeError(f"order-{k} omega entries have unequal magnitudes {sorted(mags)}")
    scale = 1 / mags.pop()
    return OmegaTensor(k, alt.scale(scale), scale)


def omega_table_lines(k: int) -> List[str]:
    """JSON lines ``{"idx": [...], "val": +-1}`` in lexicographic index order."""
    t = omega_skew(k)
    lines = []
    for idx, val in t.nonzero():
        lines.append(json.dumps({"idx": list(idx), "val": int(val) if val.denominator == 1 else str(val)}))
    return lines
