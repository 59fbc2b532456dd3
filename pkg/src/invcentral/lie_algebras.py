"""gl_N, so_N and g2 with exact structure constants, and the generator matrix L.

Every algebra is built the same way: a list of ``N x N`` rational matrices
(the standard representation) is reduced to an independent basis, and the
structure constants are read off by expanding each matrix commutator in that
basis.  ``L[i, j]`` uses 1-based row/column labels as in the formulas; basis
positions are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .exact_math import ZERO, EchelonBasis, SparseTensor, as_rational
from .octonions import Octonion, associator, commutator, omega3


def zeros(n: int, m: int | None = None) -> np.ndarray:
    return np.full((n, n if m is None else m), ZERO, dtype=object)


def elementary(n: int, i: int, j: int) -> np.ndarray:
    """``E_ij`` with 1-based labels."""
    e = zeros(n)
    e[i - 1, j - 1] = Fraction(1)
    return e


def mat_commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a.dot(b) - b.dot(a)


def _flatten(mat: np.ndarray) -> Dict[int, Fraction]:
    return {k: v for k, v in enumerate(mat.flat) if v}


@dataclass(frozen=True)
class LieVector:
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_dict(cls, dim: int, d: Dict[int, object]) -> "LieVector":
        c = [ZERO] * dim
        for k, v in d.items():
            c[k] += as_rational(v)
        return cls(tuple(c))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def items(self):
        return [(a, c) for a, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return LieVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return LieVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return LieVector(tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        c = as_rational(c)
        return LieVector(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__


@dataclass(eq=False)
class LieAlgebra:
    name: str
    kind: str  # "gl", "so" or "g2"
    rep_dim: int
    basis_labels: Tuple[str, ...]
    rep_matrices: Tuple[np.ndarray, ...]
    structure_constants: SparseTensor
    metadata: dict = field(default_factory=dict)
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, rep_dim={self.rep_dim})"

    @property
    def bracket_table(self) -> List[List[Dict[int, Fraction]]]:
        """``table[a][b] = {c: coeff}`` for ``[v_a, v_b]``."""
        tab = self.cache.get("bracket_table")
        if tab is None:
            d = self.dim
            tab = [[{} for _ in range(d)] for _ in range(d)]
            for (a, b, c), v in self.structure_constants.entries.items():
                tab[a][b][c] = v
            self.cache["bracket_table"] = tab
        return tab

    def basis_vector(self, a: int) -> LieVector:
        return LieVector(tuple(Fraction(1) if t == a else ZERO for t in range(self.dim)))

    def zero(self) -> LieVector:
        return LieVector((ZERO,) * self.dim)

    def bracket(self, x: LieVector, y: LieVector) -> LieVector:
        tab = self.bracket_table
        out = [ZERO] * self.dim
        for a, ca in x.items():
            for b, cb in y.items():
                for c, v in tab[a][b].items():
                    out[c] += ca * cb * v
        return LieVector(tuple(out))

    def matrix_of(self, x: LieVector) -> np.ndarray:
        m = zeros(self.rep_dim)
        for a, c in x.items():
            m = m + self.rep_matrices[a] * c
        return m

    def coordinates(self, mat: np.ndarray) -> LieVector:
        """Expand a representation matrix in the basis; ``ValueError`` if not in the algebra."""
        coords = self.cache["echelon"].coordinates(_flatten(mat))
        return LieVector.from_dict(self.dim, coords)

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)


def _build(name, kind, n, labels, mats, metadata=None) -> LieAlgebra:
    ech = EchelonBasis()
    keep_labels, keep_mats = [], []
    for lab, m in zip(labels, mats):
        if ech.add(_flatten(m), len(keep_mats)):
            keep_labels.append(lab)
            keep_mats.append(m)
    d = len(keep_mats)
    entries = {}
    for a in range(d):
        for b in range(a + 1, d):
            comm = mat_commutator(keep_mats[a], keep_mats[b])
            try:
                coords = ech.coordinates(_flatten(comm))
            except ValueError as exc:
                raise RuntimeError(f"{name}: [{keep_labels[a]}, {keep_labels[b]}] leaves the span") from exc
            for c, v in coords.items():
                entries[a, b, c] = v
                entries[b, a, c] = -v
    alg = LieAlgebra(
        name, kind, n, tuple(keep_labels), tuple(keep_mats),
        SparseTensor((d, d, d), entries), dict(metadata or {}),
    )
    alg.cache["echelon"] = ech
    return alg


@lru_cache(maxsize=None)
def make_gl(n: int) -> LieAlgebra:
    if n < 1:
        raise ValueError("gl_N needs N >= 1")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return _build(f"gl{n}", "gl", n, [f"E{i}{j}" for i, j in pairs],
                  [elementary(n, i, j) for i, j in pairs])


@lru_cache(maxsize=None)
def make_so(n: int) -> LieAlgebra:
    """so_N in the defining representation, basis ``F_ij = E_ij - E_ji`` for ``i < j``."""
    if n < 2:
        raise ValueError("so_N needs N >= 2")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return _build(f"so{n}", "so", n, [f"F{i}{j}" for i, j in pairs],
                  [elementary(n, i, j) - elementary(n, j, i) for i, j in pairs])


def derivation_matrix(x: Octonion, y: Octonion) -> np.ndarray:
    """Matrix of ``z -> [[x,y],z] - 3[x,y,z]`` on the imaginary units.

    Column ``c`` holds the image of ``e_{c+1}``.
    """
    if not (x.is_imaginary() and y.is_imaginary()):
        raise ValueError("derivation_matrix needs purely imaginary octonions")
    xy = commutator(x, y)
    m = zeros(7)
    for c in range(1, 8):
        z = Octonion.unit(c)
        img = commutator(xy, z) - associator(x, y, z) * 3
        if img.real:
            raise RuntimeError("derivation does not preserve the imaginary octonions")
        for r in range(1, 8):
            m[r - 1, c - 1] = img.coords[r]
    return m


@lru_cache(maxsize=None)
def _g2_matrices() -> Dict[Tuple[int, int], np.ndarray]:
    return {(i, j): derivation_matrix(Octonion.unit(i), Octonion.unit(j))
            for i in range(1, 8) for j in range(1, 8)}


def g2_matrix(i: int, j: int) -> np.ndarray:
    """``G_ij`` as a 7x7 matrix."""
    if not (1 <= i <= 7 and 1 <= j <= 7):
        raise ValueError("g2 generator labels run over 1..7")
    return _g2_matrices()[i, j]


@lru_cache(maxsize=None)
def _make_g2(order: Tuple[Tuple[int, int], ...]) -> LieAlgebra:
    mats = _g2_matrices()
    alg = _build("g2", "g2", 7, [f"G{i}{j}" for i, j in order], [mats[p] for p in order],
                 {"selection_order": [list(p) for p in order]})
    if alg.dim != 14:
        raise RuntimeError(f"derivations of the octonion table span {alg.dim} dimensions, expected 14")
    alg.metadata["basis_pairs"] = [[int(lab[1]), int(lab[2])] for lab in alg.basis_labels]
    return alg


def make_g2(order: Sequence[Tuple[int, int]] | None = None) -> LieAlgebra:
    """g2 as derivations of the octonions.

    The basis is chosen greedily: scan ``G_ij`` (``i < j``) in ``order``
    (lexicographic by default) and keep each matrix that raises the rank.
    """
    if order is None:
        order = tuple(itertools.combinations(range(1, 8), 2))
    return _make_g2(tuple(tuple(p) for p in order))


def g2_generator(alg: LieAlgebra, i: int, j: int) -> LieVector:
    """``G_ij`` expanded in the chosen g2 basis."""
    if alg.kind != "g2":
        raise ValueError("g2_generator needs the g2 algebra")
    return alg.coordinates(g2_matrix(i, j))


@lru_cache(maxsize=None)
def make_algebra(name: str) -> LieAlgebra:
    """``"gl3"``, ``"so5"``, ``"g2"`` ... (shared instance per name, default g2 basis)."""
    if name == "g2":
        return make_g2()
    for prefix, fn in (("gl", make_gl), ("so", make_so)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return fn(int(name[len(prefix):]))
    raise ValueError(f"unknown algebra {name!r}; use glN, soN or g2")


@dataclass(frozen=True)
class LinearRelation:
    """``sum coeffs[(i, j)] * L_ij = 0``."""

    description: str
    coeffs: Dict[Tuple[int, int], Fraction]


@dataclass(eq=False)
class LMatrix:
    algebra: LieAlgebra
    entries: Tuple[Tuple[LieVector, ...], ...]
    relations: Tuple[LinearRelation, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> LieVector:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"L index {ij} outside 1..{self.n}")
        return self.entries[i - 1][j - 1]

    def combine(self, coeffs: Dict[Tuple[int, int], Fraction]) -> LieVector:
        out = self.algebra.zero()
        for (i, j), c in coeffs.items():
            if c:
                out = out + self[i, j] * c
        return out

    def relation_residuals(self) -> List[Tuple[str, LieVector]]:
        return [(r.description, self.combine(r.coeffs)) for r in self.relations]


def build_L(alg: LieAlgebra) -> LMatrix:
    cached = alg.cache.get("L")
    if cached is not None:
        return cached
    n = alg.rep_dim
    rng = range(1, n + 1)
    rels: List[LinearRelation] = []
    if alg.kind == "gl":
        ent = [[alg.basis_vector(alg.index(f"E{i}{j}")) for j in rng] for i in rng]
    elif alg.kind == "so":
        def f(i, j):
            if i == j:
                return alg.zero()
            if i < j:
                return alg.basis_vector(alg.index(f"F{i}{j}"))
            return -alg.basis_vector(alg.index(f"F{j}{i}"))
        ent = [[f(i, j) for j in rng] for i in rng]
    elif alg.kind == "g2":
        ent = [[g2_generator(alg, i, j) for j in rng] for i in rng]
    else:
        raise ValueError(f"build_L does not support {alg.kind!r}")
    if alg.kind in ("so", "g2"):
        for i in rng:
            for j in range(i, n + 1):
                coeffs = {(i, i): Fraction(2)} if i == j else {(i, j): Fraction(1), (j, i): Fraction(1)}
                rels.append(LinearRelation(f"L_{i}{j} + L_{j}{i} = 0", coeffs))
    if alg.kind == "g2":
        om = omega3()
        for l in rng:
            rels.append(LinearRelation(
                f"sum_ij omega_ij{l} L_ij = 0",
                {(i, j): om[i, j, l] for i in rng for j in rng if om[i, j, l]},
            ))
    L = LMatrix(alg, tuple(tuple(r) for r in ent), tuple(rels))
    alg.cache["L"] = L
    return L


def index_action(alg: LieAlgebra, g: LieVector, i: int, j: int) -> Dict[Tuple[int, int], Fraction]:
    """Coefficients of ``g`` acting on the index pair ``(i, j)``.

    For so_N and g2 the pair is ``e_i ^ e_j``; for gl_N it is ``e_i (x) e_j^*``.
    ``[g, L_ij] = sum coeffs[(k, l)] L_kl`` is the equivariance law.
    """
    v = alg.matrix_of(g)
    n = alg.rep_dim
    out: Dict[Tuple[int, int], Fraction] = {}

    def put(key, c):
        if c:
            out[key] = out.get(key, ZERO) + c

    for k in range(1, n + 1):
        put((k, j), v[k - 1, i - 1])
        if alg.kind == "gl":
            put((i, k), -v[j - 1, k - 1])
        else:
            put((i, k), v[k - 1, j - 1])
    return {k: c for k, c in out.items() if c}


def jacobi_violations(alg: LieAlgebra) -> List[Tuple[int, int, int]]:
    """Basis triples where the Jacobi identity fails (empty for a Lie algebra)."""
    tab = alg.bracket_table
    d = alg.dim
    bad = []
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                acc: Dict[int, Fraction] = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for m, v in tab[x][y].items():
                        for e, w in tab[m][z].items():
                            acc[e] = acc.get(e, ZERO) + v * w
                if any(acc.values()):
                    bad.append((a, b, c))
    return bad


def representation_violations(alg: LieAlgebra) -> List[Tuple[int, int]]:
    """Basis pairs where ``[R_a, R_b] != sum_c c_ab^c R_c``."""
    bad = []
    for a in range(alg.dim):
        for b in range(alg.dim):
            lhs = mat_commutator(alg.rep_matrices[a], alg.rep_matrices[b])
            rhs = alg.matrix_of(alg.bracket(alg.basis_vector(a), alg.basis_vector(b)))
            if not (lhs == rhs).all():
                bad.append((a, b))
    return bad
