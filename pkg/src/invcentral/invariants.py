"""m-invariants: the derivation action on matrix entries and invariant families.

A Lie algebra element with representation matrix ``V`` acts on the entries of
a generic matrix ``M`` by ``M -> M V^t - V^t M``.  For so_N and g2 (``V``
skew) this is ``M -> V M + M V^t``; for gl_N it is the (transposed) adjoint
action.  The action extends to polynomials as a derivation.

Polynomials built from pfaffians live on the skew pattern: they use only the
variables ``m_ij`` with ``i < j``.  Check those with ``skew=True``, which
imposes ``m_ji = -m_ij`` on every action image.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .exact_math import ONE, ZERO, perfect_matchings, perm_sign, subsets
from .lie_algebras import LieAlgebra, LieVector
from .mpoly import Monomial, MPolynomial, accumulate, mono_mul, skew_substitute
from .octonions import omega_skew
from .verdict import Verdict


def _images(alg: LieAlgebra, g: LieVector, n: int) -> Dict[Tuple[int, int], List[Tuple[Tuple[int, int], Fraction]]]:
    v = alg.matrix_of(g)
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            terms: Dict[Tuple[int, int], Fraction] = {}
            for k in range(1, n + 1):
                c = v[j - 1, k - 1]
                if c:
                    terms[i, k] = terms.get((i, k), ZERO) + c
                c = v[k - 1, i - 1]
                if c:
                    terms[k, j] = terms.get((k, j), ZERO) - c
            out[i, j] = [(kl, c) for kl, c in terms.items() if c]
    return out


def _check_dims(alg: LieAlgebra, p: MPolynomial):
    n = alg.rep_dim
    for v in p.variables():
        if len(v) == 3 and not (1 <= v[1] <= n and 1 <= v[2] <= n):
            raise ValueError(f"variable {v} does not fit a {n}x{n} matrix ({alg.name})")


def act(alg: LieAlgebra, g: LieVector, p: MPolynomial, skew: bool = False) -> MPolynomial:
    """Derivation action of ``g`` on ``p``; with ``skew`` the result is skew-substituted."""
    _check_dims(alg, p)
    img = _images(alg, g, alg.rep_dim)
    acc: Dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        for pos, (var, e) in enumerate(mono):
            if len(var) != 3:
                continue
            name, i, j = var
            rest = mono[:pos] + (((var, e - 1),) if e > 1 else ()) + mono[pos + 1:]
            for (k, l), a in img[i, j]:
                key = mono_mul(rest, (((name, k, l), 1),))
                acc[key] = acc.get(key, ZERO) + c * e * a
    out = MPolynomial(acc)
    return skew_substitute(out) if skew else out


def is_invariant(alg: LieAlgebra, p: MPolynomial, skew: bool = False) -> Verdict:
    """True iff every basis element annihilates ``p``; the witness is the first failure."""
    for a in range(alg.dim):
        r = act(alg, alg.basis_vector(a), p, skew=skew)
        if not r.is_zero():
            return Verdict(False, {"basis_index": a, "label": alg.basis_labels[a], "residual": r})
    return Verdict(True, details={"checked": alg.dim})


# families

def trace_poly(n: int) -> MPolynomial:
    return sum((MPolynomial.m(i, i) for i in range(1, n + 1)), MPolynomial())


def pfaffian_poly(indexset: Sequence[int]) -> MPolynomial:
    """Pf of the skew pattern on ``indexset`` (upper-triangle variables only)."""
    acc: Dict[Monomial, Fraction] = {}
    for matching, sign in perfect_matchings(indexset):
        mono = tuple(sorted(((("m", p, q), 1) for p, q in matching)))
        # a matching never repeats a pair, so exponents stay 1
        acc[mono] = acc.get(mono, ZERO) + sign
    return MPolynomial(acc)


def det_poly(rows: Sequence[int], cols: Sequence[int]) -> MPolynomial:
    """``det (m_ij)_{i in rows, j in cols}`` over general entries."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("det_poly needs equal-size row and column sets")
    acc: Dict[Monomial, Fraction] = {}
    for perm in itertools.permutations(range(len(cols))):
        mono = tuple(sorted(((("m", rows[t], cols[perm[t]]), 1) for t in range(len(rows)))))
        acc[mono] = acc.get(mono, ZERO) + perm_sign(perm)
    return MPolynomial(acc)


def c_k_poly(n: int, k: int) -> MPolynomial:
    """Sum of the principal ``k x k`` minors of ``M``."""
    acc: Dict[Monomial, Fraction] = {}
    for idx in subsets(n, k):
        accumulate(acc, det_poly(idx, idx))
    return MPolynomial(acc)


def sum_pf_sq_poly(n: int, k: int) -> MPolynomial:
    """``sum_{|I| = 2k} (Pf M_I)^2`` on the skew pattern."""
    if 2 * k > n:
        raise ValueError(f"need 2k <= N, got N={n}, k={k}")
    acc: Dict[Monomial, Fraction] = {}
    for idx in subsets(n, 2 * k):
        accumulate(acc, pfaffian_poly(idx) ** 2)
    return MPolynomial(acc)


def pf_full_poly(n: int) -> MPolynomial:
    if n % 2:
        raise ValueError("the full pfaffian needs N even")
    return pfaffian_poly(range(1, n + 1))


def graph_prefactor(family: str, k: int) -> int:
    """Combinatorial factor the tensor-contraction construction puts in front.

    ``"pf"``: ``k! 2^k`` for a ``2k``-index pfaffian; ``"det"``: ``k!``.
    """
    if family == "pf":
        return factorial(k) * 2 ** k
    if family == "det":
        return factorial(k)
    raise ValueError(family)


# g2 invariants

Slot = Tuple[str, int]


def _omega_entries(size: int):
    if size < 2 or size > 7:
        raise ValueError(f"omega group size must be in 2..7, got {size}")
    return omega_skew(size).tensor.entries.items()


def contract_groups(groups: Sequence[Sequence[Slot]], k: int) -> MPolynomial:
    """Contract ``m_{i1 j1} ... m_{ik jk}`` with one omega tensor per index group.

    ``groups`` partitions the slots ``("i", t)``, ``("j", t)`` (``t = 1..k``);
    the omega of each group takes the group's slots in the order given.
    """
    slots = [s for grp in groups for s in grp]
    expected = {(side, t) for side in "ij" for t in range(1, k + 1)}
    if sorted(slots) != sorted(expected) or len(slots) != 2 * k:
        raise ValueError("groups must partition the 2k slots exactly once")
    tables = [list(_omega_entries(len(grp))) for grp in groups]
    acc: Dict[Monomial, Fraction] = {}
    for choice in itertools.product(*tables):
        assign = {}
        coeff = ONE
        for grp, (idx, val) in zip(groups, choice):
            coeff *= val
            for slot, v in zip(grp, idx):
                assign[slot] = v
        counts: Dict[tuple, int] = {}
        for t in range(1, k + 1):
            var = ("m", assign["i", t], assign["j", t])
            counts[var] = counts.get(var, 0) + 1
        mono = tuple(sorted(counts.items()))
        acc[mono] = acc.get(mono, ZERO) + coeff
    return MPolynomial(acc)


def _ordered_set_partitions(k: int, sizes: Sequence[int]):
    def rec(remaining, sizes):
        if not sizes:
            yield ()
            return
        for block in itertools.combinations(remaining, sizes[0]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(rest, sizes[1:]):
                yield (block,) + tail

    yield from rec(tuple(range(1, k + 1)), tuple(sizes))


def _check_partition(part: Sequence[int], name: str) -> int:
    if not part:
        raise ValueError(f"{name} partition is empty")
    for s in part:
        if not 2 <= s <= 7:
            raise ValueError(f"{name} part size {s} outside 2..7 (omega is defined for orders 2..7)")
    return sum(part)


def g_poly(row_partition: Sequence[int], col_partition: Sequence[int]) -> MPolynomial:
    """The G-function: omega contractions summed over set partitions of the positions.

    Row indices ``i_1..i_k`` are split into labelled blocks of sizes
    ``row_partition`` (every way), likewise the column indices, and each
    block is contracted with the omega tensor of its size (positions taken in
    increasing order).  Blocks of size 5 or 6 make the result vanish.
    """
    k = _check_partition(row_partition, "row")
    if _check_partition(col_partition, "column") != k:
        raise ValueError("row and column partitions must have the same total")
    dead = [s for s in list(row_partition) + list(col_partition) if s in (5, 6)]
    if dead:
        warnings.warn(f"omega of order {dead[0]} vanishes; G-function is zero", stacklevel=2)
        return MPolynomial()
    if len(row_partition) == 1 and len(col_partition) == 1 and k >= 3:
        return _g_single(k)
    return g_poly_direct(row_partition, col_partition)


def _g_single(k: int) -> MPolynomial:
    # both tensors alternating: sum over row tuples = k! * sum over sorted row tuples
    om = omega_skew(k).tensor.entries
    acc: Dict[Monomial, Fraction] = {}
    for ridx, rv in om.items():
        if list(ridx) != sorted(ridx):
            continue
        for cidx, cv in om.items():
            mono = tuple(sorted(((("m", a, b), 1) for a, b in zip(ridx, cidx))))
            acc[mono] = acc.get(mono, ZERO) + rv * cv
    f = factorial(k)
    return MPolynomial({m: c * f for m, c in acc.items()})


def g_poly_direct(row_partition: Sequence[int], col_partition: Sequence[int]) -> MPolynomial:
    """``g_poly`` without the single-block shortcut (slow; used as a cross-check)."""
    k = _check_partition(row_partition, "row")
    acc: Dict[Monomial, Fraction] = {}
    for rblocks in _ordered_set_partitions(k, row_partition):
        for cblocks in _ordered_set_partitions(k, col_partition):
            groups = [[("i", t) for t in b] for b in rblocks] + [[("j", t) for t in b] for b in cblocks]
            accumulate(acc, contract_groups(groups, k))
    return MPolynomial(acc)


def check_mixed_groups(groups: Sequence[Sequence[Slot]]) -> None:
    """Reject groups holding both indices of one factor (``i_l`` and ``j_l``)."""
    for grp in groups:
        rows = {t for side, t in grp if side == "i"}
        cols = {t for side, t in grp if side == "j"}
        both = rows & cols
        if both:
            l = min(both)
            raise ValueError(
                f"group {list(grp)} contains both indices of factor {l}; "
                f"L_ij is skew so contracting i_{l} with j_{l} inside one omega gives nothing new"
            )


def family_poly(family: str, n: int, **params) -> Tuple[MPolynomial, bool]:
    """Polynomial for a named family and whether it lives on the skew pattern."""
    if family == "trace":
        return trace_poly(n), False
    if family == "pf":
        return pf_full_poly(n), True
    if family == "det":
        return det_poly(range(1, n + 1), range(1, n + 1)), False
    if family == "ck":
        return c_k_poly(n, params["k"]), False
    if family == "sumpf2":
        return sum_pf_sq_poly(n, params["k"]), True
    if family == "g":
        return g_poly(params["rows"], params["cols"]), False
    raise ValueError(f"unknown family {family!r}")
