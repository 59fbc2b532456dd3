"""Named central elements: invariant polynomial -> symmetrization -> centrality check."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Sequence

from .exact_math import EchelonBasis, perm_sign, subsets
from .invariants import (
    c_k_poly, check_mixed_groups, contract_groups, det_poly, g_poly, is_invariant, pf_full_poly,
    sum_pf_sq_poly,
)
from .lie_algebras import LieAlgebra, build_L, make_g2
from .mpoly import MPolynomial, skew_substitute
from .uea import UEAElement, commutator, engine, is_central, symmetrize_poly
from .verdict import Verdict


@dataclass
class CentralElementReport:
    family: str
    parameters: dict
    element: UEAElement
    centrality: Verdict
    metadata: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        meta = {k: v for k, v in self.metadata.items() if timing or k != "wall_time"}
        out = {
            "family": self.family,
            "parameters": self.parameters,
            "algebra": self.element.algebra.name,
            "central": self.centrality.ok,
            "element": self.element.to_json(),
            "metadata": meta,
        }
        if not self.centrality.ok:
            w = dict(self.centrality.witness)
            w["residual"] = w["residual"].to_json()
            out["witness"] = w
        return out


def _report(family, params, alg, poly, threads=1, **meta) -> CentralElementReport:
    t0 = time.perf_counter()
    elem = symmetrize_poly(alg, poly, build_L(alg))
    verdict = is_central(alg, elem, threads=threads)
    meta.update(polynomial_terms=len(poly), element_terms=len(elem), degree=elem.degree(),
                wall_time=round(time.perf_counter() - t0, 4))
    return CentralElementReport(family, params, elem, verdict, meta)


def casimir(alg: LieAlgebra, threads: int = 1) -> CentralElementReport:
    """Quadratic Casimir: ``sum_{i<j} L_ij^2`` for so_N, ``sum_{i,j} L_ij L_ij`` for g2."""
    if alg.kind == "so":
        return _report("casimir", {"N": alg.rep_dim}, alg, sum_pf_sq_poly(alg.rep_dim, 1), threads,
                       polynomial="sum_{i<j} m_ij^2")
    if alg.kind == "g2":
        return _report("casimir", {}, alg, g_poly([2], [2]), threads, polynomial="sum_{i,j} m_ij^2")
    raise ValueError(f"casimir is built for so_N and g2, not {alg.name}")


def det_family(alg: LieAlgebra, k: int, threads: int = 1) -> CentralElementReport:
    """``C_k``: the symmetrized sum of principal ``k x k`` minors of ``L`` (``k = N`` gives ``Det L``)."""
    n = alg.rep_dim
    if alg.kind not in ("gl", "so"):
        raise ValueError(f"det_family is built for gl_N and so_N, not {alg.name}")
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= N, got k={k}, N={n}")
    rep = _report("det", {"N": n, "k": k}, alg, c_k_poly(n, k), threads)
    if alg.kind == "gl" and factorial(k) <= 24:
        dd = UEAElement(alg)
        for idx in subsets(n, k):
            dd = dd + double_determinant(alg, idx)
        rep.metadata["double_determinant_agrees"] = dd == rep.element
    return rep


def double_determinant(alg: LieAlgebra, rows: Sequence[int]) -> UEAElement:
    """``(1/k!) sum_{s,t} sgn(s) sgn(t) L_{s1 t1} ... L_{sk tk}`` as ordered products."""
    L = build_L(alg)
    rows = list(rows)
    k = len(rows)
    eng = engine(alg)
    acc: Dict[tuple, Fraction] = {}
    for s in itertools.permutations(rows):
        for t in itertools.permutations(rows):
            sign = perm_sign([rows.index(x) for x in s]) * perm_sign([rows.index(x) for x in t])
            terms = {(): 1}
            for a, b in reversed(list(zip(s, t))):
                nxt: Dict[tuple, Fraction] = {}
                for g, cg in L[a, b].items():
                    for m, c in eng.lmul_terms(g, terms).items():
                        nxt[m] = nxt.get(m, 0) + c * cg
                terms = nxt
            for m, c in terms.items():
                acc[m] = acc.get(m, 0) + sign * c
    f = factorial(k)
    return UEAElement(alg, {m: Fraction(c) / f for m, c in acc.items()})


def pfaffian_family(alg: LieAlgebra, k: Optional[int] = None, full: bool = False,
                    threads: int = 1) -> CentralElementReport:
    """``sum_{|I|=2k} (Pf L_I)^2``, or ``Pf L`` itself with ``full=True`` (N even)."""
    if alg.kind != "so":
        raise ValueError(f"pfaffian elements are built for so_N, not {alg.name}")
    n = alg.rep_dim
    if full:
        if n % 2:
            raise ValueError(f"Pf L needs N even, got N={n}")
        return _report("pf", {"N": n}, alg, pf_full_poly(n), threads)
    if k is None:
        raise ValueError("give k or full=True")
    if not 1 <= 2 * k <= n:
        raise ValueError(f"need 2k <= N, got k={k}, N={n}")
    return _report("sumpf2", {"N": n, "k": k}, alg, sum_pf_sq_poly(n, k), threads)


def _casimir_span(alg: LieAlgebra, elem: UEAElement, max_power: int):
    """Coordinates of ``elem`` in ``1, C, ..., C^max_power`` (C = Casimir) or ``None``."""
    c = casimir(alg).element
    basis = EchelonBasis()
    power = UEAElement.one(alg)
    for p in range(max_power + 1):
        basis.add(power.terms, p)
        power = power * c
    try:
        coords = basis.coordinates(elem.terms)
    except ValueError:
        return None
    return {str(p): str(v) for p, v in sorted(coords.items())}


def g2_G(row_partition: Sequence[int], col_partition: Sequence[int], groups=None,
         alg: Optional[LieAlgebra] = None, threads: int = 1) -> CentralElementReport:
    """Symmetrized G-function over g2.

    ``groups`` optionally replaces the partition sum by one explicit slot
    grouping; groups holding both indices of one factor are rejected.
    """
    alg = alg or make_g2()
    params = {"rows": list(row_partition), "cols": list(col_partition)}
    if groups is not None:
        check_mixed_groups(groups)
        k = sum(row_partition)
        poly = contract_groups(groups, k)
        params["groups"] = [[list(s) for s in g] for g in groups]
    else:
        poly = g_poly(row_partition, col_partition)
    rep = _report("g2G", params, alg, poly, threads)
    rep.metadata["vanishes"] = rep.element.is_zero()
    if rep.element.degree() <= 4:
        rep.metadata["casimir_coordinates"] = _casimir_span(alg, rep.element, rep.element.degree() // 2 if rep.element.degree() > 0 else 0)
    return rep


def g2_det_check(mode: str = "polynomial", generators: Sequence[int] = (0, 1), allow_long: bool = False,
                 route: str = "collect", alg: Optional[LieAlgebra] = None) -> Verdict:
    """Degree-7 g2 element against ``det``.

    ``polynomial``: ``g_poly([7],[7]) = c det M`` with ``c != 0`` on general
    ``M``, and ``det M`` is g2-invariant.  ``spot`` (needs ``allow_long``)
    additionally symmetrizes ``det L`` in U(g2) and checks its commutators
    with the chosen basis generators.  ``det`` of a skew 7x7 matrix is zero,
    so both polynomials vanish on the skew pattern; ``details`` records that.
    """
    if mode not in ("polynomial", "spot"):
        raise ValueError(f"mode must be 'polynomial' or 'spot', got {mode!r}")
    if mode == "spot" and not allow_long:
        raise ValueError("spot mode is long-running; pass allow_long=True")
    alg = alg or make_g2()
    t0 = time.perf_counter()
    g7 = g_poly([7], [7])
    det = det_poly(range(1, 8), range(1, 8))
    c = g7.ratio_to(det)
    inv = is_invariant(alg, det)
    details = {
        "constant": None if c is None else str(c),
        "det_invariant": inv.ok,
        "skew_det_vanishes": skew_substitute(det).is_zero(),
    }
    ok = c is not None and c != 0 and inv.ok
    if mode == "spot":
        elem = symmetrize_poly(alg, det, build_L(alg), route=route)
        comms = {}
        for a in generators:
            r = commutator(a, elem)
            comms[alg.basis_labels[a]] = len(r)
            ok = ok and r.is_zero()
        details.update(element_terms=len(elem), commutator_terms=comms, route=route)
    details["wall_time"] = round(time.perf_counter() - t0, 4)
    return Verdict(ok, None if ok else {"inv_witness": inv.witness, "constant": c}, details)


def pf_square_constant(n: int = 4) -> Dict[str, object]:
    """Compare symmetrized ``(Pf L)^2`` with symmetrized ``Det L`` over so_n.

    Returns the exact ratio (or ``None``) and, for contrast, whether the
    U(g) square of the symmetrized pfaffian equals symmetrized ``Det L``.
    """
    from .lie_algebras import make_so

    alg = make_so(n)
    L = build_L(alg)
    pf = pf_full_poly(n)
    sym_pf2 = symmetrize_poly(alg, pf ** 2, L)
    sym_det = symmetrize_poly(alg, det_poly(range(1, n + 1), range(1, n + 1)), L)
    pf_elem = symmetrize_poly(alg, pf, L)
    square = pf_elem * pf_elem
    return {
        "ratio": sym_pf2.ratio_to(sym_det),
        "product_square_ratio": square.ratio_to(sym_det),
        "product_square_difference": square - sym_det,
    }
