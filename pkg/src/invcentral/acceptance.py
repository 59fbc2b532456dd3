"""Acceptance checks shared by the test suite and ``invcentral selftest``.

Each ``criterion_<n>`` returns a :class:`Verdict`; ``fast=True`` trims the
sample counts and skips the slowest cases so the CLI self-test stays quick.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from math import factorial
from typing import Callable, Dict, List, Tuple

from .central import casimir, det_family, g2_det_check, g2_G, pfaffian_family
from .exact_math import alternator
from .graphs import (
    compile_graph, determinant_graph, pfaffian_graph, random_graph, trace_graph, trace_power_graph,
)
from .invariants import (
    c_k_poly, det_poly, g_poly, is_invariant, pf_full_poly, sum_pf_sq_poly, trace_poly,
)
from .lie_algebras import (
    LieVector, build_L, g2_generator, g2_matrix, index_action, jacobi_violations, make_g2, make_gl,
    make_so, representation_violations, zeros,
)
from .mpoly import MPolynomial, mat_det, mat_mul, skew_substitute, symbolic_matrix
from .octonions import Octonion, omega3, omega_skew
from .relations import charpoly_pfaffian_identity, check_relation
from .uea import brute_force_normalize, equivariance_check, is_central, pbw_normalize, symmetrize_poly
from .verdict import Verdict

DEFAULT_SEED = 20240607


def _fail(what, **witness) -> Verdict:
    return Verdict(False, {"check": what, **witness})


def criterion_1(fast: bool = False, **_) -> Verdict:
    """Jacobi identity and representation property; dim g2 = 14."""
    algs = [make_gl(n) for n in (1, 2, 3)] + [make_so(n) for n in range(2, 7)] + [make_g2()]
    for alg in algs:
        jac = jacobi_violations(alg)
        if jac:
            return _fail("jacobi", algebra=alg.name, triple=jac[0])
        rep = representation_violations(alg)
        if rep:
            return _fail("representation", algebra=alg.name, pair=rep[0])
    if make_g2().dim != 14:
        return _fail("g2 dimension", dim=make_g2().dim)
    return Verdict(True, details={"algebras": [a.name for a in algs]})


def criterion_2(fast: bool = False, **_) -> Verdict:
    """``[g, L_ij] = L_{g(e_i ^ e_j)}`` for every basis g and every (i, j)."""
    algs = [make_so(n) for n in range(2, 7)] + [make_g2()]
    count = 0
    for alg in algs:
        L = build_L(alg)
        n = alg.rep_dim
        for a in range(alg.dim):
            g = alg.basis_vector(a)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    lhs = alg.bracket(g, L[i, j])
                    rhs = L.combine(index_action(alg, g, i, j))
                    if lhs != rhs:
                        return _fail("equivariance", algebra=alg.name, g=alg.basis_labels[a], ij=(i, j))
                    count += 1
    return Verdict(True, details={"checked": count})


def criterion_3(fast: bool = False, **_) -> Verdict:
    """Octonion axioms on the basis, omega tensor facts."""
    units = [Octonion.unit(i) for i in range(8)]
    for x, y in itertools.product(units, repeat=2):
        if (x * x) * y != x * (x * y) or (y * x) * x != y * (x * x):
            return _fail("alternativity", x=x.coords, y=y.coords)
        if (x * y).norm() != x.norm() * y.norm():
            return _fail("norm", x=x.coords, y=y.coords)
    for x, y, z in itertools.product(units, repeat=3):
        if z * (x * (z * y)) != ((z * x) * z) * y:
            return _fail("moufang", x=x.coords, y=y.coords, z=z.coords)
        if ((x * z) * y) * z != x * (z * (y * z)):
            return _fail("moufang", x=x.coords, y=y.coords, z=z.coords)
        if (z * x) * (y * z) != (z * (x * y)) * z:
            return _fail("moufang", x=x.coords, y=y.coords, z=z.coords)
    # norm multiplicativity on generic (non-basis) elements too
    rng = random.Random(7)
    for _ in range(20):
        x = Octonion(tuple(rng.randint(-3, 3) for _ in range(8)))
        y = Octonion(tuple(rng.randint(-3, 3) for _ in range(8)))
        if (x * y).norm() != x.norm() * y.norm():
            return _fail("norm", x=x.coords, y=y.coords)
    n3 = len(omega3().nonzero())
    if n3 != 42:
        return _fail("omega3 count", count=n3)
    for k in (5, 6):
        if not omega_skew(k).is_zero():
            return _fail(f"omega{k} nonzero")
    w7 = omega_skew(7).tensor
    eps = alternator(7)
    c = w7[(1, 2, 3, 4, 5, 6, 7)]
    if not c or w7 != eps.scale(c):
        return _fail("omega7 not proportional to the alternator")
    return Verdict(True, details={"omega3_nonzeros": n3, "omega7_constant": str(c)})


def criterion_4(fast: bool = False, **_) -> Verdict:
    """``sum_ij omega_ijl L_ij = 0`` for l = 1..7, as matrices and as vectors."""
    alg = make_g2()
    om = omega3()
    for l in range(1, 8):
        mat = zeros(7)
        vec = alg.zero()
        for (i, j, ll), w in om.nonzero():
            if ll == l:
                mat = mat + w * g2_matrix(i, j)
                vec = vec + g2_generator(alg, i, j) * w
        if any(mat.flat):
            return _fail("matrix relation", l=l)
        if not vec.is_zero():
            return _fail("vector relation", l=l)
    return Verdict(True, details={"relations": 7})


def _so_family_polys(n: int):
    yield "trace", trace_poly(n), False
    yield "det", det_poly(range(1, n + 1), range(1, n + 1)), False
    for k in range(1, min(3, n) + 1):
        yield f"c{k}", c_k_poly(n, k), False
    for k in range(1, 4):
        if 2 * k <= n:
            yield f"sumpf2_{k}", sum_pf_sq_poly(n, k), True
    if n % 2 == 0:
        yield "pf", pf_full_poly(n), True


def criterion_5(fast: bool = False, **_) -> Verdict:
    """so_N families and g2 G-polynomials are m-invariant."""
    checked = []
    for n in range(2, 7):
        alg = make_so(n)
        for name, p, skew in _so_family_polys(n):
            v = is_invariant(alg, p, skew=skew)
            if not v:
                return _fail("so invariance", algebra=alg.name, family=name, witness=v.witness)
            checked.append(f"{alg.name}:{name}")
    g2 = make_g2()
    for k in ((2, 3, 4) if fast else (2, 3, 4, 7)):
        v = is_invariant(g2, g_poly([k], [k]))
        if not v:
            return _fail("g2 invariance", k=k, witness=v.witness)
        checked.append(f"g2:G{k}")
    return Verdict(True, details={"checked": checked})


def random_poly(rng: random.Random, n: int, skew: bool, max_degree: int = 2, max_terms: int = 4) -> MPolynomial:
    """Random polynomial of degree <= ``max_degree`` with small integer coefficients."""
    if skew:
        variables = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    else:
        variables = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    p = MPolynomial()
    for _ in range(rng.randint(1, max_terms)):
        term = MPolynomial.const(rng.choice([-3, -2, -1, 1, 2, 3]))
        for _ in range(rng.randint(1, max_degree)):
            term = term * MPolynomial.m(*rng.choice(variables))
        p = p + term
    return p


def random_vector(rng: random.Random, dim: int, max_terms: int = 2) -> LieVector:
    d = {}
    for a in rng.sample(range(dim), min(dim, rng.randint(1, max_terms))):
        d[a] = rng.choice([-2, -1, 1, 2, 3])
    return LieVector.from_dict(dim, d)


def criterion_6(fast: bool = False, seed: int = DEFAULT_SEED, **_) -> Verdict:
    """``equivariance_check`` on random polynomials of degree <= 2."""
    rng = random.Random(seed)
    count = 10 if fast else 50
    algs = [make_gl(3), make_so(4), make_so(5), make_g2()]
    for alg in algs:
        for t in range(count):
            p = random_poly(rng, alg.rep_dim, skew=alg.kind != "gl")
            g = alg.basis_vector(rng.randrange(alg.dim)) if t % 2 else random_vector(rng, alg.dim, 3)
            v = equivariance_check(alg, p, g)
            if not v:
                return _fail("equivariance_check", algebra=alg.name, poly=repr(p))
    return Verdict(True, details={"per_algebra": count, "algebras": [a.name for a in algs]})


def centrality_reports(threads: int = 1, fast: bool = False):
    """The element list of the centrality criterion, as reports."""
    out = [casimir(make_so(n), threads) for n in range(3, 7)]
    out.append(casimir(make_g2(), threads))
    out.append(pfaffian_family(make_so(4), full=True, threads=threads))
    out.append(pfaffian_family(make_so(6), full=True, threads=threads))
    out.append(pfaffian_family(make_so(5), k=2, threads=threads))
    out.append(det_family(make_gl(2), 2, threads))
    out.append(det_family(make_gl(3), 3, threads))
    out.append(det_family(make_so(4), 4, threads))
    out.append(det_family(make_gl(3), 2, threads))
    out.append(g2_G([3], [3], threads=threads))
    if not fast:
        out.append(g2_G([4], [4], threads=threads))
    return out


def criterion_7(fast: bool = False, threads: int = 1, **_) -> Verdict:
    """Full PBW centrality of the listed elements."""
    names = []
    for rep in centrality_reports(threads, fast):
        label = f"{rep.element.algebra.name}:{rep.family}{json.dumps(rep.parameters, sort_keys=True)}"
        if not rep.centrality:
            return _fail("centrality", element=label, witness=rep.centrality.witness)
        names.append(label)
    return Verdict(True, details={"central": names})


def criterion_8(fast: bool = False, **_) -> Verdict:
    """Pfaffian relations and the characteristic polynomial identity."""
    cases = [(1, {"n": n}) for n in (2, 4, 6)] + [(2, {}), (3, {})]
    cases += [(4, {"k": 1, "n": 4}), (4, {"k": 3, "n": 4})] + ([] if fast else [(4, {"k": 5, "n": 4})])
    for rel, params in cases:
        v = check_relation(rel, **params)
        if not v:
            return _fail(f"relation {rel}", params=params, residual=repr(v.witness))
    for n in (2, 4, 6):
        v = charpoly_pfaffian_identity(n)
        if not v:
            return _fail("charpoly", n=n, residual=repr(v.witness))
    return Verdict(True, details={"relations": [[r, p] for r, p in cases], "charpoly": [2, 4, 6]})


def criterion_9(fast: bool = False, seed: int = DEFAULT_SEED, **_) -> Verdict:
    """Graph normalizations and invariance of compiled graphs over so_4."""
    for n in (2, 3, 4):
        if compile_graph(trace_graph(), n) != trace_poly(n):
            return _fail("trace graph", n=n)
        m = symbolic_matrix(n)
        power = m
        for k in range(1, 4):
            tr = sum((power[i][i] for i in range(n)), MPolynomial())
            if compile_graph(trace_power_graph(k), n) != tr:
                return _fail("trace power graph", n=n, k=k)
            power = mat_mul(power, m)
    for k in (1, 2, 3):
        compiled = skew_substitute(compile_graph(pfaffian_graph(k), 2 * k))
        if compiled != pf_full_poly(2 * k) * (factorial(k) * 2 ** k):
            return _fail("pfaffian graph", k=k)
    for k in (2, 3, 4):
        if compile_graph(determinant_graph(k), k) != mat_det(symbolic_matrix(k)) * factorial(k):
            return _fail("determinant graph", k=k)
    rng = random.Random(seed)
    so4 = make_so(4)
    graphs = [trace_graph(), pfaffian_graph(2), determinant_graph(4), trace_power_graph(3)]
    for _ in range(6 if fast else 20):
        n_black = rng.randint(0, 2)
        graphs.append(random_graph(rng, 4, n_black, rng.randint(0 if n_black else 1, 2)))
    for gr in graphs:
        p = compile_graph(gr, 4)
        v = is_invariant(so4, p)
        if not v:
            return _fail("graph invariance", graph=gr.to_json(), witness=v.witness)
    return Verdict(True, details={"graphs_checked": len(graphs)})


def criterion_10(fast: bool = False, seed: int = DEFAULT_SEED, **_) -> Verdict:
    """PBW against brute force; verdicts independent of the thread count."""
    rng = random.Random(seed)
    count = 20 if fast else 100
    algs = [make_gl(3), make_so(4), make_g2()]
    for alg in algs:
        for _ in range(count):
            word = [random_vector(rng, alg.dim) for _ in range(rng.randint(0, 4))]
            if pbw_normalize(alg, word) != brute_force_normalize(alg, word):
                return _fail("pbw vs brute force", algebra=alg.name, word=[w.items() for w in word])
    # central and non-central elements, threads 1 and 4
    samples = []
    for alg in algs:
        n = alg.rep_dim
        p = sum_pf_sq_poly(n, 1) if alg.kind != "gl" else c_k_poly(n, 2)
        samples.append(symmetrize_poly(alg, p))
        samples.append(symmetrize_poly(alg, random_poly(rng, n, skew=alg.kind != "gl")))
    for T in samples:
        a, b = is_central(T.algebra, T, threads=1), is_central(T.algebra, T, threads=4)
        if a.ok != b.ok or a.witness != b.witness:
            return _fail("thread dependence", algebra=T.algebra.name)
    one = [r.to_json(timing=False) for r in centrality_reports(1, fast=True)]
    four = [r.to_json(timing=False) for r in centrality_reports(4, fast=True)]
    if one != four:
        return _fail("thread dependence in reports")
    return Verdict(True, details={"words_per_algebra": count, "thread_samples": len(samples) + len(one)})


def criterion_11(fast: bool = False, spot: bool = False, **_) -> Verdict:
    """Degree-7 g2 element: polynomial route (spot check when ``spot``)."""
    v = g2_det_check("spot" if spot else "polynomial", allow_long=spot)
    if not v:
        return v
    return Verdict(True, details=v.details)


CRITERIA: Dict[int, Tuple[str, Callable[..., Verdict], float]] = {
    1: ("structure soundness", criterion_1, 10),
    2: ("equivariance of L", criterion_2, 30),
    3: ("octonion convention", criterion_3, 10),
    4: ("g2 linear relation", criterion_4, 5),
    5: ("m-invariance", criterion_5, 120),
    6: ("symmetrization equivariance", criterion_6, 120),
    7: ("centrality via PBW", criterion_7, 600),
    8: ("pfaffian relations", criterion_8, 60),
    9: ("graph compiler", criterion_9, 60),
    10: ("oracle equivalence", criterion_10, 300),
    11: ("g2 degree 7", criterion_11, 300),
}


def run(ids=None, fast: bool = False, **kwargs) -> List[Tuple[int, str, Verdict, float]]:
    out = []
    for cid in ids or sorted(CRITERIA):
        title, fn, _ = CRITERIA[cid]
        t0 = time.perf_counter()
        v = fn(fast=fast, **kwargs)
        out.append((cid, title, v, time.perf_counter() - t0))
    return out
