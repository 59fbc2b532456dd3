import itertools
import json
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from conftest import is_scalar, rep_image
from invcentral.acceptance import random_poly, random_vector
from invcentral.central import casimir
from invcentral.invariants import act, sum_pf_sq_poly
from invcentral.lie_algebras import LieVector, build_L, make_g2, make_gl, make_so
from invcentral.mpoly import MPolynomial
from invcentral.uea import (
    UEAElement, brute_force_normalize, commutator, engine, equivariance_check, is_central, is_central_bruteforce,
    pbw_normalize, sym_product, symmetrize_poly,
)

m = MPolynomial.m
ALGS = {"gl3": lambda: make_gl(3), "so4": lambda: make_so(4), "g2": make_g2}


def word_matrix(alg, word):
    out = np.identity(alg.rep_dim, dtype=object) * Fraction(1)
    for x in word:
        out = out.dot(alg.matrix_of(x))
    return out


def test_examples():
    so3 = make_so(3)
    f12, f13, f23 = (so3.basis_vector(i) for i in range(3))
    assert pbw_normalize(so3, [f23, f12]) == UEAElement(so3, {(0, 2): 1, (1,): -1})
    gl2 = make_gl(2)
    e = {lab: gl2.basis_vector(gl2.index(lab)) for lab in gl2.basis_labels}
    got = pbw_normalize(gl2, [e["E21"], e["E12"]])
    assert got == UEAElement(gl2, {(1, 2): 1, (3,): 1, (0,): -1})
    assert pbw_normalize(so3, []) == UEAElement.one(so3)
    assert pbw_normalize(so3, [f13]) == UEAElement.from_vector(so3, f13)


def test_mixed_algebras_rejected():
    with pytest.raises(ValueError):
        pbw_normalize(make_so(3), [make_so(4).basis_vector(0)])
    with pytest.raises(ValueError):
        UEAElement.one(make_so(3)) + UEAElement.one(make_so(4))


def test_monomials_must_be_sorted():
    with pytest.raises(ValueError):
        UEAElement(make_so(3), {(2, 1): 1})


@pytest.mark.parametrize("name", ALGS)
def test_pbw_matches_brute_force(name):
    alg = ALGS[name]()
    rng = random.Random(5)
    for _ in range(30):
        word = [random_vector(rng, alg.dim) for _ in range(rng.randint(0, 4))]
        assert pbw_normalize(alg, word) == brute_force_normalize(alg, word)


@pytest.mark.parametrize("name", ALGS)
def test_normal_form_maps_to_the_word_product(name):
    # oracle: the defining representation is an algebra map on U(g)
    alg = ALGS[name]()
    rng = random.Random(9)
    for _ in range(15):
        word = [random_vector(rng, alg.dim, 3) for _ in range(rng.randint(1, 4))]
        assert (rep_image(pbw_normalize(alg, word)) == word_matrix(alg, word)).all()


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(0, 2 ** 32))
def test_associativity(small_alg, seed):
    rng = random.Random(seed)

    def factor():
        return pbw_normalize(small_alg, [random_vector(rng, small_alg.dim) for _ in range(rng.randint(0, 2))])

    a, b, c = factor(), factor(), factor()
    assert (a * b) * c == a * (b * c)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(0, 2 ** 32))
def test_degree_filtration(small_alg, seed):
    rng = random.Random(seed)
    k = rng.randint(1, 4)
    T = pbw_normalize(small_alg, [random_vector(rng, small_alg.dim) for _ in range(k)])
    assert T.degree() <= k
    g = random_vector(rng, small_alg.dim)
    assert commutator(g, T).degree() <= T.degree()


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(0, 2 ** 32))
def test_commutator_is_gT_minus_Tg(small_alg, seed):
    rng = random.Random(seed)
    T = pbw_normalize(small_alg, [random_vector(rng, small_alg.dim) for _ in range(rng.randint(0, 3))])
    g = random_vector(rng, small_alg.dim)
    G = UEAElement.from_vector(small_alg, g)
    assert commutator(g, T) == G * T - T * G


def test_sym_product():
    so3 = make_so(3)
    x, y = so3.basis_vector(2), so3.basis_vector(0)
    assert sym_product(so3, [x]) == UEAElement.from_vector(so3, x)
    half = (pbw_normalize(so3, [x, y]) + pbw_normalize(so3, [y, x])) * Fraction(1, 2)
    assert sym_product(so3, [x, y]) == half
    z = so3.basis_vector(1)
    for perm in itertools.permutations([x, y, z]):
        assert sym_product(so3, list(perm)) == sym_product(so3, [x, y, z])
    assert sym_product(so3, []) == UEAElement.one(so3)


def test_symmetrize_examples():
    so3 = make_so(3)
    assert symmetrize_poly(so3, m(1, 2)) == UEAElement(so3, {(0,): 1})
    for n in (3, 4):
        tr = sum((m(i, i) for i in range(1, n + 1)), MPolynomial())
        assert symmetrize_poly(make_so(n), tr).is_zero()
    sq = sum((m(i, j) ** 2 for i in range(1, 4) for j in range(1, 4)), MPolynomial())
    assert symmetrize_poly(so3, sq) == UEAElement(so3, {(0, 0): 2, (1, 1): 2, (2, 2): 2})


def test_symmetrize_rejects_bad_variables():
    so3 = make_so(3)
    with pytest.raises(ValueError):
        symmetrize_poly(so3, m(1, 4))
    with pytest.raises(ValueError):
        symmetrize_poly(so3, MPolynomial.var(("lam",)))
    with pytest.raises(ValueError):
        symmetrize_poly(so3, m(1, 2), build_L(make_so(4)))
    with pytest.raises(ValueError):
        symmetrize_poly(so3, m(1, 2), route="fast")


@pytest.mark.parametrize("name", ALGS)
def test_symmetrize_routes_agree(name):
    alg = ALGS[name]()
    rng = random.Random(3)
    for _ in range(8):
        p = random_poly(rng, alg.rep_dim, skew=False, max_degree=3, max_terms=3)
        assert symmetrize_poly(alg, p, route="collect") == symmetrize_poly(alg, p, route="direct")


def test_is_central_examples():
    so3 = make_so(3)
    assert is_central(so3, UEAElement.one(so3))
    assert is_central(so3, UEAElement(so3))
    c = symmetrize_poly(so3, sum_pf_sq_poly(3, 1))
    assert c == UEAElement(so3, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
    assert is_central(so3, c)
    v = is_central(so3, UEAElement(so3, {(0,): 1}))
    assert not v
    assert v.witness["label"] == "F13"
    assert v.witness["residual"] == UEAElement(so3, {(2,): 1})
    with pytest.raises(ValueError):
        is_central(make_so(4), c)


def test_centrality_scale_invariant():
    so4 = make_so(4)
    c = symmetrize_poly(so4, sum_pf_sq_poly(4, 1))
    x = UEAElement(so4, {(0, 1): 1})
    for k in (Fraction(-3, 7), 5):
        assert is_central(so4, c * k)
        assert not is_central(so4, x * k)


@pytest.mark.parametrize("threads", [2, 4])
def test_threads_give_same_witness(threads):
    g2 = make_g2()
    rng = random.Random(1)
    for _ in range(5):
        T = symmetrize_poly(g2, random_poly(rng, 7, skew=True))
        a, b = is_central(g2, T), is_central(g2, T, threads=threads)
        assert a.ok == b.ok and a.witness == b.witness


def test_brute_force_centrality_agrees():
    so4 = make_so(4)
    for T in (symmetrize_poly(so4, sum_pf_sq_poly(4, 2)), UEAElement(so4, {(0, 5): 1, (1, 1): 2})):
        assert is_central(so4, T).ok == is_central_bruteforce(so4, T).ok


@pytest.mark.parametrize("alg", [make_so(3), make_so(4), make_so(5), make_g2()], ids=lambda a: a.name)
def test_casimir_acts_as_scalar(alg):
    # oracle: irreducible defining representations send central elements to scalars
    img = rep_image(casimir(alg).element)
    assert is_scalar(img) and img[0, 0] != 0


def test_equivariance_sign_convention():
    so4 = make_so(4)
    L = build_L(so4)
    g = so4.basis_vector(0)
    p = m(1, 3)
    lhs = symmetrize_poly(so4, act(so4, g, p))
    rhs = commutator(g, symmetrize_poly(so4, p))
    assert not lhs.is_zero()
    assert lhs == -rhs
    assert equivariance_check(so4, p, g)
    assert equivariance_check(so4, p, g).details["sign"] == -1


@pytest.mark.parametrize("name", ALGS)
def test_equivariance_random(name):
    alg = ALGS[name]()
    rng = random.Random(17)
    for _ in range(10):
        p = random_poly(rng, alg.rep_dim, skew=alg.kind != "gl")
        assert equivariance_check(alg, p, random_vector(rng, alg.dim, 3))


def test_json_round_trip(tmp_path):
    so4 = make_so(4)
    T = symmetrize_poly(so4, sum_pf_sq_poly(4, 2)) * Fraction(2, 3)
    doc = T.to_json()
    assert [t["monomial"] for t in doc["terms"]] == sorted(t["monomial"] for t in doc["terms"])
    f = tmp_path / "t.json"
    f.write_text(json.dumps(doc))
    again = UEAElement.from_json(json.loads(f.read_text()), so4)
    assert again == T
    with pytest.raises(ValueError):
        UEAElement.from_json(doc, make_so(5))
    bad = {"algebra": "so4", "terms": [{"monomial": [0, 9], "coeff": "1"}]}
    with pytest.raises(ValueError):
        UEAElement.from_json(bad)


def test_engine_is_cached():
    so5 = make_so(5)
    assert engine(so5) is engine(so5)


def test_ratio_to():
    so3 = make_so(3)
    c = symmetrize_poly(so3, sum_pf_sq_poly(3, 1))
    assert (c * 4).ratio_to(c) == 4
    assert UEAElement(so3, {(0,): 1}).ratio_to(c) is None
