import itertools
from fractions import Fraction

import pytest
import sympy
from sympy.combinatorics import Permutation
from hypothesis import given, settings, strategies as st

from invcentral.exact_math import (
    EchelonBasis, SparseTensor, alternator, antisymmetrize, as_rational, is_alternating, perfect_matchings,
    perm_sign, signed_permutations, subsets,
)
from invcentral.mpoly import mat_det, mat_pf, symbolic_matrix


@given(st.permutations(list(range(7))))
def test_perm_sign_matches_sympy(p):
    assert perm_sign(p) == (-1) ** Permutation(p).parity()


def test_perm_sign_one_based_and_signed_permutations():
    perms = list(signed_permutations(3))
    assert len(perms) == 6
    assert perms[0] == ((1, 2, 3), 1)
    assert sum(s for _, s in perms) == 0
    assert perm_sign((2, 1, 3)) == -1


def test_subsets():
    assert list(subsets(4, 2))[:3] == [(1, 2), (1, 3), (1, 4)]
    assert len(list(subsets(6, 3))) == 20


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_perfect_matching_count(k):
    # (2k-1)!!
    expected = 1
    for t in range(1, 2 * k, 2):
        expected *= t
    assert len(list(perfect_matchings(range(1, 2 * k + 1)))) == expected


def test_perfect_matchings_rejects_bad_sets():
    with pytest.raises(ValueError):
        list(perfect_matchings([1, 2, 3]))
    with pytest.raises(ValueError):
        list(perfect_matchings([1, 1, 2, 3]))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=15, max_size=15))
def test_pfaffian_squared_is_det_numeric(vals):
    # oracle: sympy determinant of a random integer skew matrix
    n = 6
    it = iter(vals)
    a = sympy.zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = next(it)
            a[j, i] = -a[i, j]
    pf = sum(sign * sympy.prod([a[p - 1, q - 1] for p, q in m]) for m, sign in perfect_matchings(range(1, n + 1)))
    assert pf ** 2 == a.det()


def test_symbolic_det_matches_sympy():
    m = symbolic_matrix(3)
    syms = sympy.Matrix(3, 3, lambda i, j: sympy.Symbol(f"m{i + 1}{j + 1}"))
    ours = mat_det(m)
    expected = sympy.Poly(syms.det(), *sorted(syms.free_symbols, key=str))
    assert len(ours) == len(expected.terms())
    for mono, c in ours.terms.items():
        exps = {f"m{v[1]}{v[2]}": e for v, e in mono}
        key = tuple(exps.get(str(s), 0) for s in expected.gens)
        assert expected.as_dict()[key] == c


def test_mat_pf_4x4():
    pf = mat_pf(symbolic_matrix(4, skew=True))
    assert repr(pf) == "1*m12*m34 + -1*m13*m24 + 1*m14*m23"


def test_sparse_tensor_basics():
    t = SparseTensor((2, 2), {(0, 1): 3, (1, 0): 0})
    assert len(t) == 1 and t[0, 1] == 3 and t[1, 1] == 0
    assert (t - t).is_zero()
    assert t.permute_axes((1, 0))[1, 0] == 3
    with pytest.raises(ValueError):
        SparseTensor((2, 2), {(2, 0): 1})


def test_antisymmetrize_and_alternator():
    t = SparseTensor((3, 3, 3), {(0, 1, 2): 6}, base=0)
    a = antisymmetrize(t)
    assert is_alternating(a)
    assert a == alternator(3, base=0)
    assert antisymmetrize(a) == a
    with pytest.raises(ValueError):
        antisymmetrize(SparseTensor((2, 3), {}))


def test_alternator_entries():
    eps = alternator(4)
    assert len(eps) == 24
    assert eps[1, 2, 3, 4] == 1 and eps[2, 1, 3, 4] == -1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_echelon_coordinates_reconstruct(vectors, coeffs):
    basis = EchelonBasis()
    kept = []
    for label, v in enumerate(vectors):
        if basis.add(dict(enumerate(v)), label):
            kept.append(label)
    target = [sum(c * vectors[l][t] for c, l in zip(coeffs, kept)) for t in range(4)]
    coords = basis.coordinates(dict(enumerate(target)))
    rebuilt = [sum(coords.get(l, 0) * vectors[l][t] for l in kept) for t in range(4)]
    assert rebuilt == target


def test_echelon_outside_span():
    b = EchelonBasis()
    b.add({0: 1}, "x")
    with pytest.raises(ValueError):
        b.coordinates({1: 1})


def test_as_rational():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(2) == 2
