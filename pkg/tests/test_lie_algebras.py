import itertools

import numpy as np
import pytest
import sympy

from invcentral.lie_algebras import (
    LieVector, build_L, derivation_matrix, g2_generator, g2_matrix, index_action, jacobi_violations, make_algebra,
    make_g2, make_gl, make_so, representation_violations,
)
from invcentral.octonions import Octonion


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gl_dims(n):
    assert make_gl(n).dim == n * n


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_so_dims(n):
    assert make_so(n).dim == n * (n - 1) // 2


def test_g2_basis(g2):
    assert g2.dim == 14
    assert g2.basis_labels[:3] == ("G12", "G13", "G14")
    assert len(g2.metadata["basis_pairs"]) == 14


@pytest.mark.parametrize("name", ["gl2", "so4", "so5"])
def test_structure_constants_against_sympy(name):
    # oracle: solve each commutator in the basis with sympy linear algebra
    alg = make_algebra(name)
    mats = [sympy.Matrix(m.tolist()) for m in alg.rep_matrices]
    basis = sympy.Matrix.hstack(*[m.reshape(len(m), 1) for m in mats])
    for a, b in itertools.product(range(alg.dim), repeat=2):
        comm = mats[a] * mats[b] - mats[b] * mats[a]
        sol = basis.solve_least_squares(comm.reshape(len(comm), 1))
        assert basis * sol == comm.reshape(len(comm), 1)
        got = alg.bracket(alg.basis_vector(a), alg.basis_vector(b))
        assert list(got.coeffs) == [sympy.Rational(x) for x in sol]


def test_so3_bracket_sign():
    so3 = make_so(3)
    f12, f13, f23 = (so3.basis_vector(i) for i in range(3))
    assert so3.bracket(f12, f13) == -f23
    assert so3.bracket(f23, f12) == -f13


def test_g2_matrices_are_derivations(g2):
    units = [Octonion.unit(i) for i in range(1, 8)]

    def apply(mat, x):
        v = np.array(x.coords[1:], dtype=object)
        return Octonion((x.coords[0] * 0,) + tuple(mat.dot(v)))

    for m in g2.rep_matrices:
        for x, y in itertools.product(units, repeat=2):
            xy = x * y
            d_xy = apply(m, Octonion((0,) + xy.coords[1:]))  # D(1) = 0
            assert d_xy == apply(m, x) * y + x * apply(m, y)


def test_g2_other_selection_order():
    order = list(reversed(list(itertools.combinations(range(1, 8), 2))))
    alt = make_g2(order=order)
    assert alt.dim == 14
    assert alt.basis_labels != make_g2().basis_labels
    assert not jacobi_violations(alt) and not representation_violations(alt)


def test_derivation_matrix_rejects_real_part():
    with pytest.raises(ValueError):
        derivation_matrix(Octonion.unit(0), Octonion.unit(1))
    with pytest.raises(ValueError):
        g2_matrix(0, 1)


def test_coordinates_outside_algebra():
    so3 = make_so(3)
    with pytest.raises(ValueError):
        so3.coordinates(np.identity(3, dtype=object))


def test_make_algebra_names():
    assert make_algebra("so5") is make_algebra("so5")
    with pytest.raises(ValueError):
        make_algebra("sp4")
    with pytest.raises(ValueError):
        g2_generator(make_so(3), 1, 2)


def test_L_so_is_skew():
    so4 = make_so(4)
    L = build_L(so4)
    for i, j in itertools.product(range(1, 5), repeat=2):
        assert L[i, j] == -L[j, i]
    assert L[1, 2] == so4.basis_vector(so4.index("F12"))
    with pytest.raises(IndexError):
        L[0, 1]


def test_L_relations_hold(g2):
    for alg in (make_so(5), g2, make_gl(3)):
        for desc, res in build_L(alg).relation_residuals():
            assert res.is_zero(), desc
    assert len(build_L(g2).relations) == 28 + 7


def test_L_g2_matches_matrices(g2):
    L = build_L(g2)
    for i, j in itertools.product(range(1, 8), repeat=2):
        assert (g2.matrix_of(L[i, j]) == g2_matrix(i, j)).all()


def test_index_action_gl_is_adjoint():
    gl3 = make_gl(3)
    L = build_L(gl3)
    for a in range(gl3.dim):
        g = gl3.basis_vector(a)
        for i, j in itertools.product(range(1, 4), repeat=2):
            assert gl3.bracket(g, L[i, j]) == L.combine(index_action(gl3, g, i, j))


def test_lievector_arithmetic():
    v = LieVector.from_dict(3, {0: 1, 2: "1/2"})
    assert (v * 2 - v).coeffs == v.coeffs
    assert v.items() == [(0, 1), (2, sympy.Rational(1, 2))]
