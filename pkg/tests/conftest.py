import numpy as np
import pytest

from invcentral.exact_math import ZERO
from invcentral.lie_algebras import make_g2, make_gl, make_so


def rep_image(elem):
    """Image of a U(g) element under the defining representation (independent of PBW)."""
    alg = elem.algebra
    n = alg.rep_dim
    out = np.full((n, n), ZERO, dtype=object)
    for mono, c in elem.terms.items():
        m = np.identity(n, dtype=object) * (ZERO + 1)
        for a in mono:
            m = m.dot(alg.rep_matrices[a])
        out = out + c * m
    return out


def is_scalar(mat):
    n = mat.shape[0]
    return all(mat[i, j] == (mat[0, 0] if i == j else 0) for i in range(n) for j in range(n))


@pytest.fixture(scope="session")
def g2():
    return make_g2()


@pytest.fixture(params=["gl3", "so4", "g2"])
def small_alg(request):
    name = request.param
    return {"gl3": lambda: make_gl(3), "so4": lambda: make_so(4), "g2": make_g2}[name]()
