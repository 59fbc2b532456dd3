import itertools
import json
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import is_scalar, rep_image
from invcentral.central import (
    casimir, det_family, double_determinant, g2_det_check, g2_G, pf_square_constant, pfaffian_family,
)
from invcentral.lie_algebras import make_g2, make_gl, make_so
from invcentral.uea import UEAElement, is_central_bruteforce

GOLDEN = Path(__file__).parent / "golden"


def test_so3_casimir_golden():
    doc = json.loads((GOLDEN / "so3_casimir.json").read_text())
    assert casimir(make_so(3)).element.to_json() == doc


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_casimir_so(n):
    rep = casimir(make_so(n))
    assert rep.centrality
    assert rep.metadata["element_terms"] == n * (n - 1) // 2
    assert rep.element == pfaffian_family(make_so(n), k=1).element


def test_casimir_g2():
    rep = casimir(make_g2())
    assert rep.centrality and rep.element.degree() == 2
    assert rep.element == g2_G([2], [2]).element


def test_casimir_other_algebras_rejected():
    with pytest.raises(ValueError):
        casimir(make_gl(2))


def test_det_family_gl2_explicit():
    gl2 = make_gl(2)
    rep = det_family(gl2, 2)
    assert rep.centrality
    i = gl2.index
    # sym(E11 E22) - sym(E12 E21) in normal form
    expected = UEAElement(gl2, {(i("E11"), i("E22")): 1, (i("E12"), i("E21")): -1,
                                (i("E11"),): Fraction(1, 2), (i("E22"),): Fraction(-1, 2)})
    assert rep.element == expected
    assert rep.metadata["double_determinant_agrees"]


def test_double_determinant_equals_symmetrized_det():
    gl3 = make_gl(3)
    assert double_determinant(gl3, [1, 2, 3]) == det_family(gl3, 3).element


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_det_family_gl_central_and_scalar(n, k):
    rep = det_family(make_gl(n), k)
    assert rep.centrality
    assert is_scalar(rep_image(rep.element))


def test_det_family_bounds():
    with pytest.raises(ValueError):
        det_family(make_gl(3), 4)
    with pytest.raises(ValueError):
        det_family(make_g2(), 2)


def test_pfaffian_family():
    so4 = make_so(4)
    rep = pfaffian_family(so4, full=True)
    i = so4.index
    assert rep.element == UEAElement(so4, {(i("F12"), i("F34")): 1, (i("F13"), i("F24")): -1,
                                           (i("F14"), i("F23")): 1})
    assert rep.centrality
    assert pfaffian_family(make_so(6), full=True).element.degree() == 3
    assert pfaffian_family(make_so(5), k=2).centrality
    with pytest.raises(ValueError):
        pfaffian_family(make_so(5), full=True)
    with pytest.raises(ValueError):
        pfaffian_family(make_so(5), k=3)
    with pytest.raises(ValueError):
        pfaffian_family(make_gl(4), full=True)


def test_pf_square_constant_is_derived():
    res = pf_square_constant(4)
    assert res["ratio"] == 1
    # the honest U(g) square is not the symmetrized det: it differs in degree 2
    assert res["product_square_ratio"] is None
    assert res["product_square_difference"].degree() == 2


def test_reports_pass_brute_force_check():
    for rep in (casimir(make_so(4)), pfaffian_family(make_so(4), full=True), det_family(make_gl(2), 2)):
        assert is_central_bruteforce(rep.element.algebra, rep.element).ok == rep.centrality.ok


def test_g2_degree_three_vanishes():
    rep = g2_G([3], [3])
    assert rep.centrality and rep.metadata["vanishes"]


def test_g2_degree_four_is_polynomial_in_casimir():
    g2 = make_g2()
    rep = g2_G([4], [4])
    assert rep.centrality and rep.element.degree() == 4
    c = casimir(g2).element
    assert rep.element == c * 144 + (c * c) * Fraction(3, 2)
    assert rep.metadata["casimir_coordinates"] == {"1": "144", "2": "3/2"}


def test_g2_order5_is_zero():
    with pytest.warns(UserWarning):
        rep = g2_G([5], [5])
    assert rep.element.is_zero() and rep.centrality


def test_g2_groups_constraint():
    with pytest.raises(ValueError, match="both indices"):
        g2_G([2], [2], groups=[[("i", 1), ("j", 1)], [("i", 2), ("j", 2)]])
    rep = g2_G([3], [3], groups=[[("i", 1), ("i", 2), ("j", 3)], [("j", 1), ("j", 2), ("i", 3)]])
    assert rep.centrality


def test_g2_basis_choice_does_not_matter():
    order = list(reversed(list(itertools.combinations(range(1, 8), 2))))
    alt = make_g2(order=order)
    assert casimir(alt).centrality
    assert g2_G([4], [4], alg=alt).centrality


def test_g2_det_check_polynomial():
    v = g2_det_check()
    assert v
    assert v.details["constant"] == "5040"
    assert v.details["det_invariant"] and v.details["skew_det_vanishes"]


def test_g2_det_spot_needs_opt_in():
    with pytest.raises(ValueError, match="allow_long"):
        g2_det_check("spot")
    with pytest.raises(ValueError):
        g2_det_check("numeric")


def test_report_json():
    rep = det_family(make_gl(2), 2)
    doc = rep.to_json(timing=False)
    assert "wall_time" not in doc["metadata"]
    assert doc["central"] and doc["algebra"] == "gl2"
    assert "wall_time" in rep.to_json()["metadata"]
