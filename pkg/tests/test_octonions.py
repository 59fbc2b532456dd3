import itertools
import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from invcentral.exact_math import alternator
from invcentral.octonions import (
    Octonion, associator, basis_table, commutator, fano_triples, omega3, omega_chain, omega_skew,
    omega_table_lines, table_fingerprint,
)

GOLDEN = json.loads((Path(__file__).parent / "golden" / "octonion_table.json").read_text())

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
octonions = st.lists(rationals, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


def fano_product(i, j):
    """Unit product from oriented lines alone: e_a e_b = e_c along (a, b, c)."""
    if i == 0:
        return j, 1
    if j == 0:
        return i, 1
    if i == j:
        return 0, -1
    for line in GOLDEN["fano_triples"]:
        for a, b, c in (line, line[1:] + line[:1], line[2:] + line[:2]):
            if (a, b) == (i, j):
                return c, 1
            if (b, a) == (i, j):
                return c, -1
    raise AssertionError((i, j))


def test_table_matches_golden():
    tab = basis_table()
    assert [list(t) for t in fano_triples()] == GOLDEN["fano_triples"]
    assert [[i, j, *tab[i, j]] for i in range(8) for j in range(8)] == GOLDEN["products"]
    assert table_fingerprint() == GOLDEN["fingerprint"]


def test_doubling_agrees_with_fano_lines():
    tab = basis_table()
    for i, j in itertools.product(range(8), repeat=2):
        assert tab[i, j] == fano_product(i, j)


def test_unit_products():
    e = Octonion.unit
    assert e(1) * e(2) == e(3)
    assert e(2) * e(1) == -e(3)
    assert e(5) * e(5) == -e(0)
    with pytest.raises(ValueError):
        Octonion.unit(8)


@settings(max_examples=40, deadline=None)
@given(octonions, octonions, octonions)
def test_alternative_laws_and_moufang(x, y, z):
    assert associator(x, x, y) == Octonion.zero()
    assert associator(y, x, x) == Octonion.zero()
    assert z * (x * (z * y)) == ((z * x) * z) * y
    assert (x * y).norm() == x.norm() * y.norm()


def test_not_associative_nor_commutative():
    e = Octonion.unit
    assert associator(e(1), e(2), e(4)) != Octonion.zero()
    assert commutator(e(1), e(2)) == e(3) * 2


def test_conjugate_and_norm():
    x = Octonion((1, 2, 0, 0, 0, 0, 0, Fraction(1, 2)))
    assert x * x.conjugate() == Octonion((x.norm(),) + (0,) * 7)
    assert x.norm() == Fraction(21, 4)


def test_omega3_is_structure_constants():
    om = omega3()
    assert len(om.nonzero()) == 42
    tab = basis_table()
    for (i, j, k), v in om.nonzero():
        assert tab[i, j] == (k, v)


def test_omega_orders():
    assert omega_skew(3).tensor == omega3().tensor.scale(-1)
    assert len(omega_skew(4).nonzero()) == 7 * 24
    assert omega_skew(5).is_zero() and omega_skew(6).is_zero()
    assert omega_skew(5).scale is None
    assert omega_skew(7).tensor == alternator(7).scale(-1)
    assert omega_skew(2).tensor[1, 1] == -1 and len(omega_skew(2).nonzero()) == 7


def test_omega4_support_is_complement_of_lines():
    lines = {frozenset(t) for t in fano_triples()}
    quads = {frozenset(idx) for idx, _ in omega_skew(4).nonzero()}
    assert quads == {frozenset(range(1, 8)) - l for l in lines}


def test_omega_chain_k3_brute_force():
    tab = basis_table()
    chain = omega_chain(3)
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        u, s = tab[i, j]
        w, s2 = tab[u, k]
        assert chain[i, j, k] == (s * s2 if w == 0 else 0)


def test_omega_bad_order():
    with pytest.raises(ValueError):
        omega_skew(8)


def test_omega_table_lines():
    lines = [json.loads(l) for l in omega_table_lines(3)]
    assert len(lines) == 42
    assert lines[0] == {"idx": [1, 2, 3], "val": -1}


def test_str():
    assert str(Octonion.unit(7) * 2) == "2*e7"
    assert str(Octonion.zero()) == "0"
