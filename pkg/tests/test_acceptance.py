"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import time

import pytest

from invcentral.acceptance import CRITERIA


@pytest.fixture
def check(capsys):
    def run(cid, **kwargs):
        _check(cid, capsys, **kwargs)
    return run


def _check(cid, capsys, **kwargs):
    title, fn, limit = CRITERIA[cid]
    t0 = time.perf_counter()
    v = fn(**kwargs)
    dt = time.perf_counter() - t0
    ok = v.ok and dt < limit
    with capsys.disabled():
        print(f"\ncriterion {cid} ({title}): {'PASS' if ok else 'FAIL'} in {dt:.2f} s (limit {limit} s)")
    assert v.ok, v.witness
    assert dt < limit


def test_criterion_01_structure_soundness(check):
    check(1)


def test_criterion_02_equivariance_of_L(check):
    check(2)


def test_criterion_03_octonion_convention(check):
    check(3)


def test_criterion_04_g2_linear_relation(check):
    check(4)


def test_criterion_05_m_invariance(check):
    check(5)


def test_criterion_06_symmetrization_equivariance(check):
    check(6)


def test_criterion_07_centrality(check):
    check(7)


def test_criterion_08_pfaffian_relations(check):
    check(8)


def test_criterion_09_graph_compiler(check):
    check(9)


def test_criterion_10_oracle_equivalence(check):
    # compares thread counts 1 and 4 internally
    check(10)


def test_criterion_11_g2_degree_seven(check):
    check(11)


def test_criterion_11_spot_check(check):
    check(11, spot=True)
