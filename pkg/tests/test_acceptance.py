"""Acceptance criteria 1-9, each at its stated scale and exact tolerance.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

from math import comb

from fsbasis import checks
from fsbasis.core import AlgebraParams, HighestWeight
from fsbasis.enumeration import graded_dimensions
from fsbasis.relations import orbit_basis

UNIVERSE = [(1, 1), (2, 1), (2, 2), (3, 2)]
LEVEL_MAX = 3
DEPTH = 4  # total degree >= -4


def _report(res):
    print(f"{res.name}: {'PASS' if res.passed else 'FAIL'} over {res.cases} cases")
    assert res.passed, res.failures
    assert res.cases > 0


def test_criterion_1_dc_equivalence():
    _report(checks.dc_equivalence(UNIVERSE, LEVEL_MAX, DEPTH))


def test_criterion_2_chain_partition():
    _report(checks.chain_partitions(UNIVERSE, LEVEL_MAX, DEPTH))


def test_criterion_3_factorization():
    _report(checks.factorization(UNIVERSE, LEVEL_MAX, DEPTH))


def test_criterion_4_enumeration_vs_brute_force():
    _report(checks.enumeration_vs_brute([(1, 1), (2, 1), (3, 2)], 3, 10))


def test_criterion_5_andrews_gordon():
    got = graded_dimensions(AlgebraParams(1, 1), HighestWeight((1, 0)), 10).to_list()
    assert got == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
    _report(checks.andrews_gordon(3, 20))


def test_criterion_6_leading_terms():
    _report(checks.leading_terms([(2, 1), (3, 2)], 2, 6))


def test_criterion_7_relations():
    triples = [(2, 1, 1), (2, 1, 2), (3, 2, 1), (2, 2, 2)]
    for ell, m, k in triples:
        assert len(orbit_basis(AlgebraParams(ell, m), k)) == comb(m + k, k + 1) * comb(ell - m + 1 + k, k + 1)
    _report(checks.relations(triples))


def test_criterion_8_periodicity():
    _report(checks.periodicity(8, [(1, 1), (2, 1), (3, 2)], 2, 6))


def test_criterion_9_order_laws():
    _report(checks.order_laws(UNIVERSE, 10**4, seed=20240101))
