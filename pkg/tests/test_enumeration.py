import itertools
from pathlib import Path

import pytest

from fsbasis.chains import compose
from fsbasis.checks import weights_of_level
from fsbasis.conditions import satisfies_dc_ic
from fsbasis.core import AlgebraParams, GuardExceeded, HighestWeight, InvalidInput, Monomial, Variable
from fsbasis.enumeration import (
    brute_force_dimensions,
    colored_partition_counts,
    colored_partitions,
    enumerate_basis,
    f_parameter,
    graded_dimensions,
    mu_monomial,
    periodicity_check,
)

from oracles import dimensions_by_paths

GOLDEN = Path(__file__).parent / "golden" / "characters.txt"


def M(text):
    return Monomial.parse(text)


def W(text):
    return HighestWeight.parse(text)


P11 = AlgebraParams(1, 1)


def test_enumerate_examples():
    basis = dict(enumerate_basis(P11, W("1,0"), 4))
    assert basis[4] == sorted([M("x[1,1](-4)"), M("x[1,1](-3); x[1,1](-1)")])
    assert basis[0] == [Monomial()]
    assert dict(enumerate_basis(P11, W("0,1"), 1))[1] == []


def test_enumerated_sets_match_filter():
    params = AlgebraParams(3, 2)
    w = W("1,0,1,0")
    for n, ms in enumerate_basis(params, w, 5):
        want = sorted(p for p in colored_partitions(params, n) if satisfies_dc_ic(p, params, w))
        assert ms == want
        assert all(Monomial.parse(str(p)) == p for p in ms)


def test_graded_dimension_examples():
    assert graded_dimensions(P11, W("1,0"), 6).to_list() == [1, 1, 1, 1, 2, 2, 3]
    assert graded_dimensions(P11, W("0,1"), 6).to_list() == [1, 0, 1, 1, 1, 1, 2]
    assert graded_dimensions(P11, W("2,0"), 0).to_list() == [1]
    with pytest.raises(InvalidInput):
        graded_dimensions(P11, W("1,0"), -1)


def test_brute_force_small_cases():
    assert brute_force_dimensions(P11, W("1,0"), 0).to_list() == [1]
    assert brute_force_dimensions(AlgebraParams(2, 1), W("1,0,0"), 5).to_list() == [1, 2, 2, 3, 6, 7]


def test_brute_force_guard():
    with pytest.raises(GuardExceeded):
        brute_force_dimensions(AlgebraParams(3, 2), W("1,0,0,0"), 30)
    with pytest.raises(GuardExceeded):
        brute_force_dimensions(P11, W("1,0"), 20, ceiling=10)


def test_colored_partition_counts_match_generator():
    params = AlgebraParams(2, 1)
    counts = colored_partition_counts(2, 7)
    assert counts == [sum(1 for _ in colored_partitions(params, n)) for n in range(8)]


def _golden():
    for line in GOLDEN.read_text().splitlines():
        key, _, values = line.partition(" : ")
        ell, m, *ks = map(int, key.split(","))
        yield ell, m, tuple(ks), [int(v) for v in values.split()]


@pytest.mark.parametrize("ell,m,ks,series", list(_golden()), ids=lambda x: str(x))
def test_golden_characters(ell, m, ks, series):
    got = graded_dimensions(AlgebraParams(ell, m), HighestWeight(ks), len(series) - 1)
    assert got.to_list() == series


def test_dp_matches_path_oracle():
    params = AlgebraParams(2, 2)
    for w in weights_of_level(2, 2):
        assert graded_dimensions(params, w, 6).to_list() == dimensions_by_paths(params, w, 6)


@pytest.mark.parametrize("ell,m,f", [(1, 1, 2), (2, 1, 3), (3, 2, 2), (3, 1, 4), (5, 3, 2), (5, 2, 3)])
def test_f_parameter(ell, m, f):
    assert f_parameter(AlgebraParams(ell, m)) == f


def test_mu_examples():
    assert mu_monomial(P11, W("1,0")) == M("x[1,1](-1)")
    assert mu_monomial(P11, W("0,1")) == M("x[1,1](-2)")
    assert mu_monomial(P11, W("1,1")) == M("x[1,1](-2); x[1,1](-1)")


@pytest.mark.parametrize("ell,m", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_mu_is_bounded_depth_maximum(ell, m):
    params = AlgebraParams(ell, m)
    f = f_parameter(params)
    variables = [Variable(c.i, c.j, r) for r in range(1, f + 1) for c in params.colors]
    for k in (1, 2):
        for w in weights_of_level(ell, k):
            best = Monomial()
            for exps in itertools.product(range(k + 1), repeat=len(variables)):
                p = Monomial((v, e) for v, e in zip(variables, exps) if e)
                if p > best and satisfies_dc_ic(p, params, w):
                    best = p
            assert mu_monomial(params, w) == best


def test_periodicity_examples():
    assert periodicity_check(M("x[1,1](-1)"), P11, W("1,0"))
    for w in (W("1,0"), W("0,1"), W("1,1")):
        assert periodicity_check(Monomial(), P11, w)
    with pytest.raises(InvalidInput):
        periodicity_check(M("x[1,1](-1)^2"), P11, W("1,0"))


@pytest.mark.parametrize("ell,m", [(1, 1), (2, 1), (3, 2)])
def test_recount_through_factorizations(ell, m):
    params = AlgebraParams(ell, m)
    n_max = 5
    level1 = {
        t: [p for _, ps in enumerate_basis(params, HighestWeight.fundamental(ell, t), n_max) for p in ps]
        for t in range(ell + 1)
    }
    for w in weights_of_level(ell, 2):
        tags = w.tags()
        products = {n: set() for n in range(n_max + 1)}
        for parts in itertools.product(*(level1[t] for t in tags)):
            n = -sum(p.degree for p in parts)
            if n <= n_max:
                prod, ok = compose(zip(tags, parts), params)
                assert ok
                products[n].add(prod)
        assert [len(products[n]) for n in range(n_max + 1)] == graded_dimensions(params, w, n_max).to_list()
