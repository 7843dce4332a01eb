import pytest

from fsbasis.checks import universe, weights_of_level
from fsbasis.conditions import (
    DiagonalPath,
    diagonal_paths,
    find_dc_violation,
    find_ic_violation,
    leading_term,
    max_dc_sum,
    satisfies_dc,
    satisfies_dc_by_paths,
    satisfies_dc_ic,
    satisfies_ic,
    satisfies_ic_by_paths,
)
from fsbasis.core import AlgebraParams, Color, HighestWeight, InvalidInput, Monomial

from oracles import antichain_by_subsets


def M(text):
    return Monomial.parse(text)


def test_diagonal_paths_examples():
    assert [p.pairs for p in diagonal_paths(AlgebraParams(1, 1), 2)] == [((1, 1),)]
    assert {p.pairs for p in diagonal_paths(AlgebraParams(2, 1), 1)} == {((1, 1),), ((1, 2),)}
    two = {p.pairs for p in diagonal_paths(AlgebraParams(2, 1), 2)}
    assert two == {((1, 1),), ((1, 2),), ((1, 2), (1, 1))}


def test_diagonal_paths_unique():
    paths = [p.pairs for p in diagonal_paths(AlgebraParams(3, 2), 3)]
    assert len(paths) == len(set(paths))


def test_path_validation():
    with pytest.raises(InvalidInput):
        DiagonalPath((2, 1), (1, 1))
    with pytest.raises(InvalidInput):
        DiagonalPath((1,), (1, 2))
    with pytest.raises(InvalidInput):
        list(diagonal_paths(AlgebraParams(1, 1), 0))


def test_dc_examples():
    w = find_dc_violation(M("x[1,1](-1)^2"), 1)
    assert w.to_dict() == {"r": 1, "s": 0, "path": [[1, 1]], "lhs": 2, "bound": 1}
    assert satisfies_dc(M("x[1,1](-2); x[1,2](-1)"), 1)
    w = find_dc_violation(M("x[1,2](-2); x[1,1](-1)"), 1)
    assert w is not None and w.lhs == 2
    deep, shallow = w.path.colors(w.split)
    assert deep == (Color(1, 2),) and shallow == (Color(1, 1),)
    with pytest.raises(InvalidInput):
        satisfies_dc(Monomial(), 0)


def test_witness_path_reproduces_sum():
    p = M("x[2,2](-2)^1; x[1,3](-2)^1; x[2,3](-1)^2; x[1,2](-1)")
    w = find_dc_violation(p, 2)
    deep, shallow = w.path.colors(w.split)
    lhs = sum(p.layer(w.r + 1).get(c, 0) for c in deep) + sum(p.layer(w.r).get(c, 0) for c in shallow)
    assert lhs == w.lhs > w.bound
    assert w.path.is_admissible(w.split)


def test_consecutive_distinctness_is_on_colors():
    # The only path through these three colors repeats an index pair, so
    # distinctness on index pairs would hide a size-3 antichain at level 2.
    params = AlgebraParams(3, 2)
    p = M("x[1,2](-1); x[1,3](-1); x[2,3](-1)")
    assert antichain_by_subsets(p) == 3
    path = DiagonalPath((1, 1, 2), (3, 3, 2))
    assert path.colors(0)[1] == (Color(1, 2), Color(1, 3), Color(2, 3))
    assert path.pairs[0] == path.pairs[1]
    assert path.is_admissible(0)
    assert not satisfies_dc(p, 2)
    assert not satisfies_dc_by_paths(p, 2, params)


def test_ic_examples():
    w = HighestWeight.parse("0,1,1")
    v = find_ic_violation(M("x[1,2](-1)"), w)
    assert v is not None and v.bound == 0 and v.lhs == 1
    assert satisfies_ic(Monomial(), w)
    with pytest.raises(InvalidInput):
        satisfies_ic(M("x[1,1](0)"), w)


def test_ic_implied_by_dc_for_multiples_of_l0():
    for ell, m in [(1, 1), (2, 1), (3, 2)]:
        params = AlgebraParams(ell, m)
        for k in (1, 2):
            w = HighestWeight((k,) + (0,) * ell)
            for p in universe(params, 4, k + 1):
                if satisfies_dc(p, k):
                    assert satisfies_ic(p, w)


def test_dc_ic_examples():
    p11 = AlgebraParams(1, 1)
    assert not satisfies_dc_ic(M("x[1,1](-1)^2"), p11, HighestWeight.parse("1,1"))
    assert satisfies_dc_ic(M("x[1,1](-3); x[1,1](-2); x[1,1](-1)"), p11, HighestWeight.parse("2,0"))
    assert satisfies_dc_ic(Monomial(), p11, HighestWeight.parse("0,1"))


def test_ic_paths_route_agrees():
    for ell, m in [(2, 1), (3, 2)]:
        params = AlgebraParams(ell, m)
        for w in weights_of_level(ell, 2):
            for p in universe(params, 3, 3):
                assert satisfies_ic(p, w) == satisfies_ic_by_paths(p, w, params)


def test_monotonicity():
    params = AlgebraParams(3, 2)
    w = HighestWeight.parse("1,0,1,0")
    for p in universe(params, 4, 3):
        if satisfies_dc_ic(p, params, w):
            for v, e in p.items():
                smaller = Monomial({**dict(p.items()), v: e - 1})
                assert satisfies_dc_ic(smaller, params, w)


def test_leading_term_examples():
    assert leading_term([1, 1], [2, 2], 2, 1, AlgebraParams(2, 1)) == M("x[1,2](-1)^2")
    assert leading_term([1, 2], [3, 2], 2, 1, AlgebraParams(3, 2)) == M("x[2,3](-1); x[1,2](-1)")
    assert leading_term([1, 2], [3, 2], 3, 1, AlgebraParams(3, 2)) == M("x[1,3](-2); x[2,2](-1)")


@pytest.mark.parametrize("args", [([1], [2, 2], 2, 1), ([1, 1], [2, 2], 1, 1), ([2, 1], [2, 2], 2, 1),
                                  ([1, 1], [1, 2], 2, 1), ([1, 1], [2, 2], 2, 0)])
def test_leading_term_rejects(args):
    with pytest.raises(InvalidInput):
        leading_term(*args)


def test_leading_term_reaches_the_bound():
    lt = leading_term([1, 1, 2], [3, 2, 2], 7, 2, AlgebraParams(3, 2))
    assert max_dc_sum(lt) == 3 and not satisfies_dc(lt, 2)
