"""Invariant sweeps shared by ``selfcheck`` and the acceptance tests.

Each sweep returns a ``SweepResult`` with the number of cases examined and
the first failure found, so callers decide how loudly to report it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .chains import (
    chain_partition,
    compose,
    factorize,
    max_antichain,
    max_antichain_exhaustive,
    sq_less,
)
from .conditions import (
    leading_term,
    max_dc_sum,
    satisfies_dc,
    satisfies_dc_by_paths,
    satisfies_dc_ic,
    satisfies_ic,
)
from .core import (
    AlgebraParams,
    HighestWeight,
    Monomial,
    Variable,
    augment,
    color_less,
    monomial_less,
    variable_less,
)
from .enumeration import (
    brute_force_dimensions,
    colored_partitions,
    enumerate_basis,
    f_parameter,
    graded_dimensions,
    periodicity_check,
)
from .relations import (
    expected_support,
    orbit_basis,
    orbit_dimension_formula,
    raise_op,
    span_dimension,
    top_vector,
    verify_relation_support,
)
from .series import ag_series


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, detail) -> None:
        if len(self.failures) < 5:
            self.failures.append(detail)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": [str(f) for f in self.failures]}


def weights_of_level(ell: int, k: int) -> list[HighestWeight]:
    """Every ``k0*L0 + ... + k_ell*L_ell`` with ``k0 + ... + k_ell = k``."""
    out = []
    for bars in combinations(range(k + ell), ell):
        parts, prev = [], -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(k + ell - prev - 1)
        out.append(HighestWeight(tuple(parts)))
    return out


def universe(params: AlgebraParams, n_max: int, max_exp: int) -> Iterator[Monomial]:
    """Monomials of total degree ``-1 .. -n_max`` with every exponent ``<= max_exp``."""
    for n in range(1, n_max + 1):
        for p in colored_partitions(params, n):
            if all(e <= max_exp for _, e in p.items()):
                yield p


# --- criteria 1-3 -----------------------------------------------------------


def dc_equivalence(configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("dc-equivalence")
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            weights = weights_of_level(ell, k)
            for p in universe(params, n_max, k + 1):
                res.cases += 1
                by_paths = satisfies_dc_by_paths(p, k, params)
                by_dp = satisfies_dc(p, k)
                width = max_antichain(p)[0]
                if max_antichain_exhaustive(p)[0] != width:
                    res.fail(("antichain routes differ", ell, m, str(p)))
                if not by_paths == by_dp == (width <= k):
                    res.fail(("dc routes differ", ell, m, k, str(p), by_paths, by_dp, width))
                for w in weights:
                    aug = satisfies_dc(augment(p, params, w), k)
                    if aug != (by_dp and satisfies_ic(p, w)):
                        res.fail(("augmentation", ell, m, str(w), str(p)))
    return res


def chain_partitions(configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("chain-partition")
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            for p in universe(params, n_max, k + 1):
                width = max_antichain(p)[0]
                for method in ("inductive", "matching"):
                    res.cases += 1
                    chains = chain_partition(p, k, method)
                    if width > k:
                        if chains is not None:
                            res.fail(("partition past the level", method, str(p)))
                        continue
                    if chains is None or len(chains) != width:
                        res.fail(("wrong chain count", method, str(p), width))
                        continue
                    prod = Monomial()
                    for ch in chains:
                        prod = prod * ch.monomial()
                        if not satisfies_dc(ch.monomial(), 1):
                            res.fail(("chain fails level-1 DC", method, str(ch.monomial())))
                    if prod != p:
                        res.fail(("chains do not multiply back", method, str(p)))
    return res


def factorization(configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("factorization")
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            for w in weights_of_level(ell, k):
                for p in universe(params, n_max, k + 1):
                    res.cases += 1
                    ok = satisfies_dc_ic(p, params, w)
                    for method in ("inductive", "matching"):
                        fact = factorize(p, params, w, method)
                        if (fact is not None) != ok:
                            res.fail(("factorize domain", method, str(w), str(p)))
                            continue
                        if fact is None:
                            continue
                        prod, valid = compose(fact.parts, params)
                        if prod != p or not valid or fact.tags() != w.tags():
                            res.fail(("bad factors", method, str(w), str(p)))
        res.cases += _compose_sweep(params, k_max, n_max, res)
    return res


def _compose_sweep(params: AlgebraParams, k_max: int, n_max: int, res: SweepResult) -> int:
    by_tag = {}
    for t in range(params.ell + 1):
        w = HighestWeight.fundamental(params.ell, t)
        by_tag[t] = [Monomial()] + [
            p for p in universe(params, n_max, 2) if satisfies_dc_ic(p, params, w)
        ]
    cases = 0
    for k in range(2, k_max + 1):
        for w in weights_of_level(params.ell, k):
            tags = w.tags()
            for parts in _families(by_tag, tags, n_max):
                cases += 1
                prod, valid = compose(zip(tags, parts), params)
                if not valid or not satisfies_dc_ic(prod, params, w):
                    res.fail(("compose unsound", str(w), [str(p) for p in parts]))
    return cases


def _families(by_tag, tags, n_max):
    def rec(a, budget, acc):
        if a == len(tags):
            yield list(acc)
            return
        for p in by_tag[tags[a]]:
            d = -p.degree
            if d <= budget:
                acc.append(p)
                yield from rec(a + 1, budget - d, acc)
                acc.pop()

    yield from rec(0, n_max, [])


# --- criteria 4-5 -----------------------------------------------------------


def enumeration_vs_brute(configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("enumeration-vs-brute-force")
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            for w in weights_of_level(ell, k):
                res.cases += 1
                a = graded_dimensions(params, w, n_max)
                b = brute_force_dimensions(params, w, n_max)
                if a != b:
                    res.fail((ell, m, str(w), str(a), str(b)))
    return res


def andrews_gordon(k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("andrews-gordon")
    params = AlgebraParams(1, 1)
    for k in range(1, k_max + 1):
        for w in weights_of_level(1, k):
            res.cases += 1
            a = graded_dimensions(params, w, n_max)
            b = ag_series(k, w[0] + 1, n_max)
            if a != b:
                res.fail((str(w), str(a), str(b)))
    return res


# --- criterion 6 ------------------------------------------------------------


def _multiset_monomials(rows, cols, n) -> Iterator[Monomial]:
    """All monomials pairing ``rows`` with ``cols`` whose degrees sum to ``-n``."""
    from itertools import permutations

    size = len(rows)
    degree_vectors = []

    def parts(rem, slots, acc):
        if slots == 0:
            if rem == 0:
                degree_vectors.append(tuple(acc))
            return
        for d in range(1, rem - slots + 2):
            acc.append(d)
            parts(rem - d, slots - 1, acc)
            acc.pop()

    parts(n, size, [])
    seen = set()
    for perm in set(permutations(cols)):
        for ds in degree_vectors:
            p = Monomial.from_factors(Variable(i, j, d) for i, j, d in zip(rows, perm, ds))
            if p not in seen:
                seen.add(p)
                yield p


def leading_terms(configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("leading-terms")
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            for rows in combinations_with_replacement(params.rows, k + 1):
                for cols_up in combinations_with_replacement(params.cols, k + 1):
                    cols = tuple(reversed(cols_up))
                    for n in range(k + 1, n_max + 1):
                        res.cases += 1
                        lt = leading_term(rows, cols, n, k, params)
                        least = min(_multiset_monomials(rows, cols, n))
                        if lt != least:
                            res.fail(("not minimal", ell, m, rows, cols, n, str(lt), str(least)))
                        if max_dc_sum(lt) != k + 1:
                            res.fail(("sum not k+1", ell, m, rows, cols, n, str(lt)))
    return res


# --- criterion 7 ------------------------------------------------------------


def relations(triples) -> SweepResult:
    res = SweepResult("relations")
    for ell, m, k in triples:
        params = AlgebraParams(ell, m)
        res.cases += 1
        basis = orbit_basis(params, k)
        want = orbit_dimension_formula(params, k)
        if len(basis) != want or span_dimension(params, k) != want:
            res.fail(("dimension", ell, m, k, len(basis), want))
        for rep in verify_relation_support(params, k):
            if not rep.ok:
                res.fail(("label", ell, m, k, rep.to_dict()))
        for (rows, cols), v in basis.items():
            if set(v.terms) != expected_support(params, rows, cols):
                res.fail(("support", ell, m, k, rows, cols))
        top = top_vector(params, k)
        for idx in range(1, ell + 1):
            if idx != m and raise_op(params, idx, top):
                res.fail(("top vector not annihilated", ell, m, k, idx))
    return res


# --- criterion 8 ------------------------------------------------------------


def periodicity(ell_max: int, configs, k_max: int, n_max: int) -> SweepResult:
    res = SweepResult("periodicity")
    for ell in range(1, ell_max + 1):
        for m in range(1, ell + 1):
            res.cases += 1
            f = f_parameter(AlgebraParams(ell, m))
            if (ell + 1) % f:
                res.fail(("f does not divide ell+1", ell, m, f))
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        for k in range(1, k_max + 1):
            for w in weights_of_level(ell, k):
                for _, monomials in enumerate_basis(params, w, n_max):
                    for p in monomials:
                        res.cases += 1
                        if not periodicity_check(p, params, w):
                            res.fail((ell, m, str(w), str(p)))
    return res


# --- criterion 9 ------------------------------------------------------------


def random_monomial(rng: random.Random, params: AlgebraParams, max_depth: int, max_len: int) -> Monomial:
    colors = params.colors
    size = rng.randint(0, max_len)
    return Monomial.from_factors(
        Variable(*rng.choice(colors), rng.randint(1, max_depth)) for _ in range(size)
    )


def _strict_order(less, a, b, c) -> str | None:
    if less(a, a):
        return "irreflexivity"
    if less(a, b) and less(b, a):
        return "asymmetry"
    if less(a, b) and less(b, c) and not less(a, c):
        return "transitivity"
    return None


def order_laws(configs, samples: int, seed: int = 0) -> SweepResult:
    res = SweepResult("order-laws")
    rng = random.Random(seed)
    for ell, m in configs:
        params = AlgebraParams(ell, m)
        colors = list(params.colors)
        for a, b, c in ((x, y, z) for x in colors for y in colors for z in colors):
            why = _strict_order(color_less, a, b, c)
            if why:
                res.fail(("color", why, a, b, c))
        for _ in range(samples):
            res.cases += 1
            p, q, s = (random_monomial(rng, params, 4, 6) for _ in range(3))
            why = _strict_order(monomial_less, p, q, s)
            if why:
                res.fail(("monomial", why, str(p), str(q), str(s)))
            if sum([monomial_less(p, q), monomial_less(q, p), p == q]) != 1:
                res.fail(("monomial trichotomy", str(p), str(q)))
            u, v, x = (Variable(*rng.choice(colors), rng.randint(1, 4)) for _ in range(3))
            for less, tag in ((variable_less, "variable"), (sq_less, "sq")):
                why = _strict_order(less, u, v, x)
                if why:
                    res.fail((tag, why, u, v, x))
            lo1, hi1 = sorted((p, q))
            lo2, hi2 = sorted((q, s))
            prod_lo, prod_hi = lo1 * lo2, hi1 * hi2
            if monomial_less(prod_hi, prod_lo):
                res.fail(("product compatibility", str(p), str(q), str(s)))
            strict = monomial_less(lo1, hi1) or monomial_less(lo2, hi2)
            if strict and not monomial_less(prod_lo, prod_hi):
                res.fail(("strict product compatibility", str(p), str(q), str(s)))
    return res


def selfcheck() -> list[SweepResult]:
    """Reduced-scale run of every sweep."""
    small = [(1, 1), (2, 1)]
    return [
        dc_equivalence(small, 2, 3),
        chain_partitions(small, 2, 3),
        factorization(small, 2, 3),
        enumeration_vs_brute(small, 2, 6),
        andrews_gordon(2, 10),
        leading_terms([(2, 1)], 1, 4),
        relations([(2, 1, 1), (3, 2, 1)]),
        periodicity(4, [(1, 1), (2, 1)], 1, 4),
        order_laws(small, 200),
    ]
