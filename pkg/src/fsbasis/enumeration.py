"""Graded enumeration of DC+IC monomials and the quasi-periodicity data.

Difference conditions only couple adjacent degrees, so admissible monomials
are sequences of per-degree exponent vectors ("layers") in which every
neighbouring pair is compatible.  The degree-0 augmentation block acts as
layer 0 and turns initial conditions into one more compatibility test.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from math import gcd
from typing import Iterator

from .conditions import _cells, max_pair_sum, satisfies_dc_ic
from .core import (
    AlgebraParams,
    GuardExceeded,
    HighestWeight,
    InvalidInput,
    InvariantViolation,
    Monomial,
    Variable,
    degree_zero_block,
    shift_down,
)
from .series import QSeries, inverse, mul, qpochhammer

BRUTE_FORCE_CEILING = 10**7


class _Layers:
    """Admissible layers and their pairwise compatibility for one (params, k)."""

    def __init__(self, params: AlgebraParams, k: int):
        self.params = params
        self.k = k
        self.colors = params.colors
        self.layers = [
            v for v in cartesian(range(k + 1), repeat=len(self.colors))
            if max_pair_sum((), self.cells(v))[0] <= k
        ]
        self.size = {v: sum(v) for v in self.layers}
        self._compat: dict[tuple, bool] = {}

    def cells(self, v: tuple[int, ...]):
        return _cells({c: e for c, e in zip(self.colors, v) if e})

    def compatible(self, deep, shallow) -> bool:
        key = (deep, shallow)
        ok = self._compat.get(key)
        if ok is None:
            ok = max_pair_sum(self.cells(deep), self.cells(shallow))[0] <= self.k
            self._compat[key] = ok
        return ok


@lru_cache(maxsize=64)
def _layers(params: AlgebraParams, k: int) -> _Layers:
    return _Layers(params, k)


class _Counter:
    def __init__(self, params: AlgebraParams, weight: HighestWeight):
        weight.check(params)
        self.lay = _layers(params, weight.level)
        block = degree_zero_block(params, weight).layer(0)
        self.zero = tuple(block.get(c, 0) for c in self.lay.colors)
        self.empty = tuple(0 for _ in self.lay.colors)
        self._memo: dict[tuple, int] = {}

    def count(self, r: int, prev: tuple, rem: int) -> int:
        """Ways to fill degrees ``r, r+1, ...`` with weight ``rem`` above layer ``prev``."""
        if rem == 0:
            return 1
        if r > rem:
            return 0
        key = (r, prev, rem)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        lay = self.lay
        total = 0
        for v in lay.layers:
            cost = r * lay.size[v]
            if cost <= rem and lay.compatible(v, prev):
                total += self.count(r + 1, v, rem - cost)
        self._memo[key] = total
        return total

    def walk(self, r: int, prev: tuple, rem: int, acc: list) -> Iterator[list]:
        if rem == 0:
            yield acc
            return
        lay = self.lay
        for v in lay.layers:
            cost = r * lay.size[v]
            if cost <= rem and lay.compatible(v, prev) and self.count(r + 1, v, rem - cost):
                acc.append((r, v))
                yield from self.walk(r + 1, v, rem - cost, acc)
                acc.pop()

    def monomial(self, layers: list) -> Monomial:
        colors = self.lay.colors
        return Monomial(
            (Variable(c.i, c.j, r), e) for r, v in layers for c, e in zip(colors, v) if e
        )


def graded_dimensions(params: AlgebraParams, weight: HighestWeight, n_max: int) -> QSeries:
    """Number of DC+IC monomials of degree ``-n`` for ``n = 0..n_max``."""
    if n_max < 0:
        raise InvalidInput("n_max must be nonnegative")
    ctr = _Counter(params, weight)
    return QSeries(tuple(ctr.count(1, ctr.zero, n) for n in range(n_max + 1)))


def enumerate_basis(
    params: AlgebraParams, weight: HighestWeight, n_max: int
) -> Iterator[tuple[int, list[Monomial]]]:
    """Yield ``(n, monomials)`` for each degree ``-n``, monomials ascending."""
    if n_max < 0:
        raise InvalidInput("n_max must be nonnegative")
    ctr = _Counter(params, weight)
    for n in range(n_max + 1):
        found = [ctr.monomial(ls) for ls in ctr.walk(1, ctr.zero, n, [])]
        yield n, sorted(found)


def colored_partition_counts(num_colors: int, n_max: int) -> list[int]:
    """Coefficients of ``1 / (q;q)_inf^num_colors`` up to ``q^n_max``."""
    inv = inverse(qpochhammer(n_max, n_max), n_max)
    out = [1] + [0] * n_max
    for _ in range(num_colors):
        out = mul(out, inv, n_max)
    return out


def colored_partitions(params: AlgebraParams, n: int) -> Iterator[Monomial]:
    """Every monomial of degree ``-n`` over the colors of ``params``."""
    variables = [Variable(c.i, c.j, r) for r in range(n, 0, -1) for c in params.colors]

    def rec(idx: int, rem: int, acc: list):
        if rem == 0:
            yield Monomial(acc)
            return
        if idx == len(variables):
            return
        v = variables[idx]
        for e in range(rem // v.r, -1, -1):
            if e:
                acc.append((v, e))
            yield from rec(idx + 1, rem - e * v.r, acc)
            if e:
                acc.pop()

    yield from rec(0, n, [])


def brute_force_dimensions(
    params: AlgebraParams, weight: HighestWeight, n_max: int, ceiling: int = BRUTE_FORCE_CEILING
) -> QSeries:
    """Same as ``graded_dimensions``, by filtering every colored partition."""
    if n_max < 0:
        raise InvalidInput("n_max must be nonnegative")
    weight.check(params)
    candidates = sum(colored_partition_counts(len(params.colors), n_max))
    if candidates > ceiling:
        raise GuardExceeded(f"{candidates} candidates exceed the ceiling {ceiling}")
    return QSeries(tuple(
        sum(1 for p in colored_partitions(params, n) if satisfies_dc_ic(p, params, weight))
        for n in range(n_max + 1)
    ))


# --- quasi-periodicity ------------------------------------------------------


def f_parameter(params: AlgebraParams) -> int:
    """``lcm(m, ell-m+1) * (ell+1) / (m * (ell-m+1))``."""
    a, b = params.m, params.ell - params.m + 1
    lcm = a * b // gcd(a, b)
    num = lcm * (params.ell + 1)
    if num % (a * b):
        raise InvariantViolation(f"f is not an integer for {params}")
    f = num // (a * b)
    if (params.ell + 1) % f:
        raise InvariantViolation(f"f = {f} does not divide ell+1 = {params.ell + 1}")
    return f


def greedy_maximum(params: AlgebraParams, weight: HighestWeight, depth: int) -> Monomial:
    """Largest DC+IC monomial with all factors of degree ``>= -depth``.

    Admissible monomials form a down-closed family, so taking each variable,
    greatest first, to its largest admissible exponent gives the maximum.
    """
    variables = sorted(
        (Variable(c.i, c.j, r) for r in range(1, depth + 1) for c in params.colors), reverse=True
    )
    acc = Monomial()
    for v in variables:
        e = 0
        while e < weight.level and satisfies_dc_ic(acc * Monomial({v: e + 1}), params, weight):
            e += 1
        if e:
            acc = acc * Monomial({v: e})
    return acc


def mu_monomial(params: AlgebraParams, weight: HighestWeight) -> Monomial:
    """Product of the level-1 maxima over the tensor factors of ``weight``.

    Cross-checked against the direct bounded-depth maximum at level ``k``.
    """
    weight.check(params)
    f = f_parameter(params)
    mu = Monomial()
    for tag in weight.tags():
        mu = mu * greedy_maximum(params, HighestWeight.fundamental(params.ell, tag), f)
    direct = greedy_maximum(params, weight, f)
    if mu != direct:
        raise InvariantViolation(f"product of level-1 maxima {mu} differs from the maximum {direct}")
    return mu


def periodicity_check(p: Monomial, params: AlgebraParams, weight: HighestWeight) -> bool:
    """Whether ``shift_down(p, f) * mu`` is again DC+IC (expected always)."""
    if not satisfies_dc_ic(p, params, weight):
        raise InvalidInput(f"{p} does not satisfy DC and IC for {weight}")
    f = f_parameter(params)
    return satisfies_dc_ic(shift_down(p, f) * mu_monomial(params, weight), params, weight)
