"""Difference conditions, initial conditions and leading terms.

A difference-condition constraint pairs a diagonal path of colors at degree
``-r-1`` with one at degree ``-r``; the first lies weakly above and to the
right of the second.  Along one path rows and columns of the colors both
weakly increase and consecutive colors differ.  The maximum of the exponent
sums over all such pairs is a two-layer chain problem on the color grid,
which is what ``max_pair_sum`` solves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from .core import (
    AlgebraParams,
    Color,
    HighestWeight,
    InvalidInput,
    Monomial,
    Variable,
    augment,
)


@dataclass(frozen=True)
class DiagonalPath:
    """Index sequences ``i_1 <= ... <= i_t`` and ``j_1 >= ... >= j_t``.

    The colors visited are ``(i_1, j_t), (i_2, j_{t-1}), ..., (i_t, j_1)``;
    with a split ``s`` the first ``s`` indices form their own path.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or not self.rows:
            raise InvalidInput("path needs equally many (>= 1) row and column indices")
        if any(a > b for a, b in zip(self.rows, self.rows[1:])):
            raise InvalidInput(f"rows must be nondecreasing: {self.rows}")
        if any(a < b for a, b in zip(self.cols, self.cols[1:])):
            raise InvalidInput(f"columns must be nonincreasing: {self.cols}")

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.rows, self.cols))

    def __len__(self):
        return len(self.rows)

    def colors(self, split: int = 0) -> tuple[tuple[Color, ...], tuple[Color, ...]]:
        """Colors of the deep (first ``split`` indices) and shallow parts."""
        s = split
        deep = tuple(Color(self.rows[a], self.cols[s - 1 - a]) for a in range(s))
        t = len(self.rows)
        shallow = tuple(Color(self.rows[s + b], self.cols[t - 1 - b]) for b in range(t - s))
        return deep, shallow

    def is_admissible(self, split: int = 0) -> bool:
        """Consecutive colors inside each part are distinct."""
        return all(
            all(a != b for a, b in zip(part, part[1:])) for part in self.colors(split)
        )

    @classmethod
    def from_chains(cls, deep: tuple[Color, ...], shallow: tuple[Color, ...]) -> DiagonalPath:
        """Inverse of ``colors``: ascending color chains to index sequences."""
        rows = tuple(c.i for c in deep) + tuple(c.i for c in shallow)
        cols = tuple(c.j for c in reversed(deep)) + tuple(c.j for c in reversed(shallow))
        return cls(rows, cols)


@dataclass(frozen=True)
class ConstraintWitness:
    r: int
    split: int
    path: DiagonalPath
    lhs: int
    bound: int

    @property
    def violated(self) -> bool:
        return self.lhs > self.bound

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.split,
            "path": [list(p) for p in self.path.pairs],
            "lhs": self.lhs,
            "bound": self.bound,
        }


def diagonal_paths(params: AlgebraParams, t_max: int) -> Iterator[DiagonalPath]:
    """Every diagonal path of length ``1..t_max`` in the color rectangle, once."""
    if t_max < 1:
        raise InvalidInput("t_max must be at least 1")
    for t in range(1, t_max + 1):
        for rows in combinations_with_replacement(params.rows, t):
            for cols_up in combinations_with_replacement(params.cols, t):
                path = DiagonalPath(rows, tuple(reversed(cols_up)))
                if path.is_admissible():
                    yield path


def _best_chain(cells: tuple[tuple[Color, int], ...]) -> tuple[int, tuple[Color, ...]]:
    # cells sorted by (i, j); predecessors in the product order come earlier
    best: list[int] = []
    back: list[int] = []
    for a, (c, w) in enumerate(cells):
        top, arg = 0, -1
        for b in range(a):
            d = cells[b][0]
            if d[0] <= c[0] and d[1] <= c[1] and best[b] > top:
                top, arg = best[b], b
        best.append(top + w)
        back.append(arg)
    if not cells:
        return 0, ()
    end = max(range(len(cells)), key=lambda a: (best[a], -a))
    total = best[end]
    chain = []
    while end >= 0:
        chain.append(cells[end][0])
        end = back[end]
    return total, tuple(reversed(chain))


def _cells(layer: dict[Color, int]) -> tuple[tuple[Color, int], ...]:
    return tuple(sorted(((Color(*c), e) for c, e in layer.items()), key=lambda ce: tuple(ce[0])))


@lru_cache(maxsize=1 << 16)
def max_pair_sum(deep: tuple, shallow: tuple) -> tuple[int, tuple[Color, ...], tuple[Color, ...]]:
    """Largest constraint sum for a deep layer over a shallow layer.

    Both layers are ``_cells`` tuples.  Returns the sum and the two chains.
    """
    support = [c for c, _ in deep] + [c for c, _ in shallow]
    if not support:
        return 0, (), ()
    rows = sorted({c[0] for c in support})
    cols = sorted({c[1] for c in support}, reverse=True)
    best = (-1, (), ())
    for a in rows:
        for b in cols:
            d = tuple(ce for ce in deep if ce[0][0] <= a and ce[0][1] >= b)
            s = tuple(ce for ce in shallow if ce[0][0] >= a and ce[0][1] <= b)
            dv, dc = _best_chain(d)
            sv, sc = _best_chain(s)
            if dv + sv > best[0]:
                best = (dv + sv, dc, sc)
    return best


def max_dc_sum(p: Monomial) -> int:
    """Largest left-hand side over all difference-condition constraints."""
    layers = p.layers()
    return max(
        (max_pair_sum(_cells(layers.get(r + 1, {})), _cells(layers[r]))[0] for r in layers),
        default=0,
    )


def find_dc_violation(p: Monomial, k: int) -> ConstraintWitness | None:
    """First degree (ascending) whose constraint sum exceeds ``k``, with a maximal witness."""
    if k < 1:
        raise InvalidInput("level k must be at least 1")
    layers = p.layers()
    for r in sorted(layers):
        total, dc, sc = max_pair_sum(_cells(layers.get(r + 1, {})), _cells(layers[r]))
        if total > k:
            return ConstraintWitness(r, len(dc), DiagonalPath.from_chains(dc, sc), total, k)
    return None


def satisfies_dc(p: Monomial, k: int) -> bool:
    return find_dc_violation(p, k) is None


def ic_bound(weight: HighestWeight, last_row: int, last_col: int) -> int:
    """``k0 + k1 + ... + k_{i_t - 1} + k_{j_t + 1} + ... + k_ell``."""
    ks = weight.multiplicities
    return ks[0] + sum(ks[1:last_row]) + sum(ks[last_col + 1:])


def find_ic_violation(p: Monomial, weight: HighestWeight) -> ConstraintWitness | None:
    if not p.is_ordinary():
        raise InvalidInput("initial conditions take an ordinary monomial")
    for v, _ in p.items():
        if v.j > weight.ell:
            raise InvalidInput(f"{v} lies outside the algebra of weight {weight}")
    cells = _cells(p.layer(1))
    rows = sorted({c[0] for c, _ in cells})
    cols = sorted({c[1] for c, _ in cells}, reverse=True)
    for a in rows:
        for b in cols:
            total, chain = _best_chain(tuple(ce for ce in cells if ce[0][0] <= a and ce[0][1] >= b))
            if not chain:
                continue
            bound = ic_bound(weight, chain[-1].i, chain[0].j)
            if total > bound:
                return ConstraintWitness(1, 0, DiagonalPath.from_chains((), chain), total, bound)
    return None


def satisfies_ic(p: Monomial, weight: HighestWeight) -> bool:
    return find_ic_violation(p, weight) is None


def satisfies_dc_ic(p: Monomial, params: AlgebraParams, weight: HighestWeight) -> bool:
    """DC and IC on L(weight), checked as DC of the augmented monomial."""
    weight.check(params)
    return satisfies_dc(augment(p, params, weight), weight.level)


@lru_cache(maxsize=None)
def split_paths(params: AlgebraParams, t_max: int) -> tuple[tuple[tuple[Color, ...], tuple[Color, ...]], ...]:
    """All admissible (path, split) combinations of length ``<= t_max`` as color pairs."""
    out = []
    for t in range(1, t_max + 1):
        for rows in combinations_with_replacement(params.rows, t):
            for cols_up in combinations_with_replacement(params.cols, t):
                path = DiagonalPath(rows, tuple(reversed(cols_up)))
                for s in range(t + 1):
                    if path.is_admissible(s):
                        out.append(path.colors(s))
    return tuple(out)


def satisfies_dc_by_paths(p: Monomial, k: int, params: AlgebraParams) -> bool:
    """Difference conditions by direct enumeration of every constraint.

    Paths up to length ``k+1`` suffice: a violating sum of positive exponents
    already exceeds ``k`` on at most ``k+1`` of its colors.
    """
    if k < 1:
        raise InvalidInput("level k must be at least 1")
    layers = p.layers()
    combos = split_paths(params, k + 1)
    for r, shallow in layers.items():
        deep = layers.get(r + 1, {})
        for dcols, scols in combos:
            lhs = sum(deep.get(c, 0) for c in dcols) + sum(shallow.get(c, 0) for c in scols)
            if lhs > k:
                return False
    return True


def satisfies_ic_by_paths(p: Monomial, weight: HighestWeight, params: AlgebraParams) -> bool:
    layer = p.layer(1)
    for path in diagonal_paths(params, max(1, weight.level + 1)):
        _, colors = path.colors(0)
        lhs = sum(layer.get(c, 0) for c in colors)
        if lhs > ic_bound(weight, path.rows[-1], path.cols[-1]):
            return False
    return True


def leading_term(rows, cols, n: int, k: int, params: AlgebraParams | None = None) -> Monomial:
    """Minimal monomial of the relation labeled by ``rows``/``cols`` at degree ``-n``.

    With ``n = r(k+1) + s``, indices ``1..s`` give the ``(-r-1)``-part and the
    rest the ``(-r)``-part; inside a part the a-th smallest row meets the
    a-th smallest column.
    """
    rows, cols = tuple(rows), tuple(cols)
    if k < 1:
        raise InvalidInput("level k must be at least 1")
    if len(rows) != k + 1 or len(cols) != k + 1:
        raise InvalidInput(f"need exactly k+1 = {k + 1} row and column indices")
    if any(a > b for a, b in zip(rows, rows[1:])) or any(a < b for a, b in zip(cols, cols[1:])):
        raise InvalidInput("rows must be nondecreasing and columns nonincreasing")
    if n < k + 1:
        raise InvalidInput(f"total degree n = {n} is below k+1 = {k + 1}")
    if params is not None:
        for c in zip(rows, cols):
            if not (1 <= c[0] <= params.m and params.m <= c[1] <= params.ell):
                raise InvalidInput(f"index pair {c} outside the color rectangle")
    r, s = divmod(n, k + 1)
    acc = [(Variable(rows[a], cols[s - 1 - a], r + 1), 1) for a in range(s)]
    acc += [(Variable(rows[s + b], cols[k - b], r), 1) for b in range(k + 1 - s)]
    return Monomial(acc)
