"""Colors, variables, colored partitions and the orders on them.

A variable ``x_ij(-r)`` is stored as ``Variable(i, j, r)`` with ``r >= 0`` the
degree magnitude.  Colors ``(i, j)`` range over the rectangle
``1 <= i <= m``, ``m <= j <= ell``.  A monomial (colored partition) is a finite
multiset of variables, kept as a tuple of ``(variable, exponent)`` pairs in
descending variable order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple


class InvalidInput(ValueError):
    """An argument lies outside the domain of the operation."""


class GuardExceeded(InvalidInput):
    """A brute-force computation would exceed its configured size ceiling."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""


class Color(NamedTuple):
    i: int
    j: int

    # the natural tuple order is not the color order
    def __lt__(self, other):
        return color_less(self, other)

    def __gt__(self, other):
        return color_less(other, self)

    def __le__(self, other):
        return self == other or color_less(self, other)

    def __ge__(self, other):
        return self == other or color_less(other, self)


class Variable(NamedTuple):
    i: int
    j: int
    r: int

    @property
    def color(self) -> Color:
        return Color(self.i, self.j)

    @property
    def key(self) -> tuple[int, int, int]:
        """Sort key realizing the variable order (degree first, then color)."""
        return (-self.r, -self.i, self.j)

    def __lt__(self, other):
        return self.key < other.key

    def __gt__(self, other):
        return self.key > other.key

    def __le__(self, other):
        return self.key <= other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __str__(self):
        return f"x[{self.i},{self.j}]({-self.r if self.r else 0})"


def color_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """``a < b`` in the color order: larger row first, then smaller column."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def variable_less(v: Variable, w: Variable) -> bool:
    return v.key < w.key


@dataclass(frozen=True)
class AlgebraParams:
    """Rank ``ell`` of sl(ell+1) and the index ``m`` of the fundamental weight."""

    ell: int
    m: int

    def __post_init__(self):
        if not isinstance(self.ell, int) or not isinstance(self.m, int):
            raise InvalidInput("ell and m must be integers")
        if self.ell < 1 or not 1 <= self.m <= self.ell:
            raise InvalidInput(f"need 1 <= m <= ell, got ell={self.ell}, m={self.m}")

    @property
    def rows(self) -> range:
        return range(1, self.m + 1)

    @property
    def cols(self) -> range:
        return range(self.m, self.ell + 1)

    @cached_property
    def colors(self) -> tuple[Color, ...]:
        """All colors in ascending color order."""
        return tuple(sorted(Color(i, j) for i in self.rows for j in self.cols))

    @property
    def theta(self) -> Color:
        return Color(1, self.ell)

    def has_color(self, c) -> bool:
        return 1 <= c[0] <= self.m and self.m <= c[1] <= self.ell

    def check_color(self, c) -> None:
        if not self.has_color(c):
            raise InvalidInput(f"color {tuple(c)} is not in Gamma for ell={self.ell}, m={self.m}")

    def check_monomial(self, p: Monomial) -> None:
        for v, _ in p.items():
            self.check_color(v)


@dataclass(frozen=True)
class HighestWeight:
    """Dominant integral weight ``k0*L0 + ... + k_ell*L_ell``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(self.multiplicities)
        object.__setattr__(self, "multiplicities", ks)
        if len(ks) < 2:
            raise InvalidInput("a highest weight needs at least k0 and k1")
        if any(not isinstance(k, int) or k < 0 for k in ks):
            raise InvalidInput(f"multiplicities must be nonnegative integers: {ks}")

    @classmethod
    def parse(cls, text: str) -> HighestWeight:
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"bad weight {text!r}; expected k0,k1,...,kl") from None

    @classmethod
    def fundamental(cls, ell: int, i: int) -> HighestWeight:
        ks = [0] * (ell + 1)
        ks[i] = 1
        return cls(tuple(ks))

    @property
    def ell(self) -> int:
        return len(self.multiplicities) - 1

    @property
    def level(self) -> int:
        return sum(self.multiplicities)

    def __getitem__(self, i: int) -> int:
        return self.multiplicities[i]

    def tags(self) -> list[int]:
        """Indices of the level-1 tensor factors, ``k_i`` copies of ``i``."""
        return [i for i, k in enumerate(self.multiplicities) for _ in range(k)]

    def check(self, params: AlgebraParams, need_level: bool = True) -> None:
        if self.ell != params.ell:
            raise InvalidInput(f"weight has {len(self.multiplicities)} entries, expected ell+1 = {params.ell + 1}")
        if need_level and self.level < 1:
            raise InvalidInput("level must be at least 1")

    def __str__(self):
        return ",".join(map(str, self.multiplicities))


_FACTOR_RE = re.compile(r"^x\[\s*(\d+)\s*,\s*(\d+)\s*\]\(\s*([+-]?\d+)\s*\)(?:\^(\d+))?$")


class Monomial:
    """Immutable colored partition: variables with positive exponents."""

    __slots__ = ("_items", "_hash", "_key")

    def __init__(self, exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]] = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[Variable, int] = {}
        for v, e in pairs:
            v = v if type(v) is Variable else Variable(*v)
            if e < 0 or v.r < 0:
                raise InvalidInput(f"negative exponent or degree: {v} ^ {e}")
            if e:
                acc[v] = acc.get(v, 0) + e
        self._items = tuple(sorted(acc.items(), key=lambda it: it[0].key, reverse=True))
        self._hash = hash(self._items)
        self._key = None

    @classmethod
    def from_factors(cls, factors: Iterable[Variable]) -> Monomial:
        acc: dict[Variable, int] = {}
        for v in factors:
            acc[v] = acc.get(v, 0) + 1
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """Parse the canonical text form, e.g. ``x[1,2](-1)^2; x[1,1](-2)^1``."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        acc = []
        for chunk in text.split(";"):
            mt = _FACTOR_RE.match(chunk.strip())
            if mt is None:
                raise InvalidInput(f"cannot parse factor {chunk.strip()!r}")
            i, j, deg = int(mt[1]), int(mt[2]), int(mt[3])
            if deg > 0:
                raise InvalidInput(f"positive degree in {chunk.strip()!r}")
            e = int(mt[4]) if mt[4] is not None else 1
            if e == 0:
                raise InvalidInput(f"zero exponent in {chunk.strip()!r}")
            acc.append((Variable(i, j, -deg), e))
        return cls(acc)

    def items(self) -> tuple[tuple[Variable, int], ...]:
        """``(variable, exponent)`` pairs, greatest variable first."""
        return self._items

    def support(self) -> list[Variable]:
        return [v for v, _ in self._items]

    def exponent(self, v: Variable) -> int:
        for w, e in self._items:
            if w == v:
                return e
        return 0

    def factors(self) -> list[Variable]:
        """All factors with multiplicity, greatest first."""
        return [v for v, e in self._items for _ in range(e)]

    @property
    def length(self) -> int:
        return sum(e for _, e in self._items)

    @property
    def degree(self) -> int:
        return -sum(v.r * e for v, e in self._items)

    def degrees(self) -> list[int]:
        """Distinct degree magnitudes present, ascending."""
        return sorted({v.r for v, _ in self._items})

    def layer(self, r: int) -> dict[Color, int]:
        """Exponents of the ``(-r)``-homogeneous part, keyed by color."""
        return {v.color: e for v, e in self._items if v.r == r}

    def layers(self) -> dict[int, dict[Color, int]]:
        out: dict[int, dict[Color, int]] = {}
        for v, e in self._items:
            out.setdefault(v.r, {})[v.color] = e
        return out

    def is_ordinary(self) -> bool:
        return all(v.r >= 1 for v, _ in self._items)

    def colors(self) -> set[Color]:
        return {v.color for v, _ in self._items}

    @property
    def sort_key(self) -> tuple:
        # Comparing (key, exponent) runs from the top is the same as comparing
        # the expanded descending factor sequences with "prefix is smaller".
        if self._key is None:
            self._key = tuple((v.key, e) for v, e in self._items)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Monomial):
        return self.sort_key < other.sort_key

    def __le__(self, other: Monomial):
        return self.sort_key <= other.sort_key

    def __gt__(self, other: Monomial):
        return self.sort_key > other.sort_key

    def __ge__(self, other: Monomial):
        return self.sort_key >= other.sort_key

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        acc = dict(self._items)
        for v, e in other._items:
            acc[v] = acc.get(v, 0) + e
        return Monomial(acc)

    def __bool__(self):
        return bool(self._items)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.factors())

    def __str__(self):
        if not self._items:
            return "1"
        return "; ".join(f"{v}^{e}" for v, e in self._items)

    def __repr__(self):
        return f"Monomial.parse({str(self)!r})"


ONE = Monomial()


def monomial_less(p: Monomial, q: Monomial) -> bool:
    return p.sort_key < q.sort_key


def product(p: Monomial, q: Monomial) -> Monomial:
    return p * q


@dataclass(frozen=True)
class Shape:
    """Number of factors at each degree magnitude (nonzero entries only)."""

    counts: tuple[tuple[int, int], ...]

    def __getitem__(self, r: int) -> int:
        for rr, c in self.counts:
            if rr == r:
                return c
        return 0

    def support(self) -> list[int]:
        return [r for r, _ in self.counts]


def shape_of(p: Monomial) -> Shape:
    acc: dict[int, int] = {}
    for v, e in p.items():
        acc[v.r] = acc.get(v.r, 0) + e
    return Shape(tuple(sorted(acc.items())))


def shape_less(s: Shape, t: Shape) -> bool:
    """Literal two-branch shape comparison at the first differing magnitude."""
    for r0 in sorted(set(s.support()) | set(t.support())):
        a, b = s[r0], t[r0]
        if a == b:
            continue
        nonzero_above = any(r > r0 for r in s.support())
        return nonzero_above if a < b else not nonzero_above
    return False


def shift_up(p: Monomial, r: int) -> Monomial:
    """Raise every degree by ``r``, dropping factors that would reach degree >= 0."""
    if r < 1:
        raise InvalidInput("shift must be positive")
    if not p.is_ordinary():
        raise InvalidInput("shift_up expects an ordinary monomial")
    return Monomial((Variable(v.i, v.j, v.r - r), e) for v, e in p.items() if v.r > r)


def shift_down(p: Monomial, f: int) -> Monomial:
    if f < 1:
        raise InvalidInput("shift must be positive")
    if not p.is_ordinary():
        raise InvalidInput("shift_down expects an ordinary monomial")
    return Monomial((Variable(v.i, v.j, v.r + f), e) for v, e in p.items())


def degree_zero_block(params: AlgebraParams, weight: HighestWeight) -> Monomial:
    """``x_1m(0)^k1 ... x_mm(0)^km x_m,m+1(0)^k_{m+1} ... x_m,ell(0)^k_ell``."""
    weight.check(params, need_level=False)
    m = params.m
    acc = [(Variable(i, m, 0), weight[i]) for i in range(1, m + 1)]
    acc += [(Variable(m, j, 0), weight[j]) for j in range(m + 1, params.ell + 1)]
    return Monomial(acc)


def augment(p: Monomial, params: AlgebraParams, weight: HighestWeight) -> Monomial:
    if not p.is_ordinary():
        raise InvalidInput("augment expects an ordinary monomial")
    return p * degree_zero_block(params, weight)


def zero_tag(v: Variable, params: AlgebraParams) -> int:
    """Weight index carried by a degree-0 element of the augmentation block."""
    if v.r != 0:
        raise InvalidInput(f"{v} is not a degree-0 element")
    if v.j == params.m:
        return v.i
    if v.i == params.m:
        return v.j
    raise InvalidInput(f"{v} is not in the augmentation block")
