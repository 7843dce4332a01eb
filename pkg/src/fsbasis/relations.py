"""Degree -1 relation vectors generated from ``x_theta(-1)^(k+1)``.

The Levi part acts on colors by moving a row index (``idx < m``) or a
column index (``idx > m``) one step, and on polynomials as a derivation.
Weight spaces of the resulting module are one-dimensional, so each label
(row multiset, column multiset) owns exactly one vector up to scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import comb, gcd
from typing import Mapping

import sympy

from .conditions import leading_term
from .core import (
    AlgebraParams,
    GuardExceeded,
    InvalidInput,
    InvariantViolation,
    Monomial,
    Variable,
)

ORBIT_CEILING = 20000

Label = tuple[tuple[int, ...], tuple[int, ...]]


class PolyVector:
    """Integer combination of degree -1 monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def power(cls, v: Variable, e: int) -> PolyVector:
        return cls({Monomial({v: e}): 1})

    def __eq__(self, other):
        return isinstance(other, PolyVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: PolyVector) -> PolyVector:
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return PolyVector(out)

    def __sub__(self, other: PolyVector) -> PolyVector:
        return self + other.scale(-1)

    def scale(self, c: int) -> PolyVector:
        return PolyVector({p: c * a for p, a in self.terms.items()})

    def support(self) -> list[Monomial]:
        return sorted(self.terms)

    def leading(self) -> Monomial:
        return min(self.terms)

    def normalized(self) -> PolyVector:
        """Divide by the content; the leading coefficient becomes positive."""
        if not self.terms:
            return self
        g = reduce(gcd, self.terms.values())
        if self.terms[self.leading()] < 0:
            g = -g
        return PolyVector({p: c // g for p, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{p}]" for p, c in sorted(self.terms.items(), key=lambda pc: pc[0].sort_key))

    __repr__ = __str__


def _check_idx(params: AlgebraParams, idx: int) -> None:
    if not 1 <= idx <= params.ell or idx == params.m:
        raise InvalidInput(f"idx must lie in 1..{params.ell} and differ from m={params.m}, got {idx}")


def _derive(v: PolyVector, move) -> PolyVector:
    out: dict[Monomial, int] = {}
    for p, c in v.terms.items():
        exps = dict(p.items())
        for var, e in exps.items():
            new = move(var)
            if new is None:
                continue
            rest = Counter(exps)
            rest[var] -= 1
            rest[new] += 1
            q = Monomial({w: a for w, a in rest.items() if a})
            out[q] = out.get(q, 0) + c * e
    return PolyVector(out)


def lower_op(params: AlgebraParams, idx: int, v: PolyVector) -> PolyVector:
    """Lowering generator: row ``idx -> idx+1`` below m, column ``idx -> idx-1`` above."""
    _check_idx(params, idx)
    if idx < params.m:
        return _derive(v, lambda w: Variable(w.i + 1, w.j, w.r) if w.i == idx else None)
    return _derive(v, lambda w: Variable(w.i, w.j - 1, w.r) if w.j == idx else None)


def raise_op(params: AlgebraParams, idx: int, v: PolyVector) -> PolyVector:
    """Raising generator: row ``idx+1 -> idx`` below m, column ``idx-1 -> idx`` above."""
    _check_idx(params, idx)
    if idx < params.m:
        return _derive(v, lambda w: Variable(w.i - 1, w.j, w.r) if w.i == idx + 1 else None)
    return _derive(v, lambda w: Variable(w.i, w.j + 1, w.r) if w.j == idx - 1 else None)


def cartan_eigenvalue(params: AlgebraParams, idx: int, p: Monomial) -> int:
    """Eigenvalue of ``[raise, lower]`` for ``idx`` on the monomial ``p``."""
    _check_idx(params, idx)
    if idx < params.m:
        return sum(e for v, e in p.items() if v.i == idx) - sum(e for v, e in p.items() if v.i == idx + 1)
    return sum(e for v, e in p.items() if v.j == idx) - sum(e for v, e in p.items() if v.j == idx - 1)


def top_vector(params: AlgebraParams, k: int) -> PolyVector:
    t = params.theta
    return PolyVector.power(Variable(t.i, t.j, 1), k + 1)


def labels(params: AlgebraParams, k: int) -> list[Label]:
    """Row multisets ascending, column multisets descending."""
    from itertools import combinations_with_replacement as cwr

    rows = list(cwr(params.rows, k + 1))
    cols = [tuple(reversed(c)) for c in cwr(params.cols, k + 1)]
    return [(r, c) for r in rows for c in cols]


def orbit_dimension_formula(params: AlgebraParams, k: int) -> int:
    return comb(params.m + k, k + 1) * comb(params.ell - params.m + 1 + k, k + 1)


def label_of(p: Monomial) -> Label:
    return tuple(sorted(v.i for v in p.factors())), tuple(sorted((v.j for v in p.factors()), reverse=True))


def orbit_vector(params: AlgebraParams, k: int, rows, cols, normalize: bool = True) -> PolyVector:
    """Vector of one label by staged lowering from ``x_theta(-1)^(k+1)``.

    Column targets are reached first, smallest target first; then row targets,
    largest first, each by the chain of lowerings ``1, 2, ..., target-1``.
    """
    rows, cols = tuple(rows), tuple(cols)
    if (rows, cols) not in set(labels(params, k)):
        raise InvalidInput(f"({rows}, {cols}) is not a label for {params}, k={k}")
    v = top_vector(params, k)
    for target in sorted(cols):
        for idx in range(params.ell, target, -1):
            v = lower_op(params, idx, v)
    for target in sorted(rows, reverse=True):
        for idx in range(1, target):
            v = lower_op(params, idx, v)
    if not v:
        raise InvariantViolation(f"staged lowering vanished on ({rows}, {cols})")
    return v.normalized() if normalize else v


def _guard(params: AlgebraParams, k: int) -> int:
    if k < 1:
        raise InvalidInput("level k must be at least 1")
    dim = orbit_dimension_formula(params, k)
    if dim > ORBIT_CEILING:
        raise GuardExceeded(f"orbit dimension {dim} exceeds the ceiling {ORBIT_CEILING}")
    return dim


def orbit_basis(params: AlgebraParams, k: int) -> dict[Label, PolyVector]:
    _guard(params, k)
    return {lab: orbit_vector(params, k, *lab) for lab in labels(params, k)}


def span_dimension(params: AlgebraParams, k: int) -> int:
    """Dimension of the span of all lowering words applied to the top vector.

    Breadth-first closure with exact rank; independent of the label scheme.
    """
    _guard(params, k)
    gens = [i for i in range(1, params.ell + 1) if i != params.m]
    seen, frontier = [top_vector(params, k)], [top_vector(params, k)]
    keys = {frozenset(seen[0].normalized().terms.items())}
    while frontier:
        nxt = []
        for v in frontier:
            for idx in gens:
                w = lower_op(params, idx, v)
                if not w:
                    continue
                key = frozenset(w.normalized().terms.items())
                if key not in keys:
                    keys.add(key)
                    nxt.append(w)
        seen += nxt
        frontier = nxt
    monos = sorted({p for v in seen for p in v.terms})
    col = {p: a for a, p in enumerate(monos)}
    mat = sympy.zeros(len(seen), len(monos))
    for a, v in enumerate(seen):
        for p, c in v.terms.items():
            mat[a, col[p]] = c
    return mat.rank()


def expected_support(params: AlgebraParams, rows, cols) -> set[Monomial]:
    """All pairings of the row multiset with the column multiset."""
    from itertools import permutations

    rows = tuple(rows)
    out = set()
    for perm in set(permutations(cols)):
        out.add(Monomial.from_factors(Variable(i, j, 1) for i, j in zip(rows, perm)))
    return out


@dataclass(frozen=True)
class LabelReport:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    dim: int
    support_ok: bool
    positive_ok: bool
    leading_term_ok: bool
    offending: str = ""

    @property
    def ok(self) -> bool:
        return self.support_ok and self.positive_ok and self.leading_term_ok

    def to_dict(self) -> dict:
        out = {
            "label": {"rows": list(self.rows), "cols": list(self.cols)},
            "dim": self.dim,
            "support_ok": self.support_ok,
            "positive_ok": self.positive_ok,
            "leading_term_ok": self.leading_term_ok,
        }
        if self.offending:
            out["offending"] = self.offending
        return out


def verify_relation_support(params: AlgebraParams, k: int) -> list[LabelReport]:
    basis = orbit_basis(params, k)
    dim = len(basis)
    report = []
    for (rows, cols), v in basis.items():
        support = set(v.terms)
        want = expected_support(params, rows, cols)
        bad = sorted(support ^ want) or sorted(p for p, c in v.terms.items() if c <= 0)
        lt = leading_term(rows, cols, k + 1, k, params)
        report.append(LabelReport(
            rows, cols, dim,
            support_ok=support == want,
            positive_ok=all(c > 0 for c in v.terms.values()),
            leading_term_ok=v.leading() == lt,
            offending=str(bad[0]) if bad else ("" if v.leading() == lt else str(v.leading())),
        ))
    return report
