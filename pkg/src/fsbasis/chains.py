"""Chain decompositions of monomials under the level-1 order.

A monomial read as a multiset is partially ordered by ``sq_less``.  It
satisfies level-k difference conditions exactly when its widest antichain
has at most ``k`` elements, and then it splits into that many chains, each a
level-1 admissible monomial.  Two independent chain-cover constructions are
provided: the inductive case analysis (``method="inductive"``) and a minimum
path cover through bipartite matching (``method="matching"``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .conditions import satisfies_dc_ic
from .core import (
    AlgebraParams,
    HighestWeight,
    InvalidInput,
    InvariantViolation,
    Monomial,
    Variable,
    augment,
    zero_tag,
)


def sq_less(v: Variable, w: Variable) -> bool:
    """``v`` lies strictly below ``w`` and the pair is level-1 admissible."""
    if v.r >= w.r + 2:
        return True
    if v.r == w.r + 1:
        return v.i > w.i or v.j < w.j
    if v.r == w.r:
        return v.i > w.i and v.j < w.j
    return False


def comparable(v: Variable, w: Variable) -> bool:
    return sq_less(v, w) or sq_less(w, v)


@dataclass(frozen=True)
class Chain:
    """Factors in increasing ``sq_less`` order (lowest first)."""

    factors: tuple[Variable, ...]

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if not sq_less(a, b):
                raise InvariantViolation(f"{a} and {b} are not linearly ordered")

    def monomial(self) -> Monomial:
        return Monomial.from_factors(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class Factorization:
    """Level-1 factors of a monomial, each tagged with a fundamental weight index."""

    parts: tuple[tuple[int, Monomial], ...]

    def product(self) -> Monomial:
        out = Monomial()
        for _, part in self.parts:
            out = out * part
        return out

    def tags(self) -> list[int]:
        return sorted(t for t, _ in self.parts)

    def to_list(self) -> list[dict]:
        return [{"tag": t, "monomial": str(p)} for t, p in self.parts]


# --- antichains -----------------------------------------------------------


def _by_layers(ms: Counter) -> list[list[Variable]]:
    """Label groups that can host an antichain: adjacent degree pairs."""
    degs = sorted({v.r for v in ms})
    groups = []
    for r in degs:
        groups.append(sorted((v for v in ms if v.r in (r, r + 1)), reverse=True))
    return groups


def _antichain_label_sets(labels: list[Variable]) -> Iterable[tuple[Variable, ...]]:
    """All nonempty sets of pairwise incomparable labels (backtracking)."""

    def grow(chosen: list[Variable], start: int):
        for a in range(start, len(labels)):
            v = labels[a]
            if all(not comparable(v, w) for w in chosen):
                chosen.append(v)
                yield tuple(chosen)
                yield from grow(chosen, a + 1)
                chosen.pop()

    yield from grow([], 0)


def _maximum_antichains(ms: Counter) -> tuple[int, list[tuple[Variable, ...]]]:
    """Width of the multiset and every maximum antichain, as label sets.

    A maximum antichain contains every copy of each label it uses, so label
    sets describe them completely.
    """
    best, found = 0, {}
    for labels in _by_layers(ms):
        for labs in _antichain_label_sets(labels):
            w = sum(ms[v] for v in labs)
            key = tuple(sorted(labs, reverse=True))
            if w > best:
                best, found = w, {key: None}
            elif w == best:
                found[key] = None
    return best, list(found)


def max_antichain_exhaustive(p: Monomial) -> tuple[int, Monomial]:
    """Widest antichain by exhaustive search within adjacent degree pairs."""
    ms = Counter(dict(p.items()))
    width, sets = _maximum_antichains(ms)
    if not sets:
        return 0, Monomial()
    return width, Monomial((v, ms[v]) for v in sets[0])


def _comparability_graph(items: list[Variable]) -> nx.Graph:
    g = nx.Graph()
    n = len(items)
    g.add_nodes_from((("hi", a) for a in range(n)), bipartite=0)
    g.add_nodes_from((("lo", a) for a in range(n)), bipartite=1)
    for a in range(n):
        for b in range(n):
            if sq_less(items[b], items[a]):
                g.add_edge(("hi", a), ("lo", b))
    return g


def _matching(items: list[Variable]):
    g = _comparability_graph(items)
    top = [("hi", a) for a in range(len(items))]
    return g, top, nx.bipartite.hopcroft_karp_matching(g, top_nodes=top)


def max_antichain(p: Monomial) -> tuple[int, Monomial]:
    """Widest antichain through Dilworth/Koenig duality on the comparability graph."""
    items = p.factors()
    if not items:
        return 0, Monomial()
    g, top, matching = _matching(items)
    cover = nx.bipartite.to_vertex_cover(g, matching, top_nodes=top)
    chosen = [v for a, v in enumerate(items) if ("hi", a) not in cover and ("lo", a) not in cover]
    size = len(items) - len(matching) // 2
    if len(chosen) != size:
        raise InvariantViolation("Koenig cover does not match the matching size")
    return size, Monomial.from_factors(chosen)


# --- chain partitions -------------------------------------------------------


def _cover_by_matching(items: list[Variable]) -> list[list[Variable]]:
    if not items:
        return []
    _, _, matching = _matching(items)
    below = {a: matching[("hi", a)][1] for a in range(len(items)) if ("hi", a) in matching}
    has_above = set(below.values())
    chains = []
    for a in range(len(items)):
        if a in has_above:
            continue
        chain = [a]
        while chain[-1] in below:
            chain.append(below[chain[-1]])
        chains.append([items[b] for b in reversed(chain)])
    return chains


def _remove(ms: Counter, labels: Iterable[Variable]) -> Counter:
    out = Counter(ms)
    for v in labels:
        out[v] -= 1
        if not out[v]:
            del out[v]
    return out


def _restrict(ms: Counter, keep: set) -> Counter:
    return Counter({v: c for v, c in ms.items() if v in keep})


def _descend(ms: Counter, start: Variable, upward: bool) -> list[Variable]:
    """Longest monotone path from ``start``; ``upward`` climbs instead."""
    labels = list(ms)
    step = (lambda a, b: sq_less(a, b)) if upward else (lambda a, b: sq_less(b, a))
    memo: dict[Variable, int] = {}

    def height(v):
        if v not in memo:
            memo[v] = 1 + max((height(w) for w in labels if step(v, w)), default=0)
        return memo[v]

    path = [start]
    while True:
        nxt = [w for w in labels if step(path[-1], w)]
        if not nxt:
            return path
        path.append(max(nxt, key=lambda w: (height(w), w.key)))


def _cover_inductive(ms: Counter) -> list[list[Variable]]:
    """Inductive chain cover: split at an inner maximum antichain, else peel a chain."""
    if not ms:
        return []
    labels = sorted(ms, reverse=True)
    width, antichains = _maximum_antichains(ms)
    maxes = tuple(v for v in labels if not any(sq_less(v, w) for w in labels))
    mins = tuple(v for v in labels if not any(sq_less(w, v) for w in labels))

    for anti in antichains:
        if set(anti) == set(maxes) or set(anti) == set(mins):
            continue
        above = {w for w in labels if any(sq_less(a, w) for a in anti)}
        below = {w for w in labels if any(sq_less(w, a) for a in anti)}
        upper = _cover_inductive(_restrict(ms, above | set(anti)))
        lower = _cover_inductive(_restrict(ms, below | set(anti)))
        if len(upper) != width or len(lower) != width:
            raise InvariantViolation("sub-cover size differs from the width")
        ends: dict[Variable, list[list[Variable]]] = {}
        for ch in lower:
            ends.setdefault(ch[-1], []).append(ch)
        glued = []
        for ch in upper:
            tail = ends[ch[0]].pop()
            glued.append(tail + ch[1:])
        return glued

    if set(maxes) in [set(a) for a in antichains]:
        chain = list(reversed(_descend(ms, maxes[0], upward=False)))
    else:
        chain = _descend(ms, mins[-1], upward=True)
    return _cover_inductive(_remove(ms, chain)) + [chain]


def chain_partition(p: Monomial, k: int, method: str = "inductive") -> list[Chain] | None:
    """Partition of the factors into ``width`` chains, or None if ``width > k``."""
    if method == "inductive":
        raw = _cover_inductive(Counter(dict(p.items())))
    elif method == "matching":
        raw = _cover_by_matching(p.factors())
    else:
        raise InvalidInput(f"unknown chain-partition method {method!r}")
    if len(raw) > k:
        return None
    chains = [Chain(tuple(ch)) for ch in raw]
    return sorted(chains, key=lambda c: c.monomial().sort_key, reverse=True)


# --- factorization ----------------------------------------------------------


def factorize(
    p: Monomial, params: AlgebraParams, weight: HighestWeight, method: str = "inductive"
) -> Factorization | None:
    """Split a DC+IC monomial into ``level`` tagged level-1 admissible factors."""
    weight.check(params)
    params.check_monomial(p)
    if not satisfies_dc_ic(p, params, weight):
        return None
    k = weight.level
    chains = chain_partition(augment(p, params, weight), k, method)
    if chains is None:
        raise InvariantViolation(f"{p} passes DC+IC but has no cover by {k} chains")
    parts = []
    for ch in chains:
        zeros = [v for v in ch.factors if v.r == 0]
        if len(zeros) > 1:
            raise InvariantViolation(f"chain {ch} holds two degree-0 elements")
        tag = zero_tag(zeros[0], params) if zeros else 0
        parts.append((tag, Monomial.from_factors(v for v in ch.factors if v.r > 0)))
    parts += [(0, Monomial())] * (k - len(parts))
    fact = Factorization(tuple(sorted(parts, key=lambda tp: (tp[0], tp[1].sort_key))))
    if fact.tags() != weight.tags():
        raise InvariantViolation(f"tags {fact.tags()} do not match weight {weight}")
    for tag, part in fact.parts:
        if not satisfies_dc_ic(part, params, HighestWeight.fundamental(params.ell, tag)):
            raise InvariantViolation(f"factor {part} fails level-1 conditions for tag {tag}")
    return fact


def compose(parts: Iterable[tuple[int, Monomial]], params: AlgebraParams) -> tuple[Monomial, bool]:
    """Product of tagged parts and whether each is level-1 admissible for its tag."""
    parts = list(parts)
    prod = Monomial()
    ok = True
    for tag, part in parts:
        prod = prod * part
        ok = ok and satisfies_dc_ic(part, params, HighestWeight.fundamental(params.ell, tag))
    return prod, ok


def weight_of_tags(tags: Iterable[int], ell: int) -> HighestWeight:
    ks = [0] * (ell + 1)
    for t in tags:
        ks[t] += 1
    return HighestWeight(tuple(ks))
