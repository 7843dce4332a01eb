"""Truncated integer q-series."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QSeries:
    """Coefficients ``c_0, c_1, ...`` of a series truncated after ``q^(len-1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self):
        return " ".join(map(str, self.coeffs))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def mul(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, x in enumerate(a[: n_max + 1]):
        if x:
            for j, y in enumerate(b[: n_max + 1 - i]):
                out[i + j] += x * y
    return out


def inverse(a: list[int], n_max: int) -> list[int]:
    """Power-series inverse of ``a`` (requires ``a[0] == 1``)."""
    if not a or a[0] != 1:
        raise ValueError("series must start with constant term 1")
    inv = [0] * (n_max + 1)
    inv[0] = 1
    for n in range(1, n_max + 1):
        inv[n] = -sum(a[i] * inv[n - i] for i in range(1, min(n, len(a) - 1) + 1))
    return inv


def qpochhammer(n: int, n_max: int) -> list[int]:
    """``(q; q)_n = (1-q)(1-q^2)...(1-q^n)`` truncated at ``q^n_max``."""
    out = [1] + [0] * n_max
    for j in range(1, n + 1):
        factor = [0] * (n_max + 1)
        factor[0] = 1
        if j <= n_max:
            factor[j] = -1
        out = mul(out, factor, n_max)
    return out


def ag_series(k: int, i: int, n_max: int) -> QSeries:
    """Andrews-Gordon sum side with ``k`` summation indices.

    ``sum q^(N_1^2+...+N_k^2 + N_i+...+N_k) / ((q)_{n_1} ... (q)_{n_k})`` with
    ``N_t = n_t + ... + n_k``; counts partitions with ``f_j + f_{j+1} <= k``
    and at most ``i-1`` parts equal to 1.
    """
    if k < 1 or not 1 <= i <= k + 1:
        raise ValueError(f"need k >= 1 and 1 <= i <= k+1, got k={k}, i={i}")
    inv_cache: dict[int, list[int]] = {}

    def inv_poch(n):
        if n not in inv_cache:
            inv_cache[n] = inverse(qpochhammer(n, n_max), n_max)
        return inv_cache[n]

    total = [0] * (n_max + 1)

    def walk(t: int, upper: int, big_ns: list[int]):
        # choose N_t <= N_{t-1}; t runs 1..k
        if t > k:
            expo = sum(x * x for x in big_ns) + sum(big_ns[i - 1:])
            if expo > n_max:
                return
            term = [0] * (n_max + 1)
            term[expo] = 1
            for a in range(k):
                n_a = big_ns[a] - (big_ns[a + 1] if a + 1 < k else 0)
                term = mul(term, inv_poch(n_a), n_max)
            for d in range(n_max + 1):
                total[d] += term[d]
            return
        for big in range(upper + 1):
            quad = sum(x * x for x in big_ns) + big * big
            if quad > n_max:
                break
            walk(t + 1, big, big_ns + [big])

    walk(1, n_max, [])
    return QSeries(tuple(total))
