"""Closed-form subgroup counts in finite abelian p-groups.

An abelian p-group of type ``lam = (l1 >= l2 >= ...)`` is
``C_{p^l1} x C_{p^l2} x ...``.  Its number of subgroups of type ``mu`` is

    prod_i  p^(mu'_{i+1} (lam'_i - mu'_i)) * [lam'_i - mu'_{i+1} choose mu'_i - mu'_{i+1}]_p

with ``'`` the conjugate partition and ``[n choose k]_p`` the Gaussian
binomial.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in parts)
    if any(x < 1 for x in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"not a partition: {parts}")
    return lam


def conjugate(lam: Sequence[int]) -> Partition:
    """``lam'_i = #{j : lam_j >= i}``."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """``prod_{i=1..k} (p^(n-k+i) - 1) / (p^i - 1)``; zero when ``k > n``."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if k < 0 or n < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result *= p ** (n - k + i) - 1
        q, r = divmod(result, p ** i - 1)
        assert r == 0, "Gaussian binomial partial product not integral"
        result = q
    return result


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order (largest first part first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _at(seq: Sequence[int], i: int) -> int:
    """1-based access, zero past the end."""
    return seq[i - 1] if 1 <= i <= len(seq) else 0


def hall_count_type(lam: Sequence[int], mu: Sequence[int], p: int) -> int:
    """Number of subgroups of type ``mu`` in the abelian p-group of type ``lam``."""
    lc, mc = conjugate(lam), conjugate(mu)
    if len(mc) > len(lc) or any(m > l for m, l in zip(mc, lc)):
        return 0
    total = 1
    for i in range(1, len(lc) + 1):
        li, mi, mnext = _at(lc, i), _at(mc, i), _at(mc, i + 1)
        total *= p ** (mnext * (li - mi)) * gaussian_binomial(li - mnext, mi - mnext, p)
    return total


def hall_count_order(lam: Sequence[int], a: int, p: int) -> int:
    """Number of subgroups of order ``p**a``: the sum over all types of weight ``a``."""
    lam = as_partition(lam)
    if a < 0 or a > sum(lam):
        raise ValueError(f"order p^{a} out of range for type {lam}")
    return sum(hall_count_type(lam, mu, p) for mu in partitions(a))
