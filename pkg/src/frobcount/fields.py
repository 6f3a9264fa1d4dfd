"""Lookup-table finite fields GF(q) for small q.

Field elements are the integers ``0 .. q-1``; for ``q = p**k`` the integer
``sum(c[i] * p**i)`` stands for the polynomial ``sum(c[i] * x**i)`` reduced
modulo a fixed monic irreducible of degree ``k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._arith import factorize

MAX_FIELD_ORDER = 512


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return int(p), int(k)


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``m`` (coefficients low degree first)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1 .. deg // 2``."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_polymod(coeffs, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``k`` over GF(p).

    Coefficient vectors are compared constant term first.
    """
    for low in itertools.product(range(p), repeat=k):
        coeffs = list(low) + [1]
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True, eq=False)
class FieldTable:
    q: int
    p: int
    k: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    primitive: int

    def neg(self, a: int) -> int:
        return int(np.nonzero(self.add[a] == 0)[0][0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(np.nonzero(self.mul[a] == 1)[0][0])

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = int(self.mul[r, a])
        return r

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not a unit")
        n, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
        return n


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def make_field(q: int) -> FieldTable:
    p, k = prime_power(q)
    if q > MAX_FIELD_ORDER:
        raise ValueError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
    modulus = smallest_irreducible(p, k) if k > 1 else [0, 1]
    digits = [_digits(x, p, k) for x in range(q)]
    weights = [p ** i for i in range(k)]

    def encode(c):
        return sum(ci * w for ci, w in zip(c, weights))

    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add[a, b] = encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(digits[a]):
                if x:
                    for j, y in enumerate(digits[b]):
                        prod[i + j] += x * y
            mul[a, b] = encode(_polymod(prod, modulus, p) if k > 1
                               else [prod[0] % p])
    add.setflags(write=False)
    mul.setflags(write=False)
    field = FieldTable(q, p, k, tuple(modulus), add, mul, primitive=0)
    prim = next(a for a in range(1, q) if field.multiplicative_order(a) == q - 1)
    object.__setattr__(field, "primitive", prim)
    return field
