"""Small integer helpers."""


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are tiny)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def p_part_exponent(n: int, p: int) -> int:
    """Largest ``m`` with ``p**m`` dividing ``n``."""
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return m
