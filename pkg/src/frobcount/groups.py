"""Declarative group descriptions and their permutation representations.

Every spec has a canonical text form, used on the command line and in corpus
files::

    Cyclic(12)  AbelianP(3,[2,1,1])  ElemAbelian(3,3)  Dihedral(8)
    Symmetric(5)  Alternating(5)  GL2(9)  FrobeniusAffine(19,3)
    Product(GL2(3),FrobeniusAffine(7,3))

``Dihedral(n)`` is the dihedral group of *order* ``n``.  Whitespace is
ignored when parsing; :func:`format_spec` always produces the compact form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from ._arith import is_prime
from .fields import make_field, prime_power
from .perm import Permutation, PermGroup

MAX_DEGREE = 1024


class SpecError(ValueError):
    """Malformed or invalid group spec."""


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecError("Cyclic(n) needs n >= 1")

    @property
    def text(self):
        return f"Cyclic({self.n})"

    @property
    def order(self):
        return self.n

    @property
    def degree(self):
        return self.n

    def generators(self):
        return [Permutation([(i + 1) % self.n for i in range(self.n)])]


@dataclass(frozen=True)
class AbelianP:
    """Abelian p-group of type ``parts``, acting on one regular orbit per cyclic factor."""

    p: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not is_prime(self.p):
            raise SpecError(f"AbelianP: {self.p} is not prime")
        if not self.parts or any(x < 1 for x in self.parts):
            raise SpecError("AbelianP needs a nonempty partition with parts >= 1")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise SpecError("AbelianP partition must be weakly decreasing")

    @property
    def text(self):
        return f"AbelianP({self.p},[{','.join(map(str, self.parts))}])"

    @property
    def order(self):
        return self.p ** sum(self.parts)

    @property
    def degree(self):
        return sum(self.p ** x for x in self.parts)

    def generators(self):
        return _cycle_blocks([self.p ** x for x in self.parts])


@dataclass(frozen=True)
class ElemAbelian:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p) or self.k < 1:
            raise SpecError("ElemAbelian(p,k) needs p prime and k >= 1")

    @property
    def text(self):
        return f"ElemAbelian({self.p},{self.k})"

    @property
    def order(self):
        return self.p ** self.k

    @property
    def degree(self):
        return self.p * self.k

    def generators(self):
        return _cycle_blocks([self.p] * self.k)


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order ``n`` acting on the ``n/2`` vertices of a polygon."""

    n: int

    def __post_init__(self):
        if self.n % 2 or self.n < 6:
            raise SpecError("Dihedral(n) needs an even order n >= 6")

    @property
    def text(self):
        return f"Dihedral({self.n})"

    @property
    def order(self):
        return self.n

    @property
    def degree(self):
        return self.n // 2

    def generators(self):
        m = self.n // 2
        return [Permutation([(i + 1) % m for i in range(m)]),
                Permutation([(-i) % m for i in range(m)])]


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecError("Symmetric(n) needs n >= 1")

    @property
    def text(self):
        return f"Symmetric({self.n})"

    @property
    def order(self):
        return math.factorial(self.n)

    @property
    def degree(self):
        return self.n

    def generators(self):
        n = self.n
        if n < 2:
            return [Permutation.identity(n)]
        return [Permutation.from_cycles(n, (0, 1)),
                Permutation.from_cycles(n, tuple(range(n)))]


@dataclass(frozen=True)
class Alternating:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecError("Alternating(n) needs n >= 1")

    @property
    def text(self):
        return f"Alternating({self.n})"

    @property
    def order(self):
        return max(1, math.factorial(self.n) // 2)

    @property
    def degree(self):
        return self.n

    def generators(self):
        n = self.n
        if n < 3:
            return [Permutation.identity(n)]
        return [Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)]


@dataclass(frozen=True)
class GL2:
    """GL_2(q) acting on the ``q**2 - 1`` nonzero column vectors."""

    q: int

    def __post_init__(self):
        try:
            prime_power(self.q)
        except ValueError:
            raise SpecError(f"GL2: {self.q} is not a prime power") from None

    @property
    def text(self):
        return f"GL2({self.q})"

    @property
    def order(self):
        q = self.q
        return (q * q - 1) * (q * q - q)

    @property
    def degree(self):
        return self.q ** 2 - 1

    def generators(self):
        F = make_field(self.q)
        q, w = self.q, F.primitive
        mats = [((w, 0), (0, 1)), ((1, 0), (0, w)), ((1, 1), (0, 1)), ((1, 0), (1, 1))]
        gens = []
        for (a, b), (c, d) in mats:
            img = []
            for v in range(1, q * q):
                x, y = divmod(v, q)
                nx = int(F.add[F.mul[a, x], F.mul[b, y]])
                ny = int(F.add[F.mul[c, x], F.mul[d, y]])
                img.append(nx * q + ny - 1)
            gens.append(Permutation(img))
        return gens


@dataclass(frozen=True)
class FrobeniusAffine:
    """Maps ``x -> a*x + b`` on GF(q), q prime, ``a`` in the order-p subgroup of units."""

    q: int
    p: int

    def __post_init__(self):
        if not is_prime(self.q) or not is_prime(self.p):
            raise SpecError("FrobeniusAffine(q,p) needs q and p prime")
        if (self.q - 1) % self.p:
            raise SpecError(f"FrobeniusAffine: {self.p} does not divide {self.q}-1")

    @property
    def text(self):
        return f"FrobeniusAffine({self.q},{self.p})"

    @property
    def order(self):
        return self.q * self.p

    @property
    def degree(self):
        return self.q

    def generators(self):
        q = self.q
        g = make_field(q).primitive
        a = pow(g, (q - 1) // self.p, q)
        return [Permutation([(x + 1) % q for x in range(q)]),
                Permutation([(a * x) % q for x in range(q)])]


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple["GroupSpec", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) < 1:
            raise SpecError("Product needs at least one factor")

    @property
    def text(self):
        return "Product(" + ",".join(f.text for f in self.factors) + ")"

    @property
    def order(self):
        return math.prod(f.order for f in self.factors)

    @property
    def degree(self):
        return sum(f.degree for f in self.factors)

    def generators(self):
        d = self.degree
        gens = []
        offset = 0
        for f in self.factors:
            for g in f.generators():
                img = list(range(d))
                for i, j in enumerate(g.images):
                    img[offset + i] = offset + j
                gens.append(Permutation(img))
            offset += f.degree
        return gens


GroupSpec = Union[Cyclic, AbelianP, ElemAbelian, Dihedral, Symmetric, Alternating,
                  GL2, FrobeniusAffine, DirectProduct]


def _cycle_blocks(lengths: list[int]) -> list[Permutation]:
    """One cycle per block, blocks laid out consecutively."""
    d = sum(lengths)
    gens = []
    offset = 0
    for n in lengths:
        img = list(range(d))
        for i in range(n):
            img[offset + i] = offset + (i + 1) % n
        gens.append(Permutation(img))
        offset += n
    return gens


def build(spec: GroupSpec) -> PermGroup:
    """Faithful permutation representation of ``spec``."""
    if spec.degree > MAX_DEGREE:
        raise SpecError(f"{spec.text}: degree {spec.degree} exceeds {MAX_DEGREE}")
    G = PermGroup(spec.generators())
    G.spec = spec
    return G


def format_spec(spec: GroupSpec) -> str:
    return spec.text


# -- parser ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")

_SIMPLE = {
    "Cyclic": (Cyclic, 1),
    "ElemAbelian": (ElemAbelian, 2),
    "Dihedral": (Dihedral, 1),
    "Symmetric": (Symmetric, 1),
    "Alternating": (Alternating, 1),
    "GL2": (GL2, 1),
    "FrobeniusAffine": (FrobeniusAffine, 2),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        for m in _TOKEN.finditer(text):
            num, name, sym = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("name", name))
            elif sym is not None and not sym.isspace():
                self.toks.append(("sym", sym))
        self.i = 0

    def error(self, msg):
        return SpecError(f"cannot parse {self.text!r}: {msg}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise self.error(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok[1]

    def spec(self) -> GroupSpec:
        name = self.take("name")
        self.take("sym", "(")
        if name in _SIMPLE:
            cls, nargs = _SIMPLE[name]
            args = [self.take("num")]
            for _ in range(nargs - 1):
                self.take("sym", ",")
                args.append(self.take("num"))
            self.take("sym", ")")
            return cls(*args)
        if name == "AbelianP":
            p = self.take("num")
            self.take("sym", ",")
            self.take("sym", "[")
            parts = [self.take("num")]
            while self.peek() == ("sym", ","):
                self.take("sym", ",")
                parts.append(self.take("num"))
            self.take("sym", "]")
            self.take("sym", ")")
            return AbelianP(p, tuple(parts))
        if name == "Product":
            factors = [self.spec()]
            while self.peek() == ("sym", ","):
                self.take("sym", ",")
                factors.append(self.spec())
            self.take("sym", ")")
            return DirectProduct(tuple(factors))
        raise self.error(f"unknown group family {name!r}")


def parse_spec(text: str) -> GroupSpec:
    parser = _Parser(text)
    spec = parser.spec()
    if parser.i != len(parser.toks):
        raise parser.error("trailing input")
    return spec
