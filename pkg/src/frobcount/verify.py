"""Congruence checks over groups and the (p, n) classifier.

The checks are computational restatements of three facts about the number
``N`` of subgroups of order ``p**a`` in a finite group ``G``:

* ``N = 1 (mod p)`` whenever ``p**a`` divides ``|G|``;
* ``N`` is ``1`` or ``1 + p`` modulo ``p**2`` whenever ``p**(a+1)`` divides ``|G|``;
* for odd ``p`` and ``1 < p**a < |P|`` (``P`` Sylow), ``N = 1 (mod p**2)``
  exactly when ``P`` is cyclic.

The classifier searches a finite corpus for groups realizing a given count.
A failed search is reported as such and never as a proof of non-existence;
only the entries of :data:`FACTS` assert that a number is pseudo.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache

from ._arith import factorize, is_prime, p_part_exponent
from .counting import (PreconditionError, bruteforce_counts, count_profile, count_sylow,
                       count_subgroups_of_order, is_cyclic_p_group, sylow_subgroup)
from .groups import DirectProduct, GroupSpec, build, parse_spec
from .perm import PermGroup


class TheoremViolation(AssertionError):
    """A computed count contradicts one of the congruences."""


@lru_cache(maxsize=None)
def corpus_group(text: str) -> PermGroup:
    """Build (once) the group named by ``text``; counts cache on the group."""
    return build(parse_spec(text))


def _group(g) -> PermGroup:
    if isinstance(g, PermGroup):
        return g
    if isinstance(g, str):
        return corpus_group(parse_spec(g).text)
    return corpus_group(g.text)


def _primes(G: PermGroup) -> list[int]:
    return sorted(factorize(G.order()))


@dataclass(frozen=True)
class Residue:
    p: int
    a: int
    count: int
    residue: int


def frobenius_table(G) -> list[Residue]:
    """Counts modulo ``p`` for every prime ``p`` and every valid ``a``."""
    G = _group(G)
    if G.order() == 1:
        return [Residue(1, 0, 1, 1)]
    out = []
    for p in _primes(G):
        for a, n in enumerate(count_profile(G, p)):
            out.append(Residue(p, a, n, n % p))
    return out


def verify_frobenius(G) -> list[Residue]:
    rows = frobenius_table(G)
    bad = [r for r in rows if r.p > 1 and r.residue != 1]
    if bad:
        raise TheoremViolation(f"count not 1 mod p: {bad}")
    return rows


def kulakoff_hall_table(G) -> list[Residue]:
    """Counts modulo ``p**2`` for every ``a`` with ``p**(a+1)`` dividing ``|G|``."""
    G = _group(G)
    out = []
    for p in _primes(G):
        prof = count_profile(G, p)
        for a, n in enumerate(prof[:-1]):
            out.append(Residue(p, a, n, n % (p * p)))
    return out


def verify_kulakoff_hall(G) -> list[Residue]:
    rows = kulakoff_hall_table(G)
    bad = [r for r in rows if r.residue not in (1, 1 + r.p)]
    if bad:
        raise TheoremViolation(f"count not 1 or 1+p mod p^2: {bad}")
    return rows


def verify_cyclic_criterion(G, p: int) -> bool:
    """Check: some ``1 < p**a < |P|`` count is ``1 mod p**2`` iff ``P`` is cyclic.

    Every such ``a`` is examined, so the biconditional is tested per ``a``.
    """
    if p == 2:
        raise PreconditionError("the cyclic-Sylow criterion fails for p = 2")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    G = _group(G)
    m = p_part_exponent(G.order(), p)
    if m < 2:
        raise PreconditionError(f"Sylow {p}-subgroup has order below {p}^2")
    cyclic = is_cyclic_p_group(sylow_subgroup(G, p))
    prof = count_profile(G, p)
    return all((prof[a] % (p * p) == 1) == cyclic for a in range(1, m))


def verify_sylow_multiplicativity(spec1, spec2, p: int) -> bool:
    """Sylow counts multiply over a direct product."""
    s1 = parse_spec(spec1) if isinstance(spec1, str) else spec1
    s2 = parse_spec(spec2) if isinstance(spec2, str) else spec2
    prod = DirectProduct((s1, s2))
    n = count_sylow(_group(prod), p)
    return n == count_sylow(_group(s1), p) * count_sylow(_group(s2), p)


# -- classification -----------------------------------------------------------

class Status(str, enum.Enum):
    NOT_FROBENIUS_BY_THM1 = "NOT_FROBENIUS_BY_THM1"
    NOT_FROBENIUS_BY_THM2 = "NOT_FROBENIUS_BY_THM2"
    WITNESS_FOUND = "WITNESS_FOUND"
    NO_WITNESS_IN_CORPUS = "NO_WITNESS_IN_CORPUS"
    KNOWN_PSEUDO = "KNOWN_PSEUDO"


@dataclass(frozen=True)
class Fact:
    p: int
    n: int | None  # None: every odd n
    kind: str
    citation: str

    def applies(self, p: int, n: int) -> bool:
        if p != self.p:
            return False
        return n % 2 == 1 if self.n is None else n == self.n


FACTS = (
    Fact(2, None, "SYLOW",
         "published result: every odd number is a Sylow 2-number"),
    Fact(3, 22, "FROBENIUS_BUT_PSEUDO_SYLOW",
         "published result: no finite group has exactly 22 Sylow 3-subgroups, "
         "while C9 x C3 x C3 has 22 subgroups of order 9"),
    Fact(3, 46, "PSEUDO_FROBENIUS",
         "published result: no finite group has exactly 46 subgroups of order 3^a "
         "for any a (proof relies on the classification of finite simple groups)"),
    Fact(5, 51, "PSEUDO_FROBENIUS",
         "published result: no finite group has exactly 51 subgroups of order 5^a "
         "for any a (checked against the primitive groups of degree 51)"),
)


def facts_for(p: int, n: int) -> list[Fact]:
    return [f for f in FACTS if f.applies(p, n)]


@dataclass(frozen=True)
class Verdict:
    p: int
    n: int
    status: Status
    witness: tuple[str, int] | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "status": self.status.value,
            "witness": None if self.witness is None
            else {"spec": self.witness[0], "a": self.witness[1]},
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _ordered(corpus) -> list[GroupSpec]:
    specs = [parse_spec(s) if isinstance(s, str) else s for s in corpus]
    return sorted(specs, key=lambda s: (s.order, s.text))


def _search(p: int, n: int, specs, sylow_only: bool, max_a: int | None):
    for spec in specs:
        m = p_part_exponent(spec.order, p)
        G = _group(spec)
        if sylow_only:
            if count_sylow(G, p) == n:
                return spec, m
            continue
        if n == 1:
            return spec, 0
        top = m if max_a is None else min(m, max_a)
        if top < 1:
            continue
        prof = count_profile(G, p)
        for a in range(1, top + 1):
            if prof[a] == n:
                return spec, a
    return None


def recount(spec: GroupSpec, p: int, a: int) -> int:
    """Count on a freshly built group, by the oracle when it is small enough."""
    G = build(spec)
    if G.order() <= 2000:
        return bruteforce_counts(G, p)[a]
    return count_subgroups_of_order(G, p, a).count


def classify_number(p: int, n: int, corpus, max_a: int | None = None) -> Verdict:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if n < 1:
        raise PreconditionError("n must be positive")
    specs = _ordered(corpus)
    if not specs:
        raise PreconditionError("empty corpus")
    facts = facts_for(p, n)
    notes = [f.citation for f in facts]

    if n % p != 1 % p:
        return Verdict(p, n, Status.NOT_FROBENIUS_BY_THM1, None,
                       (f"{n} is not 1 mod {p}",) + tuple(notes))
    r = n % (p * p)
    sylow_only = r not in (1, 1 + p)
    found = None
    if sylow_only:
        notes.insert(0, f"{n} mod {p * p} = {r}: only a count of Sylow subgroups can equal {n}")
        found = _search(p, n, specs, True, max_a)
    else:
        if r == 1 and n > 1:
            notes.insert(0, f"{n} = 1 mod {p * p}: any realization implies a Sylow "
                            f"{p}-number realization")
            found = _search(p, n, specs, True, max_a)
        if found is None:
            found = _search(p, n, specs, False, max_a)

    pseudo = [f for f in facts if f.kind == "PSEUDO_FROBENIUS"]
    if found is not None:
        spec, a = found
        if pseudo:
            raise RuntimeError(f"{spec.text} realizes the known pseudo number {n} "
                               f"for p={p}; counting is broken")
        if recount(spec, p, a) != n:
            raise RuntimeError(f"witness {spec.text}, a={a} failed its recount")
        return Verdict(p, n, Status.WITNESS_FOUND, (spec.text, a), tuple(notes))

    notes.insert(0, "no witness in corpus (bounded search, not a proof)")
    if pseudo:
        # the search result stays the status; the certified fact rides along
        notes = [f"{Status.KNOWN_PSEUDO.value} ({f})" if f == pseudo[0].citation else f
                 for f in notes]
        return Verdict(p, n, Status.NO_WITNESS_IN_CORPUS, None, tuple(notes))
    if sylow_only:
        return Verdict(p, n, Status.NOT_FROBENIUS_BY_THM2, None, tuple(notes))
    return Verdict(p, n, Status.NO_WITNESS_IN_CORPUS, None, tuple(notes))


def scan_range(p: int, n_max: int, corpus, max_a: int | None = None) -> list[Verdict]:
    """Verdicts for every ``n <= n_max`` that passes the mod ``p**2`` filter."""
    if n_max > 1000:
        raise PreconditionError("scan limited to n <= 1000")
    return [classify_number(p, n, corpus, max_a)
            for n in range(1, n_max + 1) if n % (p * p) in (1 % (p * p), 1 + p)]
