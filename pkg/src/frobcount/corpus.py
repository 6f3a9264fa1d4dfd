"""Group corpora: the shipped default list and the corpus file format.

A corpus file holds one group spec per line; ``#`` starts a comment and
blank lines are skipped.  Duplicate specs are rejected.
"""

from __future__ import annotations

import itertools
from importlib import resources
from pathlib import Path

from ._arith import is_prime
from .groups import (GL2, AbelianP, Alternating, Cyclic, Dihedral, DirectProduct,
                     ElemAbelian, FrobeniusAffine, GroupSpec, SpecError, Symmetric,
                     parse_spec)
from .hallpoly import partitions

#: Largest product order admitted to the default corpus.
PRODUCT_ORDER_CAP = 100_000

PRODUCT_FACTORS = ("GL2(3)", "GL2(4)", "GL2(5)", "FrobeniusAffine(7,3)",
                   "FrobeniusAffine(13,3)", "FrobeniusAffine(19,3)", "Alternating(5)")


def default_corpus_specs() -> list[GroupSpec]:
    """Regenerate the default corpus (the shipped file is this list, one per line)."""
    out: list[GroupSpec] = [Cyclic(n) for n in range(1, 65)]
    out += [Dihedral(n) for n in range(6, 65, 2)]
    out += [Symmetric(n) for n in range(2, 8)]
    out += [Alternating(n) for n in range(3, 8)]
    out += [GL2(q) for q in (2, 3, 4, 5, 7, 8, 9)]
    for p in (2, 3, 5):
        k = 2
        while p ** k <= 243:
            out.append(ElemAbelian(p, k))
            k += 1
    # one- and all-ones partitions are already present as Cyclic / ElemAbelian
    for n in range(2, 6):
        for lam in partitions(n):
            if len(lam) > 1 and lam[0] > 1:
                out.append(AbelianP(3, lam))
    for p in (2, 3, 5):
        for q in range(3, 101):
            if is_prime(q) and (q - 1) % p == 0:
                out.append(FrobeniusAffine(q, p))
    factors = [parse_spec(t) for t in PRODUCT_FACTORS]
    for f, g in itertools.combinations_with_replacement(factors, 2):
        if f.order * g.order <= PRODUCT_ORDER_CAP:
            out.append(DirectProduct((f, g)))
    return out


def parse_corpus(text: str) -> list[GroupSpec]:
    specs = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            spec = parse_spec(line)
        except SpecError as exc:
            raise SpecError(f"line {lineno}: {exc}") from None
        if spec.text in seen:
            raise SpecError(f"line {lineno}: duplicate spec {spec.text}")
        seen.add(spec.text)
        specs.append(spec)
    return specs


def format_corpus(specs: list[GroupSpec]) -> str:
    return "".join(s.text + "\n" for s in specs)


def read_corpus(path: str | Path) -> list[GroupSpec]:
    return parse_corpus(Path(path).read_text())


def default_corpus() -> list[GroupSpec]:
    text = resources.files("frobcount").joinpath("data/default_corpus.txt").read_text()
    return parse_corpus(text)
