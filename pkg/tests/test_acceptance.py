"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``) for the bare report.
"""

import itertools
import random
import sys

import pytest

from frobcount._arith import factorize, p_part_exponent
from frobcount.corpus import PRODUCT_ORDER_CAP, default_corpus
from frobcount.counting import (abelian_counts_exhaustive, count_subgroups_of_order, count_sylow,
                                is_cyclic_p_group, p_subgroups_of_order, sylow_subgroup)
from frobcount.fields import prime_power
from frobcount.groups import DirectProduct
from frobcount.hallpoly import hall_count_order, hall_count_type, partitions
from frobcount.perm import enumerate_elements, orbit, stabilizer_order
from frobcount.verify import (Status, corpus_group, scan_range, verify_cyclic_criterion,
                              verify_frobenius, verify_kulakoff_hall,
                              verify_sylow_multiplicativity)

# witnesses in ascending corpus order (group order, then spec text); frozen from a scan
SCAN_P3_46 = {
    1: ("Cyclic(1)", 0),
    4: ("ElemAbelian(3,2)", 1),
    10: ("Alternating(5)", 1),
    13: ("ElemAbelian(3,3)", 1),
    19: ("FrobeniusAffine(19,3)", 1),
    22: ("AbelianP(3,[2,1,1])", 2),
    28: ("Product(GL2(3),FrobeniusAffine(7,3))", 2),
    31: ("FrobeniusAffine(31,3)", 1),
    37: ("FrobeniusAffine(37,3)", 1),
    40: ("ElemAbelian(3,4)", 1),
    46: None,
}


def c1_order_nine_in_c9_c3_c3():
    G = corpus_group("AbelianP(3,[2,1,1])")
    engine = count_subgroups_of_order(G, 3, 2).count
    formula = hall_count_order((2, 1, 1), 2, 3)
    by_type = (hall_count_type((2, 1, 1), (2,), 3), hall_count_type((2, 1, 1), (1, 1), 3))
    subs = p_subgroups_of_order(sylow_subgroup(G, 3), 2)
    cyclic = sum(is_cyclic_p_group(H) for H in subs)
    ok = engine == formula == 22 and by_type == (9, 13) and (cyclic, len(subs) - cyclic) == (9, 13)
    return ok, f"engine={engine} hall={formula} types={by_type} engine types=({cyclic},{len(subs) - cyclic})"


def c2_gl2_sylow():
    got = {}
    for q in (2, 3, 4, 5, 7, 8, 9):
        p, _ = prime_power(q)
        got[q] = count_sylow(corpus_group(f"GL2({q})"), p)
    return all(n == 1 + q for q, n in got.items()), f"n_p(GL2(q)) = {got}"


def c3_elementary_abelian():
    got = {p: count_subgroups_of_order(corpus_group(f"ElemAbelian({p},3)"), p, 1).count
           for p in (2, 3, 5)}
    return all(n == 1 + p + p * p for p, n in got.items()), f"order-p counts {got}"


def c4_dihedral_eight():
    n = count_subgroups_of_order(corpus_group("Dihedral(8)"), 2, 1).count
    return n == 5, f"count={n}"


def c5_affine_nineteen():
    n = count_sylow(corpus_group("FrobeniusAffine(19,3)"), 3)
    return n == 19, f"n_3={n}"


def c6_congruences_over_corpus():
    rows = 0
    bad = []
    for spec in default_corpus():
        try:
            rows += len(verify_frobenius(spec.text)) + len(verify_kulakoff_hall(spec.text))
        except AssertionError as exc:
            bad.append(f"{spec.text}: {exc}")
    return not bad, f"{rows} (p,a) checks, failures: {bad or 'none'}"


def c7_cyclic_criterion():
    checked, bad = 0, []
    for spec in default_corpus():
        for p in factorize(spec.order):
            if p > 2 and p_part_exponent(spec.order, p) >= 2:
                checked += 1
                if not verify_cyclic_criterion(spec.text, p):
                    bad.append((spec.text, p))
    D8 = corpus_group("Dihedral(8)")
    n = count_subgroups_of_order(D8, 2, 1).count
    counterexample = n % 4 == 1 and not is_cyclic_p_group(sylow_subgroup(D8, 2))
    return (not bad and counterexample,
            f"{checked} (group,p) pairs, failures: {bad or 'none'}; D8 p=2: {n} = 1 mod 4 "
            f"with noncyclic Sylow -> {counterexample}")


def c8_multiplicativity(pairs: int = 20, seed: int = 20240):
    n28 = count_sylow(corpus_group("Product(GL2(3),FrobeniusAffine(7,3))"), 3)
    ok = n28 == 28 and verify_sylow_multiplicativity("GL2(3)", "FrobeniusAffine(7,3)", 3)
    rng = random.Random(seed)
    specs = [s for s in default_corpus() if not isinstance(s, DirectProduct) and s.order > 1]
    checked = []
    while len(checked) < pairs:
        a, b = rng.choice(specs), rng.choice(specs)
        if a.order * b.order > PRODUCT_ORDER_CAP:
            continue
        common = sorted(set(factorize(a.order)) | set(factorize(b.order)))
        p = rng.choice(common)
        good = verify_sylow_multiplicativity(a, b, p)
        ok &= good
        checked.append(f"{a.text}x{b.text}@{p}:{'ok' if good else 'FAIL'}")
    return ok, f"n_3 = {n28}; random: " + ", ".join(checked)


def c9_hall_oracle():
    total, bad = 0, []
    for p in (2, 3, 5):
        n = 1
        while p ** n <= 3 ** 6:
            for lam in partitions(n):
                counts = abelian_counts_exhaustive(lam, p)
                for a in range(n + 1):
                    total += 1
                    if hall_count_order(lam, a, p) != counts[a]:
                        bad.append((p, lam, a))
            n += 1
    return not bad, f"{total} (p,lambda,a) cases, mismatches: {bad or 'none'}"


def c10_scan_p3():
    verdicts = scan_range(3, 46, default_corpus())
    got = {v.n: v.witness for v in verdicts}
    required = [4, 10, 13, 19, 22, 28, 37, 40]
    ok = (got == SCAN_P3_46 and all(got[n] is not None for n in required)
          and verdicts[-1].n == 46 and verdicts[-1].status is Status.NO_WITNESS_IN_CORPUS)
    shown = ", ".join(f"{n}:{w[0] if w else 'none'}" for n, w in got.items())
    return ok, shown


def c11_bsgs_and_orbit_stabilizer():
    groups, points, bad = 0, 0, []
    for spec in default_corpus():
        G = corpus_group(spec.text)
        if G.order() > 100_000:
            continue
        groups += 1
        if len(enumerate_elements(G)) != G.order():
            bad.append(spec.text)
        for w in range(G.degree):
            points += 1
            if len(orbit(G, w)) * stabilizer_order(G, w) != G.order():
                bad.append((spec.text, w))
    return not bad, f"{groups} groups, {points} points, failures: {bad or 'none'}"


CRITERIA = {
    1: ("C9xC3xC3 has 22 subgroups of order 9 (engine and Hall formula)", c1_order_nine_in_c9_c3_c3),
    2: ("GL2(q) has 1+q Sylow p-subgroups", c2_gl2_sylow),
    3: ("ElemAbelian(p,3) has 1+p+p^2 subgroups of order p", c3_elementary_abelian),
    4: ("Dihedral(8) has 5 subgroups of order 2", c4_dihedral_eight),
    5: ("FrobeniusAffine(19,3) has 19 Sylow 3-subgroups", c5_affine_nineteen),
    6: ("mod p and mod p^2 congruences on the whole corpus", c6_congruences_over_corpus),
    7: ("cyclic-Sylow criterion for odd p; D8 fails it at p=2", c7_cyclic_criterion),
    8: ("Sylow counts multiply over direct products", c8_multiplicativity),
    9: ("Hall formula equals exhaustive abelian counts", c9_hall_oracle),
    10: ("p=3 scan to 46: witness list, none for 46", c10_scan_p3),
    11: ("BSGS order = enumeration; orbit-stabilizer everywhere", c11_bsgs_and_orbit_stabilizer),
}


def report(number: int) -> tuple[bool, str]:
    title, check = CRITERIA[number]
    ok, detail = check()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = report(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
