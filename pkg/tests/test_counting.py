import json

import pytest

from frobcount._arith import factorize
from frobcount.corpus import default_corpus
from frobcount.counting import (PreconditionError, abelian_counts_exhaustive,
                                bruteforce_counts, count_profile, count_subgroups_of_order,
                                count_sylow, is_cyclic_p_group, p_subgroups_of_order,
                                sylow_subgroup)
from frobcount.groups import AbelianP, build, parse_spec
from frobcount.perm import normalizer_bruteforce
from frobcount.verify import corpus_group

SMALL = [s.text for s in default_corpus() if s.order <= 2000]


@pytest.mark.parametrize("text", SMALL)
def test_engine_matches_oracle(text):
    G = corpus_group(text)
    for p in factorize(G.order()):
        assert count_profile(G, p) == bruteforce_counts(G, p)


@pytest.mark.parametrize("text, p, order", [
    ("Symmetric(4)", 2, 8), ("GL2(3)", 3, 3), ("AbelianP(3,[2,1,1])", 3, 81),
    ("GL2(9)", 3, 9), ("Alternating(7)", 2, 8),
])
def test_sylow_subgroup(text, p, order):
    P = sylow_subgroup(corpus_group(text), p)
    assert P.order == order
    assert P.is_subgroup()


def test_p_subgroups_of_order():
    D8 = corpus_group("Dihedral(8)")
    assert len(p_subgroups_of_order(sylow_subgroup(D8, 2), 1)) == 5
    E = corpus_group("ElemAbelian(3,3)")
    assert len(p_subgroups_of_order(sylow_subgroup(E, 3), 1)) == 13
    C = corpus_group("Cyclic(27)")
    P = sylow_subgroup(C, 3)
    assert [len(p_subgroups_of_order(P, a)) for a in range(4)] == [1, 1, 1, 1]
    for H in p_subgroups_of_order(sylow_subgroup(D8, 2), 2):
        assert H.is_subgroup() and H.order == 4


@pytest.mark.parametrize("text, p, a, n", [
    ("AbelianP(3,[2,1,1])", 3, 2, 22),
    ("Symmetric(4)", 2, 2, 7),
    ("ElemAbelian(3,3)", 3, 1, 13),
    ("GL2(9)", 3, 0, 1),
    ("Symmetric(6)", 2, 3, 255),
])
def test_counts(text, p, a, n):
    assert count_subgroups_of_order(corpus_group(text), p, a).count == n


@pytest.mark.parametrize("text, p, n", [
    ("GL2(4)", 2, 5), ("GL2(9)", 3, 10), ("FrobeniusAffine(19,3)", 3, 19),
    ("AbelianP(3,[2,1,1])", 3, 1), ("Cyclic(60)", 5, 1), ("Alternating(5)", 5, 6),
])
def test_count_sylow(text, p, n):
    assert count_sylow(corpus_group(text), p) == n


def test_preconditions():
    G = corpus_group("Cyclic(9)")
    with pytest.raises(PreconditionError):
        count_subgroups_of_order(G, 3, 3)
    with pytest.raises(PreconditionError):
        count_subgroups_of_order(G, 2, 1)
    with pytest.raises(PreconditionError):
        count_subgroups_of_order(G, 4, 1)
    assert count_subgroups_of_order(G, 2, 0).count == 1


@pytest.mark.parametrize("text", ["Symmetric(4)", "GL2(3)", "Alternating(5)", "Dihedral(24)"])
def test_report_orbits(text):
    G = corpus_group(text)
    for p in factorize(G.order()):
        for a in range(len(count_profile(G, p))):
            r = count_subgroups_of_order(G, p, a)
            assert r.count == sum(o.length for o in r.orbits)
            if a == 0:
                assert r.count == 1 and r.orbits[0].rep is None
                continue
            for o in r.orbits:
                N = normalizer_bruteforce(G, o.rep)
                assert o.length == G.order() // N.order
                assert o.rep.order == o.rep_size == p ** a


def test_report_json():
    r = count_subgroups_of_order(corpus_group("Symmetric(4)"), 2, 2)
    text = r.to_json()
    assert json.dumps(json.loads(text), sort_keys=True) == text
    d = json.loads(text)
    assert d["count"] == "7" and d["mod_p"] == 1 and d["mod_p2"] == 3
    assert d["sylow_order"] == "8"
    assert set(d) == {"spec", "p", "a", "count", "mod_p", "mod_p2", "orbits", "sylow_order"}


def test_cyclic_detection():
    assert is_cyclic_p_group(sylow_subgroup(corpus_group("Cyclic(27)"), 3))
    assert not is_cyclic_p_group(sylow_subgroup(corpus_group("AbelianP(3,[2,1,1])"), 3))
    assert not is_cyclic_p_group(sylow_subgroup(corpus_group("Dihedral(8)"), 2))
    assert is_cyclic_p_group(sylow_subgroup(corpus_group("FrobeniusAffine(19,3)"), 3))


@pytest.mark.parametrize("parts, p", [((2, 1, 1), 3), ((3, 1), 2), ((2, 2), 3), ((1, 1, 1, 1), 2),
                                      ((2, 1), 5), ((4,), 2), ((3, 2, 1), 2)])
def test_abelian_exhaustive_matches_oracle(parts, p):
    G = build(AbelianP(p, parts))
    assert abelian_counts_exhaustive(parts, p) == bruteforce_counts(G, p)
    assert abelian_counts_exhaustive(parts, p) == count_profile(G, p)


def test_abelian_exhaustive_input():
    with pytest.raises(ValueError):
        abelian_counts_exhaustive([], 2)
    with pytest.raises(PreconditionError):
        abelian_counts_exhaustive([1], 4)
    assert abelian_counts_exhaustive([1, 2], 3) == abelian_counts_exhaustive([2, 1], 3)
