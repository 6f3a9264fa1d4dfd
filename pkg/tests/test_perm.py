import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frobcount.groups import (GL2, Alternating, Cyclic, Dihedral, DirectProduct, Symmetric,
                              build)
from frobcount.perm import (Permutation, PermGroup, SubgroupHandle, TooLargeError, compose,
                            contains, enumerate_elements, fixed_point_count, is_2_transitive,
                            is_block, is_primitive, is_transitive, minimal_blocks,
                            normalizer_bruteforce, orbit, orbits, stabilizer_order)
from frobcount.counting import sylow_subgroup


def perms(degree):
    return st.permutations(list(range(degree))).map(Permutation)


def cyc(d, *cycles):
    return Permutation.from_cycles(d, *cycles)


# -- Permutation ----------------------------------------------------------------

def test_compose_convention_right_factor_first():
    p, q = cyc(3, (0, 1)), cyc(3, (1, 2))
    r = compose(p, q)
    assert all(r(i) == p(q(i)) for i in range(3))
    assert r.images == (1, 2, 0)
    assert p * q == r


def test_compose_identity_and_involution():
    c = cyc(3, (0, 1, 2))
    assert compose(Permutation.identity(3), c) == c
    t = cyc(2, (0, 1))
    assert compose(t, t).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@given(st.integers(1, 9).flatmap(lambda d: st.tuples(perms(d), perms(d), perms(d))))
def test_group_laws(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert (p.inverse() * p).is_identity()
    assert p ** p.order() == Permutation.identity(p.degree)


@given(st.integers(1, 9).flatmap(perms))
def test_cycles_round_trip(p):
    assert Permutation.from_cycles(p.degree, *p.cycles()) == p


def test_fixed_point_count():
    assert fixed_point_count(Permutation.identity(46)) == 46
    double = cyc(46, tuple(range(23)), tuple(range(23, 46)))
    assert fixed_point_count(double) == 0
    assert double.order() == 23
    assert fixed_point_count(cyc(4, (0, 1))) == 2


# -- BSGS and membership --------------------------------------------------------

@pytest.mark.parametrize("spec, order", [
    (Symmetric(5), 120), (GL2(9), 5760), (Cyclic(12), 12), (Alternating(6), 360),
    (DirectProduct((GL2(3), Dihedral(10))), 480),
])
def test_order(spec, order):
    assert build(spec).order() == order


def test_membership_examples():
    A4 = build(Alternating(4))
    assert not contains(A4, cyc(4, (0, 1)))
    assert contains(A4, Permutation.identity(4))
    C4 = build(Cyclic(4))
    assert contains(C4, cyc(4, (0, 2), (1, 3)))


@pytest.mark.parametrize("spec", [Symmetric(5), GL2(4), Dihedral(20), Alternating(6)])
def test_sifting_agrees_with_table(spec):
    G = build(spec)
    tab = G.table()
    members = {tuple(r) for r in tab.rows.tolist()}
    rng = random.Random(7)
    d = G.degree
    for _ in range(300):
        img = list(range(d))
        rng.shuffle(img)
        p = Permutation(img)
        assert contains(G, p) == (p.images in members)
    for i in rng.sample(range(len(tab)), min(50, len(tab))):
        assert contains(G, tab.element(i))


def test_element_table():
    for spec, n in [(Symmetric(4), 24), (GL2(3), 48), (Dihedral(8), 8)]:
        tab = enumerate_elements(build(spec))
        assert len(tab) == n
        assert tab.element(0).is_identity()
        rows = [tuple(r) for r in tab.rows.tolist()]
        assert rows == sorted(rows)


def test_table_multiplication_matches_compose():
    G = build(Symmetric(4))
    tab = G.table()
    for i, j in itertools.product(range(0, 24, 5), range(0, 24, 7)):
        assert tab.element(int(tab.mul(i, j))) == tab.element(i) * tab.element(j)
    assert all(tab.mul(i, int(tab.inverse[i])) == 0 for i in range(24))


def test_enumeration_cap():
    with pytest.raises(TooLargeError):
        enumerate_elements(build(Symmetric(7)), cap=1000)


# -- actions --------------------------------------------------------------------

def test_orbits():
    assert orbit(build(Symmetric(4)), 0) == {0, 1, 2, 3}
    S3xS3 = build(DirectProduct((Symmetric(3), Symmetric(3))))
    assert orbit(S3xS3, 0) == {0, 1, 2}
    assert [sorted(o) for o in orbits(S3xS3)] == [[0, 1, 2], [3, 4, 5]]
    assert orbit(build(Cyclic(6)), 2) == set(range(6))


def test_transitivity():
    A5 = build(Alternating(5))
    assert is_2_transitive(A5)
    C4 = build(Cyclic(4))
    assert is_transitive(C4) and not is_2_transitive(C4)
    assert not is_2_transitive(build(GL2(3)))


def test_blocks():
    C4 = build(Cyclic(4))
    systems = minimal_blocks(C4)
    assert any(frozenset({0, 2}) in s for s in systems)
    assert not is_primitive(C4)
    assert is_primitive(build(Symmetric(5)))
    D12 = build(Dihedral(12))
    sizes = {len(s[0]) for s in minimal_blocks(D12)}
    assert sizes == {2, 3}
    with pytest.raises(ValueError):
        minimal_blocks(build(DirectProduct((Cyclic(2), Cyclic(3)))))


@pytest.mark.parametrize("spec", [Cyclic(12), Dihedral(24), Symmetric(5), Alternating(5),
                                  GL2(3), GL2(5), Dihedral(18)])
def test_block_images_and_hierarchy(spec):
    G = build(spec)
    gens = list(G.generators)
    for system in minimal_blocks(G):
        for B in system:
            assert is_block(G, B)
            for g in gens:
                image = frozenset(g(x) for x in B)
                assert image in system
    if is_2_transitive(G):
        assert is_primitive(G)
    if is_primitive(G):
        assert is_transitive(G)


def test_normalizer():
    S3 = build(Symmetric(3))
    Q = S3.table().closure([S3.table().index(cyc(3, (0, 1, 2)))])
    assert normalizer_bruteforce(S3, Q).order == 6
    S4 = build(Symmetric(4))
    P = sylow_subgroup(S4, 2)
    N = normalizer_bruteforce(S4, P)
    assert N.order == 8 and S4.order() // N.order == 3
    C12 = build(Cyclic(12))
    Q = C12.table().closure([3])
    assert normalizer_bruteforce(C12, Q).order == 12


def test_subgroup_handle_invariants():
    G = build(GL2(3))
    tab = G.table()
    H = tab.closure([5, 17])
    assert H.is_subgroup()
    assert 0 in H.members
    assert G.order() % H.order == 0
    assert H == SubgroupHandle(tab, tuple(H.members))


@pytest.mark.parametrize("spec", [Symmetric(4), GL2(4), Dihedral(30), Cyclic(9)])
def test_orbit_stabilizer(spec):
    G = build(spec)
    for w in range(G.degree):
        assert len(orbit(G, w)) * stabilizer_order(G, w) == G.order()


def test_rank_sum_identity():
    # sum over g of fix(g)^2 counts pairs fixed by g; divided by |G| it is the rank
    G = build(Symmetric(4))
    rows = G.table().rows
    fix = (rows == np.arange(4)).sum(axis=1)
    assert (fix ** 2).sum() == 2 * len(rows)
