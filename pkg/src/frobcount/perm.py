"""Permutations and permutation groups.

Points are ``0 .. d-1``.  A permutation stores the image of every point, and
products follow the convention ``(p * q)(i) == p(q(i))``: the right factor
acts first.  This matches a left action ``g . (h . w) == (gh) . w``.

Groups carry a lazily built base and strong generating set (deterministic
Schreier-Sims, base points picked in increasing order), which gives the order
and exact membership by sifting.  Small groups can additionally be enumerated
into an :class:`ElementTable`, which powers the brute-force routines
(stabilizers, normalizers, the rank criterion) and the subgroup counter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

#: Default limit for exhaustive element enumeration.
ENUMERATION_CAP = 1_000_000


class TooLargeError(RuntimeError):
    """Raised when an operation would need an element table above the cap."""


class Permutation:
    """An immutable permutation of ``{0, ..., d-1}``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, (0, 1), (2, 3))``."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                if a in seen:
                    raise ValueError("cycles are not disjoint")
                seen.add(a)
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p * q``, the map ``i -> p(q(i))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    pi = p.images
    return Permutation(pi[j] for j in q.images)


def fixed_point_count(p: Permutation) -> int:
    return sum(1 for i, j in enumerate(p.images) if i == j)


# -- tuple-level helpers used by Schreier-Sims -------------------------------

def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(p[j] for j in q)


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _orbit_transversal(gens: list[tuple], point: int, degree: int) -> dict[int, tuple]:
    """Breadth-first orbit of ``point`` with coset representatives ``u(point) = b``."""
    trans = {point: tuple(range(degree))}
    queue = [point]
    for b in queue:
        u = trans[b]
        for g in gens:
            c = g[b]
            if c not in trans:
                trans[c] = _mul(g, u)
                queue.append(c)
    return trans


@dataclass(frozen=True)
class _Level:
    base_point: int
    pos: np.ndarray  # point -> orbit position, -1 outside the orbit
    u: np.ndarray  # (orbit length, d) transversal images
    uinv: np.ndarray
    stride: int


class BSGS:
    """Base, strong generators and transversals of a permutation group."""

    def __init__(self, degree: int, base: list[int], strong_generators: list[tuple],
                 transversals: list[dict[int, tuple]]):
        self.degree = degree
        self.base = tuple(base)
        self.strong_generators = tuple(Permutation(s) for s in strong_generators)
        self.transversals = transversals
        self.orbit_lengths = tuple(len(t) for t in transversals)
        order = 1
        for n in self.orbit_lengths:
            order *= n
        self.order = order

        levels = []
        stride = order
        for b, trans in zip(self.base, transversals):
            pts = sorted(trans)
            stride //= len(pts)
            pos = np.full(degree, -1, dtype=np.intp)
            pos[pts] = np.arange(len(pts))
            u = np.array([trans[c] for c in pts], dtype=np.intp)
            uinv = np.empty_like(u)
            rows = np.arange(len(pts))[:, None]
            uinv[rows, u] = np.arange(degree)[None, :]
            levels.append(_Level(b, pos, u, uinv, stride))
        self._levels = levels

    def sift(self, g: tuple) -> tuple[tuple, int]:
        """Sift ``g`` through the chain; return the residue and the drop-out level."""
        for i, (b, trans) in enumerate(zip(self.base, self.transversals)):
            c = g[b]
            if c not in trans:
                return g, i
            g = _mul(_inv(trans[c]), g)
        return g, len(self.base)

    def codes(self, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized sifting of permutation rows.

        Returns ``(codes, ok)``: ``codes`` is a mixed-radix rank in
        ``range(order)`` that is unique per group element, and ``ok`` marks
        rows that are actually members.
        """
        x = np.array(rows, dtype=np.intp, copy=True).reshape(-1, self.degree)
        code = np.zeros(len(x), dtype=np.int64)
        ok = np.ones(len(x), dtype=bool)
        for lvl in self._levels:
            pos = lvl.pos[x[:, lvl.base_point]]
            bad = pos < 0
            if bad.any():
                ok &= ~bad
                pos = np.where(bad, 0, pos)
            code += pos * lvl.stride
            x = np.take_along_axis(lvl.uinv[pos], x, axis=1)
        ok &= (x == np.arange(self.degree)).all(axis=1)
        return code, ok

    def all_rows(self) -> np.ndarray:
        """Every group element as a row, built from transversal products."""
        x = np.arange(self.degree, dtype=np.intp)[None, :]
        for lvl in reversed(self._levels):
            # rows u o e for every transversal element u and partial product e
            x = lvl.u[:, x].reshape(-1, self.degree)
        return x


def schreier_sims(generators: Sequence[Permutation], degree: int) -> BSGS:
    """Deterministic Schreier-Sims."""
    ident = tuple(range(degree))
    strong = [g.images for g in generators if g.images != ident]
    base: list[int] = []

    def moved(g):
        return next(i for i, j in enumerate(g) if i != j)

    for g in strong:
        if all(g[b] == b for b in base):
            base.append(moved(g))

    def gens_at(level):
        fixed = base[:level]
        return [s for s in strong if all(s[b] == b for b in fixed)]

    trans = [_orbit_transversal(gens_at(i), base[i], degree) for i in range(len(base))]

    def sift(g, start):
        for i in range(start, len(base)):
            c = g[base[i]]
            if c not in trans[i]:
                return g, i
            g = _mul(_inv(trans[i][c]), g)
        return g, len(base)

    i = len(base) - 1
    while i >= 0:
        done = True
        gens = gens_at(i)
        for beta in sorted(trans[i]):
            u = trans[i][beta]
            for s in gens:
                h = _mul(_inv(trans[i][s[beta]]), _mul(s, u))
                if h == ident:
                    continue
                res, j = sift(h, i + 1)
                if j < len(base) or res != ident:
                    if j == len(base):
                        base.append(moved(res))
                        trans.append({})
                    strong.append(res)
                    for l in range(i + 1, j + 1):
                        trans[l] = _orbit_transversal(gens_at(l), base[l], degree)
                    i = j
                    done = False
                    break
            if not done:
                break
        if done:
            i -= 1
    return BSGS(degree, base, strong, trans)


class PermGroup:
    """A permutation group given by generators.

    The BSGS and the element table are built on first use and cached; the
    group itself never changes.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        generators = list(generators)
        if not generators:
            if degree is None:
                raise ValueError("need generators or a degree")
            generators = [Permutation.identity(degree)]
        d = generators[0].degree
        if degree is not None and degree != d:
            raise ValueError("degree does not match generators")
        if any(g.degree != d for g in generators):
            raise ValueError("generators have different degrees")
        self.degree = d
        self.generators = tuple(generators)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    @cached_property
    def bsgs(self) -> BSGS:
        return schreier_sims(self.generators, self.degree)

    def order(self) -> int:
        return self.bsgs.order

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)

    def table(self, cap: int | None = None) -> "ElementTable":
        """The element table, enumerated once and cached."""
        tab = self.__dict__.get("_table")
        if tab is None:
            tab = enumerate_elements(self, cap)
            self.__dict__["_table"] = tab
        return tab

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(g * h == h * g for i, g in enumerate(gens) for h in gens[i + 1:])


def build_bsgs(G: PermGroup) -> PermGroup:
    G.bsgs
    return G


def contains(G: PermGroup, p: Permutation) -> bool:
    if p.degree != G.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {G.degree}")
    res, _ = G.bsgs.sift(p.images)
    return res == tuple(range(G.degree))


class ElementTable:
    """All elements of a group, sorted lexicographically by image sequence.

    ``rows[i]`` is the image sequence of element ``i``; the identity sits at
    index 0.  Two lookup routes exist: :meth:`index` hashes a permutation,
    :meth:`lookup` sifts a batch of rows through the BSGS.
    """

    def __init__(self, group: PermGroup, rows: np.ndarray):
        self.group = group
        self.rows = rows
        self.rows.setflags(write=False)
        codes, ok = group.bsgs.codes(rows)
        if not ok.all() or len(rows) != group.order():
            raise RuntimeError("element enumeration disagrees with the BSGS")
        self._code_to_index = np.empty(group.order(), dtype=np.intp)
        self._code_to_index[codes] = np.arange(len(rows))

    def __len__(self):
        return len(self.rows)

    def element(self, i: int) -> Permutation:
        return Permutation(self.rows[i].tolist())

    def __getitem__(self, i: int) -> Permutation:
        return self.element(i)

    @cached_property
    def _index_map(self) -> dict[bytes, int]:
        return {r.tobytes(): i for i, r in enumerate(self.rows)}

    def index(self, p: Permutation) -> int:
        """Position of ``p``; ``KeyError`` if ``p`` is not in the group."""
        return self._index_map[np.asarray(p.images, dtype=np.intp).tobytes()]

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Positions of a batch of member rows (vectorized)."""
        codes, ok = self.group.bsgs.codes(rows)
        if not ok.all():
            raise KeyError("row is not a group element")
        return self._code_to_index[codes]

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.empty_like(self.rows)
        n = len(self.rows)
        inv[np.arange(n)[:, None], self.rows] = np.arange(self.group.degree)[None, :]
        return self.lookup(inv)

    def mul(self, i, j) -> np.ndarray:
        """Index of ``rows[i] * rows[j]`` (broadcasting over index arrays)."""
        i, j = np.broadcast_arrays(np.asarray(i), np.asarray(j))
        prod = np.take_along_axis(self.rows[i.ravel()], self.rows[j.ravel()], axis=1)
        return self.lookup(prod).reshape(i.shape)

    def conjugation_map(self, g: int) -> np.ndarray:
        """Array ``c`` with ``rows[c[x]] == g x g^-1`` for every index ``x``."""
        gr = self.rows[g]
        ginv = self.rows[self.inverse[g]]
        return self.lookup(gr[self.rows[:, ginv]])

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index(g) for g in self.group.generators)

    def power_is_identity(self, exponent: int) -> np.ndarray:
        """Boolean mask of elements whose order divides ``exponent``."""
        x = self.rows
        acc = np.broadcast_to(np.arange(self.group.degree), x.shape)
        e = exponent
        while e:
            if e & 1:
                acc = np.take_along_axis(x, acc, axis=1)
            e >>= 1
            if e:
                x = np.take_along_axis(x, x, axis=1)
        return (acc == np.arange(self.group.degree)).all(axis=1)

    def subgroup(self, members: Iterable[int]) -> "SubgroupHandle":
        return SubgroupHandle(self, tuple(sorted(set(int(m) for m in members))))

    def closure(self, gens: Iterable[int]) -> "SubgroupHandle":
        """Subgroup generated by the given element indices."""
        gens = [int(g) for g in gens]
        members = {0}
        frontier = np.array([0], dtype=np.intp)
        while len(frontier):
            new = []
            for g in gens:
                for m in self.mul(g, frontier).tolist():
                    if m not in members:
                        members.add(m)
                        new.append(m)
            frontier = np.array(new, dtype=np.intp)
        return self.subgroup(members)


def enumerate_elements(G: PermGroup, cap: int | None = None) -> ElementTable:
    """Enumerate ``G`` by closing the identity under the generators.

    The closure is independent of the BSGS; the table constructor then checks
    that both agree.
    """
    cap = ENUMERATION_CAP if cap is None else cap
    if G.order() > cap:
        raise TooLargeError(
            f"group of order {G.order()} is too large for exhaustive mode (cap {cap})")
    d = G.degree
    gens = np.array([g.images for g in G.generators], dtype=np.intp)
    ident = np.arange(d, dtype=np.intp)
    seen = {ident.tobytes()}
    found = [ident[None, :]]
    frontier = ident[None, :]
    while len(frontier):
        cand = gens[:, frontier].reshape(-1, d)  # g o x for each generator g
        keep = []
        for k, r in enumerate(cand):
            key = r.tobytes()
            if key not in seen:
                seen.add(key)
                keep.append(k)
        frontier = cand[keep]
        found.append(frontier)
    rows = np.concatenate(found)
    rows = rows[np.lexsort(rows.T[::-1])]
    return ElementTable(G, np.ascontiguousarray(rows))


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    """A subgroup of an enumerated group, as a sorted tuple of table indices."""

    table: ElementTable
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def key(self) -> tuple[int, ...]:
        return self.members

    def __eq__(self, other):
        return (isinstance(other, SubgroupHandle) and self.table is other.table
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self._memberset

    @cached_property
    def _memberset(self) -> frozenset:
        return frozenset(self.members)

    def elements(self) -> list[Permutation]:
        return [self.table.element(i) for i in self.members]

    def is_subgroup(self) -> bool:
        """Closure, identity and Lagrange check (brute force)."""
        idx = np.array(self.members, dtype=np.intp)
        if 0 not in self._memberset or len(self.table) % len(idx):
            return False
        prod = self.table.mul(idx[:, None], idx[None, :])
        return set(np.unique(prod).tolist()) <= self._memberset

    def __repr__(self):
        return f"SubgroupHandle(order={self.order})"


# -- orbits, blocks, transitivity --------------------------------------------

def orbit(G: PermGroup, point: int) -> set[int]:
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    seen = {point}
    queue = [point]
    for b in queue:
        for g in G.generators:
            c = g.images[b]
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def orbits(G: PermGroup) -> list[set[int]]:
    out, seen = [], set()
    for w in range(G.degree):
        if w not in seen:
            o = orbit(G, w)
            seen |= o
            out.append(o)
    return out


def stabilizer_order(G: PermGroup, point: int) -> int:
    """Brute-force count of elements fixing ``point``."""
    rows = G.table().rows
    return int((rows[:, point] == point).sum())


def is_transitive(G: PermGroup) -> bool:
    return len(orbit(G, 0)) == G.degree


def is_2_transitive(G: PermGroup) -> bool:
    """Rank criterion: the average of ``fix(g)**2`` over ``G`` equals 2."""
    if G.degree < 2:
        raise ValueError("2-transitivity needs degree >= 2")
    rows = G.table().rows
    fix = (rows == np.arange(G.degree)).sum(axis=1).astype(np.int64)
    return int((fix * fix).sum()) == 2 * len(rows)


def _minimal_block(G: PermGroup, alpha: int) -> list[frozenset]:
    """Finest block system in which 0 and ``alpha`` share a block (Atkinson)."""
    parent = list(range(G.degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    union(0, alpha)
    queue = [(0, alpha)]
    for a, b in queue:
        for g in G.generators:
            ga, gb = g.images[a], g.images[b]
            if union(ga, gb):
                queue.append((ga, gb))
    classes: dict[int, set] = {}
    for x in range(G.degree):
        classes.setdefault(find(x), set()).add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def minimal_blocks(G: PermGroup) -> list[list[frozenset]]:
    """Distinct nontrivial block systems generated by pairs ``{0, alpha}``.

    Every nontrivial block system of a transitive group is coarser than at
    least one of these, so the list is empty exactly for primitive groups.
    """
    if not is_transitive(G):
        raise ValueError("block systems need a transitive group")
    systems = []
    seen = set()
    for alpha in range(1, G.degree):
        sys_ = _minimal_block(G, alpha)
        if len(sys_) == 1:
            continue
        key = tuple(tuple(sorted(b)) for b in sys_)
        if key not in seen:
            seen.add(key)
            systems.append(sys_)
    return systems


def is_block(G: PermGroup, block: Iterable[int]) -> bool:
    block = frozenset(block)
    for g in G.generators:
        img = frozenset(g.images[x] for x in block)
        if img != block and img & block:
            return False
    return True


def is_primitive(G: PermGroup) -> bool:
    return not minimal_blocks(G)


def normalizer_bruteforce(G: PermGroup, Q: SubgroupHandle) -> SubgroupHandle:
    """``{g in G : g Q g^-1 = Q}`` by testing every element of ``G``."""
    tab = G.table()
    if Q.table is not tab:
        raise ValueError("subgroup belongs to a different table")
    n = len(tab)
    inQ = np.zeros(n, dtype=bool)
    inQ[list(Q.members)] = True
    rows = tab.rows
    inv_rows = rows[tab.inverse]
    keep = np.ones(n, dtype=bool)
    for q in Q.members:
        # g q g^-1 for every g at once
        conj = np.take_along_axis(rows, tab.rows[q][inv_rows], axis=1)
        keep &= inQ[tab.lookup(conj)]
    return tab.subgroup(np.nonzero(keep)[0])
