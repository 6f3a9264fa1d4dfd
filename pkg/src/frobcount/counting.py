"""Counting subgroups of prime-power order.

The pipeline for ``count_subgroups_of_order(G, p, a)``:

1. grow a Sylow p-subgroup ``P`` greedily inside the element table;
2. list every subgroup of ``P`` of order ``p**a`` by cyclic extension, level
   by level (each subgroup of order ``p**(k+1)`` is ``<H, x>`` for a subgroup
   ``H`` of order ``p**k`` normalized by ``x`` with ``x**p`` in ``H``);
3. every ``p``-subgroup of ``G`` is conjugate into ``P``, so the full count is
   the size of the union of the ``G``-conjugation orbits of those subgroups.

Subgroups are keyed by their sorted element indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ._arith import is_prime, p_part_exponent
from .perm import PermGroup, SubgroupHandle, TooLargeError

#: Maximum number of distinct subgroups held for a single count.
SUBGROUP_CAP = 200_000


class PreconditionError(ValueError):
    """The requested count is outside the theorems' hypotheses."""


@dataclass(frozen=True)
class Orbit:
    """One conjugacy class of subgroups; ``rep`` is ``None`` for the trivial subgroup."""

    rep: SubgroupHandle | None
    rep_size: int
    length: int


@dataclass(frozen=True)
class CountReport:
    spec: str | None
    p: int
    a: int
    count: int
    orbits: tuple[Orbit, ...]
    sylow_order: int

    @property
    def mod_p(self) -> int:
        return self.count % self.p

    @property
    def mod_p2(self) -> int:
        return self.count % (self.p * self.p)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "p": self.p,
            "a": self.a,
            "count": str(self.count),
            "mod_p": self.mod_p,
            "mod_p2": self.mod_p2,
            "orbits": [{"rep_size": o.rep_size, "orbit_len": o.length} for o in self.orbits],
            "sylow_order": str(self.sylow_order),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_prime(p: int):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def _conjugate_indices(tab, cand: np.ndarray, q: int) -> np.ndarray:
    """Indices of ``x q x^-1`` for each ``x`` in ``cand``."""
    x = tab.rows[cand]
    xinv = tab.rows[tab.inverse[cand]]
    return tab.lookup(np.take_along_axis(x, tab.rows[q][xinv], axis=1))


def sylow_subgroup(G: PermGroup, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, grown one normalizing p-element at a time.

    At each step the first element (in table order) of p-power order that
    normalizes the current subgroup without lying in it is adjoined.
    """
    _check_prime(p)
    cache = G.__dict__.setdefault("_sylow", {})
    if p in cache:
        return cache[p][0]
    tab = G.table()
    m = p_part_exponent(len(tab), p)
    target = p ** m
    ppower = tab.power_is_identity(target)
    members = np.array([0], dtype=np.intp)
    gens: list[int] = []
    while len(members) < target:
        inQ = np.zeros(len(tab), dtype=bool)
        inQ[members] = True
        cand = np.nonzero(ppower & ~inQ)[0]
        for q in gens:
            if not len(cand):
                break
            cand = cand[inQ[_conjugate_indices(tab, cand, q)]]
        x = int(cand[0])
        grown = set(members.tolist())
        y = x
        while y not in grown:
            grown.update(tab.mul(y, members).tolist())
            y = int(tab.mul(y, x))
        members = np.array(sorted(grown), dtype=np.intp)
        gens.append(x)
    P = SubgroupHandle(tab, tuple(members.tolist()))
    cache[p] = (P, gens)
    return P


class _PGroupLattice:
    """Subgroups of a p-group, enumerated level by level and cached."""

    def __init__(self, P: SubgroupHandle, p: int):
        tab = P.table
        self.P = P
        self.p = p
        self.gidx = np.array(P.members, dtype=np.intp)
        n = len(self.gidx)
        rows = tab.rows[self.gidx]
        mul = np.empty((n, n), dtype=np.intp)
        for start in range(0, n, 64):
            block = rows[start:start + 64]
            prod = block[:, rows]  # (b, n, d): rows[i] o rows[j]
            g = tab.lookup(prod.reshape(-1, rows.shape[1]))
            mul[start:start + 64] = np.searchsorted(self.gidx, g).reshape(len(block), n)
        mul = mul.astype(np.int32)
        self.mul = mul
        inv = np.argmax(mul == 0, axis=1)
        self.conj = mul[mul, inv[:, None]]  # conj[x, h] = x h x^-1
        pows = np.empty((n, p), dtype=np.int32)
        pows[:, 0] = 0
        for i in range(1, p):
            pows[:, i] = mul[pows[:, i - 1], np.arange(n)]
        self.pows = pows
        self.pth = mul[pows[:, p - 1], np.arange(n)]
        # level k: (subgroups as sorted rows, generator rows), both 2-D arrays
        self.levels = [(np.zeros((1, 1), dtype=np.int32), np.zeros((1, 0), dtype=np.int32))]

    def _extend(self):
        n, p = len(self.gidx), self.p
        Hs, Gs = self.levels[-1]
        nh, s = Hs.shape
        chunk = max(1, 4_000_000 // (n * s * max(1, p - 1)))
        parts_K, parts_parent, parts_x = [], [], []
        for lo in range(0, nh, chunk):
            H = Hs[lo:lo + chunk]
            G = Gs[lo:lo + chunk]
            r = np.arange(len(H))[:, None]
            inH = np.zeros((len(H), n), dtype=bool)
            inH[r, H] = True
            # x outside H with x^p in H, normalizing every generator of H
            ok = ~inH & inH[:, self.pth]
            for j in range(G.shape[1]):
                ok &= inH[r, self.conj[:, G[:, j]].T]
            rr, xx = np.nonzero(ok)
            if not len(rr):
                continue
            # <H,x> = <H,y> iff both share the least element outside H
            label = np.full(len(rr), n, dtype=np.intp)
            for i in range(1, p):
                label = np.minimum(label, self.mul[self.pows[xx, i][:, None], H[rr]].min(axis=1))
            pair = np.unique(rr * n + label)
            rr, xx = pair // n, (pair % n).astype(np.int32)
            K = self.mul[self.pows[xx][:, :, None], H[rr][:, None, :]].reshape(len(rr), -1)
            K.sort(axis=1)
            parts_K.append(K)
            parts_parent.append(rr + lo)
            parts_x.append(xx)
        if not parts_K:
            self.levels.append((np.zeros((0, s * p), dtype=np.int32),
                                np.zeros((0, Gs.shape[1] + 1), dtype=np.int32)))
            return
        K = np.concatenate(parts_K)
        parent = np.concatenate(parts_parent)
        xs = np.concatenate(parts_x)
        view = np.ascontiguousarray(K).view(np.dtype((np.void, K.dtype.itemsize * K.shape[1])))
        _, first = np.unique(view.ravel(), return_index=True)
        first.sort()
        if len(first) > SUBGROUP_CAP:
            raise TooLargeError(f"more than {SUBGROUP_CAP} subgroups at one level")
        self.levels.append((K[first], np.hstack([Gs[parent[first]], xs[first][:, None]])))

    def level(self, a: int) -> np.ndarray:
        """Subgroups of order ``p**a`` as rows of sorted local indices."""
        while len(self.levels) <= a:
            self._extend()
        return self.levels[a][0]


def _lattice(P: SubgroupHandle, p: int) -> _PGroupLattice:
    lat = P.__dict__.get("_lattice")
    if lat is None:
        lat = _PGroupLattice(P, p)
        P.__dict__["_lattice"] = lat
    return lat


def _p_group_prime(P: SubgroupHandle) -> int:
    n = P.order
    if n == 1:
        raise PreconditionError("the trivial group has no defined prime")
    from ._arith import factorize

    f = factorize(n)
    if len(f) != 1:
        raise PreconditionError(f"order {n} is not a prime power")
    return next(iter(f))


def p_subgroups_of_order(P: SubgroupHandle, a: int, p: int | None = None) -> list[SubgroupHandle]:
    """Every subgroup of order ``p**a`` of the p-group ``P``, each once."""
    if a < 0:
        raise PreconditionError("a must be >= 0")
    if a == 0:
        return [SubgroupHandle(P.table, (0,))]
    p = p or _p_group_prime(P)
    if p ** a > P.order:
        raise PreconditionError(f"{p}^{a} exceeds |P| = {P.order}")
    lat = _lattice(P, p)
    return [SubgroupHandle(P.table, tuple(lat.gidx[K].tolist())) for K in lat.level(a)]


def _conjugation_maps(tab) -> list[np.ndarray]:
    maps = tab.__dict__.get("_conj_maps")
    if maps is None:
        ident = np.arange(len(tab))
        maps = [c for c in (tab.conjugation_map(g) for g in dict.fromkeys(tab.generator_indices))
                if not np.array_equal(c, ident)]
        tab.__dict__["_conj_maps"] = maps
    return maps


def count_subgroups_of_order(G: PermGroup, p: int, a: int) -> CountReport:
    _check_prime(p)
    spec = getattr(G, "spec", None)
    spec_text = spec.text if spec is not None else None
    order = G.order()
    m = p_part_exponent(order, p)
    if a < 0 or a > m:
        raise PreconditionError(f"{p}^{a} does not divide |G| = {order}")
    if a == 0:
        return CountReport(spec_text, p, 0, 1, (Orbit(None, 1, 1),), p ** m)

    P = sylow_subgroup(G, p)
    lat = _lattice(P, p)
    tab = P.table
    maps = _conjugation_maps(tab)
    seen: set[bytes] = set()
    orbits = []
    for K in lat.level(a):
        S = lat.gidx[K]
        key = S.tobytes()
        if key in seen:
            continue
        seen.add(key)
        queue = [S]
        for T in queue:
            for c in maps:
                U = np.sort(c[T])
                k = U.tobytes()
                if k not in seen:
                    seen.add(k)
                    queue.append(U)
            if len(seen) > SUBGROUP_CAP:
                raise TooLargeError(f"more than {SUBGROUP_CAP} subgroups of order {p}^{a}")
        orbits.append(Orbit(SubgroupHandle(tab, tuple(S.tolist())), len(S), len(queue)))
    return CountReport(spec_text, p, a, len(seen), tuple(orbits), p ** m)


def count_sylow(G: PermGroup, p: int) -> int:
    """Number of Sylow p-subgroups, as the size of the conjugation orbit of one."""
    _check_prime(p)
    if G.order() % p:
        return 1
    P = sylow_subgroup(G, p)
    maps = _conjugation_maps(P.table)
    S = np.array(P.members, dtype=np.intp)
    seen = {S.tobytes()}
    queue = [S]
    for T in queue:
        for c in maps:
            U = np.sort(c[T])
            k = U.tobytes()
            if k not in seen:
                seen.add(k)
                queue.append(U)
    return len(queue)


def count_profile(G: PermGroup, p: int) -> list[int]:
    """Counts of subgroups of order ``p**a`` for ``a = 0 .. m``."""
    m = p_part_exponent(G.order(), p)
    cache = G.__dict__.setdefault("_profiles", {})
    if p not in cache:
        cache[p] = [count_subgroups_of_order(G, p, a).count for a in range(m + 1)]
    return cache[p]


def is_cyclic_p_group(P: SubgroupHandle) -> bool:
    """True if some element of ``P`` has order ``|P|``."""
    tab = P.table
    n = P.order
    if n == 1:
        return True
    idx = np.array(P.members, dtype=np.intp)
    # an element generates P iff its order does not divide |P|/p
    p = _p_group_prime(P)
    rows = tab.rows[idx]
    acc = rows
    e = n // p
    out = np.broadcast_to(np.arange(tab.group.degree), rows.shape)
    while e:
        if e & 1:
            out = np.take_along_axis(acc, out, axis=1)
        e >>= 1
        if e:
            acc = np.take_along_axis(acc, acc, axis=1)
    return bool((out != np.arange(tab.group.degree)).any(axis=1).any())


# -- independent oracle -------------------------------------------------------

def bruteforce_counts(G: PermGroup, p: int, max_order: int = 2000) -> list[int]:
    """Subgroup counts by exhaustive search over a full Cayley table.

    Each p-subgroup is reached from one of its index-p subgroups by closing
    under a single extra p-element; closure is generic (multiply until
    stable), so this shares no code with the cyclic-extension engine.
    """
    _check_prime(p)
    tab = G.table()
    N = len(tab)
    if N > max_order:
        raise TooLargeError(f"oracle limited to order {max_order}")
    cayley = G.__dict__.get("_cayley")
    if cayley is None:
        idx = np.arange(N)
        cayley = G.__dict__["_cayley"] = tab.mul(idx[:, None], idx[None, :]).tolist()
    m = p_part_exponent(N, p)
    target = p ** m

    def order_of(x):
        k, y = 1, x
        while y != 0:
            y = cayley[y][x]
            k += 1
        return k

    pel = [x for x in range(1, N) if target % order_of(x) == 0]
    levels = [[(frozenset([0]), [])]]
    for _ in range(m):
        nxt = {}
        for H, gens in levels[-1]:
            limit = p * len(H)
            covered = set(H)
            for x in pel:
                if x in covered:
                    continue
                K = set(H)
                K.add(x)
                queue = list(K)
                ggens = gens + [x]
                ok = True
                for e in queue:
                    for g in ggens:
                        y = cayley[e][g]
                        if y not in K:
                            K.add(y)
                            queue.append(y)
                    if len(K) > limit:
                        ok = False
                        break
                if not ok or len(K) != limit:
                    continue
                covered |= K
                key = frozenset(K)
                if key not in nxt:
                    nxt[key] = (key, ggens)
        levels.append(list(nxt.values()))
    return [len(lv) for lv in levels]


def _abelian_arith(parts: tuple[int, ...], p: int):
    """Addition and scalar tables for ``Z/p^parts[0] + Z/p^parts[1] + ...``.

    Elements are mixed-radix integers with the first factor most significant.
    """
    mods = np.array([p ** x for x in parts], dtype=np.int64)
    M = int(np.prod(mods)) if len(parts) else 1
    coords = np.indices(tuple(mods)).reshape(len(parts), M).T
    radix = np.ones(len(parts), dtype=np.int64)
    for i in range(len(parts) - 2, -1, -1):
        radix[i] = radix[i + 1] * mods[i + 1]

    def encode(c):
        return (c % mods) @ radix

    add = encode(coords[:, None, :] + coords[None, :, :])
    top = int(mods.max()) if len(parts) else 1
    # s * x depends only on s modulo the exponent, which is len(mult)
    mult = np.stack([encode(coords * s) for s in range(top)])
    return M, add, mult


def abelian_counts_exhaustive(parts, p: int) -> list[int]:
    """Subgroup counts of the abelian group of type ``parts`` by exhaustive listing.

    With ``A = Z/p^l + B`` (``l`` the largest part) every subgroup ``H`` is
    determined by ``H & B``, the image ``p^e Z/p^l`` of its projection, and a
    slope ``b`` in ``B/(H & B)`` with ``p^(l-e) b`` in ``H & B``; then
    ``|H| = |H & B| p^(l-e)``.  Every subgroup of ``B`` is built explicitly
    (same decomposition, one factor at a time) and the slopes over each one
    are counted element by element.  No closed form is used.
    """
    _check_prime(p)
    parts = tuple(sorted((int(x) for x in parts), reverse=True))
    if not parts or parts[-1] < 1:
        raise ValueError(f"not a partition: {parts}")
    n = sum(parts)
    # masks over the tail group, grown one factor at a time from the trivial group
    masks = np.ones((1, 1), dtype=bool)
    for i in range(len(parts) - 1, 0, -1):
        l = parts[i]
        M, add, mult = _abelian_arith(parts[i + 1:], p)
        size = p ** l * M
        children = []
        for H in masks:
            h = np.flatnonzero(H)
            reps = np.flatnonzero(add[:, h].min(axis=1) == np.arange(M))
            for e in range(l + 1):
                k = l - e
                beta = reps[H[mult[p ** k % len(mult), reps]]]
                s = np.arange(p ** k)
                second = add[mult[s[None, :] % len(mult), beta[:, None]][..., None], h[None, None, :]]
                first = (s * p ** e) % p ** l
                idx = (first[None, :, None] * M + second).reshape(len(beta), -1)
                child = np.zeros((len(beta), size), dtype=bool)
                np.put_along_axis(child, idx, True, axis=1)
                children.append(child)
        masks = np.concatenate(children)
    l = parts[0]
    M, add, mult = _abelian_arith(parts[1:], p)
    sizes = masks.sum(axis=1)
    log_size = np.rint(np.log(sizes) / np.log(p)).astype(np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    for e in range(l + 1):
        k = l - e
        target = mult[p ** k % len(mult)]
        slopes = masks[:, target].sum(axis=1) // sizes
        np.add.at(counts, log_size + k, slopes)
    return [int(c) for c in counts]

