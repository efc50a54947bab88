"""Exhaustive enumeration of finite acts and isomorphism testing.

An act of size ``n`` over ``S`` is a monoid homomorphism ``S -> T_n`` into the
full transformation monoid (composing left to right).  It is fixed by the
images of a generating set of ``S``, so the search assigns one transformation
per generator and checks the right Cayley graph edges ``phi(s) ; f_g ==
phi(s g)`` as soon as both ends are known.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .core import Act, MixedMonoids, Monoid, homomorphisms, minimal_generators


@dataclass(frozen=True)
class _Plan:
    gens: tuple[int, ...]
    # staged BFS: (element, parent, generator position); identity excluded
    tree: tuple[tuple[tuple[int, int, int], ...], ...]
    # edges (s, gpos, s*g) first checkable once generator gpos is assigned
    edges: tuple[tuple[tuple[int, int, int], ...], ...]
    order: tuple[int, ...]


@lru_cache(maxsize=None)
def _plan(m: Monoid) -> _Plan:
    gens = m.generators
    tab = m.table
    known = [m.identity]
    seen = {m.identity}
    tree = []
    edges = []
    for k, g in enumerate(gens):
        stage = []
        i = 0
        while i < len(known):
            s = known[i]
            for j in range(k + 1):
                x = tab[s][gens[j]]
                if x not in seen:
                    seen.add(x)
                    known.append(x)
                    stage.append((x, s, j))
            i += 1
        tree.append(tuple(stage))
        stage_edges = []
        for s in known:
            for j in range(k + 1):
                x = tab[s][gens[j]]
                if j == k or s in {e for e, _, _ in stage} or x in {e for e, _, _ in stage}:
                    stage_edges.append((s, j, x))
        edges.append(tuple(stage_edges))
    return _Plan(gens, tuple(tree), tuple(edges), tuple(known))


def _power_relation(m: Monoid, g: int) -> tuple[int, int]:
    """(index, period) with g^(index+period) == g^index, index >= 0."""
    powers = [m.identity]
    while True:
        x = m.table[powers[-1]][g]
        if x in powers:
            i = powers.index(x)
            return i, len(powers) - i
        powers.append(x)


@lru_cache(maxsize=64)
def _all_transformations(n: int) -> np.ndarray:
    return np.array(list(product(range(n), repeat=n)), dtype=np.int8).reshape(-1, n)


def _candidates(m: Monoid, g: int, n: int, reverse: bool) -> list[tuple[int, ...]]:
    idx, per = _power_relation(m, g)
    T = _all_transformations(n)
    rows = np.arange(len(T))[:, None]
    powers = [np.broadcast_to(np.arange(n, dtype=np.int8), T.shape)]
    for _ in range(idx + per):
        # x.(f^(k+1)) = f[x.f^k]
        powers.append(T[rows, powers[-1]])
    ok = np.all(powers[idx] == powers[idx + per], axis=1)
    out = [tuple(int(v) for v in row) for row in T[ok]]
    if reverse:
        out.reverse()
    return out


def _compose(f, g):
    return tuple(g[x] for x in f)


def _action_tables(m: Monoid, n: int, reverse: bool = False) -> Iterator[dict[int, tuple]]:
    plan = _plan(m)
    cands = [np.array(_candidates(m, g, n, reverse), dtype=np.int8).reshape(-1, n) for g in plan.gens]
    k_total = len(plan.gens)
    phi: dict[int, np.ndarray] = {m.identity: np.arange(n, dtype=np.int8)}
    chosen: list[np.ndarray] = []

    def rec(k):
        if k == k_total:
            yield {s: tuple(int(v) for v in f) for s, f in phi.items()}
            return
        C = cands[k]
        rows = len(C)
        # every element value as a (rows, n) array; prefix values broadcast
        local: dict[int, np.ndarray] = {}

        def val(s):
            v = local.get(s)
            return v if v is not None else np.broadcast_to(phi[s], (rows, n))

        def gen(j):
            return C if j == k else np.broadcast_to(chosen[j], (rows, n))

        for x, parent, j in plan.tree[k]:
            local[x] = np.take_along_axis(gen(j), val(parent).astype(np.intp), axis=1)
        ok = np.ones(rows, dtype=bool)
        for s, j, x in plan.edges[k]:
            lhs = np.take_along_axis(gen(j), val(s).astype(np.intp), axis=1)
            ok &= np.all(lhs == val(x), axis=1)
        for i in np.flatnonzero(ok):
            chosen.append(C[i])
            for x in local:
                phi[x] = local[x][i]
            yield from rec(k + 1)
            for x in local:
                del phi[x]
            chosen.pop()

    yield from rec(0)


def _act_from_phi(m: Monoid, n: int, phi: dict[int, tuple]) -> Act:
    action = tuple(tuple(phi[s][a] for s in m.elements) for a in range(n))
    return Act(m, action)


def enumerate_acts(m: Monoid, n: int, up_to_iso: bool = False, order: str = "lex") -> Iterator[Act]:
    """All acts of size ``n`` over ``m``.

    With ``up_to_iso`` exactly one canonical representative per isomorphism
    class is produced, in order of first discovery.
    """
    if n < 1:
        raise ValueError("act size must be positive")
    reverse = order == "revlex"
    if not up_to_iso:
        for phi in _action_tables(m, n, reverse):
            yield _act_from_phi(m, n, phi)
        return
    gens = _plan(m).gens
    seen = set()
    for phi in _action_tables(m, n, reverse):
        key = canonical_key([tuple(phi[g][a] for g in gens) for a in range(n)])
        if key not in seen:
            seen.add(key)
            yield canonical_act(m, n, key)


def count_acts(m: Monoid, n: int, up_to_iso: bool = False) -> int:
    return sum(1 for _ in enumerate_acts(m, n, up_to_iso))


def _colours(rows: list[tuple[int, ...]]) -> list[int]:
    """Isomorphism-invariant colour refinement of the elements of a gen table."""
    n = len(rows)
    k = len(rows[0]) if rows else 0
    colour = [0] * n
    ncol = 1
    while True:
        preds = [[] for _ in range(n)]
        for a in range(n):
            for j in range(k):
                preds[rows[a][j]].append((j, colour[a]))
        sigs = [
            (colour[a],
             tuple((rows[a][j] == a, colour[rows[a][j]]) for j in range(k)),
             tuple(sorted(preds[a])))
            for a in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[sig] for sig in sigs]
        if len(order) == ncol:
            return new
        colour, ncol = new, len(order)


def canonical_key(rows) -> tuple[int, ...]:
    """Canonical form of an ``n x k`` generator action table.

    Elements are ordered by refined colour; ties are broken by taking the
    lexicographically least relabelled table over permutations inside each
    colour class.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    n = len(rows)
    colour = _colours(rows)
    classes = [[a for a in range(n) if colour[a] == c] for c in range(max(colour) + 1)]
    best = None
    for choice in product(*(permutations(cls) for cls in classes)):
        order = [a for block in choice for a in block]
        pos = [0] * n
        for i, a in enumerate(order):
            pos[a] = i
        flat = tuple(pos[x] for a in order for x in rows[a])
        if best is None or flat < best:
            best = flat
    return (n,) + best


def canonical_act(m: Monoid, n: int, key: tuple[int, ...]) -> Act:
    gens = _plan(m).gens
    k = len(gens)
    flat = key[1:]
    f = {g: tuple(flat[a * k + j] for a in range(n)) for j, g in enumerate(gens)}
    plan = _plan(m)
    phi = {m.identity: tuple(range(n))}
    for stage in plan.tree:
        for x, parent, j in stage:
            phi[x] = _compose(phi[parent], f[gens[j]])
    return _act_from_phi(m, n, phi)


def act_key(act: Act) -> tuple[int, ...]:
    gens = _plan(act.monoid).gens
    return canonical_key([tuple(act.action[a][g] for g in gens) for a in act.elements])


def act_isomorphic(a: Act, b: Act) -> bool:
    """Direct search for a bijective homomorphism ``a -> b``."""
    if a.monoid != b.monoid:
        raise MixedMonoids("acts are over different monoids")
    if a.size != b.size:
        return False
    if sorted(len(set(r)) for r in a.action) != sorted(len(set(r)) for r in b.action):
        return False
    return any(h.is_mono for h in homomorphisms(a, b))


def brute_force_count(m: Monoid, n: int, chunk: int = 1 << 20) -> int:
    """Count valid action tables by filtering all ``n^(n*|S|)`` candidate tables."""
    k = m.size
    cells = n * k
    total = n ** cells
    tab = np.array(m.table)
    e = m.identity
    count = 0
    weights = n ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % n
        act = digits.reshape(-1, n, k)
        ok = np.all(act[:, :, e] == np.arange(n)[None, :], axis=1)
        act = act[ok]
        if len(act) == 0:
            continue
        rows = np.arange(len(act))[:, None, None]
        good = np.ones(len(act), dtype=bool)
        for s in range(k):
            for t in range(k):
                lhs = act[rows[:, :, 0], act[:, :, s], t]     # (a.s).t
                rhs = act[:, :, tab[s][t]]                    # a.(st)
                good &= np.all(lhs == rhs, axis=1)
        count += int(good.sum())
    return count


def iso_classes_by_search(acts: list[Act]) -> list[list[int]]:
    """Partition indices of ``acts`` into isomorphism classes by direct search."""
    classes: list[list[int]] = []
    for i, a in enumerate(acts):
        for cls in classes:
            if act_isomorphic(acts[cls[0]], a):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


__all__ = [
    "enumerate_acts", "count_acts", "act_isomorphic", "brute_force_count",
    "canonical_key", "act_key", "iso_classes_by_search", "minimal_generators",
]
