"""Shared fixtures and independent oracles for the test suite.

The oracle helpers here deliberately avoid the library's search code paths:
associativity and ideal checks are naive scans, monoid enumeration is a raw
itertools product, and projectivity/separator/atomicity are decided through
lifting, faithfulness and subobject computations rather than through the
classification the library uses.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from monact.monoid import FiniteMonoid, enumerate_monoids, validate_monoid
from monact.mset import (
    FiniteMSet,
    MSetError,
    free_mset,
    hom_msets,
    msets_isomorphic,
    validate_mset,
)

TRIVIAL = validate_monoid(1, 0, [[0]], ["1"])
E2 = validate_monoid(2, 0, [[0, 1], [1, 1]], ["1", "e"])
C2 = validate_monoid(2, 0, [[0, 1], [1, 0]], ["1", "a"])
RZ3 = validate_monoid(3, 0, [[0, 1, 2], [1, 1, 2], [2, 1, 2]], ["1", "a", "b"])


@pytest.fixture(scope="session")
def census3() -> list[FiniteMonoid]:
    return [m for n in (1, 2, 3) for m in enumerate_monoids(n)]


@pytest.fixture(scope="session")
def census4() -> list[FiniteMonoid]:
    return [m for n in (1, 2, 3, 4) for m in enumerate_monoids(n)]


# --- independent monoid-level oracles ---------------------------------------

def naive_is_associative(table) -> bool:
    n = len(table)
    return all(table[table[i][j]][k] == table[i][table[j][k]]
               for i in range(n) for j in range(n) for k in range(n))


def naive_monoid_tables(n: int):
    """Every labeled monoid table with identity at index 0, by raw product."""
    if n == 1:
        yield ((0,),)
        return
    free = [(i, j) for i in range(1, n) for j in range(1, n)]
    for combo in itertools.product(range(n), repeat=len(free)):
        t = [[0] * n for _ in range(n)]
        for j in range(n):
            t[0][j] = j
            t[j][0] = j
        for (i, j), v in zip(free, combo):
            t[i][j] = v
        if naive_is_associative(t):
            yield tuple(tuple(r) for r in t)


def naive_right_ideals(M: FiniteMonoid):
    n = M.order
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        s = frozenset(i for i in range(n) if bits[i])
        if all(M.table[x][m] in s for x in s for m in range(n)):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def naive_left_ideals(M: FiniteMonoid):
    n = M.order
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        s = frozenset(i for i in range(n) if bits[i])
        if all(M.table[m][x] in s for x in s for m in range(n)):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


# --- M-set pools and category-level oracles ----------------------------------

@lru_cache(maxsize=None)
def msets_up_to_iso(M: FiniteMonoid, kmax: int) -> tuple[FiniteMSet, ...]:
    """All M-sets of size <= kmax up to isomorphism (raw table enumeration,
    deduplicated by verified bijective equivariant maps)."""
    pool: list[FiniteMSet] = [validate_mset(M, 0, [])]
    n = M.order
    free_cols = [m for m in range(n) if m != M.identity]
    for k in range(1, kmax + 1):
        fresh: list[FiniteMSet] = []
        for combo in itertools.product(range(k), repeat=k * len(free_cols)):
            rows = []
            it = iter(combo)
            for x in range(k):
                row = [0] * n
                row[M.identity] = x
                for m in free_cols:
                    row[m] = next(it)
                rows.append(row)
            try:
                X = validate_mset(M, k, rows)
            except MSetError:
                continue
            if not any(msets_isomorphic(X, Y) for Y in fresh):
                fresh.append(X)
        pool.extend(fresh)
    return tuple(pool)


@lru_cache(maxsize=None)
def _hom_tuples(X: FiniteMSet, Y: FiniteMSet) -> tuple[tuple[int, ...], ...]:
    return tuple(h.mapping for h in hom_msets(X, Y))


def lifting_oracle(Q: FiniteMSet, pool) -> bool:
    """Brute-force projectivity: every lift along every epi A -> B with A in
    the pool must exist, and the canonical free cover of Q must split.

    The free-cover clause makes the oracle exactly projectivity (free M-sets
    are projective and retracts of projectives are projective); the small-epi
    sweep alone provably misses witnesses that need |A| > 3.
    """
    for A in pool:
        for B in pool:
            homs_ab = _hom_tuples(A, B)
            homs_qa = _hom_tuples(Q, A)
            homs_qb = _hom_tuples(Q, B)
            for g in homs_ab:
                if len(set(g)) != B.size:
                    continue
                image = {tuple(g[v] for v in h) for h in homs_qa}
                if any(f not in image for f in homs_qb):
                    return False
    F = free_mset(Q.monoid, Q.size)
    n = Q.monoid.order
    cover = tuple(Q.act(x, m) for x in range(Q.size) for m in range(n))
    ident = tuple(range(Q.size))
    return any(tuple(cover[v] for v in s) == ident for s in _hom_tuples(Q, F))


def faithfulness_oracle(Q: FiniteMSet, pool) -> bool:
    """Brute-force separator test: Hom(Q,-) must distinguish every parallel
    pair between pool members. Two maps X -> Y are undistinguished exactly
    when they agree on the union of the images of all maps Q -> X."""
    for X in pool:
        covered = sorted({v for h in _hom_tuples(Q, X) for v in h})
        for Y in pool:
            seen: dict[tuple[int, ...], tuple[int, ...]] = {}
            for f in _hom_tuples(X, Y):
                key = tuple(f[u] for u in covered)
                if key in seen and seen[key] != f:
                    return False
                seen[key] = f
    return True


def quotient_atom_oracle(M: FiniteMonoid) -> bool:
    """Atomicity via subquotients of the regular M-set: every indecomposable
    quotient must have exactly the two trivial sub-M-sets."""
    from monact.mset import is_indecomposable, regular_mset, sub_msets

    R = regular_mset(M)
    n = M.order
    for partition in _set_partitions(list(range(n))):
        block_of = {}
        for i, block in enumerate(partition):
            for x in block:
                block_of[x] = i
        if any(block_of[M.table[x][m]] != block_of[M.table[y][m]]
               for block in partition for x in block for y in block
               for m in range(n)):
            continue  # not a congruence of the right action
        reps = [min(b) for b in partition]
        action = [[block_of[M.table[r][m]] for m in range(n)] for r in reps]
        Qt = validate_mset(M, len(partition), action)
        if is_indecomposable(Qt) and len(sub_msets(Qt)) != 2:
            return False
    return True


def _set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[head] + partition[i]] + partition[i + 1:]
        yield [[head]] + partition
