"""Finite monoids as validated Cayley tables.

Convention used by the whole package: ``table[i][j]`` is the product i·j,
left factor first. Element "ids" are plain indices into ``range(order)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class MonoidError(ValueError):
    """Base class for monoid construction and usage errors."""


class OutOfRangeEntry(MonoidError):
    def __init__(self, i: int, j: int, value, order: int):
        super().__init__(f"table[{i}][{j}] = {value!r} is not an element index in [0, {order})")
        self.witness = (i, j)


class IdentityLawViolated(MonoidError):
    def __init__(self, j: int):
        super().__init__(f"identity law fails at element {j}")
        self.witness = j


class AssociativityViolated(MonoidError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"associativity fails at triple ({i}, {j}, {k})")
        self.witness = (i, j, k)


class NotIdempotent(MonoidError):
    def __init__(self, e: int):
        super().__init__(f"element {e} is not idempotent")
        self.witness = e


class InvalidMap(MonoidError):
    pass


class SizeTooLarge(MonoidError):
    pass


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid on elements 0..order-1 with Cayley table[i][j] = i·j."""

    order: int
    identity: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"m{i}"

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteMonoid(order={self.order}, identity={self.identity})"


@dataclass(frozen=True)
class MonoidProperties:
    is_commutative: bool
    is_group: bool
    is_left_cancellative: bool
    is_right_cancellative: bool
    right_invertible_implies_unit: bool
    left_invertible_implies_unit: bool
    units: frozenset[int]
    idempotents: frozenset[int]


def validate_monoid(order, identity, table, labels=None) -> FiniteMonoid:
    """Check the monoid axioms on a raw table, naming the first witness on failure."""
    if not isinstance(order, int) or order < 1:
        raise MonoidError(f"order must be a positive integer, got {order!r}")
    if not isinstance(identity, int) or not 0 <= identity < order:
        raise MonoidError(f"identity index {identity!r} not in [0, {order})")
    rows = [list(r) for r in table]
    if len(rows) != order or any(len(r) != order for r in rows):
        raise MonoidError(f"table must be {order}x{order}")
    for i in range(order):
        for j in range(order):
            v = rows[i][j]
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
                raise OutOfRangeEntry(i, j, v, order)
    for j in range(order):
        if rows[identity][j] != j or rows[j][identity] != j:
            raise IdentityLawViolated(j)
    for i in range(order):
        for j in range(order):
            for k in range(order):
                if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                    raise AssociativityViolated(i, j, k)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != order:
            raise MonoidError("labels must have one entry per element")
    return FiniteMonoid(order, identity, tuple(tuple(r) for r in rows), labels)


def idempotents(M: FiniteMonoid) -> frozenset[int]:
    """All e with e·e = e; always contains the identity."""
    return frozenset(e for e in M.elements() if M.table[e][e] == e)


def classify_properties(M: FiniteMonoid) -> MonoidProperties:
    n, t, one = M.order, M.table, M.identity
    units = frozenset(u for u in range(n)
                      if any(t[u][v] == one and t[v][u] == one for v in range(n)))
    right_inv = [m for m in range(n) if any(t[m][x] == one for x in range(n))]
    left_inv = [m for m in range(n) if any(t[x][m] == one for x in range(n))]
    return MonoidProperties(
        is_commutative=all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n)),
        is_group=len(units) == n,
        is_left_cancellative=all(len(set(t[a])) == n for a in range(n)),
        is_right_cancellative=all(len({t[x][a] for x in range(n)}) == n for a in range(n)),
        right_invertible_implies_unit=all(m in units for m in right_inv),
        left_invertible_implies_unit=all(m in units for m in left_inv),
        units=units,
        idempotents=idempotents(M),
    )


def local_submonoid(M: FiniteMonoid, e: int) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """The monoid eMe = {m : eme = m} with identity e, plus its injection into M.

    Membership test uses em = m = me, which is equivalent to eme = m.
    """
    t = M.table
    if t[e][e] != e:
        raise NotIdempotent(e)
    members = tuple(m for m in M.elements() if t[e][m] == m and t[m][e] == m)
    index = {m: i for i, m in enumerate(members)}
    sub_table = tuple(tuple(index[t[a][b]] for b in members) for a in members)
    sub = FiniteMonoid(len(members), index[e], sub_table,
                       tuple(M.label(m) for m in members))
    return sub, members


def semigroup_closure(M: FiniteMonoid, seed) -> frozenset[int]:
    """Closure of a set of elements under multiplication only (no free identity)."""
    t = M.table
    out = set(seed)
    frontier = list(out)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(out):
                for p in (t[a][b], t[b][a]):
                    if p not in out:
                        out.add(p)
                        fresh.append(p)
        frontier = fresh
    return frozenset(out)


def _power_type(M: FiniteMonoid, x: int) -> tuple[int, int]:
    # (tail, period) of the power sequence x, x^2, x^3, ...
    seen = {}
    y, k = x, 1
    while y not in seen:
        seen[y] = k
        y = M.table[y][x]
        k += 1
    return (seen[y] - 1, k - seen[y])


def _profiles(M: FiniteMonoid):
    # Per-element relabeling invariants: idempotency, power tail/period,
    # occurrence count in the table, principal ideal sizes, then one round
    # of refinement against the profiles of all products.
    n, t = M.order, M.table
    count = Counter(v for row in t for v in row)
    base = []
    for x in range(n):
        xM = len(set(t[x]))
        Mx = len({t[y][x] for y in range(n)})
        base.append((t[x][x] == x, _power_type(M, x), count[x], xM, Mx))
    refined = []
    for x in range(n):
        ctx = tuple(sorted((base[y], base[t[x][y]], base[t[y][x]]) for y in range(n)))
        refined.append((base[x], ctx))
    return refined


def find_isomorphism(M: FiniteMonoid, N: FiniteMonoid) -> tuple[int, ...] | None:
    """A table-preserving bijection M -> N, or None after exhaustive search.

    Backtracking over profile-compatible images, most-constrained element first;
    partial products are checked as soon as both factors and their product are
    assigned, which keeps order <= 5 instances in the millisecond range.
    """
    if M.order != N.order:
        return None
    n = M.order
    pm, pn = _profiles(M), _profiles(N)
    if sorted(pm) != sorted(pn) or pm[M.identity] != pn[N.identity]:
        return None
    cands = [[y for y in range(n) if pn[y] == pm[x]] for x in range(n)]
    cands[M.identity] = [N.identity]
    order = sorted(range(n), key=lambda x: (len(cands[x]), x))
    tM, tN = M.table, N.table
    img: list[int | None] = [None] * n
    used = [False] * n
    assigned: list[int] = []

    def consistent(x: int) -> bool:
        for a in assigned:
            for u, v in ((x, a), (a, x)):
                p = tM[u][v]
                pi = img[p]
                if pi is not None and tN[img[u]][img[v]] != pi:
                    return False
        # products of earlier pairs that happen to equal x
        for a in assigned:
            for b in assigned:
                if tM[a][b] == x and tN[img[a]][img[b]] != img[x]:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            img[x] = y
            used[y] = True
            assigned.append(x)
            if consistent(x) and extend(k + 1):
                return True
            assigned.pop()
            used[y] = False
            img[x] = None
        return False

    if extend(0):
        return tuple(img)  # type: ignore[arg-type]
    return None


def transformation_monoid_closure(generators, partial: bool = False, points: int | None = None):
    """Close a set of (total or partial) maps on {0..k-1} under composition.

    The product f·g is "apply f, then g", so x·f := f(x) is a right action of
    the result on the points. Partial maps mark undefined values with None and
    composition through an undefined point is undefined. Returns the monoid
    (identity first, then discovery order) and the list of maps per element.
    """
    gens = [tuple(g) for g in generators]
    if points is None:
        if not gens:
            raise MonoidError("no generators given and no explicit point count")
        points = len(gens[0])
    if points < 1:
        raise MonoidError("need at least one point")
    for g in gens:
        if len(g) != points:
            raise InvalidMap(f"map {g!r} is not defined on {points} points")
        for v in g:
            if v is None:
                if not partial:
                    raise InvalidMap("undefined value in a total map")
            elif not isinstance(v, int) or not 0 <= v < points:
                raise InvalidMap(f"target {v!r} out of range [0, {points})")

    def compose(f, g):  # f then g
        return tuple(None if f[x] is None else g[f[x]] for x in range(points))

    ident = tuple(range(points))
    elems = [ident]
    index = {ident: 0}
    for g in gens:
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
    grew = True
    while grew:
        grew = False
        for f in list(elems):
            for g in list(elems):
                h = compose(f, g)
                if h not in index:
                    index[h] = len(elems)
                    elems.append(h)
                    grew = True
    table = [[index[compose(f, g)] for g in elems] for f in elems]
    sep = "" if points <= 10 else ","
    labels = [sep.join("-" if v is None else str(v) for v in f) for f in elems]
    return validate_monoid(len(elems), 0, table, labels), elems


def _partial_assoc_ok(t, n: int, i: int, j: int) -> bool:
    # Check associativity triples that may have become fully determined by t[i][j].
    def check(a, b, c):
        ab = t[a][b]
        if ab is None:
            return True
        bc = t[b][c]
        if bc is None:
            return True
        left = t[ab][c]
        right = t[a][bc]
        return left is None or right is None or left == right

    for c in range(n):
        if not check(i, j, c):
            return False
    for a in range(n):
        if not check(a, i, j):
            return False
    for a in range(n):
        row = t[a]
        for b in range(n):
            if row[b] == i and not check(a, b, j):
                return False
    for b in range(n):
        row = t[b]
        for c in range(n):
            if row[c] == j and not check(i, b, c):
                return False
    return True


def enumerate_monoids(n: int) -> list[FiniteMonoid]:
    """All monoids of order n up to isomorphism, identity fixed at index 0.

    Exhaustive backtracking over the (n-1)^2 free cells with incremental
    associativity pruning, then deduplication by find_isomorphism inside
    invariant-profile buckets. Counts 1, 2, 7, 35 for n = 1..4.
    """
    if not isinstance(n, int) or n < 1:
        raise MonoidError(f"order must be a positive integer, got {n!r}")
    if n > 4:
        raise SizeTooLarge("enumeration is supported for n <= 4 only")
    if n == 1:
        return [validate_monoid(1, 0, [[0]])]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    t: list[list[int | None]] = [[None] * n for _ in range(n)]
    for j in range(n):
        t[0][j] = j
        t[j][0] = j
    tables: list[tuple[tuple[int, ...], ...]] = []

    def fill(k: int):
        if k == len(cells):
            tables.append(tuple(tuple(row) for row in t))  # type: ignore[misc]
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if _partial_assoc_ok(t, n, i, j):
                fill(k + 1)
        t[i][j] = None

    fill(0)
    buckets: dict = {}
    reps: list[FiniteMonoid] = []
    for tab in tables:
        m = FiniteMonoid(n, 0, tab)
        key = tuple(sorted(_profiles(m)))
        group = buckets.setdefault(key, [])
        if not any(find_isomorphism(m, r) for r in group):
            group.append(m)
            reps.append(m)
    return reps


def right_ideals(M: FiniteMonoid) -> list[frozenset[int]]:
    """All S with S·M ⊆ S, as unions of principal right ideals mM (plus the empty set)."""
    principals = {frozenset(row) for row in M.table}
    ideals = {frozenset()}
    for p in sorted(principals, key=sorted):
        ideals |= {s | p for s in ideals}
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def left_ideals(M: FiniteMonoid) -> list[frozenset[int]]:
    """All S with M·S ⊆ S, as unions of principal left ideals Mm (plus the empty set)."""
    n = M.order
    principals = {frozenset(M.table[x][m] for x in range(n)) for m in range(n)}
    ideals = {frozenset()}
    for p in sorted(principals, key=sorted):
        ideals |= {s | p for s in ideals}
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def idempotent_leq_right(M: FiniteMonoid, e: int, f: int) -> bool:
    """Right-absorption order on idempotents: e ≼ f iff ef = e."""
    if M.table[e][e] != e:
        raise NotIdempotent(e)
    if M.table[f][f] != f:
        raise NotIdempotent(f)
    return M.table[e][f] == e


def idempotent_leq_two_sided(M: FiniteMonoid, e: int, f: int) -> bool:
    """Two-sided absorption order on idempotents: e ≼ f iff ef = e = fe."""
    if M.table[e][e] != e:
        raise NotIdempotent(e)
    if M.table[f][f] != f:
        raise NotIdempotent(f)
    return M.table[e][f] == e and M.table[f][e] == e


def same_monoid(A: FiniteMonoid, B: FiniteMonoid) -> bool:
    """Structural identity (labels ignored), used to guard cross-monoid operations."""
    return A.order == B.order and A.identity == B.identity and A.table == B.table
