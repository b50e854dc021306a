"""Finite right M-sets: decomposition, projectivity, separators, reconstruction.

An M-set is a k×n table with action[x][m] = x·m. Indecomposables are the
connected components of the undirected reachability relation x ~ x·m; the
indecomposable projectives are exactly the principal M-sets eM, and the
base monoid is recovered from any indecomposable projective separator as
its endomorphism monoid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .monoid import FiniteMonoid, idempotents, same_monoid
from .morita import SemigroupHom


class MSetError(ValueError):
    pass


class UnitLawViolated(MSetError):
    def __init__(self, x: int):
        super().__init__(f"x·1 != x at element {x}")
        self.witness = x


class AssociativityViolated(MSetError):
    def __init__(self, x: int, m: int, mp: int):
        super().__init__(f"(x·m)·m' != x·(m·m') at ({x}, {m}, {mp})")
        self.witness = (x, m, mp)


class MonoidMismatch(MSetError):
    pass


class EmptyMSet(MSetError):
    pass


class NotASeparator(MSetError):
    pass


class NotIndecomposableProjective(MSetError):
    pass


@dataclass(frozen=True)
class FiniteMSet:
    """A right action of a finite monoid on {0..size-1}: action[x][m] = x·m."""

    monoid: FiniteMonoid
    size: int
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def act(self, x: int, m: int) -> int:
        return self.action[x][m]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else f"x{x}"

    def __repr__(self) -> str:
        return f"FiniteMSet(size={self.size}, monoid_order={self.monoid.order})"


@dataclass(frozen=True)
class MSetHom:
    """An equivariant map between M-sets over the same monoid."""

    source: FiniteMSet
    target: FiniteMSet
    mapping: tuple[int, ...]

    def __post_init__(self):
        if not same_monoid(self.source.monoid, self.target.monoid):
            raise MonoidMismatch("hom requires the same base monoid")
        if len(self.mapping) != self.source.size:
            raise MSetError("mapping must cover every source element")
        if any(not 0 <= v < self.target.size for v in self.mapping):
            raise MSetError("mapping hits a non-element of the target")
        f = self.mapping
        for x in range(self.source.size):
            for m in range(self.source.monoid.order):
                if f[self.source.act(x, m)] != self.target.act(f[x], m):
                    raise MSetError(f"not equivariant at ({x}, {m})")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective


def mset_hom_compose(outer: MSetHom, inner: MSetHom) -> MSetHom:
    """outer ∘ inner."""
    if inner.target != outer.source:
        raise MSetError("homs do not compose")
    return MSetHom(inner.source, outer.target,
                   tuple(outer.mapping[v] for v in inner.mapping))


def validate_mset(monoid: FiniteMonoid, size, action, labels=None) -> FiniteMSet:
    """Check the unit and associativity laws of a raw action table."""
    if not isinstance(size, int) or size < 0:
        raise MSetError(f"size must be a non-negative integer, got {size!r}")
    rows = [list(r) for r in action]
    if len(rows) != size or any(len(r) != monoid.order for r in rows):
        raise MSetError(f"action must be {size}x{monoid.order}")
    for x in range(size):
        for m in range(monoid.order):
            v = rows[x][m]
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise MSetError(f"action[{x}][{m}] = {v!r} outside [0, {size})")
    for x in range(size):
        if rows[x][monoid.identity] != x:
            raise UnitLawViolated(x)
    t = monoid.table
    for x in range(size):
        for m in range(monoid.order):
            for mp in range(monoid.order):
                if rows[rows[x][m]][mp] != rows[x][t[m][mp]]:
                    raise AssociativityViolated(x, m, mp)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != size:
            raise MSetError("labels must have one entry per element")
    return FiniteMSet(monoid, size, tuple(tuple(r) for r in rows), labels)


def regular_mset(M: FiniteMonoid) -> FiniteMSet:
    """M acting on itself by right multiplication."""
    return FiniteMSet(M, M.order, M.table, M.labels or tuple(M.label(i) for i in M.elements()))


def free_mset(M: FiniteMonoid, a_size: int) -> FiniteMSet:
    """A × M with (a, m)·m' = (a, mm'); element (a, m) has index a·|M| + m."""
    n = M.order
    action = tuple(tuple(a * n + M.table[m][mp] for mp in range(n))
                   for a in range(a_size) for m in range(n))
    labels = tuple(f"({a},{M.label(m)})" for a in range(a_size) for m in range(n))
    return FiniteMSet(M, a_size * n, action, labels)


def constant_mset(M: FiniteMonoid, a_size: int) -> FiniteMSet:
    """The coproduct of a_size copies of the terminal M-set (trivial action)."""
    action = tuple(tuple(x for _ in range(M.order)) for x in range(a_size))
    return FiniteMSet(M, a_size, action, tuple(f"c{x}" for x in range(a_size)))


def terminal_mset(M: FiniteMonoid) -> FiniteMSet:
    return constant_mset(M, 1)


def cofree_mset(M: FiniteMonoid, a_size: int) -> FiniteMSet:
    """Functions M -> A with (f·m)(x) = f(mx); size a_size^|M|."""
    n = M.order
    funcs: list[tuple[int, ...]] = [()]
    for _ in range(n):
        funcs = [f + (v,) for f in funcs for v in range(a_size)]
    index = {f: i for i, f in enumerate(funcs)}
    action = tuple(
        tuple(index[tuple(f[M.table[m][x]] for x in range(n))] for m in range(n))
        for f in funcs)
    labels = tuple("".join(str(v) for v in f) for f in funcs)
    return FiniteMSet(M, len(funcs), action, labels)


def orbit_partition(X: FiniteMSet) -> list[tuple[int, ...]]:
    """Connected components of the undirected graph x — x·m, sorted by minimum."""
    parent = list(range(X.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(X.size):
        for m in range(X.monoid.order):
            ra, rb = find(x), find(X.act(x, m))
            if ra != rb:
                parent[rb] = ra
    blocks: dict[int, list[int]] = {}
    for x in range(X.size):
        blocks.setdefault(find(x), []).append(x)
    return sorted((tuple(sorted(b)) for b in blocks.values()), key=lambda b: b[0])


def sub_mset(X: FiniteMSet, members) -> FiniteMSet:
    """The restriction of X to an action-closed subset of its elements."""
    members = tuple(sorted(members))
    index = {x: i for i, x in enumerate(members)}
    for x in members:
        for m in range(X.monoid.order):
            if X.act(x, m) not in index:
                raise MSetError(f"{members} is not action-closed at ({x}, {m})")
    action = tuple(tuple(index[X.act(x, m)] for m in range(X.monoid.order))
                   for x in members)
    return FiniteMSet(X.monoid, len(members), action,
                      tuple(X.label(x) for x in members))


def decompose(X: FiniteMSet) -> list[FiniteMSet]:
    """The indecomposable components of X; empty list for the empty M-set."""
    return [sub_mset(X, block) for block in orbit_partition(X)]


def fixed_points(X: FiniteMSet) -> frozenset[int]:
    """Elements on which the monoid acts trivially (the global sections)."""
    return frozenset(x for x in range(X.size)
                     if all(X.act(x, m) == x for m in range(X.monoid.order)))


def connected_components_count(X: FiniteMSet) -> int:
    return len(orbit_partition(X))


def principal_mset(M: FiniteMonoid, e: int) -> FiniteMSet:
    """eM with right multiplication; the regular M-set when e is the identity."""
    from .monoid import NotIdempotent
    if M.table[e][e] != e:
        raise NotIdempotent(e)
    carrier = sorted({M.table[e][m] for m in M.elements()})
    index = {m: i for i, m in enumerate(carrier)}
    action = tuple(tuple(index[M.table[x][m]] for m in M.elements()) for x in carrier)
    return FiniteMSet(M, len(carrier), action, tuple(M.label(m) for m in carrier))


def _hom_maps(X: FiniteMSet, Y: FiniteMSet):
    # Propagation search: choosing the image of one element forces its whole
    # forward orbit; branch on the lowest unassigned element of each component.
    k, n = X.size, X.monoid.order
    ax, ay = X.action, Y.action
    img: list[int | None] = [None] * k

    def place(x: int, y: int, trail: list[int]) -> bool:
        stack = [(x, y)]
        while stack:
            p, q = stack.pop()
            cur = img[p]
            if cur is not None:
                if cur != q:
                    return False
                continue
            img[p] = q
            trail.append(p)
            rp, rq = ax[p], ay[q]
            for m in range(n):
                if img[rp[m]] != rq[m]:
                    stack.append((rp[m], rq[m]))
        return True

    def branch(start: int):
        x = start
        while x < k and img[x] is not None:
            x += 1
        if x == k:
            yield tuple(img)
            return
        for y in range(Y.size):
            trail: list[int] = []
            if place(x, y, trail):
                yield from branch(x + 1)
            for p in trail:
                img[p] = None

    yield from branch(0)


def hom_msets(X: FiniteMSet, Y: FiniteMSet) -> list[MSetHom]:
    """Every equivariant map X -> Y, in a deterministic order."""
    if not same_monoid(X.monoid, Y.monoid):
        raise MonoidMismatch("hom requires the same base monoid")
    return [MSetHom(X, Y, f) for f in _hom_maps(X, Y)]


def msets_isomorphic(X: FiniteMSet, Y: FiniteMSet) -> MSetHom | None:
    """A bijective equivariant map (its inverse is automatically equivariant)."""
    if not same_monoid(X.monoid, Y.monoid):
        raise MonoidMismatch("isomorphism requires the same base monoid")
    if X.size != Y.size:
        return None
    if sorted(len(b) for b in orbit_partition(X)) != \
            sorted(len(b) for b in orbit_partition(Y)):
        return None
    if len(fixed_points(X)) != len(fixed_points(Y)):
        return None
    for f in _hom_maps(X, Y):
        if len(set(f)) == X.size:
            return MSetHom(X, Y, f)
    return None


def is_indecomposable(X: FiniteMSet) -> bool:
    """Nonempty and a single component; the empty M-set is not indecomposable."""
    return len(orbit_partition(X)) == 1


def is_projective(X: FiniteMSet) -> bool:
    """Every component isomorphic to a principal M-set eM (vacuously true if empty)."""
    principals = [principal_mset(X.monoid, e) for e in sorted(idempotents(X.monoid))]
    for component in decompose(X):
        if not any(msets_isomorphic(component, P) for P in principals):
            return False
    return True


@dataclass(frozen=True)
class SeparatorWitness:
    """A retraction exhibiting the regular M-set as a retract of Q."""

    retraction: MSetHom   # Q -> regular, hitting the identity
    element: int          # q with retraction(q) = 1
    section: MSetHom      # regular -> Q, m ↦ q·m


def separator_witness(Q: FiniteMSet) -> SeparatorWitness | None:
    """A map Q -> M sending some q to 1, or None; equivalent to Q separating.

    The composite retraction∘section is the identity automatically, since
    φ(q·m) = φ(q)·m = m.
    """
    R = regular_mset(Q.monoid)
    one = Q.monoid.identity
    for f in _hom_maps(Q, R):
        for q in range(Q.size):
            if f[q] == one:
                retraction = MSetHom(Q, R, f)
                section = MSetHom(R, Q, tuple(Q.act(q, m) for m in Q.monoid.elements()))
                return SeparatorWitness(retraction, q, section)
    return None


def is_separator(Q: FiniteMSet) -> bool:
    return separator_witness(Q) is not None


def endomorphism_monoid(Q: FiniteMSet) -> FiniteMonoid:
    """Hom(Q,Q) with product φ·ψ = φ∘ψ (apply ψ first); elements ordered as
    hom_msets(Q, Q) lists them."""
    if Q.size == 0:
        raise EmptyMSet("the empty M-set has no endomorphism monoid here")
    endos = [f for f in _hom_maps(Q, Q)]
    index = {f: i for i, f in enumerate(endos)}
    ident = tuple(range(Q.size))
    table = tuple(tuple(index[tuple(f[g[x]] for x in range(Q.size))] for g in endos)
                  for f in endos)
    labels = tuple("".join(str(v) for v in f) if Q.size <= 10 else str(f)
                   for f in endos)
    return FiniteMonoid(len(endos), index[ident], table, labels)


@dataclass(frozen=True)
class PointClass:
    representative: int
    members: tuple[int, ...]
    principal: FiniteMSet
    is_surjective: bool
    reconstructed: FiniteMonoid


@dataclass(frozen=True)
class PointReport:
    """One essential point per idempotent, partitioned into isomorphism classes."""

    idempotents: tuple[int, ...]
    classes: tuple[PointClass, ...]


def essential_points(M: FiniteMonoid) -> PointReport:
    """Idempotents of M partitioned by isomorphism of their principal M-sets.

    The partition is computed entirely inside the action category (bijective
    equivariant maps between the eM); tests cross-check it against the
    skeleton of the idempotent completion. The surjective flag is the
    separator property of the class representative, which for a finite monoid
    holds exactly for the class of the identity.
    """
    one = M.identity
    idems = sorted(idempotents(M), key=lambda e: (e != one, e))
    principals = {e: principal_mset(M, e) for e in idems}
    classes: list[list[int]] = []
    for e in idems:
        for cl in classes:
            if msets_isomorphic(principals[cl[0]], principals[e]):
                cl.append(e)
                break
        else:
            classes.append([e])
    entries = []
    for cl in classes:
        P = principals[cl[0]]
        entries.append(PointClass(
            representative=cl[0],
            members=tuple(cl),
            principal=P,
            is_surjective=is_separator(P),
            reconstructed=endomorphism_monoid(P),
        ))
    return PointReport(idempotents=tuple(idems), classes=tuple(entries))


def reconstruct_from_separator(Q: FiniteMSet) -> FiniteMonoid:
    """Recover a presenting monoid from an indecomposable projective separator.

    Returns End(Q); tests verify Karoubi(End(Q)) ≃ Karoubi(M) and, by the
    finite collapse, End(Q) ≅ M.
    """
    failed = [name for name, ok in (
        ("indecomposable", is_indecomposable(Q)),
        ("projective", is_projective(Q)),
    ) if not ok]
    if failed:
        raise NotIndecomposableProjective(f"Q is not {' or '.join(failed)}")
    if not is_separator(Q):
        raise NotASeparator("Q does not separate: the regular M-set is not a retract")
    return endomorphism_monoid(Q)


def sub_msets(X: FiniteMSet) -> list[frozenset[int]]:
    """All action-closed subsets, as unions of forward orbits (plus the empty set)."""
    n = X.monoid.order
    orbits = set()
    for x in range(X.size):
        seen = {x}
        frontier = [x]
        while frontier:
            p = frontier.pop()
            for m in range(n):
                q = X.act(p, m)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        orbits.add(frozenset(seen))
    subs = {frozenset()}
    for orbit in sorted(orbits, key=sorted):
        subs |= {s | orbit for s in subs}
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def is_atomic_topos(M: FiniteMonoid) -> bool:
    """Whether the action category is atomic; holds exactly when M is a group."""
    from .monoid import classify_properties
    return classify_properties(M).is_group


def restrict_action(f: SemigroupHom, X: FiniteMSet) -> FiniteMSet:
    """Restrict an M-action along a semigroup homomorphism f: M' -> M.

    The carrier is first cut down to X·f(1') — for a monoid homomorphism that
    is all of X — and then m' acts as x·f(m'). Unit and associativity laws
    hold by construction.
    """
    if not same_monoid(f.target, X.monoid):
        raise MonoidMismatch("X is not an action of the homomorphism's target")
    e = f.mapping[f.source.identity]
    carrier = sorted({X.act(x, e) for x in range(X.size)})
    index = {x: i for i, x in enumerate(carrier)}
    action = tuple(
        tuple(index[X.act(x, f.mapping[mp])] for mp in range(f.source.order))
        for x in carrier)
    return FiniteMSet(f.source, len(carrier), action,
                      tuple(X.label(x) for x in carrier))
