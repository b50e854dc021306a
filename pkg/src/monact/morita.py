"""Semigroup homomorphisms, conjugations, and Morita equivalence of finite monoids.

A semigroup homomorphism between monoids need not preserve the identity; its
identity image is an idempotent. Conjugations are the 2-cells between parallel
semigroup homomorphisms, and a homomorphism is an equivalence when it has a
pseudo-inverse with invertible conjugations on both sides. For finite monoids
the decision procedure always collapses equivalence to isomorphism, which is
exactly what the cross-decider tests pin down.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .monoid import (
    FiniteMonoid,
    MonoidError,
    classify_properties,
    find_isomorphism,
    idempotents,
    local_submonoid,
    same_monoid,
    semigroup_closure,
)


class MoritaError(ValueError):
    pass


class NotParallel(MoritaError):
    pass


class PreconditionFailed(MoritaError):
    pass


@dataclass(frozen=True)
class SemigroupHom:
    """A multiplication-preserving map between monoids (identity not required)."""

    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int, ...]

    def __post_init__(self):
        s, t = self.source, self.target
        if len(self.mapping) != s.order:
            raise MoritaError("mapping must cover every source element")
        if any(not 0 <= v < t.order for v in self.mapping):
            raise MoritaError("mapping hits a non-element of the target")
        f, ts, tt = self.mapping, s.table, t.table
        for x in range(s.order):
            for y in range(s.order):
                if f[ts[x][y]] != tt[f[x]][f[y]]:
                    raise MoritaError(
                        f"not multiplicative at ({x}, {y}): "
                        f"f({x}·{y}) != f({x})·f({y})")

    @property
    def is_monoid_hom(self) -> bool:
        return self.mapping[self.source.identity] == self.target.identity

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def identity_hom(M: FiniteMonoid) -> SemigroupHom:
    return SemigroupHom(M, M, tuple(range(M.order)))


def hom_compose(outer: SemigroupHom, inner: SemigroupHom) -> SemigroupHom:
    """outer ∘ inner."""
    if not same_monoid(inner.target, outer.source):
        raise MoritaError("homomorphisms do not compose")
    return SemigroupHom(inner.source, outer.target,
                        tuple(outer.mapping[v] for v in inner.mapping))


@dataclass(frozen=True)
class Conjugation:
    """An element α of the target with αf(1') = α = g(1')α and αf(m') = g(m')α."""

    from_hom: SemigroupHom
    to_hom: SemigroupHom
    element: int

    def __post_init__(self):
        f, g = self.from_hom, self.to_hom
        if not same_monoid(f.source, g.source) or not same_monoid(f.target, g.target):
            raise NotParallel("conjugations require parallel homomorphisms")
        t = f.target.table
        a = self.element
        one_src = f.source.identity
        if t[a][f.mapping[one_src]] != a or t[g.mapping[one_src]][a] != a:
            raise MoritaError(f"element {a} fails the conjugation unit laws")
        for m in range(f.source.order):
            if t[a][f.mapping[m]] != t[g.mapping[m]][a]:
                raise MoritaError(f"element {a} fails conjugation at {m}")


def _generating_sequence(M: FiniteMonoid) -> list[int]:
    # Greedy: repeatedly add the element whose addition grows the semigroup
    # closure the most (ties broken by lowest index).
    gens: list[int] = []
    closed: frozenset[int] = frozenset()
    universe = set(M.elements())
    while closed != universe:
        best = max(sorted(universe - closed),
                   key=lambda x: (len(semigroup_closure(M, gens + [x])), -x))
        gens.append(best)
        closed = semigroup_closure(M, gens)
    return gens


def semigroup_homs(source: FiniteMonoid, target: FiniteMonoid) -> list[SemigroupHom]:
    """Every semigroup homomorphism source -> target, by exhaustive search.

    Images are assigned to a greedy generating set and propagated through the
    multiplication; inconsistent branches abort early.
    """
    gens = _generating_sequence(source)
    ts, tt = source.table, target.table
    fmap: dict[int, int] = {}
    results: list[SemigroupHom] = []

    def propagate(a: int, fa: int) -> list[int] | None:
        trail: list[int] = []
        queue = [(a, fa)]
        while queue:
            p, q = queue.pop()
            cur = fmap.get(p)
            if cur is not None:
                if cur != q:
                    for k in trail:
                        del fmap[k]
                    return None
                continue
            fmap[p] = q
            trail.append(p)
            for b, fb in list(fmap.items()):
                queue.append((ts[p][b], tt[q][fb]))
                queue.append((ts[b][p], tt[fb][q]))
        return trail

    def search(k: int):
        if k == len(gens):
            results.append(SemigroupHom(
                source, target, tuple(fmap[x] for x in range(source.order))))
            return
        g = gens[k]
        if g in fmap:
            search(k + 1)
            return
        for img in range(target.order):
            trail = propagate(g, img)
            if trail is not None:
                search(k + 1)
                for p in trail:
                    del fmap[p]

    search(0)
    results.sort(key=lambda h: h.mapping)
    return results


def conjugations_between(f: SemigroupHom, g: SemigroupHom) -> list[Conjugation]:
    """All conjugations f ⇒ g, by scanning the target monoid."""
    if not same_monoid(f.source, g.source) or not same_monoid(f.target, g.target):
        raise NotParallel("conjugations require parallel homomorphisms")
    t = f.target.table
    one_src = f.source.identity
    f1, g1 = f.mapping[one_src], g.mapping[one_src]
    out = []
    for a in range(f.target.order):
        if t[a][f1] != a or t[g1][a] != a:
            continue
        if all(t[a][f.mapping[m]] == t[g.mapping[m]][a] for m in range(f.source.order)):
            out.append(Conjugation(f, g, a))
    return out


def invert_conjugation(c: Conjugation) -> Conjugation | None:
    """A conjugation α': g ⇒ f with α'α = f(1') and αα' = g(1'), if one exists.

    The search runs over conjugations, not units: α can be invertible as a
    conjugation without being a unit of the target.
    """
    f, g = c.from_hom, c.to_hom
    t = f.target.table
    one_src = f.source.identity
    f1, g1 = f.mapping[one_src], g.mapping[one_src]
    for cand in conjugations_between(g, f):
        if t[cand.element][c.element] == f1 and t[c.element][cand.element] == g1:
            return cand
    return None


def canonical_factorization(f: SemigroupHom) -> tuple[SemigroupHom, SemigroupHom]:
    """Factor f as a monoid homomorphism onto f(1')Mf(1') followed by the inclusion."""
    e = f.mapping[f.source.identity]
    sub, members = local_submonoid(f.target, e)
    index = {m: i for i, m in enumerate(members)}
    first = SemigroupHom(f.source, sub,
                         tuple(index[f.mapping[x]] for x in range(f.source.order)))
    second = SemigroupHom(sub, f.target, members)
    return first, second


@dataclass(frozen=True)
class EquivalenceWitness:
    """A pseudo-inverse with invertible conjugations on both sides."""

    forward: SemigroupHom
    pseudo_inverse: SemigroupHom
    alpha: Conjugation            # id_{M'} ⇒ g∘f
    alpha_inverse: Conjugation
    beta: Conjugation             # f∘g ⇒ id_M
    beta_inverse: Conjugation

    def verify(self) -> None:
        """Re-check every law; raises MoritaError on any failure."""
        f, g = self.forward, self.pseudo_inverse
        gf = hom_compose(g, f)
        fg = hom_compose(f, g)
        src, dst = f.source, f.target
        checks = [
            (self.alpha, identity_hom(src), gf),
            (self.alpha_inverse, gf, identity_hom(src)),
            (self.beta, fg, identity_hom(dst)),
            (self.beta_inverse, identity_hom(dst), fg),
        ]
        for conj, lo, hi in checks:
            if conj.from_hom.mapping != lo.mapping or conj.to_hom.mapping != hi.mapping:
                raise MoritaError("witness conjugation has the wrong endpoints")
            Conjugation(lo, hi, conj.element)  # revalidates the laws
        ts, tt = src.table, dst.table
        a, ai = self.alpha.element, self.alpha_inverse.element
        b, bi = self.beta.element, self.beta_inverse.element
        if ts[ai][a] != src.identity or ts[a][ai] != gf.mapping[src.identity]:
            raise MoritaError("alpha is not invertible as claimed")
        if tt[bi][b] != fg.mapping[dst.identity] or tt[b][bi] != dst.identity:
            raise MoritaError("beta is not invertible as claimed")

    def triangle_identities(self) -> tuple[bool, bool]:
        """Whether the whiskered triangle composites hold, checked at every
        idempotent. Reported as data only: the definition of equivalence does
        not require them."""
        f, g = self.forward, self.pseudo_inverse
        src, dst = f.source, f.target
        ts, tt = src.table, dst.table
        a, b = self.alpha.element, self.beta.element
        gf = hom_compose(g, f).mapping
        fg = hom_compose(f, g).mapping

        def alpha_hat(ep: int) -> int:          # component at the object ep of the source
            return ts[ts[gf[ep]][a]][ep]

        def beta_hat(d: int) -> int:            # component at the object d of the target
            return tt[tt[d][b]][fg[d]]

        t1 = all(
            tt[beta_hat(f.mapping[ep])][f.mapping[alpha_hat(ep)]] == f.mapping[ep]
            for ep in idempotents(src))
        t2 = all(
            ts[g.mapping[beta_hat(d)]][alpha_hat(g.mapping[d])] == g.mapping[d]
            for d in idempotents(dst))
        return t1, t2


def is_equivalence_hom(f: SemigroupHom) -> EquivalenceWitness | None:
    """Search for a pseudo-inverse of f with invertible conjugations on both sides."""
    src, dst = f.source, f.target
    id_src, id_dst = identity_hom(src), identity_hom(dst)
    for g in semigroup_homs(dst, src):
        gf = hom_compose(g, f)
        fg = hom_compose(f, g)
        for alpha in conjugations_between(id_src, gf):
            alpha_inv = invert_conjugation(alpha)
            if alpha_inv is None:
                continue
            for beta in conjugations_between(fg, id_dst):
                beta_inv = invert_conjugation(beta)
                if beta_inv is None:
                    continue
                witness = EquivalenceWitness(f, g, alpha, alpha_inv, beta, beta_inv)
                witness.verify()
                return witness
    return None


@dataclass(frozen=True)
class MoritaWitness:
    """e idempotent with M' ≅ eMe, plus β, β' with ββ' = 1 and βe = β.

    iso maps each element of M' to its image in M (inside eMe); beta_prime is
    normalized so that eβ' = β' holds in addition to the defining equations.
    """

    e: int
    iso: tuple[int, ...]
    beta: int
    beta_prime: int
    equivalence: EquivalenceWitness = field(compare=False)


def _equivalence_from_triple(M: FiniteMonoid, M_prime: FiniteMonoid, e: int,
                             sub: FiniteMonoid, members: tuple[int, ...],
                             iso: tuple[int, ...], beta: int,
                             beta_prime: int) -> EquivalenceWitness:
    # Materialize the equivalence the corollary's proof builds from (e, β, β'):
    # f = (iso then inclusion), g: m ↦ β'mβ pulled back through the iso,
    # α = eβ, α' = β'e on the M' side and β, β' themselves on the M side.
    t = M.table
    index = {m: i for i, m in enumerate(members)}
    iso_in_M = tuple(members[iso[x]] for x in range(M_prime.order))
    inv_iso = {iso_in_M[x]: x for x in range(M_prime.order)}
    f = SemigroupHom(M_prime, M, iso_in_M)
    g = SemigroupHom(M, M_prime,
                     tuple(inv_iso[t[t[beta_prime][m]][beta]] for m in range(M.order)))
    gf = hom_compose(g, f)
    fg = hom_compose(f, g)
    id_src, id_dst = identity_hom(M_prime), identity_hom(M)
    alpha = Conjugation(id_src, gf, inv_iso[t[e][beta]])
    alpha_inv = Conjugation(gf, id_src, inv_iso[t[beta_prime][e]])
    beta_conj = Conjugation(fg, id_dst, beta)
    beta_inv = Conjugation(id_dst, fg, beta_prime)
    witness = EquivalenceWitness(f, g, alpha, alpha_inv, beta_conj, beta_inv)
    witness.verify()
    return witness


def morita_equivalent(M: FiniteMonoid, M_prime: FiniteMonoid) -> MoritaWitness | None:
    """Decide Morita equivalence, returning a fully verified witness or None.

    Scans idempotents e of M, tests M' ≅ eMe, then scans (β, β') pairs with
    ββ' = 1 and βe = β. β' is replaced by eβ' before the equivalence witness
    is assembled, exactly as in the construction the decision rests on.
    """
    t, one = M.table, M.identity
    for e in sorted(idempotents(M)):
        sub, members = local_submonoid(M, e)
        iso = find_isomorphism(M_prime, sub)
        if iso is None:
            continue
        for beta in range(M.order):
            if t[beta][e] != beta:
                continue
            for bp in range(M.order):
                if t[beta][bp] != one:
                    continue
                bp = t[e][bp]  # normalize: β·(eβ') = (βe)β' = 1 still holds
                equivalence = _equivalence_from_triple(
                    M, M_prime, e, sub, members, iso, beta, bp)
                iso_in_M = tuple(members[iso[x]] for x in range(M_prime.order))
                return MoritaWitness(e=e, iso=iso_in_M, beta=beta,
                                     beta_prime=bp, equivalence=equivalence)
    return None


@dataclass(frozen=True)
class TrivialityReport:
    """The six sufficient conditions for Morita equivalence at M to collapse
    to isomorphism, plus the verdict. Conditions 5 and 6 are descending chain
    conditions, vacuously true for finite monoids; they are reported rather
    than omitted because they are what makes the collapse unconditional here."""

    commutative: bool                       # condition 1
    group: bool                             # condition 2
    right_invertible_implies_unit: bool
    left_invertible_implies_unit: bool
    one_sided_invertibles_are_units: bool   # condition 3 (either side)
    left_cancellative: bool
    right_cancellative: bool
    cancellative_one_side: bool             # condition 4 (either side)
    dcc_idempotents_right_absorption: bool  # condition 5, ef = e order
    dcc_idempotents_two_sided: bool         # condition 5, ef = e = fe order
    dcc_right_ideals: bool                  # condition 6
    dcc_left_ideals: bool
    verdict: str
    note: str


def triviality_report(M: FiniteMonoid) -> TrivialityReport:
    props = classify_properties(M)
    c3 = props.right_invertible_implies_unit or props.left_invertible_implies_unit
    c4 = props.is_left_cancellative or props.is_right_cancellative
    conditions = [props.is_commutative, props.is_group, c3, c4, True, True]
    return TrivialityReport(
        commutative=props.is_commutative,
        group=props.is_group,
        right_invertible_implies_unit=props.right_invertible_implies_unit,
        left_invertible_implies_unit=props.left_invertible_implies_unit,
        one_sided_invertibles_are_units=c3,
        left_cancellative=props.is_left_cancellative,
        right_cancellative=props.is_right_cancellative,
        cancellative_one_side=c4,
        dcc_idempotents_right_absorption=True,
        dcc_idempotents_two_sided=True,
        dcc_right_ideals=True,
        dcc_left_ideals=True,
        verdict="trivial" if any(conditions) else "inconclusive",
        note="descending chain conditions hold vacuously: the monoid is finite",
    )


@dataclass(frozen=True)
class ChainReport:
    chain: tuple[int, ...]
    stabilization_index: int
    implies_unit: bool


def idempotent_chain(M: FiniteMonoid, beta: int, beta_prime: int) -> ChainReport:
    """The chain e_n = β'^n β^n for ββ' = 1, followed until it stabilizes.

    Each e_n is verified idempotent and absorbing against every earlier term;
    stabilization in a finite monoid forces β'β = 1, which is reported.
    """
    t, one = M.table, M.identity
    if t[beta][beta_prime] != one:
        raise PreconditionFailed(f"ββ' must be the identity, got {t[beta][beta_prime]}")
    chain = [one]
    while True:
        nxt = t[t[beta_prime][chain[-1]]][beta]
        if nxt == chain[-1]:
            break
        if nxt in chain:  # impossible: the e_n absorb all earlier terms
            raise MoritaError("idempotent chain cycled without stabilizing")
        chain.append(nxt)
    for i, en in enumerate(chain):
        if t[en][en] != en:
            raise MoritaError(f"chain term e_{i} is not idempotent")
        for em in chain[:i + 1]:
            if t[en][em] != en or t[em][en] != en:
                raise MoritaError(f"chain term e_{i} fails absorption")
    return ChainReport(
        chain=tuple(chain),
        stabilization_index=len(chain) - 1,
        implies_unit=t[beta_prime][beta] == one,
    )
