"""The idempotent completion of a finite monoid as an explicit finite category.

Objects are the idempotents of the base monoid; a morphism e -> d is an
element f with fe = f = df, and the composite of u: e -> d followed by
v: d -> c is the monoid product v·u. End(1) is then the monoid itself with
the package-wide multiplication convention. Morphisms of the category are
(source, target, element) triples: one element can appear in several hom-sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import FiniteMonoid, NotIdempotent, idempotents, local_submonoid, same_monoid
from .morita import Conjugation, SemigroupHom


class KaroubiError(ValueError):
    pass


class NotAnObject(KaroubiError):
    def __init__(self, e):
        super().__init__(f"{e} is not an object (idempotent) of this category")
        self.witness = e


@dataclass
class KaroubiCategory:
    base: FiniteMonoid
    objects: tuple[int, ...]
    hom: dict[tuple[int, int], tuple[int, ...]]

    def hom_set(self, e: int, d: int) -> tuple[int, ...]:
        try:
            return self.hom[(e, d)]
        except KeyError:
            raise NotAnObject(e if e not in self.objects else d) from None

    def compose(self, u: int, v: int) -> int:
        """The composite of u: e -> d followed by v: d -> c, i.e. v·u."""
        return self.base.table[v][u]

    def morphisms(self):
        for (e, d), ms in self.hom.items():
            for m in ms:
                yield (e, d, m)


def karoubi_envelope(M: FiniteMonoid) -> KaroubiCategory:
    n, t = M.order, M.table
    objs = tuple(sorted(idempotents(M)))
    hom = {(e, d): tuple(f for f in range(n) if t[f][e] == f and t[d][f] == f)
           for e in objs for d in objs}
    return KaroubiCategory(M, objs, hom)


def object_isomorphism(C: KaroubiCategory, e: int, d: int) -> tuple[int, int] | None:
    """(u, v) with u: e -> d, v: d -> e, vu = e and uv = d, or None (exhaustive)."""
    t = C.base.table
    for u in C.hom_set(e, d):
        for v in C.hom_set(d, e):
            if t[v][u] == e and t[u][v] == d:
                return (u, v)
    return None


def skeleton(C: KaroubiCategory) -> tuple[tuple[int, ...], dict[int, int]]:
    """Isomorphism-class representatives and the class map; the identity
    idempotent always represents its own class."""
    one = C.base.identity
    ordering = sorted(C.objects, key=lambda e: (e != one, e))
    reps: list[int] = []
    class_of: dict[int, int] = {}
    for e in ordering:
        for r in reps:
            if object_isomorphism(C, r, e) is not None:
                class_of[e] = r
                break
        else:
            reps.append(e)
            class_of[e] = e
    return tuple(reps), class_of


@dataclass
class EquivalenceData:
    """A witness that two Karoubi categories are equivalent: an isomorphism
    between their skeletons (object bijection plus per-pair hom bijections)."""

    object_map: dict[int, int]
    hom_maps: dict[tuple[int, int], dict[int, int]]


def verify_equivalence(C: KaroubiCategory, D: KaroubiCategory,
                       data: EquivalenceData) -> bool:
    """Independently re-check an EquivalenceData witness against both categories."""
    reps_c = sorted(data.object_map)
    if sorted(set(data.object_map.values())) != sorted(data.object_map.values()):
        return False
    tD = D.base.table
    tC = C.base.table
    for e in reps_c:
        for d in reps_c:
            hm = data.hom_maps.get((e, d))
            if hm is None or sorted(hm) != sorted(C.hom[(e, d)]):
                return False
            img = sorted(hm.values())
            if img != sorted(set(img)) or img != sorted(D.hom[(data.object_map[e], data.object_map[d])]):
                return False
    for e in reps_c:
        if data.hom_maps[(e, e)][e] != data.object_map[e]:
            return False
    for e in reps_c:
        for d in reps_c:
            for c in reps_c:
                for u in C.hom[(e, d)]:
                    for v in C.hom[(d, c)]:
                        lhs = data.hom_maps[(e, c)][tC[v][u]]
                        rhs = tD[data.hom_maps[(d, c)][v]][data.hom_maps[(e, d)][u]]
                        if lhs != rhs:
                            return False
    return True


def categories_equivalent(C: KaroubiCategory, D: KaroubiCategory) -> EquivalenceData | None:
    """Decide equivalence by searching for an isomorphism between skeletons.

    A fully faithful essentially surjective functor between finite skeletal
    categories is an isomorphism, so backtracking over object bijections
    (pruned by hom-set cardinalities) and then over hom bijections (pruned by
    composition checks as soon as a triple is fully assigned) decides the
    question; exhaustion certifies the negative answer.
    """
    reps_c, _ = skeleton(C)
    reps_d, _ = skeleton(D)
    if len(reps_c) != len(reps_d):
        return None
    tC, tD = C.base.table, D.base.table

    def try_homs(omap: dict[int, int]) -> EquivalenceData | None:
        morphs = []
        for e in reps_c:
            for d in reps_c:
                for m in C.hom[(e, d)]:
                    if not (e == d and m == e):
                        morphs.append((e, d, m))
        assign: dict[tuple[int, int, int], int] = {
            (e, e, e): omap[e] for e in reps_c}
        used: dict[tuple[int, int], set[int]] = {
            (e, d): set() for e in reps_c for d in reps_c}
        for e in reps_c:
            used[(e, e)].add(omap[e])

        def consistent(key) -> bool:
            # every fully assigned composable pair must commute with the maps
            for (e1, d1, u), iu in assign.items():
                for (e2, d2, v), iv in assign.items():
                    if d1 != e2:
                        continue
                    w = (e1, d2, tC[v][u])
                    iw = assign.get(w)
                    if iw is not None and tD[iv][iu] != iw:
                        return False
            return True

        def bt(k: int) -> bool:
            if k == len(morphs):
                return True
            e, d, m = morphs[k]
            for cand in D.hom[(omap[e], omap[d])]:
                if cand in used[(e, d)]:
                    continue
                assign[(e, d, m)] = cand
                used[(e, d)].add(cand)
                if consistent((e, d, m)) and bt(k + 1):
                    return True
                used[(e, d)].discard(cand)
                del assign[(e, d, m)]
            return False

        if bt(0):
            hom_maps: dict[tuple[int, int], dict[int, int]] = {
                (e, d): {} for e in reps_c for d in reps_c}
            for (e, d, m), im in assign.items():
                hom_maps[(e, d)][m] = im
            return EquivalenceData(dict(omap), hom_maps)
        return None

    omap: dict[int, int] = {}
    taken: set[int] = set()

    def obj_bt(k: int) -> EquivalenceData | None:
        if k == len(reps_c):
            return try_homs(omap)
        e = reps_c[k]
        for d in reps_d:
            if d in taken:
                continue
            ok = len(C.hom[(e, e)]) == len(D.hom[(d, d)]) and all(
                len(C.hom[(e, e2)]) == len(D.hom[(d, omap[e2])])
                and len(C.hom[(e2, e)]) == len(D.hom[(omap[e2], d)])
                for e2 in omap)
            if not ok:
                continue
            omap[e] = d
            taken.add(d)
            found = obj_bt(k + 1)
            if found is not None:
                return found
            taken.discard(d)
            del omap[e]
        return None

    return obj_bt(0)


@dataclass
class EmbeddingReport:
    """Outcome of checking that Karoubi(eMe) is the full subcategory of
    Karoubi(M) on the idempotents absorbed by e, via the eMe -> M injection."""

    ok: bool
    sub_monoid: FiniteMonoid
    injection: tuple[int, ...]
    expected_objects: tuple[int, ...]
    object_map: dict[int, int]
    detail: str


def full_subcategory_embedding_check(M: FiniteMonoid, e: int) -> EmbeddingReport:
    sub, members = local_submonoid(M, e)   # raises NotIdempotent
    t = M.table
    expected = tuple(f for f in sorted(idempotents(M))
                     if t[e][f] == f and t[f][e] == f)
    K_sub = karoubi_envelope(sub)
    K_M = karoubi_envelope(M)
    omap = {x: members[x] for x in K_sub.objects}
    if tuple(sorted(omap.values())) != expected:
        return EmbeddingReport(False, sub, members, expected, omap,
                               f"objects differ: injected {sorted(omap.values())}, "
                               f"subcategory has {list(expected)}")
    for x in K_sub.objects:
        for y in K_sub.objects:
            injected = sorted(members[m] for m in K_sub.hom[(x, y)])
            direct = sorted(K_M.hom[(omap[x], omap[y])])
            if injected != direct:
                return EmbeddingReport(
                    False, sub, members, expected, omap,
                    f"hom({omap[x]},{omap[y]}) mismatch: injected {injected}, "
                    f"full subcategory has {direct}")
    return EmbeddingReport(True, sub, members, expected, omap,
                           "isomorphic via the local submonoid injection")


@dataclass
class CatFunctor:
    source: KaroubiCategory
    target: KaroubiCategory
    object_map: dict[int, int]
    morphism_map: dict[tuple[int, int, int], int]

    def apply(self, e: int, d: int, m: int) -> int:
        return self.morphism_map[(e, d, m)]

    def validate(self) -> None:
        tT = self.target.base.table
        for e in self.source.objects:
            if self.object_map[e] not in self.target.objects:
                raise KaroubiError(f"object image {self.object_map[e]} is not an object")
            if self.morphism_map[(e, e, e)] != self.object_map[e]:
                raise KaroubiError(f"identity at {e} is not preserved")
        for (e, d, m) in self.source.morphisms():
            img = self.morphism_map[(e, d, m)]
            if img not in self.target.hom[(self.object_map[e], self.object_map[d])]:
                raise KaroubiError(f"morphism image {img} lands outside its hom-set")
        tS = self.source.base.table
        for (e1, d1, u) in self.source.morphisms():
            for c in self.source.objects:
                for v in self.source.hom[(d1, c)]:
                    lhs = self.morphism_map[(e1, c, tS[v][u])]
                    rhs = tT[self.morphism_map[(d1, c, v)]][self.morphism_map[(e1, d1, u)]]
                    if lhs != rhs:
                        raise KaroubiError(
                            f"composition not preserved at {u}: {e1}->{d1} then {v}: {d1}->{c}")


def extend_semigroup_hom(f: SemigroupHom) -> CatFunctor:
    """The unique functor between Karoubi envelopes restricting to f.

    An object e' goes to f(e'); a morphism m': e' -> d' goes to f(m'), which
    already equals its conjugate f(d')·f(m')·f(e') by the homomorphism laws.
    """
    C = karoubi_envelope(f.source)
    D = karoubi_envelope(f.target)
    omap = {e: f.mapping[e] for e in C.objects}
    mmap = {(e, d, m): f.mapping[m] for (e, d, m) in C.morphisms()}
    functor = CatFunctor(C, D, omap, mmap)
    functor.validate()
    return functor


def restrict_functor(F: CatFunctor) -> SemigroupHom:
    """Read a functor back as a semigroup homomorphism via End(1') -> End(F1')."""
    one = F.source.base.identity
    mapping = tuple(F.morphism_map[(one, one, m)] for m in range(F.source.base.order))
    return SemigroupHom(F.source.base, F.target.base, mapping)


def all_functors(C: KaroubiCategory, D: KaroubiCategory) -> list[CatFunctor]:
    """Every functor C -> D, by backtracking over object maps and morphism
    images with incremental composition checks. Exhaustive at census sizes."""
    one = C.base.identity
    tC, tD = C.base.table, D.base.table
    # order: End(1) block first, then the splitting morphisms through 1,
    # then everything else (those are forced by composites of the first two).
    morphs = [(one, one, m) for m in C.hom[(one, one)]]
    for e in C.objects:
        if e != one:
            morphs.append((e, one, e))
            morphs.append((one, e, e))
    for (e, d, m) in C.morphisms():
        if (e, d, m) not in set(morphs) and not (e == d == m):
            morphs.append((e, d, m))
    morphs = [t for t in morphs if not (t[0] == t[1] == t[2])]
    results: list[CatFunctor] = []

    def consistent(assign) -> bool:
        for (e1, d1, u), iu in assign.items():
            for (e2, d2, v), iv in assign.items():
                if d1 != e2:
                    continue
                iw = assign.get((e1, d2, tC[v][u]))
                if iw is not None and tD[iv][iu] != iw:
                    return False
        return True

    def object_choices(k: int, omap: dict[int, int]):
        objs = list(C.objects)
        if k == len(objs):
            assign = {(e, e, e): omap[e] for e in C.objects}
            bt(0, omap, assign)
            return
        for d in D.objects:
            omap[objs[k]] = d
            object_choices(k + 1, omap)
        del omap[objs[k]]

    def bt(k: int, omap, assign):
        if k == len(morphs):
            results.append(CatFunctor(C, D, dict(omap),
                                      {key: val for key, val in assign.items()}))
            return
        e, d, m = morphs[k]
        for cand in D.hom[(omap[e], omap[d])]:
            assign[(e, d, m)] = cand
            if consistent(assign):
                bt(k + 1, omap, assign)
            del assign[(e, d, m)]

    object_choices(0, {})
    for F in results:
        F.validate()
    return results


@dataclass
class CatNatTrans:
    source: CatFunctor
    target: CatFunctor
    components: dict[int, int]

    def validate(self) -> None:
        F, G = self.source, self.target
        if F.source is not G.source and F.source.hom != G.source.hom:
            raise KaroubiError("natural transformation requires parallel functors")
        t = F.target.base.table
        for e in F.source.objects:
            c = self.components[e]
            if c not in F.target.hom[(F.object_map[e], G.object_map[e])]:
                raise KaroubiError(f"component at {e} is not a morphism F{e} -> G{e}")
        for (e, d, m) in F.source.morphisms():
            if t[G.morphism_map[(e, d, m)]][self.components[e]] != \
                    t[self.components[d]][F.morphism_map[(e, d, m)]]:
                raise KaroubiError(f"naturality fails at morphism {m}: {e} -> {d}")


def all_natural_transformations(F: CatFunctor, G: CatFunctor) -> list[CatNatTrans]:
    """Every natural transformation F ⇒ G, by component search with pruning."""
    C, D = F.source, F.target
    t = D.base.table
    objs = list(C.objects)
    results: list[CatNatTrans] = []
    comps: dict[int, int] = {}

    def natural_so_far() -> bool:
        for (e, d, m) in C.morphisms():
            if e in comps and d in comps:
                if t[G.morphism_map[(e, d, m)]][comps[e]] != \
                        t[comps[d]][F.morphism_map[(e, d, m)]]:
                    return False
        return True

    def bt(k: int):
        if k == len(objs):
            results.append(CatNatTrans(F, G, dict(comps)))
            return
        e = objs[k]
        for c in D.hom[(F.object_map[e], G.object_map[e])]:
            comps[e] = c
            if natural_so_far():
                bt(k + 1)
            del comps[e]

    bt(0)
    return results


def is_natural_isomorphism(nt: CatNatTrans) -> bool:
    """True when every component is invertible in its hom-set."""
    F, G = nt.source, nt.target
    D = F.target
    t = D.base.table
    for e in F.source.objects:
        c = nt.components[e]
        fe, ge = F.object_map[e], G.object_map[e]
        if not any(t[c2][c] == fe and t[c][c2] == ge for c2 in D.hom[(ge, fe)]):
            return False
    return True


def nat_trans_from_conjugation(conj: Conjugation) -> CatNatTrans:
    """The natural transformation f̌ ⇒ ǧ with component g(e')·α·f(e') at e'."""
    F = extend_semigroup_hom(conj.from_hom)
    G = extend_semigroup_hom(conj.to_hom)
    t = conj.from_hom.target.table
    a = conj.element
    comps = {e: t[t[G.object_map[e]][a]][F.object_map[e]] for e in F.source.objects}
    nt = CatNatTrans(F, G, comps)
    nt.validate()
    return nt


def conjugation_from_nat_trans(nt: CatNatTrans) -> Conjugation:
    """Read a natural transformation back as its component at the identity object."""
    one = nt.source.source.base.identity
    f = restrict_functor(nt.source)
    g = restrict_functor(nt.target)
    return Conjugation(f, g, nt.components[one])
