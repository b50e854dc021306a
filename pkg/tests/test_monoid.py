from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    C2,
    E2,
    RZ3,
    TRIVIAL,
    naive_left_ideals,
    naive_monoid_tables,
    naive_right_ideals,
)
from monact.monoid import (
    AssociativityViolated,
    FiniteMonoid,
    IdentityLawViolated,
    InvalidMap,
    MonoidError,
    OutOfRangeEntry,
    NotIdempotent,
    SizeTooLarge,
    classify_properties,
    enumerate_monoids,
    find_isomorphism,
    idempotent_leq_right,
    idempotent_leq_two_sided,
    idempotents,
    left_ideals,
    local_submonoid,
    right_ideals,
    semigroup_closure,
    transformation_monoid_closure,
    validate_monoid,
)


class TestValidateMonoid:
    def test_trivial(self):
        m = validate_monoid(1, 0, [[0]])
        assert m.order == 1 and m.identity == 0

    def test_e2_and_c2(self):
        assert validate_monoid(2, 0, [[0, 1], [1, 1]]).table == ((0, 1), (1, 1))
        assert validate_monoid(2, 0, [[0, 1], [1, 0]]).table == ((0, 1), (1, 0))

    def test_identity_law_violation(self):
        with pytest.raises(IdentityLawViolated) as err:
            validate_monoid(2, 0, [[0, 1], [0, 1]])
        assert err.value.witness == 1  # e·1 = 1 fails in the non-identity row

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeEntry) as err:
            validate_monoid(2, 0, [[0, 1], [1, 7]])
        assert err.value.witness == (1, 1)

    def test_associativity_violation_names_first_triple(self):
        table = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
        assert not all(
            table[table[i][j]][k] == table[i][table[j][k]]
            for i in range(3) for j in range(3) for k in range(3))
        with pytest.raises(AssociativityViolated) as err:
            validate_monoid(3, 0, table)
        i, j, k = err.value.witness
        assert table[table[i][j]][k] != table[i][table[j][k]]

    def test_shape_errors(self):
        with pytest.raises(MonoidError):
            validate_monoid(2, 0, [[0, 1]])
        with pytest.raises(MonoidError):
            validate_monoid(2, 5, [[0, 1], [1, 1]])


class TestIdempotents:
    def test_examples(self):
        assert idempotents(TRIVIAL) == {0}
        assert idempotents(E2) == {0, 1}
        assert idempotents(RZ3) == {0, 1, 2}
        assert idempotents(C2) == {0}


class TestClassifyProperties:
    def test_c2_is_group(self):
        p = classify_properties(C2)
        assert p.is_group and p.is_left_cancellative and p.is_right_cancellative
        assert p.units == {0, 1}

    def test_e2(self):
        p = classify_properties(E2)
        assert p.is_commutative and not p.is_group
        assert p.units == {0}

    def test_rz3(self):
        p = classify_properties(RZ3)
        assert not p.is_commutative
        assert p.units == {0}
        assert not p.is_left_cancellative and not p.is_right_cancellative

    def test_one_sided_invertibles_are_units_on_census(self, census3):
        # multiplication by a one-sided invertible element is injective on a
        # finite set, so the flag must hold everywhere
        for M in census3:
            p = classify_properties(M)
            assert p.right_invertible_implies_unit
            assert p.left_invertible_implies_unit


class TestLocalSubmonoid:
    def test_e2_at_e(self):
        sub, inj = local_submonoid(E2, 1)
        assert sub.order == 1 and inj == (1,)

    def test_rz3_at_a(self):
        sub, inj = local_submonoid(RZ3, 1)
        assert sub.order == 1 and inj == (1,)

    def test_at_identity_is_whole_monoid(self):
        sub, inj = local_submonoid(RZ3, 0)
        assert sub.table == RZ3.table and inj == (0, 1, 2)

    def test_rejects_non_idempotent(self):
        with pytest.raises(NotIdempotent):
            local_submonoid(C2, 1)

    def test_census_membership_and_products(self, census3):
        for M in census3:
            for e in idempotents(M):
                sub, inj = local_submonoid(M, e)
                # independent membership predicate: eme = m
                members = {m for m in M.elements()
                           if M.table[M.table[e][m]][e] == m}
                assert set(inj) == members and sub.order == len(members)
                for a in range(sub.order):
                    for b in range(sub.order):
                        assert inj[sub.table[a][b]] == M.table[inj[a]][inj[b]]
                assert inj[sub.identity] == e


class TestFindIsomorphism:
    def test_e2_c2_not_isomorphic(self):
        assert find_isomorphism(E2, C2) is None

    def test_self_identity(self):
        assert find_isomorphism(RZ3, RZ3) == (0, 1, 2)

    def test_rz3_relabeled(self):
        swap = (0, 2, 1)
        table = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                table[swap[i]][swap[j]] = swap[RZ3.table[i][j]]
        N = validate_monoid(3, 0, table)
        iso = find_isomorphism(RZ3, N)
        assert iso is not None
        for i in range(3):
            for j in range(3):
                assert iso[RZ3.table[i][j]] == N.table[iso[i]][iso[j]]

    def test_symmetry_on_census(self, census3):
        for M in census3:
            for N in census3:
                assert (find_isomorphism(M, N) is None) == \
                       (find_isomorphism(N, M) is None)

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_relabelings_always_found(self, data, census3):
        M = data.draw(st.sampled_from(census3))
        perm = data.draw(st.permutations(range(M.order)))
        perm = tuple(perm)
        table = [[0] * M.order for _ in range(M.order)]
        for i in range(M.order):
            for j in range(M.order):
                table[perm[i]][perm[j]] = perm[M.table[i][j]]
        N = validate_monoid(M.order, perm[M.identity], table)
        iso = find_isomorphism(M, N)
        assert iso is not None and iso[M.identity] == N.identity


class TestTransformationClosure:
    def test_identity_generator(self):
        M, maps = transformation_monoid_closure([(0, 1)])
        assert M.order == 1 and maps == [(0, 1)]

    def test_swap_generates_c2(self):
        M, _ = transformation_monoid_closure([(1, 0)])
        assert M.order == 2 and find_isomorphism(M, C2) is not None

    def test_full_transformation_monoid_on_two_points(self):
        M, maps = transformation_monoid_closure([(1, 0), (0, 0)])
        assert M.order == 4
        assert set(maps) == {(0, 1), (1, 0), (0, 0), (1, 1)}
        # table is composition, apply-left-first
        for i, f in enumerate(maps):
            for j, g in enumerate(maps):
                assert maps[M.table[i][j]] == tuple(g[f[x]] for x in range(2))

    def test_partial_maps(self):
        down = (None, 0, 1)   # shift down, undefined at the bottom
        M, maps = transformation_monoid_closure([down], partial=True)
        assert (None, None, 0) in maps and (None, None, None) in maps
        assert M.order == 4  # id, down, down^2, empty map

    def test_partial_value_rejected_when_total(self):
        with pytest.raises(InvalidMap):
            transformation_monoid_closure([(None, 0)])

    def test_out_of_range_target(self):
        with pytest.raises(InvalidMap):
            transformation_monoid_closure([(0, 5)])

    @settings(max_examples=40, deadline=None)
    @given(gens=st.lists(
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
        min_size=1, max_size=3))
    def test_closure_is_a_monoid_of_maps(self, gens):
        M, maps = transformation_monoid_closure(gens)
        assert maps[M.identity] == (0, 1, 2)
        for g in gens:
            assert tuple(g) in maps
        for i, f in enumerate(maps):
            for j, g in enumerate(maps):
                assert maps[M.table[i][j]] == tuple(g[f[x]] for x in range(3))


class TestEnumerateMonoids:
    def test_small_counts(self):
        assert len(enumerate_monoids(1)) == 1
        assert len(enumerate_monoids(2)) == 2
        assert len(enumerate_monoids(3)) == 7

    def test_size_cap(self):
        with pytest.raises(SizeTooLarge):
            enumerate_monoids(5)
        with pytest.raises(MonoidError):
            enumerate_monoids(0)

    def test_pairwise_non_isomorphic(self):
        monoids = enumerate_monoids(3)
        for a, b in itertools.combinations(monoids, 2):
            assert find_isomorphism(a, b) is None

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_naive_enumeration(self, n):
        # independent oracle: raw product over free cells, naive associativity
        # scan, then dedupe by iso
        reps: list[FiniteMonoid] = []
        for table in naive_monoid_tables(n):
            m = FiniteMonoid(n, 0, table)
            if not any(find_isomorphism(m, r) for r in reps):
                reps.append(m)
        assert len(reps) == len(enumerate_monoids(n))


class TestIdeals:
    def test_c2_has_only_trivial_ideals(self):
        assert right_ideals(C2) == [frozenset(), frozenset({0, 1})]

    def test_e2(self):
        assert right_ideals(E2) == [frozenset(), frozenset({1}), frozenset({0, 1})]

    def test_rz3_right_vs_left(self):
        # on the right, a·b = b glues a and b into one minimal ideal; the
        # singletons {a}, {b} show up on the left side
        assert right_ideals(RZ3) == [
            frozenset(), frozenset({1, 2}), frozenset({0, 1, 2})]
        assert {frozenset({1}), frozenset({2}), frozenset({1, 2})} <= set(left_ideals(RZ3))

    def test_against_naive_enumeration(self, census3):
        for M in census3:
            assert right_ideals(M) == naive_right_ideals(M)
            assert left_ideals(M) == naive_left_ideals(M)

    def test_group_iff_trivial_right_ideals(self, census3):
        for M in census3:
            trivial = right_ideals(M) == [frozenset(), frozenset(M.elements())]
            assert classify_properties(M).is_group == trivial


class TestIdempotentOrders:
    def test_rz3_absorption(self):
        assert not idempotent_leq_right(RZ3, 1, 2)   # a·b = b != a
        assert not idempotent_leq_right(RZ3, 2, 1)   # b·a = a != b
        assert idempotent_leq_right(RZ3, 1, 0)       # a·1 = a
        assert idempotent_leq_two_sided(RZ3, 1, 0)   # a·1 = a = 1·a
        assert not idempotent_leq_two_sided(RZ3, 1, 2)

    def test_e2(self):
        assert idempotent_leq_right(E2, 1, 0)
        assert idempotent_leq_two_sided(E2, 1, 0)
        assert not idempotent_leq_right(E2, 0, 1)   # 1·e = e != 1

    def test_rejects_non_idempotents(self):
        with pytest.raises(NotIdempotent):
            idempotent_leq_right(C2, 1, 0)


def test_semigroup_closure():
    assert semigroup_closure(E2, [1]) == {1}
    assert semigroup_closure(C2, [1]) == {0, 1}
    assert semigroup_closure(RZ3, [1, 2]) == {1, 2}
