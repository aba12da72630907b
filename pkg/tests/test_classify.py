from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurcyclic.classify import (
    GROUP_RING,
    INCONSISTENT,
    PAIR,
    SINGLETON,
    SYMMETRIC,
    VIOLATION,
    check_class_shape,
    classify_rational,
    classify_window,
    enumerate_schur_rings,
    exhaustive_window_search,
)
from schurcyclic.ringcore import INFINITE_CYCLIC, FiniteCyclic
from schurcyclic.schurmod import CLASSES, Partition
from schurcyclic.schurring import group_ring, orbit_ring, symmetric_ring, trivial_ring, verify_schur_ring

from oracles import brute_schur_rings, orbits, unit_subgroups

Z = INFINITE_CYCLIC


def window(classes, N):
    return Partition(Z, classes, window=(-N, N))


class TestClassShape:
    def test_pair(self):
        assert check_class_shape({1, -1}) == check_class_shape({-1, 1})
        assert check_class_shape({1, -1}).kind == PAIR and check_class_shape({1, -1}).a == 1

    def test_singleton(self):
        s = check_class_shape({1})
        assert (s.kind, s.a) == (SINGLETON, 1)

    def test_freshman_witness(self):
        # C^(2) = {2, 4} meets C = {1, 2} in {2}
        s = check_class_shape({1, 2})
        assert (s.kind, s.m) == (VIOLATION, 2)

    def test_rational_classes_rescaled(self):
        assert check_class_shape({F(3, 2), F(-3, 2)}).a == F(3, 2)
        assert check_class_shape({F(-1, 6)}).kind == SINGLETON

    def test_no_freshman_witness_still_violates(self):
        s = check_class_shape({2, 3})
        assert s.kind == VIOLATION and s.m is None

    def test_preconditions(self):
        with pytest.raises(ValueError):
            check_class_shape({0, 1})
        with pytest.raises(ValueError):
            check_class_shape(set())
        with pytest.raises(ValueError):
            check_class_shape({1}, torsion_free=False)

    @given(st.sets(st.integers(-20, 20).filter(bool), min_size=1, max_size=5))
    def test_negation_symmetric(self, C):
        assert check_class_shape(C).kind == check_class_shape({-e for e in C}).kind


class TestClassifyWindow:
    def test_symmetric(self):
        P = window([{0}, {1, -1}, {2, -2}, {3, -3}], 3)
        assert classify_window(P).pattern == SYMMETRIC

    def test_group_ring(self):
        P = window([{e} for e in range(-3, 4)], 3)
        assert classify_window(P).pattern == GROUP_RING

    def test_mixed_fails_on_product(self):
        P = window([{0}, {1}, {-1}, {2, -2}, {3}, {-3}], 3)
        v = classify_window(P)
        assert v.pattern == INCONSISTENT and v.rule == "product"
        C, D, E = v.witness["classes"]
        assert (C, D, E) == ({1}, {1}, {2, -2})

    def test_pair_with_singleton_witness(self):
        P = window([{0}, {1, -1}, {2}, {-2}, {3, -3}], 3)
        v = classify_window(P)
        assert v.rule == "product"
        assert v.message == "product {2}·{1,-1} = {1,3} splits class {1,-1}"

    def test_star_and_shape(self):
        assert classify_window(window([{0}, {1, -1, 2}, {-2}], 2)).rule == "star"
        assert classify_window(window([{0}, {1, 2}, {-1, -2}], 2)).rule == "shape"

    def test_needs_window(self):
        with pytest.raises(ValueError, match="window"):
            classify_window(Partition(Z, [{0}], universe=CLASSES))

    @pytest.mark.parametrize("N", range(1, 11))
    def test_constructed_fragments(self, N):
        assert classify_window(symmetric_ring(Z, window=(-N, N)).partition).pattern == SYMMETRIC
        assert classify_window(group_ring(Z, window=(-N, N)).partition).pattern == GROUP_RING


class TestWindowSearch:
    def test_n4_core2(self):
        cores = exhaustive_window_search(4, 2)
        assert [c.classes for c in cores] == [
            Partition(Z, [{e} for e in range(-2, 3)], window=(-2, 2)).classes,
            Partition(Z, [{0}, {1, -1}, {2, -2}], window=(-2, 2)).classes,
        ]

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_core_one_has_two_survivors(self, N):
        assert len(exhaustive_window_search(N, 1)) == 2

    @pytest.mark.parametrize("N, core", [(1, 1), (2, 1), (3, 2), (4, 2), (4, 3)])
    def test_unpruned_search_agrees(self, N, core):
        full = exhaustive_window_search(N, core, assume_shape=False)
        assert [c.classes for c in full] == [c.classes for c in exhaustive_window_search(N, core)]

    def test_full_core_sees_boundary_ambiguity(self):
        # at core = N the outermost exponents are unconstrained by in-window products
        assert len(exhaustive_window_search(3, 3)) == 3

    def test_limits(self):
        with pytest.raises(ValueError):
            exhaustive_window_search(6, 1)
        with pytest.raises(ValueError):
            exhaustive_window_search(3, 4)


class TestClassifyRational:
    def test_symmetric(self):
        assert classify_rational([{F(3, 2), F(-3, 2)}, {F(1, 6), F(-1, 6)}]).pattern == SYMMETRIC

    def test_group_ring(self):
        assert classify_rational([{F(3, 2)}, {F(-3, 2)}, {F(1, 6)}, {F(-1, 6)}]).pattern == GROUP_RING

    def test_mixed(self):
        v = classify_rational([{F(3, 2)}, {F(-3, 2)}, {F(1, 6), F(-1, 6)}])
        assert v.pattern == INCONSISTENT and v.rule == "case-ii"
        assert v.witness["classes"] == ({F(3, 2)}, {F(1, 6), F(-1, 6)})
        # 3/2 lies in both <3/2> and <1/6>
        assert v.witness["common"] == F(3, 2)

    def test_bad_shape(self):
        v = classify_rational([{F(1, 2), F(1)}, {F(-1, 2), F(-1)}])
        assert v.rule == "shape"

    def test_not_negation_closed(self):
        with pytest.raises(ValueError, match="negation"):
            classify_rational([{F(1, 2)}])

    def test_identity_class_ignored(self):
        assert classify_rational([{0}, {1}, {-1}]).pattern == GROUP_RING


class TestEnumerate:
    def test_z4(self):
        rings = enumerate_schur_rings(4)
        assert [set(R.classes) for R in rings] == [
            set(group_ring(FiniteCyclic(4)).classes),
            set(symmetric_ring(FiniteCyclic(4)).classes),
            set(trivial_ring(FiniteCyclic(4)).classes),
        ]

    def test_z5_are_orbit_rings(self):
        rings = {frozenset(R.classes) for R in enumerate_schur_rings(5)}
        assert rings == {frozenset(orbits(5, H)) for H in unit_subgroups(5)}
        assert len(rings) == 3

    def test_z1(self):
        assert [R.classes for R in enumerate_schur_rings(1)] == [(frozenset({0}),)]

    @pytest.mark.parametrize("n", range(1, 10))
    def test_matches_unpruned_brute_force(self, n):
        assert {frozenset(R.classes) for R in enumerate_schur_rings(n)} == brute_schur_rings(n)

    @pytest.mark.parametrize("p, count", [(3, 2), (5, 3), (7, 4), (11, 4), (13, 6)])
    def test_primes(self, p, count):
        rings = enumerate_schur_rings(p)
        assert len(rings) == count
        assert {frozenset(R.classes) for R in rings} == {frozenset(orbit_ring(p, H).classes) for H in unit_subgroups(p)}

    @pytest.mark.parametrize("n", [3, 6, 8, 10, 12])
    def test_contains_standard_rings(self, n):
        rings = enumerate_schur_rings(n)
        got = {R.partition for R in rings}
        ctx = FiniteCyclic(n)
        for R in (group_ring(ctx), symmetric_ring(ctx), trivial_ring(ctx)):
            assert R.partition in got
        assert all(verify_schur_ring(R.partition) for R in rings)

    def test_guard(self):
        with pytest.raises(ValueError, match="guard"):
            enumerate_schur_rings(14)
        assert len(enumerate_schur_rings(14, force=True)) > 0

    def test_deterministic_order(self):
        a = [R.partition for R in enumerate_schur_rings(12)]
        b = [R.partition for R in enumerate_schur_rings(12)]
        assert a == b
