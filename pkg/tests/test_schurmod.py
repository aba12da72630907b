from fractions import Fraction

import pytest

from schurcyclic.ringcore import (
    INFINITE_CYCLIC,
    FiniteCyclic,
    RingElement,
    apply_function,
    coefficient_complex,
    hadamard,
    linear_combine,
    monomial,
    one,
    simple_quantity,
    support,
)
from schurcyclic.schurmod import (
    CLASSES,
    NotHadamardClosed,
    Partition,
    Span,
    class_of,
    decompose_span,
    is_primitive,
    is_sset,
    membership_test,
    validate_partition,
)
from schurcyclic.schurring import symmetric_ring

from oracles import lagrange_value_map, orbits

Z = INFINITE_CYCLIC
Z5 = FiniteCyclic(5)
SYM5 = Partition(Z5, [{0}, {1, 4}, {2, 3}])


def random_partition(rng, n):
    labels = [rng.randrange(max(1, n // 2)) for _ in range(n)]
    blocks = {}
    for x, l in enumerate(labels):
        blocks.setdefault(l, set()).add(x)
    return Partition(FiniteCyclic(n), blocks.values())


class TestValidate:
    def test_window_accept(self):
        P = Partition(Z, [{0}, {1, -1}, {2, -2}], window=(-2, 2))
        assert validate_partition(P)

    def test_overlap(self):
        v = validate_partition(Partition(Z, [{0, 1}, {1, 2}], universe=CLASSES))
        assert not v and v.rule == "overlap" and v.witness["element"] == 1

    def test_uncovered(self):
        v = validate_partition(Partition(Z5, [{0}, {1, 4}]))
        assert not v and v.rule == "uncovered" and v.witness["elements"] == {2, 3}

    def test_window_must_be_symmetric(self):
        with pytest.raises(ValueError):
            Partition(Z, [{0}], window=(-1, 2))

    def test_canonical_order(self):
        P = Partition(Z, [{-2}, {2}, {-1, 1}, {0}], window=(-2, 2))
        assert P.classes == ({0}, {1, -1}, {2}, {-2})
        assert Partition(FiniteCyclic(8), [{5, 7}, {4}, {2, 6}, {1, 3}, {0}]).classes == ({0}, {1, 3}, {2, 6}, {4}, {5, 7})


class TestClassOf:
    def test_lookup(self):
        assert class_of(SYM5, 4) == {1, 4}
        assert class_of(SYM5, 0) == {0}

    def test_outside_window(self):
        P = Partition(Z, [{0}, {1, -1}], window=(-1, 1))
        assert class_of(P, 5) is None


class TestSSets:
    def test_union_of_classes(self):
        assert is_sset(SYM5, {1, 4, 2, 3})
        assert not is_sset(SYM5, {1, 2})
        assert is_sset(SYM5, set())

    def test_outside_universe_is_an_error(self):
        P = Partition(Z, [{0}, {1, -1}], window=(-1, 1))
        with pytest.raises(ValueError):
            is_sset(P, {2})


class TestMembership:
    P = Partition(Z, [{0}, {1, -1}], universe=CLASSES)

    def test_constant_on_classes(self):
        assert membership_test(self.P, RingElement(Z, {1: 2, -1: 2, 0: 7}))
        assert not membership_test(self.P, RingElement(Z, {1: 1, -1: -1}))
        for c in self.P.class_sums():
            assert membership_test(self.P, c)

    def test_zero_off_universe(self):
        assert not membership_test(self.P, monomial(Z, 3))


class TestPrimitive:
    def test_classes_are_primitive(self):
        assert is_primitive(SYM5, simple_quantity(Z5, {1, 4}))
        assert not is_primitive(SYM5, simple_quantity(Z5, {1, 4, 2, 3}))
        assert is_primitive(SYM5, one(Z5))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            is_primitive(SYM5, RingElement(Z5, {1: 2, 4: 2}))
        with pytest.raises(ValueError):
            is_primitive(SYM5, simple_quantity(Z5, {1}))

    def test_primitive_meets_simple_in_nothing_or_itself(self, rng):
        for _ in range(50):
            P = random_partition(rng, rng.randint(2, 20))
            for C in P.classes:
                cbar = simple_quantity(P.ctx, C)
                chosen = [D for D in P.classes if rng.random() < 0.5]
                beta = simple_quantity(P.ctx, frozenset().union(*chosen))
                assert hadamard(cbar, beta) in (cbar, RingElement(P.ctx))


class TestDecompose:
    def test_disjoint_generators(self):
        gens = [one(Z), simple_quantity(Z, {1, -1}), simple_quantity(Z, {2, -2})]
        assert set(decompose_span(gens).classes) == {frozenset({0}), frozenset({1, -1}), frozenset({2, -2})}

    def test_single_generator_with_levels(self):
        alpha = RingElement(Z, {1: 2, 2: 3, -1: 2})
        # interpolation oracle: f(0)=f(2)=0, f(3)=3 isolates the 3-level
        f = lagrange_value_map([2, 3], keep={3})
        assert f == {2: 0, 3: 3}
        isolated = apply_function(alpha, f)
        rest = linear_combine(1, alpha, -1, isolated)
        expected = {frozenset(support(isolated)), frozenset(support(rest))}
        assert expected == {frozenset({2}), frozenset({1, -1})}
        assert set(decompose_span([alpha]).classes) == expected

    def test_orbit_round_trip(self):
        ring = orbits(8, [3])
        assert ring == {frozenset(s) for s in [{0}, {1, 3}, {2, 6}, {4}, {5, 7}]}
        gens = [simple_quantity(FiniteCyclic(8), C) for C in ring]
        assert set(decompose_span(gens).classes) == ring

    def test_not_closed_strict(self):
        alpha = RingElement(Z, {1: 1, 2: 2})
        assert set(decompose_span([alpha]).classes) == {frozenset({1}), frozenset({2})}
        with pytest.raises(NotHadamardClosed) as info:
            decompose_span([alpha], strict=True)
        assert info.value.product == RingElement(Z, {1: 1, 2: 4})

    def test_empty_or_zero(self):
        with pytest.raises(ValueError):
            decompose_span([])
        with pytest.raises(ValueError):
            decompose_span([RingElement(Z)])

    def test_random_round_trips(self, rng):
        for _ in range(40):
            P = random_partition(rng, rng.randint(1, 30))
            assert decompose_span(P.class_sums()).same_classes(P)
            assert decompose_span(P.class_sums(), strict=True).same_classes(P)

    def test_mixed_span_members(self, rng):
        # generators are random members spanning the whole module
        for _ in range(20):
            P = random_partition(rng, rng.randint(2, 20))
            sums = P.class_sums()
            gens = []
            for _ in range(len(sums)):
                acc = RingElement(P.ctx)
                for s in sums:
                    acc = linear_combine(1, acc, rng.randint(0, 3), s)
                if not acc.is_zero():
                    gens.append(acc)
            if Span(P.ctx, gens).dim == len(sums):
                assert decompose_span(gens).same_classes(P)


class TestSpanMembers:
    def test_complexes_supports_functions(self, rng):
        R = symmetric_ring(FiniteCyclic(12))
        P = R.partition
        sums = P.class_sums()
        for _ in range(100):
            alpha = RingElement(P.ctx)
            for s in sums:
                alpha = linear_combine(1, alpha, rng.choice([0, 1, 2, Fraction(1, 2)]), s)
            assert is_sset(P, support(alpha))
            for c in alpha.values():
                assert is_sset(P, coefficient_complex(alpha, c))
            f = {c: Fraction(rng.randint(-2, 2)) for c in alpha.values()}
            assert membership_test(P, apply_function(alpha, f))


def test_shifted_pairs_intersect_trivially():
    # {2k, 2k+1} and {2k, 2k-1} over a window of Z
    S = [simple_quantity(Z, {2 * k, 2 * k + 1}) for k in range(-4, 5)]
    T = [simple_quantity(Z, {2 * k, 2 * k - 1}) for k in range(-4, 6)]
    both = Span(Z, S + T)
    assert Span(Z, S).dim + Span(Z, T).dim - both.dim == 0


def test_span_membership():
    sp = Span(Z, [RingElement(Z, {1: 1, 2: 1}), RingElement(Z, {2: 1, 3: 1})])
    assert RingElement(Z, {1: 1, 3: -1}) in sp
    assert monomial(Z, 1) not in sp
    assert sp.dim == 2
