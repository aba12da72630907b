"""Schur rings over cyclic groups and fragments of the infinite ones."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .ringcore import (
    FINITE,
    INTEGERS,
    RATIONALS,
    FiniteCyclic,
    GroupContext,
    INFINITE_CYCLIC,
    RingElement,
    format_rational,
    rational_gcd,
    rational_lcm,
    support,
)
from .schurmod import (
    CLASSES,
    WHOLE,
    WINDOW,
    Partition,
    Verdict,
    fmt_set,
    membership_test,
    validate_partition,
)


def sumset_counts(ctx: GroupContext, C: Iterable, D: Iterable) -> Counter:
    """Coefficients of the product of two class sums."""
    out: Counter = Counter()
    for a in C:
        for b in D:
            out[ctx.add(a, b)] += 1
    return out


def _split_failure(P: Partition, counts: Counter):
    """First class on which ``counts`` is not constant, with an offending exponent."""
    touched = []
    for e in counts:
        c = P.index.get(e)
        if c is not None and c not in touched:
            touched.append(c)
    for E in sorted(touched, key=P.position.__getitem__):
        ref = None
        for e in sorted(E, key=lambda x: (abs(x), x < 0)):
            v = counts.get(e, 0)
            if ref is None:
                ref = v
            elif v != ref:
                return E, e
    return None


def verify_schur_ring(P: Partition) -> Verdict:
    """Check the identity, star and product-splitting axioms.

    For window/class-list fragments only class pairs whose product stays inside
    the represented universe are checked; acceptance is then flagged as a
    fragment.
    """
    v = validate_partition(P)
    if not v:
        return v
    ctx = P.ctx
    fragment = P.universe != WHOLE
    if frozenset({0}) not in P.position:
        return Verdict.reject("identity", "{0} is not a class", classes=())
    for C in P.classes:
        Cs = frozenset(ctx.neg(e) for e in C)
        if Cs not in P.position:
            # on a class-list fragment the negated class may simply be unrepresented
            if fragment and not Cs <= P.universe_set:
                continue
            return Verdict.reject("star", f"{fmt_set(C)}* = {fmt_set(Cs)} is not a class", classes=(C,))
    universe = P.universe_set
    classes = P.classes
    for i, C in enumerate(classes):
        for D in classes[: i + 1]:
            counts = sumset_counts(ctx, C, D)
            if fragment and not counts.keys() <= universe:
                continue
            bad = _split_failure(P, counts)
            if bad:
                E, e = bad
                return Verdict.reject(
                    "product",
                    f"product {fmt_set(C)}·{fmt_set(D)} = {fmt_set(counts)} splits class {fmt_set(E)}",
                    classes=(C, D, E), element=e)
    return Verdict.accept(fragment=fragment)


@dataclass(frozen=True)
class StructureTable:
    C: frozenset
    D: frozenset
    entries: dict  # class -> Fraction, nonzero only

    def conservation(self) -> tuple[Fraction, int]:
        """(sum of lambda*|E|, |C|*|D|); equal for a genuine Schur ring."""
        return sum(l * len(E) for E, l in self.entries.items()), len(self.C) * len(self.D)

    def __getitem__(self, E):
        return self.entries.get(frozenset(E), Fraction(0))


class SchurRing:
    """A verified Schur-ring partition with a lazily filled structure-constant cache."""

    def __init__(self, partition: Partition, check: bool = True):
        if check:
            v = verify_schur_ring(partition)
            if not v:
                raise ValueError(f"not a Schur ring: {v.message}")
        self.partition = partition
        self._cache: dict = {}

    @property
    def ctx(self):
        return self.partition.ctx

    @property
    def classes(self):
        return self.partition.classes

    def class_sums(self):
        return self.partition.class_sums()

    def __contains__(self, alpha):
        return membership_test(self.partition, alpha)

    def __eq__(self, other):
        return isinstance(other, SchurRing) and self.partition == other.partition

    def __hash__(self):
        return hash(self.partition)

    def __repr__(self):
        return f"SchurRing({self.ctx}, {' '.join(fmt_set(c) for c in self.classes)})"


def _as_class(R: SchurRing, C) -> frozenset:
    C = frozenset(R.ctx.normalize(e) for e in C)
    if C not in R.partition.position:
        raise ValueError(f"{fmt_set(C)} is not a class")
    return C


def structure_constants(R: SchurRing, C, D) -> StructureTable:
    C, D = _as_class(R, C), _as_class(R, D)
    key = (C, D)
    hit = R._cache.get(key)
    if hit is not None:
        return hit
    P = R.partition
    counts = sumset_counts(R.ctx, C, D)
    if not counts.keys() <= P.universe_set:
        raise ValueError(f"product {fmt_set(C)}·{fmt_set(D)} escapes the represented universe")
    bad = _split_failure(P, counts)
    if bad:
        raise ValueError(f"product {fmt_set(C)}·{fmt_set(D)} does not split over class {fmt_set(bad[0])}")
    entries = {}
    for e, k in counts.items():
        entries.setdefault(P.index[e], Fraction(k))
    table = StructureTable(C, D, dict(sorted(entries.items(), key=lambda t: P.position[t[0]])))
    R._cache[key] = table
    return table


def format_structure(R: SchurRing, table: StructureTable) -> list[str]:
    pos = R.partition.position
    i, j = pos[table.C], pos[table.D]
    return [f"lambda {i} {j} {pos[E]} {format_rational(l)}" for E, l in table.entries.items()]


# -- constructions ------------------------------------------------------------

def _unit_closure(n: int, gens: Iterable[int]) -> set[int]:
    H = {1 % n}
    frontier = list(H)
    gens = [g % n for g in gens]
    while frontier:
        h = frontier.pop()
        for g in gens:
            x = h * g % n
            if x not in H:
                H.add(x)
                frontier.append(x)
    return H


def orbit_ring(n: int, multipliers: Iterable[int]) -> SchurRing:
    ctx = FiniteCyclic(n)
    mults = list(multipliers)
    for m in mults:
        if math.gcd(m, n) != 1:
            raise ValueError(f"multiplier {m} is not a unit mod {n}")
    H = _unit_closure(n, mults)
    seen, orbits = set(), []
    for x in range(n):
        if x not in seen:
            orb = {h * x % n for h in H}
            seen |= orb
            orbits.append(orb)
    return SchurRing(Partition(ctx, orbits))


def group_ring(ctx: GroupContext, window: tuple | None = None, elements: Iterable | None = None) -> SchurRing:
    if ctx.is_finite:
        return SchurRing(Partition(ctx, [{x} for x in ctx.elements()]))
    if ctx.kind == INTEGERS and window is not None:
        lo, hi = window
        return SchurRing(Partition(ctx, [{x} for x in range(lo, hi + 1)], window=window))
    if elements is None:
        raise ValueError(f"group ring over {ctx} needs a window or an element list")
    es = {ctx.normalize(e) for e in elements} | {0}
    es |= {-e for e in es}
    return SchurRing(Partition(ctx, [{e} for e in es], universe=CLASSES))


def symmetric_ring(ctx: GroupContext, window: tuple | None = None, elements: Iterable | None = None) -> SchurRing:
    if ctx.is_finite:
        return SchurRing(Partition(ctx, {frozenset({x, ctx.neg(x)}) for x in ctx.elements()}))
    if ctx.kind == INTEGERS and window is not None:
        lo, hi = window
        return SchurRing(Partition(ctx, [{x, -x} for x in range(0, hi + 1)], window=window))
    if elements is None:
        raise ValueError(f"symmetric ring over {ctx} needs a window or an element list")
    es = {abs(ctx.normalize(e)) for e in elements} | {0}
    return SchurRing(Partition(ctx, [{e, -e} for e in es], universe=CLASSES))


def trivial_ring(ctx: GroupContext) -> SchurRing:
    if not ctx.is_finite:
        raise ValueError("trivial partition has infinite class")
    rest = set(range(1, ctx.n))
    return SchurRing(Partition(ctx, [{0}] + ([rest] if rest else [])))


def crt(a: int, b: int, m: int, k: int) -> int:
    """The residue mod m*k congruent to a mod m and b mod k (gcd(m, k) = 1)."""
    return (a + m * ((b - a) * pow(m, -1, k) % k)) % (m * k) if k > 1 else a % m


def tensor_ring(R1: SchurRing, R2: SchurRing) -> SchurRing:
    if not (R1.ctx.is_finite and R2.ctx.is_finite):
        raise ValueError("tensor product needs finite cyclic factors")
    m, k = R1.ctx.n, R2.ctx.n
    if math.gcd(m, k) != 1:
        raise ValueError(f"gcd({m}, {k}) != 1")
    classes = [{crt(a, b, m, k) for a in C for b in D} for C in R1.classes for D in R2.classes]
    return SchurRing(Partition(FiniteCyclic(m * k), classes))


# -- subgroups ----------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """Cyclic subgroup generated by ``generator``.

    Finite groups: a divisor ``d`` of ``n`` (``d == n`` is the trivial subgroup).
    Integers / rationals: a nonnegative generator, 0 for the trivial subgroup.
    """

    ctx: GroupContext
    generator: int | Fraction

    def __post_init__(self):
        g = self.generator
        if self.ctx.is_finite:
            if not isinstance(g, int) or g < 1 or self.ctx.n % g:
                raise ValueError(f"subgroup generator {g} must divide {self.ctx.n}")
        elif g < 0:
            raise ValueError("subgroup generator must be nonnegative")

    @property
    def trivial(self) -> bool:
        return self.generator == (self.ctx.n if self.ctx.is_finite else 0)

    @property
    def order(self):
        if self.ctx.is_finite:
            return self.ctx.n // self.generator
        return 1 if self.trivial else math.inf

    def contains(self, e) -> bool:
        e = self.ctx.normalize(e)
        if self.trivial:
            return e == 0
        q = Fraction(e) / self.generator
        return q.denominator == 1

    def elements(self) -> list:
        if not self.ctx.is_finite:
            raise ValueError("infinite subgroup")
        return list(range(0, self.ctx.n, self.generator))

    def reindex(self, e):
        """Coordinate of ``e`` along the generator (H ≅ Z/(n/d), Z or the trivial group)."""
        if self.trivial:
            return 0
        q = Fraction(self.ctx.normalize(e)) / self.generator
        if q.denominator != 1:
            raise ValueError(f"{e} not in subgroup")
        return q.numerator


def _subgroup_from(ctx: GroupContext, exps: Iterable) -> Subgroup:
    exps = list(exps)
    if ctx.kind == FINITE:
        return Subgroup(ctx, math.gcd(ctx.n, *exps))
    if ctx.kind == INTEGERS:
        return Subgroup(ctx, math.gcd(*exps) if exps else 0)
    return Subgroup(ctx, rational_gcd(exps))


def check_ssubgroup(R: SchurRing, H: Subgroup) -> tuple | None:
    """A class meeting ``H`` without being contained in it, if any."""
    for C in R.classes:
        inside = [H.contains(e) for e in C]
        if any(inside) and not all(inside):
            return C
    return None


def generated_subgroup(R: SchurRing, alpha: RingElement) -> Subgroup:
    if alpha.is_zero():
        raise ValueError("zero element generates no support")
    if alpha not in R:
        raise ValueError("element not in the ring")
    H = _subgroup_from(R.ctx, support(alpha))
    bad = check_ssubgroup(R, H)
    if bad is not None:
        raise ValueError(f"<supp> is not an S-subgroup: class {fmt_set(bad)} straddles it")
    return H


def stabilizer(R: SchurRing, alpha: RingElement) -> Subgroup:
    ctx = R.ctx
    if not ctx.is_finite:
        if not alpha.is_zero():
            return Subgroup(ctx, 0)
        if ctx.kind == INTEGERS:
            return Subgroup(ctx, 1)
        raise ValueError("stabilizer of 0 is all of Q, which is not cyclic")
    n = ctx.n
    terms = alpha.terms
    H = Subgroup(ctx, n)
    for d in range(1, n + 1):
        if n % d == 0 and all(terms.get((e + d) % n) == c for e, c in terms.items()):
            H = Subgroup(ctx, d)
            break
    bad = check_ssubgroup(R, H)
    if bad is not None:
        raise ValueError(f"stabilizer is not an S-subgroup: class {fmt_set(bad)} straddles it")
    return H


def restrict(R: SchurRing, H: Subgroup) -> SchurRing:
    """The ring restricted to an S-subgroup, re-indexed along ``H``'s generator."""
    if H.ctx != R.ctx:
        raise ValueError("context mismatch")
    bad = check_ssubgroup(R, H)
    if bad is not None:
        raise ValueError(f"not an S-subgroup: class {fmt_set(bad)} straddles it")
    ctx = R.ctx
    inner = [C for C in R.classes if H.contains(next(iter(C)))]
    if H.trivial:
        return SchurRing(Partition(FiniteCyclic(1), [{0}]))
    new = [{H.reindex(e) for e in C} for C in inner]
    if ctx.is_finite:
        return SchurRing(Partition(FiniteCyclic(H.order), new))
    if R.partition.universe == WINDOW:
        r = R.partition.radius // H.generator
        return SchurRing(Partition(INFINITE_CYCLIC, new, window=(-r, r)))
    return SchurRing(Partition(INFINITE_CYCLIC, new, universe=CLASSES))


def subgroup_intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.ctx != K.ctx:
        raise ValueError("context mismatch")
    ctx = H.ctx
    if ctx.kind == FINITE:
        return Subgroup(ctx, math.lcm(H.generator, K.generator))
    if ctx.kind == INTEGERS:
        return Subgroup(ctx, math.lcm(H.generator, K.generator))
    assert ctx.kind == RATIONALS
    return Subgroup(ctx, rational_lcm(H.generator, K.generator))
