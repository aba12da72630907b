"""Classification procedures for Schur rings over cyclic and locally cyclic groups."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .ringcore import (
    INFINITE_CYCLIC,
    FiniteCyclic,
    format_rational,
    rational_gcd,
    rational_lcm,
)
from .schurmod import WINDOW, Partition, class_sort_key, fmt_set, is_sset, validate_partition
from .schurring import SchurRing, _split_failure, sumset_counts, verify_schur_ring

SINGLETON = "singleton"
PAIR = "symmetric-pair"
VIOLATION = "violation"

GROUP_RING = "group-ring"
SYMMETRIC = "symmetric"
INCONSISTENT = "inconsistent"

MAX_WINDOW_RADIUS = 5
MAX_ENUMERATION_ORDER = 13


@dataclass(frozen=True)
class ClassShape:
    kind: str
    a: Fraction | int | None = None
    m: int | None = None
    message: str = ""


@dataclass(frozen=True)
class Classification:
    pattern: str
    rule: str = ""
    message: str = ""
    witness: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.pattern != INCONSISTENT


def _normalize_exponent(e):
    e = Fraction(e)
    return e.numerator if e.denominator == 1 else e


def check_class_shape(C: Iterable, torsion_free: bool = True) -> ClassShape:
    """Test a non-identity class of a torsion-free locally cyclic group.

    The class is rescaled by the generator of the subgroup it spans, then every
    freshman power ``m`` that can meet it is tried: ``C ∩ C^(m)`` must be empty
    or all of ``C``.  Survivors must still be ``{a}`` or ``{a, -a}``.
    """
    if not torsion_free:
        raise ValueError("the class-shape test needs a torsion-free group")
    C = frozenset(_normalize_exponent(e) for e in C)
    if not C:
        raise ValueError("empty class")
    if 0 in C:
        raise ValueError("the identity lies in its own class")
    g = rational_gcd(C)
    reduced = frozenset(int(e / g) for e in C)
    bound = max(abs(x) for x in reduced)
    for m in itertools.chain([-1], *(((k, -k) for k in range(2, bound + 1)))):
        meet = reduced & {m * x for x in reduced}
        if meet and meet != reduced:
            return ClassShape(VIOLATION, m=m, message=(
                f"{fmt_set(C)} ∩ {fmt_set(e * m for e in C)} = {fmt_set(e * g for e in meet)} "
                f"is neither empty nor the whole class (freshman power {m})"))
    a = _normalize_exponent(g)
    if reduced in ({1}, {-1}):
        return ClassShape(SINGLETON, a=a)
    if reduced == {1, -1}:
        return ClassShape(PAIR, a=a)
    return ClassShape(VIOLATION, message=f"{fmt_set(C)} spans <{format_rational(g)}> but is neither {{a}} nor {{a,-a}}")


def _uniformity(classes) -> Classification | None:
    singles = [C for C in classes if len(C) == 1]
    pairs = [C for C in classes if len(C) == 2]
    if singles and pairs:
        S, T = singles[0], pairs[0]
        common = rational_lcm(next(iter(S)), max(T))
        return Classification(
            INCONSISTENT, "case-ii",
            f"singleton {fmt_set(S)} and pair {fmt_set(T)} give conflicting classes for "
            f"{format_rational(common)} in <{fmt_set(S)}> ∩ <{fmt_set(T)}>",
            {"classes": (S, T), "common": common})
    return None


def window_conditions(P: Partition, uniformity: bool = True, assume_shape: bool = True) -> Classification:
    """Necessary conditions on a window fragment, cheapest first.

    With ``assume_shape=False`` a class is only rejected by the class-shape test
    when a freshman power witnesses it; the bare ``{a}``/``{a,-a}`` requirement
    (itself a consequence of the classification) is dropped.
    """
    if P.universe != WINDOW:
        raise ValueError("missing window declaration")
    v = validate_partition(P)
    if not v:
        return Classification(INCONSISTENT, "partition", v.message, v.witness)
    if frozenset({0}) not in P.position:
        return Classification(INCONSISTENT, "identity", "{0} is not a class")
    rest = [C for C in P.classes if C != {0}]
    for C in rest:
        Cs = frozenset(-e for e in C)
        if Cs not in P.position:
            return Classification(INCONSISTENT, "star", f"{fmt_set(C)}* = {fmt_set(Cs)} is not a class",
                                  {"classes": (C,)})
    for C in rest:
        shape = check_class_shape(C)
        if shape.kind == VIOLATION and (assume_shape or shape.m is not None):
            return Classification(INCONSISTENT, "shape", shape.message, {"classes": (C,), "m": shape.m})
    universe = P.universe_set
    classes = P.classes
    for i, C in enumerate(classes):
        for D in classes[: i + 1]:
            counts = sumset_counts(INFINITE_CYCLIC, C, D)
            if not counts.keys() <= universe:
                continue
            bad = _split_failure(P, counts)
            if bad:
                E, e = bad
                return Classification(
                    INCONSISTENT, "product",
                    f"product {fmt_set(C)}·{fmt_set(D)} = {fmt_set(counts)} splits class {fmt_set(E)}",
                    {"classes": (C, D, E), "element": e})
    N = P.radius
    for C in rest:
        for k in range(2, N + 1):
            for m in (k, -k):
                image = {m * e for e in C}
                if image <= universe and not is_sset(P, image):
                    return Classification(
                        INCONSISTENT, "freshman",
                        f"{fmt_set(C)}^({m}) = {fmt_set(image)} is not a union of classes",
                        {"classes": (C,), "m": m})
    if uniformity:
        bad = _uniformity(rest)
        if bad is not None:
            return bad
    if all(len(C) == 1 for C in rest):
        return Classification(GROUP_RING)
    return Classification(SYMMETRIC)


def classify_window(P: Partition) -> Classification:
    return window_conditions(P, uniformity=True)


def _window_partitions(N: int, prune: bool = True) -> Iterator[list]:
    """Partitions of the nonzero exponents of [-N, N].

    With ``prune``, a class holding exponents of different absolute value can
    never pass the shape test, so such branches are cut as soon as they appear.
    """
    order = [e for k in range(1, N + 1) for e in (k, -k)]
    blocks: list = []

    def rec(i):
        if i == len(order):
            yield [set(b) for b in blocks]
            return
        e = order[i]
        for b in blocks:
            if not prune or abs(next(iter(b))) == abs(e):
                b.add(e)
                yield from rec(i + 1)
                b.remove(e)
        blocks.append({e})
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def exhaustive_window_search(N: int, core: int, assume_shape: bool = True) -> list[Partition]:
    """Window partitions passing every necessary condition except type uniformity,
    reported by their restriction to [-core, core].

    ``assume_shape=False`` searches every set partition and keeps only the
    freshman-witnessed part of the class-shape test.
    """
    if not 1 <= N <= MAX_WINDOW_RADIUS:
        raise ValueError(f"window radius must be in 1..{MAX_WINDOW_RADIUS}")
    if not 0 <= core <= N:
        raise ValueError("core radius must be in 0..N")
    cores = {}
    for blocks in _window_partitions(N, prune=assume_shape):
        P = Partition(INFINITE_CYCLIC, [{0}] + blocks, window=(-N, N))
        if window_conditions(P, uniformity=False, assume_shape=assume_shape):
            cut = [c & set(range(-core, core + 1)) for c in P.classes]
            Q = Partition(INFINITE_CYCLIC, [c for c in cut if c], window=(-core, core))
            cores[Q.classes] = Q
    return [cores[k] for k in sorted(cores, key=lambda cs: [class_sort_key(c) for c in cs])]


def classify_rational(classes: Iterable[Iterable]) -> Classification:
    fam = []
    for c in classes:
        c = frozenset(Fraction(e) for e in c)
        if c == {0}:
            continue
        if 0 in c:
            raise ValueError("0 must form its own class")
        fam.append(c)
    seen = set()
    for c in fam:
        if seen & c:
            raise ValueError(f"classes overlap at {fmt_set(seen & c)}")
        seen |= c
    famset = set(fam)
    for c in fam:
        if frozenset(-e for e in c) not in famset:
            raise ValueError(f"family not negation-closed: {fmt_set(c)}")
    fam.sort(key=class_sort_key)
    for c in fam:
        shape = check_class_shape(c)
        if shape.kind == VIOLATION:
            return Classification(INCONSISTENT, "shape", shape.message, {"classes": (c,), "m": shape.m})
    bad = _uniformity(fam)
    if bad is not None:
        return bad
    if all(len(c) == 1 for c in fam):
        return Classification(GROUP_RING)
    return Classification(SYMMETRIC)


# -- enumeration over Z/n -------------------------------------------------------

def _enumerate(n: int) -> Iterator[list]:
    neg = [(-x) % n for x in range(n)]
    complete: list = [frozenset({0})]
    products: list = [Counter({0: 1})]  # one per complete class pair
    sig = {y: [0] for y in range(1, n)}  # coefficient of y in every product so far

    def constant_on(counts, cls):
        it = iter(cls)
        v = counts.get(next(it), 0)
        return all(counts.get(e, 0) == v for e in it)

    def rec(unassigned: frozenset):
        if not unassigned:
            yield list(complete)
            return
        x = min(unassigned)
        sx = sig[x]
        pool = sorted(y for y in unassigned if y != x and sig[y] == sx)
        for r in range(len(pool) + 1):
            for extra in itertools.combinations(pool, r):
                C = frozenset((x,) + extra)
                Cn = frozenset(neg[e] for e in C)
                if Cn == C:
                    new = [C]
                elif Cn & C or not Cn <= unassigned:
                    continue
                else:
                    sy = sig[next(iter(Cn))]
                    if any(sig[e] != sy for e in Cn):
                        continue
                    new = [C, Cn]
                rest = unassigned - C - Cn
                # old products must be constant on the new classes (C already is)
                base = len(complete)
                complete.extend(new)
                fresh = []
                ok = True
                for i in range(base, len(complete)):
                    for j in range(i + 1):
                        counts = sumset_counts(FiniteCyclic(n), complete[i], complete[j])
                        if not all(constant_on(counts, K) for K in complete):
                            ok = False
                            break
                        fresh.append(counts)
                    if not ok:
                        break
                if ok:
                    products.extend(fresh)
                    for y in rest:
                        sig[y].extend(cnt.get(y, 0) for cnt in fresh)
                    yield from rec(rest)
                    for y in rest:
                        del sig[y][len(sig[y]) - len(fresh):]
                    del products[len(products) - len(fresh):]
                del complete[base:]

    yield from rec(frozenset(range(1, n)))


def ring_order_key(R: SchurRing):
    return (-len(R.classes), [sorted(c) for c in R.classes])


def enumerate_schur_rings(n: int, force: bool = False) -> list[SchurRing]:
    """Every Schur ring over Z/n, by depth-first search over star-closed partitions."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ENUMERATION_ORDER and not force:
        raise ValueError(f"n = {n} exceeds the enumeration guard {MAX_ENUMERATION_ORDER}; pass force")
    ctx = FiniteCyclic(n)
    found = {}
    for classes in _enumerate(n):
        P = Partition(ctx, classes)
        if verify_schur_ring(P):
            found[P] = SchurRing(P, check=False)
    return sorted(found.values(), key=ring_order_key)
