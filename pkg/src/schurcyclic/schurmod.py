"""Schur modules: finite-support partitions, S-sets and span decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .ringcore import (
    GroupContext,
    RingElement,
    coefficient_complex,
    display_key,
    format_rational,
    hadamard,
    simple_quantity,
    support,
)

WHOLE = "whole"
WINDOW = "window"
CLASSES = "classes"


@dataclass(frozen=True)
class Verdict:
    """Accept/reject outcome.  ``rule`` names the violated clause, ``witness`` the evidence."""

    ok: bool
    rule: str = ""
    message: str = ""
    witness: dict = field(default_factory=dict, compare=False)
    fragment: bool = False

    def __bool__(self):
        return self.ok

    @classmethod
    def accept(cls, fragment=False):
        return cls(True, fragment=fragment)

    @classmethod
    def reject(cls, rule, message, **witness):
        return cls(False, rule, message, witness)


def class_sort_key(cls: Iterable):
    m = min(abs(e) for e in cls)
    return (m, 0 if m in cls else 1, len(cls), tuple(sorted(cls)))


def fmt_set(s: Iterable) -> str:
    return "{" + ",".join(format_rational(e) for e in sorted(s, key=display_key)) + "}"


@dataclass(frozen=True)
class Partition:
    """A family of finite classes of exponents over ``ctx``.

    ``universe`` is ``"whole"`` (finite groups), ``"window"`` (the symmetric range
    ``window=(lo, hi)`` of the integers) or ``"classes"`` (just the union of the
    listed classes).  Classes are kept in canonical order; overlaps and coverage
    are reported by :func:`validate_partition`, not rejected here.
    """

    ctx: GroupContext
    classes: tuple
    universe: str = CLASSES
    window: tuple | None = None

    def __init__(self, ctx, classes, universe=None, window=None):
        if universe is None:
            universe = WINDOW if window is not None else (WHOLE if ctx.is_finite else CLASSES)
        if universe == WHOLE and not ctx.is_finite:
            raise ValueError("whole-group universe needs a finite group")
        if universe == WINDOW:
            if window is None or ctx.kind != "Z":
                raise ValueError("window universe needs group Z and a (lo, hi) window")
            lo, hi = window
            if lo != -hi or hi < 0:
                raise ValueError(f"window must be symmetric, got [{lo}, {hi}]")
            window = (lo, hi)
        elif window is not None:
            raise ValueError("window given for a non-window universe")
        norm = [frozenset(ctx.normalize(e) for e in c) for c in classes]
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "classes", tuple(sorted(norm, key=lambda c: class_sort_key(c) if c else (-1,))))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "window", window)

    @property
    def radius(self) -> int:
        return self.window[1]

    @cached_property
    def universe_set(self) -> frozenset:
        if self.universe == WHOLE:
            return frozenset(self.ctx.elements())
        if self.universe == WINDOW:
            lo, hi = self.window
            return frozenset(range(lo, hi + 1))
        return frozenset().union(*self.classes)

    @cached_property
    def index(self) -> dict:
        """exponent -> class (last writer wins on overlap; validate first)."""
        return {e: c for c in self.classes for e in c}

    @cached_property
    def position(self) -> dict:
        return {c: i for i, c in enumerate(self.classes)}

    def contains(self, e) -> bool:
        return self.ctx.normalize(e) in self.universe_set

    def class_sums(self) -> list[RingElement]:
        return [simple_quantity(self.ctx, c) for c in self.classes]

    def same_classes(self, other: "Partition") -> bool:
        return self.ctx == other.ctx and set(self.classes) == set(other.classes)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def validate_partition(P: Partition) -> Verdict:
    seen: dict = {}
    for c in P.classes:
        if not c:
            return Verdict.reject("empty-class", "empty class")
        for e in c:
            if e in seen:
                return Verdict.reject(
                    "overlap", f"classes {fmt_set(seen[e])} and {fmt_set(c)} overlap at {format_rational(e)}",
                    element=e, classes=(seen[e], c))
            seen[e] = c
    if P.universe != CLASSES:
        outside = set(seen) - P.universe_set
        if outside:
            return Verdict.reject("outside", f"exponents {fmt_set(outside)} lie outside the universe",
                                  elements=frozenset(outside))
        missing = P.universe_set - set(seen)
        if missing:
            return Verdict.reject("uncovered", f"exponents {fmt_set(missing)} are not covered",
                                  elements=frozenset(missing))
    return Verdict.accept()


def class_of(P: Partition, g) -> frozenset | None:
    g = P.ctx.normalize(g)
    if g not in P.universe_set:
        return None
    return P.index.get(g)


def is_sset(P: Partition, S: Iterable) -> bool:
    S = frozenset(P.ctx.normalize(e) for e in S)
    outside = S - P.universe_set
    if outside:
        raise ValueError(f"{fmt_set(outside)} outside the represented universe")
    return all(P.index[e] <= S for e in S)


def membership_test(P: Partition, alpha: RingElement) -> bool:
    """True iff ``alpha`` is constant on every class and vanishes off the universe."""
    if alpha.ctx != P.ctx:
        return False
    terms = alpha.terms
    if not terms.keys() <= P.universe_set:
        return False
    for c in P.classes:
        vals = {terms.get(e, 0) for e in c}
        if len(vals) > 1:
            return False
    return True


def is_primitive(P: Partition, alpha: RingElement) -> bool:
    if not alpha.is_simple():
        raise ValueError("not a simple quantity")
    if not membership_test(P, alpha):
        raise ValueError("element not in the span of the partition")
    s = support(alpha)
    return bool(s) and P.index.get(next(iter(s))) == s


class Span:
    """Exact row-echelon basis for a subspace of ``Q[G]`` (sparse dict vectors).

    Rows are kept fully reduced: each pivot exponent appears in exactly one row.
    """

    def __init__(self, ctx: GroupContext, vectors: Iterable[RingElement] = ()):
        self.ctx = ctx
        self.rows: dict = {}  # pivot -> dict row with row[pivot] == 1
        for v in vectors:
            self.add(v)

    @staticmethod
    def _pivot(vec: dict):
        return min(vec, key=lambda e: (abs(e), e < 0, e))

    def reduce(self, alpha: RingElement) -> dict:
        vec = dict(alpha.terms)
        for p in [p for p in vec if p in self.rows]:
            c = vec.get(p)
            if not c:
                continue
            for e, r in self.rows[p].items():
                v = vec.get(e, 0) - c * r
                if v:
                    vec[e] = v
                else:
                    vec.pop(e, None)
        return vec

    def add(self, alpha: RingElement) -> bool:
        if alpha.ctx != self.ctx:
            raise ValueError("context mismatch")
        vec = self.reduce(alpha)
        if not vec:
            return False
        p = self._pivot(vec)
        inv = 1 / vec[p]
        vec = {e: c * inv for e, c in vec.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for e, v in vec.items():
                    nv = row.get(e, 0) - c * v
                    if nv:
                        row[e] = nv
                    else:
                        row.pop(e, None)
        self.rows[p] = vec
        return True

    def __contains__(self, alpha: RingElement) -> bool:
        return not self.reduce(alpha)

    @property
    def dim(self) -> int:
        return len(self.rows)


class NotHadamardClosed(ValueError):
    def __init__(self, msg, product=None, pair=None):
        super().__init__(msg)
        self.product = product
        self.pair = pair


def decompose_span(generators: Sequence[RingElement], strict: bool = False) -> Partition:
    """Primitive partition of the Hadamard closure of the span of ``generators``.

    Every nonzero level set of every generator is a union of primitive sets, so
    two exponents share a primitive set iff they sit in the same level set of
    every generator.  The result is then checked: each generator must be
    constant on every class, and each pairwise Hadamard product of generators
    must lie in the span of the class sums.  With ``strict=True`` the products
    must already lie in the span of the generators themselves, i.e. the input
    span has to be closed as given.  The universe is the union of the classes.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("empty span query")
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ValueError("generators do not share a context")
        if g.is_zero():
            raise ValueError("zero generator")
    signature: dict = {}
    for i, g in enumerate(gens):
        for c in sorted(g.values()):
            for e in coefficient_complex(g, c):
                signature.setdefault(e, []).append((i, c))
    blocks: dict = {}
    for e, sig in signature.items():
        blocks.setdefault(tuple(sig), set()).add(e)
    P = Partition(ctx, blocks.values(), universe=CLASSES)

    for g in gens:
        if not membership_test(P, g):
            raise NotHadamardClosed("input span not Hadamard-closed: generator not constant on its classes")
    span = Span(ctx, gens) if strict else None
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            prod = hadamard(gens[i], gens[j])
            inside = prod in span if strict else membership_test(P, prod)
            if not inside:
                raise NotHadamardClosed(
                    f"input span not Hadamard-closed: generator {i} ∘ generator {j} leaves the span",
                    product=prod, pair=(i, j))
    return P
