"""Exact group-ring arithmetic over cyclic-type groups.

Group elements are stored by their exponent: ``z^a`` is the key ``a``.  The
exponent domain depends on the :class:`GroupContext`:

* ``Z/n``  -- integer residues normalized to ``[0, n)``
* ``Z``    -- integers
* ``Q``    -- :class:`fractions.Fraction` in lowest terms

Coefficients are always ``Fraction``; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]

FINITE = "finite"
INTEGERS = "Z"
RATIONALS = "Q"


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GroupContext:
    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind == FINITE:
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError(f"finite cyclic order must be a positive integer, got {self.n!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.n is not None:
                raise ValueError(f"{self.kind} context takes no order")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def torsion_free(self) -> bool:
        return not self.is_finite

    def normalize(self, e) -> Exponent:
        """Canonical exponent for ``e`` in this context (raises on a foreign value)."""
        if self.kind == RATIONALS:
            if isinstance(e, str):
                e = Fraction(e)
            if not isinstance(e, Rational):
                raise TypeError(f"rational exponent expected, got {e!r}")
            return Fraction(e)
        if isinstance(e, Fraction):
            if e.denominator != 1:
                raise ValueError(f"exponent {e} is not an integer")
            e = e.numerator
        if isinstance(e, bool) or not isinstance(e, int):
            raise TypeError(f"integer exponent expected, got {e!r}")
        if self.kind == FINITE:
            return e % self.n
        return e

    def add(self, a: Exponent, b: Exponent) -> Exponent:
        s = a + b
        return s % self.n if self.kind == FINITE else s

    def neg(self, a: Exponent) -> Exponent:
        return (-a) % self.n if self.kind == FINITE else -a

    def scale(self, a: Exponent, m: int) -> Exponent:
        s = a * m
        return s % self.n if self.kind == FINITE else s

    def elements(self) -> range:
        if self.kind != FINITE:
            raise ValueError(f"group {self} is infinite")
        return range(self.n)

    def __str__(self):
        return f"Z/{self.n}" if self.kind == FINITE else self.kind


def FiniteCyclic(n: int) -> GroupContext:
    return GroupContext(FINITE, n)


INFINITE_CYCLIC = GroupContext(INTEGERS)
RATIONAL = GroupContext(RATIONALS)


def exponent_sort_key(e: Exponent):
    return e


def display_key(e: Exponent):
    """Order by absolute value, positive before negative (``1, -1, 2, -2``)."""
    return (abs(e), e < 0)


class RingElement:
    """A finitely supported element ``sum(c_g * g)`` of the group algebra ``Q[G]``.

    Immutable.  ``terms`` maps exponent to a nonzero ``Fraction``.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: GroupContext, terms: Mapping | Iterable = ()):
        self.ctx = ctx
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for e, c in items:
            e = ctx.normalize(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # terms already normalized and zero-free
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, e) -> Fraction:
        return self._terms.get(self.ctx.normalize(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_simple(self) -> bool:
        return all(c == 1 for c in self._terms.values())

    def values(self) -> set[Fraction]:
        return set(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        return linear_combine(1, self, 1, other)

    def __sub__(self, other):
        return linear_combine(1, self, -1, other)

    def __neg__(self):
        return RingElement._raw(self.ctx, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self, other)
        return linear_combine(other, self, 0, self)

    def __rmul__(self, other):
        return linear_combine(other, self, 0, self)

    def __repr__(self):
        return f"RingElement({self.ctx}, {format_element(self) or '0'})"


def _check(alpha: RingElement, beta: RingElement):
    if alpha.ctx != beta.ctx:
        raise ContextMismatch(f"context mismatch: {alpha.ctx} vs {beta.ctx}")


def zero(ctx: GroupContext) -> RingElement:
    return RingElement._raw(ctx, {})


def one(ctx: GroupContext) -> RingElement:
    return RingElement(ctx, {0: 1})


def monomial(ctx: GroupContext, e, c=1) -> RingElement:
    return RingElement(ctx, {e: c})


def simple_quantity(ctx: GroupContext, subset: Iterable) -> RingElement:
    """The class sum of a finite subset, every coefficient 1."""
    return RingElement._raw(ctx, {ctx.normalize(e): Fraction(1) for e in subset})


def linear_combine(a, alpha: RingElement, b, beta: RingElement) -> RingElement:
    _check(alpha, beta)
    a, b = Fraction(a), Fraction(b)
    out: dict[Exponent, Fraction] = {}
    if a:
        for e, c in alpha._terms.items():
            out[e] = a * c
    if b:
        for e, c in beta._terms.items():
            v = out.get(e, 0) + b * c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return RingElement._raw(alpha.ctx, out)


def multiply(alpha: RingElement, beta: RingElement) -> RingElement:
    """Convolution product: exponents add (mod n for a finite group)."""
    _check(alpha, beta)
    ctx = alpha.ctx
    out: dict[Exponent, Fraction] = {}
    for g, a in alpha._terms.items():
        for h, b in beta._terms.items():
            k = ctx.add(g, h)
            out[k] = out.get(k, 0) + a * b
    return RingElement._raw(ctx, {e: c for e, c in out.items() if c})


def hadamard(alpha: RingElement, beta: RingElement) -> RingElement:
    _check(alpha, beta)
    small, big = sorted((alpha._terms, beta._terms), key=len)
    return RingElement._raw(alpha.ctx, {e: c * big[e] for e, c in small.items() if e in big})


def star(alpha: RingElement) -> RingElement:
    ctx = alpha.ctx
    return RingElement._raw(ctx, {ctx.neg(e): c for e, c in alpha._terms.items()})


def freshman(alpha: RingElement, m: int) -> RingElement:
    """``sum(c_g * g^m)``.  Colliding images (only possible with torsion) are summed."""
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError("freshman exponent must be an integer")
    ctx = alpha.ctx
    out: dict[Exponent, Fraction] = {}
    for e, c in alpha._terms.items():
        k = ctx.scale(e, m)
        out[k] = out.get(k, 0) + c
    return RingElement._raw(ctx, {e: c for e, c in out.items() if c})


def support(alpha: RingElement) -> frozenset:
    return frozenset(alpha._terms)


def coefficient_complex(alpha: RingElement, c) -> frozenset:
    c = Fraction(c)
    if c == 0:
        raise ValueError("zero-level complex not finitely supported")
    return frozenset(e for e, v in alpha._terms.items() if v == c)


def apply_function(alpha: RingElement, f: Mapping) -> RingElement:
    """Apply a value map coefficientwise; absent exponents stay absent (f(0)=0)."""
    fmap = {Fraction(k): Fraction(v) for k, v in f.items()}
    out = {}
    for e, c in alpha._terms.items():
        try:
            v = fmap[c]
        except KeyError:
            raise ValueError(f"value map undefined at coefficient {format_rational(c)}") from None
        if v:
            out[e] = v
    return RingElement._raw(alpha.ctx, out)


def set_freshman(ctx: GroupContext, subset: Iterable, m: int) -> frozenset:
    return frozenset(ctx.scale(ctx.normalize(e), m) for e in subset)


def rational_gcd(values: Iterable) -> Fraction:
    """Generator of the cyclic subgroup of Q spanned by ``values`` (0 for the empty/zero set)."""
    num, den = 0, 1
    for v in values:
        v = Fraction(v)
        if v == 0:
            continue
        num = math.gcd(num, v.numerator)
        den = den * v.denominator // math.gcd(den, v.denominator)
    return Fraction(num, den) if num else Fraction(0)


def rational_lcm(a, b) -> Fraction:
    a, b = abs(Fraction(a)), abs(Fraction(b))
    if a == 0 or b == 0:
        return Fraction(0)
    return Fraction(math.lcm(a.numerator, b.numerator), math.gcd(a.denominator, b.denominator))


# -- text form --------------------------------------------------------------

def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_element(alpha: RingElement) -> str:
    """``coeff@exp`` tokens, exponents ascending; the zero element is ``0``."""
    if alpha.is_zero():
        return "0"
    return " ".join(
        f"{format_rational(c)}@{format_rational(e)}"
        for e, c in sorted(alpha._terms.items(), key=lambda t: exponent_sort_key(t[0]))
    )
