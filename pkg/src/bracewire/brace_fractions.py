"""The skew brace of fractions over a cancellative commutative wire.

A fraction is an unreduced pair ``num/den`` of carrier elements; equality is
cross-multiplication (``u/v == u1/v1`` iff ``u o v1 == v o u1``), which is an
equivalence relation exactly because the carrier's circle monoid is
cancellative.  The circle operation acts componentwise and acquires inverses
by swapping components; the star operation is

    ``u/v * u1/v1 = (u o v1  star  (v o v1)^-1  star  v o u1) / (v o v1)``.

Carriers are duck-typed: any value type with ``star``, ``star_inv``, ``circ``
methods, equality, and a commutative cancellative circle works (the canonical
wire polynomials and the radical-model polynomials both do).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Protocol, TypeVar


class WireElement(Protocol):
    """Structural interface required of fraction carriers."""

    def star(self, other):
        ...

    def star_inv(self):
        ...

    def circ(self, other):
        ...


T = TypeVar("T", bound=WireElement)


@dataclass(frozen=True)
class Fraction(Generic[T]):
    """An unreduced numerator/denominator pair of carrier elements."""

    num: T
    den: T

    def render(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __str__(self) -> str:
        return self.render()


class FractionBrace(Generic[T]):
    """Fraction-level operations over a fixed carrier identity element.

    >>> from .canonical_wire import BracePoly
    >>> B = FractionBrace(BracePoly.identity())
    >>> x, y = BracePoly.generator("x"), BracePoly.generator("y")
    >>> B.equal(B.make(x.circ(y), y), B.make(x))
    True
    """

    def __init__(self, identity: T):
        self.identity = identity

    def make(self, num: T, den: T | None = None) -> Fraction[T]:
        """The canonical image ``num / identity`` (or an explicit pair)."""
        return Fraction(num, self.identity if den is None else den)

    def neutral(self) -> Fraction[T]:
        return Fraction(self.identity, self.identity)

    def equal(self, a: Fraction[T], b: Fraction[T]) -> bool:
        return a.num.circ(b.den) == a.den.circ(b.num)

    def star(self, a: Fraction[T], b: Fraction[T]) -> Fraction[T]:
        den = a.den.circ(b.den)
        num = a.num.circ(b.den).star(den.star_inv().star(a.den.circ(b.num)))
        return Fraction(num, den)

    def star_inv(self, a: Fraction[T]) -> Fraction[T]:
        return Fraction(a.den.star(a.num.star_inv().star(a.den)), a.den)

    def circ(self, a: Fraction[T], b: Fraction[T]) -> Fraction[T]:
        return Fraction(a.num.circ(b.num), a.den.circ(b.den))

    def circ_inv(self, a: Fraction[T]) -> Fraction[T]:
        return Fraction(a.den, a.num)
