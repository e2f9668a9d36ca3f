"""The fully commutative degeneration: integer polynomials with coefficient
sum one, the coefficientwise-augmentation projection from the canonical
wire, and the shift that identifies the twisted addition with a radical
ring's circle operation.

A :class:`RadicalPoly` is an integer polynomial in the ``t`` variables whose
coefficients sum to 1.  The operations are ``star``: ``f + g - 1`` (the
twisted addition) and ``circ``: the ordinary product; together with the
fraction layer this carrier realizes the free commutative two-sided brace.

``RadicalPoly.from_brace_poly`` applies the augmentation map to every
group-ring coefficient of a canonical-wire member; it is a wire morphism
whose kernel is exactly the star-commutator part, so star-commutators die
under it.  ``shift_by_one`` substitutes ``t[x] -> t[x] + 1``, is
multiplicative, and turns ``star`` into the same twisted addition on
polynomials with constant term 1.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from .canonical_wire import BracePoly, NotAMemberError, TMono

__all__ = ["RadicalPoly", "IntPoly", "ipoly_add", "ipoly_mul", "ipoly_render"]

IntPoly = dict[TMono, int]


def _ipoly_normalize(
    coeffs: Mapping[TMono, int] | Iterable[tuple[TMono, int]],
) -> IntPoly:
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    out: IntPoly = {}
    for m, c in items:
        if not isinstance(m, TMono):
            raise TypeError(f"polynomial key must be a TMono, got {m!r}")
        if not isinstance(c, int):
            raise TypeError(f"coefficient must be an int, got {c!r}")
        c0 = out.get(m, 0) + c
        if c0:
            out[m] = c0
        else:
            out.pop(m, None)
    return out


def ipoly_add(a: Mapping[TMono, int], b: Mapping[TMono, int]) -> IntPoly:
    out = dict(a)
    for m, c in b.items():
        c0 = out.get(m, 0) + c
        if c0:
            out[m] = c0
        else:
            out.pop(m, None)
    return out


def ipoly_mul(a: Mapping[TMono, int], b: Mapping[TMono, int]) -> IntPoly:
    out: IntPoly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 * m2
            c0 = out.get(m, 0) + c1 * c2
            if c0:
                out[m] = c0
            else:
                out.pop(m, None)
    return out


def ipoly_render(coeffs: Mapping[TMono, int]) -> str:
    """Same layout as the canonical-wire rendering, with integer coefficients."""
    if not coeffs:
        return "0"
    pieces = []
    for m, c in sorted(coeffs.items(), key=lambda t: t[0].sort_key()):
        mag = abs(c)
        if m.is_constant:
            body = str(mag)
        elif mag == 1:
            body = m.render()
        else:
            body = f"{mag}*{m.render()}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(pieces)


def _shift_mono(mono: TMono) -> IntPoly:
    # expand prod_x (t_x + 1)^d recursively over the variables
    out: IntPoly = {TMono.constant(): 1}
    for name, deg in mono.pairs:
        factor: IntPoly = {}
        for k in range(deg + 1):
            factor[TMono.variable(name, k) if k else TMono.constant()] = comb(deg, k)
        out = ipoly_mul(out, factor)
    return out


class RadicalPoly:
    """An integer polynomial whose coefficients sum to one.

    >>> f = RadicalPoly.generator("x").star(RadicalPoly.generator("y"))
    >>> print(f)
    -1 + t[x] + t[y]
    >>> print(f.star(f.star_inv()))
    1
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[TMono, int] | Iterable[tuple[TMono, int]]):
        cleaned = _ipoly_normalize(coeffs)
        total = sum(cleaned.values())
        if total != 1:
            raise NotAMemberError(f"coefficients sum to {total}, expected 1")
        self._coeffs = cleaned
        self._hash: int | None = None

    @classmethod
    def one(cls) -> RadicalPoly:
        return cls({TMono.constant(): 1})

    # identity() so the fraction layer can treat both carriers uniformly
    identity = one

    @classmethod
    def generator(cls, name: str) -> RadicalPoly:
        return cls({TMono.variable(name): 1})

    @classmethod
    def from_brace_poly(cls, f: BracePoly) -> RadicalPoly:
        """Coefficientwise augmentation of a canonical-wire member."""
        return cls(
            ((m, c.augmentation()) for m, c in f.items())
        )

    @property
    def coeffs(self) -> IntPoly:
        return dict(self._coeffs)

    def coefficient(self, mono: TMono) -> int:
        return self._coeffs.get(mono, 0)

    def star(self, other: RadicalPoly) -> RadicalPoly:
        """Twisted addition ``f + g - 1``."""
        out = ipoly_add(self._coeffs, other._coeffs)
        return RadicalPoly(ipoly_add(out, {TMono.constant(): -1}))

    def star_inv(self) -> RadicalPoly:
        """The twisted-addition inverse ``2 - f``."""
        out = {m: -c for m, c in self._coeffs.items()}
        return RadicalPoly(ipoly_add(out, {TMono.constant(): 2}))

    def circ(self, other: RadicalPoly) -> RadicalPoly:
        """The ordinary polynomial product."""
        return RadicalPoly(ipoly_mul(self._coeffs, other._coeffs))

    def shift_by_one(self) -> IntPoly:
        """Substitute ``t[x] -> t[x] + 1`` and expand.

        The result has constant term 1; the substitution is multiplicative
        and sends ``star`` to ``a + b - 1`` on such polynomials.
        """
        out: IntPoly = {}
        for m, c in self._coeffs.items():
            expanded = _shift_mono(m)
            out = ipoly_add(out, {mm: c * cc for mm, cc in expanded.items()})
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RadicalPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def render(self) -> str:
        return ipoly_render(self._coeffs)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mono": m.to_json(), "coeff": str(c)}
                for m, c in sorted(self._coeffs.items(), key=lambda t: t[0].sort_key())
            ]
        }

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RadicalPoly({self.render()!r})"
