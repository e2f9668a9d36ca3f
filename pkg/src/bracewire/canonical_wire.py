"""The canonical polynomial model of the free commutative wire.

Elements are polynomials in commuting variables ``t[x]`` (one per generator)
with coefficients in the integral group ring of the free commutative group,
subject to two membership conditions:

* evaluating every ``t[x]`` at 1 gives the group-ring unit (the coefficients
  sum to 1), and
* evaluating every ``t[x]`` at the group element ``x`` gives a single group
  element with coefficient 1.

On members, the wire operations are

* ``f.circ(g)`` -- the plain polynomial product, and
* ``f.star(g)`` -- ``f + eval_x(f) * (g - 1)``,

and two members denote the same free-wire element exactly when their
coefficient maps are identical, so equality here decides the word problem.
The :class:`BracePoly` constructor validates both membership conditions
eagerly; the public operations preserve them.

>>> x, y = BracePoly.generator("x"), BracePoly.generator("y")
>>> print(x.star(y))
-x + t[x] + x*t[y]
>>> print(x.star(x.star_inv()))
1
>>> print(x.eval_x())
x
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator, Mapping

from .group_algebra import (
    GroupElt,
    GroupRingElt,
    check_generator_name,
    merge_exponents,
)

__all__ = ["TMono", "BracePoly", "NotAMemberError", "coeff_sum", "eval_x_sum"]


class NotAMemberError(ValueError):
    """Raised for polynomials outside the canonical wire carrier."""


def _normalize_degrees(
    degrees: Mapping[str, int] | Iterable[tuple[str, int]],
) -> tuple[tuple[str, int], ...]:
    items = degrees.items() if isinstance(degrees, Mapping) else degrees
    acc: dict[str, int] = {}
    for name, deg in items:
        check_generator_name(name)
        if not isinstance(deg, int) or deg < 0:
            raise ValueError(f"degree of {name!r} must be a nonnegative int")
        if deg:
            acc[name] = acc.get(name, 0) + deg
    return tuple(sorted(acc.items()))


class TMono:
    """A commutative monomial in the ``t`` variables; empty = constant slot.

    >>> TMono({"x": 1}) * TMono({"x": 1, "y": 2})
    TMono('t[x]^2t[y]^2')
    """

    __slots__ = ("_pairs", "_hash", "_group_elt")

    def __init__(self, degrees: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        self._pairs = _normalize_degrees(degrees)
        self._hash = hash(self._pairs)
        self._group_elt: GroupElt | None = None

    @classmethod
    def constant(cls) -> TMono:
        return _TM_CONSTANT

    @classmethod
    def variable(cls, name: str, deg: int = 1) -> TMono:
        return cls(((name, deg),))

    @classmethod
    def _from_pairs(cls, pairs: tuple[tuple[str, int], ...]) -> TMono:
        mono = object.__new__(cls)
        mono._pairs = pairs
        mono._hash = hash(pairs)
        mono._group_elt = None
        return mono

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self._pairs)

    @property
    def pairs(self) -> tuple[tuple[str, int], ...]:
        return self._pairs

    @property
    def is_constant(self) -> bool:
        return not self._pairs

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._pairs)

    def __mul__(self, other: TMono) -> TMono:
        if not isinstance(other, TMono):
            return NotImplemented
        return TMono._from_pairs(merge_exponents(self._pairs, other._pairs))

    def as_group_elt(self) -> GroupElt:
        """The group element with the same exponent vector (``t[x] -> x``)."""
        if self._group_elt is None:
            self._group_elt = GroupElt(self._pairs)
        return self._group_elt

    def sort_key(self) -> tuple:
        """Graded-lex key: total degree first, then the expanded name word."""
        expanded = tuple(n for n, e in self._pairs for _ in range(e))
        return (self.total_degree, expanded)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TMono) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def render(self) -> str:
        if not self._pairs:
            return "1"
        return "".join(
            f"t[{n}]" if e == 1 else f"t[{n}]^{e}" for n, e in self._pairs
        )

    def to_json(self) -> dict[str, int]:
        return dict(self._pairs)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TMono({self.render()!r})"


_TM_CONSTANT = TMono()

Coeffs = dict[TMono, GroupRingElt]

# The arithmetic below accumulates into raw {GroupElt: int} maps and wraps
# them once at the end; building GroupRingElt values per added term would
# copy the accumulator on every step.


def _merge_raw(acc: dict[GroupElt, int], coeff: GroupRingElt) -> None:
    for g, c in coeff.items():
        c0 = acc.get(g, 0) + c
        if c0:
            acc[g] = c0
        else:
            del acc[g]


def _add_term(out: Coeffs, mono: TMono, coeff: GroupRingElt) -> None:
    c = out.get(mono)
    c = coeff if c is None else c + coeff
    if c.is_zero:
        out.pop(mono, None)
    else:
        out[mono] = c


def poly_add(a: Mapping[TMono, GroupRingElt], b: Mapping[TMono, GroupRingElt]) -> Coeffs:
    out: Coeffs = dict(a)
    for m, c in b.items():
        _add_term(out, m, c)
    return out


def poly_mul(a: Mapping[TMono, GroupRingElt], b: Mapping[TMono, GroupRingElt]) -> Coeffs:
    raw: dict[TMono, dict[GroupElt, int]] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 * m2
            acc = raw.get(m)
            if acc is None:
                acc = raw[m] = {}
            _merge_raw(acc, c1 * c2)
    out: Coeffs = {}
    for m, acc in raw.items():
        if acc:
            out[m] = GroupRingElt._from_dict(acc)
    return out


def poly_scale(a: Mapping[TMono, GroupRingElt], f: GroupRingElt) -> Coeffs:
    out: Coeffs = {}
    for m, c in a.items():
        fc = f * c
        if not fc.is_zero:
            out[m] = fc
    return out


def poly_sub_one(a: Mapping[TMono, GroupRingElt]) -> Coeffs:
    out: Coeffs = dict(a)
    _add_term(out, _TM_CONSTANT, -GroupRingElt.one())
    return out


def coeff_sum(a: Mapping[TMono, GroupRingElt]) -> GroupRingElt:
    """Sum of all coefficients: the evaluation at ``t[x] = 1`` for every x."""
    acc: dict[GroupElt, int] = {}
    for c in a.values():
        _merge_raw(acc, c)
    return GroupRingElt._from_dict(acc)


def eval_x_sum(a: Mapping[TMono, GroupRingElt]) -> GroupRingElt:
    """The evaluation at ``t[x] = x``, as a group-ring element."""
    acc: dict[GroupElt, int] = {}
    for m, c in a.items():
        g = m.as_group_elt()
        for h, ch in c.items():
            k = h * g
            c0 = acc.get(k, 0) + ch
            if c0:
                acc[k] = c0
            else:
                del acc[k]
    return GroupRingElt._from_dict(acc)


def _mono_sort_key(mono: TMono) -> tuple:
    return mono.sort_key()


class BracePoly:
    """A member of the canonical wire; constructor validates membership.

    >>> t = BracePoly.generator
    >>> print(t("x").circ(t("y")))
    t[x]t[y]
    >>> print(t("x").star_inv())
    1 + x^-1 - x^-1*t[x]
    """

    __slots__ = ("_coeffs", "_eval_x", "_hash")

    def __init__(self, coeffs: Mapping[TMono, GroupRingElt]):
        cleaned: Coeffs = {}
        for m, c in coeffs.items():
            if not isinstance(m, TMono):
                raise TypeError(f"polynomial key must be a TMono, got {m!r}")
            if not isinstance(c, GroupRingElt):
                raise TypeError(f"coefficient must be a GroupRingElt, got {c!r}")
            if not c.is_zero:
                cleaned[m] = c
        total = coeff_sum(cleaned)
        if total != GroupRingElt.one():
            raise NotAMemberError(
                f"coefficients sum to {total}, expected the group-ring unit"
            )
        image = eval_x_sum(cleaned).as_group_elt()
        if image is None:
            raise NotAMemberError(
                "evaluation at t[x] = x is not a single group element"
            )
        self._coeffs = cleaned
        self._eval_x = image
        self._hash: int | None = None

    @classmethod
    def identity(cls) -> BracePoly:
        """The constant polynomial 1, neutral for both operations."""
        return cls({_TM_CONSTANT: GroupRingElt.one()})

    @classmethod
    def generator(cls, name: str) -> BracePoly:
        """The polynomial ``t[name]``, the image of the generator."""
        return cls({TMono.variable(name): GroupRingElt.one()})

    @property
    def coeffs(self) -> Coeffs:
        """The coefficient map as a fresh dict."""
        return dict(self._coeffs)

    def items(self) -> Iterator[tuple[TMono, GroupRingElt]]:
        return iter(self._coeffs.items())

    def coefficient(self, mono: TMono) -> GroupRingElt:
        return self._coeffs.get(mono, GroupRingElt.zero())

    def __len__(self) -> int:
        return len(self._coeffs)

    def circ(self, other: BracePoly) -> BracePoly:
        """The circle operation: the polynomial product (commutative)."""
        return BracePoly(poly_mul(self._coeffs, other._coeffs))

    def star(self, other: BracePoly) -> BracePoly:
        """The star operation ``f + eval_x(f) * (g - 1)``."""
        xf = GroupRingElt.from_group(self._eval_x)
        shifted = poly_scale(poly_sub_one(other._coeffs), xf)
        return BracePoly(poly_add(self._coeffs, shifted))

    def star_inv(self) -> BracePoly:
        """The star inverse ``1 - eval_x(f)^-1 * (f - 1)``."""
        xinv = GroupRingElt.from_group(self._eval_x.inverse())
        out = poly_scale(poly_sub_one(self._coeffs), -xinv)
        _add_term(out, _TM_CONSTANT, GroupRingElt.one())
        return BracePoly(out)

    def eval_x(self) -> GroupElt:
        """Evaluation at ``t[x] = x``; for members this is a group element."""
        return self._eval_x

    def eval_one(self) -> GroupRingElt:
        """Evaluation at ``t[x] = 1``; the unit, by membership."""
        return coeff_sum(self._coeffs)

    def eval_zero(self) -> GroupRingElt:
        """Evaluation at ``t[x] = 0``: the constant coefficient."""
        return self._coeffs.get(_TM_CONSTANT, GroupRingElt.zero())

    def lambda_action(self, other: BracePoly) -> BracePoly:
        """The canonical left action: ``u^-1 star (u circ v)``."""
        return self.star_inv().star(self.circ(other))

    def rho_action(self, other: BracePoly) -> BracePoly:
        """The canonical right action: ``(v circ u) star u^-1``."""
        return other.circ(self).star(self.star_inv())

    def dot(self, other: BracePoly) -> BracePoly:
        """The bracket ``u^-1 star (u circ v) star v^-1``."""
        return self.star_inv().star(self.circ(other).star(other.star_inv()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BracePoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[TMono, GroupRingElt]]:
        """Terms in graded-lex ascending monomial order (constant first)."""
        return sorted(self._coeffs.items(), key=lambda t: _mono_sort_key(t[0]))

    def render(self) -> str:
        """Text form, e.g. ``2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]``.

        Single-term group-ring coefficients are written inline with the sign
        pulled out; multi-term coefficients are parenthesized.
        """
        pieces: list[tuple[bool, str]] = []
        for mono, coeff in self.sorted_terms():
            if mono.is_constant:
                text = coeff.render()
                pieces.append((text.startswith("-"), text.lstrip("-")))
                continue
            terms = coeff.sorted_terms()
            if len(terms) > 1:
                pieces.append((False, f"({coeff.render()})*{mono.render()}"))
                continue
            (g, c), = terms
            mag = abs(c)
            factors = []
            if mag != 1:
                factors.append(str(mag))
            if not g.is_identity:
                factors.append(g.render())
            factors.append(mono.render())
            pieces.append((c < 0, "*".join(factors)))
        if not pieces:
            return "0"
        out = []
        for i, (neg, text) in enumerate(pieces):
            if i == 0:
                out.append(f"-{text}" if neg else text)
            else:
                out.append(f" {'-' if neg else '+'} {text}")
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mono": m.to_json(), "coeff": c.to_json()}
                for m, c in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BracePoly({self.render()!r})"
