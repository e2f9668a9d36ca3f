"""Exact arithmetic in the free commutative group on named generators and in
its integral group ring.

Group elements are finitely supported exponent vectors written
multiplicatively (``x^2 y^-1``); the identity is the empty vector.  Group-ring
elements are finite formal sums of group elements with integer coefficients;
addition is componentwise and multiplication is the convolution extending the
group law bilinearly.  Coefficients are plain Python integers, hence
arbitrary precision.

The module also fixes a translation-invariant lexicographic order on group
elements (generators compared in ascending name order, first difference
decides) and the induced initial-term map on the group ring.  The initial
term is multiplicative, which makes the group ring an integral domain; that
fact is what the rest of the package leans on for cancellativity.

All values are immutable after construction and hashable, so they can be
used as dictionary keys and shared freely between threads.

>>> x, y = GroupElt.generator("x"), GroupElt.generator("y")
>>> print(x * x * y.inverse())
x^2 y^-1
>>> f = 2 * GroupRingElt.one() - GroupRingElt.from_group(x.inverse())
>>> print(f)
2 - x^-1
>>> f.augmentation()
1
>>> print(f.initial())
1
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "GroupElt",
    "GroupRingElt",
    "ZeroElementError",
    "check_generator_name",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ZeroElementError(ValueError):
    """Raised when an operation requires a nonzero group-ring element."""


def check_generator_name(name: str) -> str:
    """Validate a generator identifier (ASCII, ``[a-zA-Z][a-zA-Z0-9_]*``)."""
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"invalid generator name: {name!r}")
    return name


def _normalize_exponents(
    exponents: Mapping[str, int] | Iterable[tuple[str, int]],
) -> tuple[tuple[str, int], ...]:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[str, int] = {}
    for name, exp in items:
        check_generator_name(name)
        if not isinstance(exp, int):
            raise TypeError(f"exponent of {name!r} must be an int, got {exp!r}")
        acc[name] = acc.get(name, 0) + exp
    return tuple(sorted((n, e) for n, e in acc.items() if e != 0))


def merge_exponents(
    a: tuple[tuple[str, int], ...],
    b: tuple[tuple[str, int], ...],
    sign: int = 1,
) -> tuple[tuple[str, int], ...]:
    """Merge two name-sorted exponent tuples, adding ``sign`` times ``b``."""
    out: list[tuple[str, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        na, ea = a[i]
        nb, eb = b[j]
        if na < nb:
            out.append((na, ea))
            i += 1
        elif nb < na:
            out.append((nb, sign * eb))
            j += 1
        else:
            e = ea + sign * eb
            if e:
                out.append((na, e))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend((n, sign * e) for n, e in b[j:])
    return tuple(out)


class GroupElt:
    """An element of the free commutative group on named generators.

    Instances are interned: one canonical object per exponent vector, so
    hashing is a cached int and equality usually hits the identity check.
    The intern table only ever holds elements actually constructed.

    >>> g = GroupElt({"x": 2, "y": -1})
    >>> g * g.inverse() == GroupElt.identity()
    True
    >>> GroupElt.identity() < GroupElt.generator("x")
    True
    """

    __slots__ = ("_pairs", "_hash")

    _intern: dict[tuple[tuple[str, int], ...], "GroupElt"] = {}

    def __new__(cls, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        return cls._from_pairs(_normalize_exponents(exponents))

    @classmethod
    def identity(cls) -> GroupElt:
        return _GE_IDENTITY

    @classmethod
    def generator(cls, name: str, exp: int = 1) -> GroupElt:
        return cls(((name, exp),))

    @classmethod
    def _from_pairs(cls, pairs: tuple[tuple[str, int], ...]) -> GroupElt:
        elt = cls._intern.get(pairs)
        if elt is None:
            elt = object.__new__(cls)
            elt._pairs = pairs
            elt._hash = hash(pairs)
            cls._intern[pairs] = elt
        return elt

    @property
    def exponents(self) -> dict[str, int]:
        """The exponent map as a fresh dict (empty for the identity)."""
        return dict(self._pairs)

    @property
    def pairs(self) -> tuple[tuple[str, int], ...]:
        """Name-sorted ``(generator, exponent)`` pairs."""
        return self._pairs

    @property
    def is_identity(self) -> bool:
        return not self._pairs

    def __mul__(self, other: GroupElt) -> GroupElt:
        if not isinstance(other, GroupElt):
            return NotImplemented
        return _ge_product(self, other)

    def inverse(self) -> GroupElt:
        return _ge_inverse(self)

    def __pow__(self, n: int) -> GroupElt:
        if n == 0:
            return _GE_IDENTITY
        return GroupElt._from_pairs(tuple((name, e * n) for name, e in self._pairs))

    def compare(self, other: GroupElt) -> int:
        """Lexicographic comparison: -1, 0 or 1.

        Exponents are compared generator by generator in ascending name order
        over the union of the supports (absent generators count as 0); the
        first difference decides and the larger exponent wins.  The order is
        total and translation-invariant.
        """
        a, b = self._pairs, other._pairs
        i = j = 0
        while i < len(a) or j < len(b):
            if j >= len(b) or (i < len(a) and a[i][0] < b[j][0]):
                ea, eb = a[i][1], 0
                i += 1
            elif i >= len(a) or b[j][0] < a[i][0]:
                ea, eb = 0, b[j][1]
                j += 1
            else:
                ea, eb = a[i][1], b[j][1]
                i += 1
                j += 1
            if ea != eb:
                return -1 if ea < eb else 1
        return 0

    def __lt__(self, other: GroupElt) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: GroupElt) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: GroupElt) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: GroupElt) -> bool:
        return self.compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupElt) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def render(self) -> str:
        """Text form: ascending-name factors, ``^1`` omitted, identity is ``1``."""
        if not self._pairs:
            return "1"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self._pairs)

    def to_json(self) -> dict[str, int]:
        return dict(self._pairs)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GroupElt({self.render()!r})"


_GE_IDENTITY = GroupElt()

_GE_SORT_KEY = functools.cmp_to_key(GroupElt.compare)

GroupRingOperand = Union["GroupRingElt", GroupElt, int]


def _coerce_terms(value: GroupRingOperand) -> dict[GroupElt, int]:
    if isinstance(value, GroupRingElt):
        return value._terms
    if isinstance(value, GroupElt):
        return {value: 1}
    if isinstance(value, int):
        return {_GE_IDENTITY: value} if value else {}
    raise TypeError(f"cannot interpret {value!r} as a group-ring element")


class GroupRingElt:
    """An element of the integral group ring of the free commutative group.

    Stored as a finite map from group elements to nonzero integers; the zero
    element is the empty sum.  ``GroupElt`` values and ints coerce in mixed
    arithmetic.

    >>> x = GroupElt.generator("x")
    >>> print((1 - GroupRingElt.from_group(x)) * (1 + GroupRingElt.from_group(x)))
    -x^2 + 1
    >>> GroupRingElt.from_group(x) * GroupRingElt.from_group(x.inverse())
    GroupRingElt('1')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(
        self,
        terms: Mapping[GroupElt, int] | Iterable[tuple[GroupElt, int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GroupElt, int] = {}
        for g, c in items:
            if not isinstance(g, GroupElt):
                raise TypeError(f"group-ring key must be a GroupElt, got {g!r}")
            if not isinstance(c, int):
                raise TypeError(f"coefficient must be an int, got {c!r}")
            c0 = acc.get(g, 0) + c
            if c0:
                acc[g] = c0
            else:
                acc.pop(g, None)
        self._terms = acc
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> GroupRingElt:
        return _GR_ZERO

    @classmethod
    def one(cls) -> GroupRingElt:
        return _GR_ONE

    @classmethod
    def from_group(cls, g: GroupElt, coeff: int = 1) -> GroupRingElt:
        return cls(((g, coeff),))

    @classmethod
    def from_int(cls, n: int) -> GroupRingElt:
        return cls(((_GE_IDENTITY, n),))

    @classmethod
    def _from_dict(cls, terms: dict[GroupElt, int]) -> GroupRingElt:
        elt = object.__new__(cls)
        elt._terms = terms
        elt._hash = None
        return elt

    @property
    def terms(self) -> dict[GroupElt, int]:
        """The coefficient map as a fresh dict."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[GroupElt, int]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, g: GroupElt) -> int:
        return self._terms.get(g, 0)

    def __add__(self, other: GroupRingOperand) -> GroupRingElt:
        try:
            rhs = _coerce_terms(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for g, c in rhs.items():
            c0 = out.get(g, 0) + c
            if c0:
                out[g] = c0
            else:
                out.pop(g, None)
        return GroupRingElt._from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> GroupRingElt:
        return GroupRingElt._from_dict({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: GroupRingOperand) -> GroupRingElt:
        try:
            rhs = _coerce_terms(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for g, c in rhs.items():
            c0 = out.get(g, 0) - c
            if c0:
                out[g] = c0
            else:
                out.pop(g, None)
        return GroupRingElt._from_dict(out)

    def __rsub__(self, other: GroupRingOperand) -> GroupRingElt:
        return (-self) + other

    def __mul__(self, other: GroupRingOperand) -> GroupRingElt:
        try:
            rhs = _coerce_terms(other)
        except TypeError:
            return NotImplemented
        out: dict[GroupElt, int] = {}
        for a, ca in self._terms.items():
            for b, cb in rhs.items():
                h = a * b
                c0 = out.get(h, 0) + ca * cb
                if c0:
                    out[h] = c0
                else:
                    out.pop(h, None)
        return GroupRingElt._from_dict(out)

    __rmul__ = __mul__

    def augmentation(self) -> int:
        """Sum of all coefficients (a ring morphism onto the integers)."""
        return sum(self._terms.values())

    def initial(self) -> GroupElt:
        """The maximal support element under the lexicographic order.

        Multiplicative: ``(f * g).initial() == f.initial() * g.initial()``
        for nonzero ``f``, ``g``.
        """
        if not self._terms:
            raise ZeroElementError("the zero element has no initial term")
        return max(self._terms, key=_GE_SORT_KEY)

    def as_group_elt(self) -> GroupElt | None:
        """The group element ``g`` if this is exactly ``1*g``, else ``None``."""
        if len(self._terms) != 1:
            return None
        (g, c), = self._terms.items()
        return g if c == 1 else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GroupRingElt):
            return self._terms == other._terms
        if isinstance(other, (GroupElt, int)):
            return self._terms == _coerce_terms(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self, reverse: bool = True) -> list[tuple[GroupElt, int]]:
        """Terms sorted by the group-element order (descending by default)."""
        return sorted(
            self._terms.items(), key=lambda t: _GE_SORT_KEY(t[0]), reverse=reverse
        )

    def render(self) -> str:
        """Signed sum, terms descending by the group-element order.

        Coefficient 1 is omitted next to a non-identity group element, e.g.
        ``2 - x^-1``; the zero element renders as ``0``.
        """
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for g, c in self.sorted_terms():
            mag = abs(c)
            if g.is_identity:
                body = str(mag)
            elif mag == 1:
                body = g.render()
            else:
                body = f"{mag}*{g.render()}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(pieces)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": str(c), "elt": g.to_json()} for g, c in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GroupRingElt({self.render()!r})"


_GR_ZERO = GroupRingElt()
_GR_ONE = GroupRingElt(((_GE_IDENTITY, 1),))
