"""The word-level model: monomials, free groups of words, the one-sided
circle operations, Fox derivatives, and the embedding into the canonical
polynomial wire.

Monomials come in two flavours: :class:`CMono` (commutative, a nonempty
multiset of generators) and :class:`NCMono` (non-commutative, a nonempty
sequence of generators).  A :class:`Word` is a freely reduced word in the
free group on monomials of one fixed flavour.  The circle operations
``circ_l`` and ``circ_r`` extend the semigroup product of monomials to whole
words by distributing through the canonical lambda/rho conjugation formulas;
on the commutative alphabet both operations have the same image in the
quotient that the canonical wire models.

``fox(u, s)`` is the Fox derivative of a word with respect to a monomial:
the signed sum of the initial sections at occurrences of ``s``, reduced into
the group ring of the free commutative group.  ``embed(u)`` assembles the
derivatives into the canonical polynomial

    ``(1 - sum_s fox(u, s)) + sum_s fox(u, s) * t_s``

which is a wire isomorphism onto the canonical model, so two words denote
the same free-commutative-wire element exactly when their embeddings are
equal polynomials.

>>> u = Word.from_monos([("x", 1), ("y", 1)])            # the word x * y
>>> print(embed(u))
-x + t[x] + x*t[y]
>>> print(fox(Word.from_monos([("x", 1)]), CMono.generator("x")))
1
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

from .canonical_wire import BracePoly, TMono
from .group_algebra import (
    GroupElt,
    GroupRingElt,
    check_generator_name,
    merge_exponents,
)

__all__ = [
    "CMono",
    "NCMono",
    "Word",
    "WrongAlphabetError",
    "circ_word_mono",
    "circ_mono_word",
    "circ_l",
    "circ_r",
    "project",
    "fox",
    "fox_all",
    "embed",
]


class WrongAlphabetError(TypeError):
    """Raised when an operation gets words over an unsupported alphabet."""


class CMono:
    """A commutative monomial: a nonempty multiset of generators.

    >>> CMono.generator("x") * CMono({"x": 1, "y": 1})
    CMono('x o x o y')
    """

    __slots__ = ("_pairs", "_hash")

    def __init__(self, degrees: Mapping[str, int] | Iterable[tuple[str, int]]):
        items = degrees.items() if isinstance(degrees, Mapping) else degrees
        acc: dict[str, int] = {}
        for name, deg in items:
            check_generator_name(name)
            if not isinstance(deg, int) or deg < 0:
                raise ValueError(f"degree of {name!r} must be a nonnegative int")
            if deg:
                acc[name] = acc.get(name, 0) + deg
        if not acc:
            raise ValueError("a commutative monomial must have total degree >= 1")
        self._pairs = tuple(sorted(acc.items()))
        self._hash = hash(self._pairs)

    @classmethod
    def generator(cls, name: str) -> CMono:
        return cls(((name, 1),))

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self._pairs)

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._pairs)

    def __mul__(self, other: CMono) -> CMono:
        if not isinstance(other, CMono):
            return NotImplemented
        return CMono(merge_exponents(self._pairs, other._pairs))

    def as_group_elt(self) -> GroupElt:
        return GroupElt(self._pairs)

    def as_tmono(self) -> TMono:
        return TMono(self._pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CMono) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def render(self) -> str:
        return " o ".join(n for n, e in self._pairs for _ in range(e))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CMono({self.render()!r})"


class NCMono:
    """A non-commutative monomial: a nonempty sequence of generators."""

    __slots__ = ("_letters", "_hash")

    def __init__(self, letters: Sequence[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("a monomial must contain at least one generator")
        for name in letters:
            check_generator_name(name)
        self._letters = letters
        self._hash = hash(letters)

    @classmethod
    def generator(cls, name: str) -> NCMono:
        return cls((name,))

    @property
    def letters(self) -> tuple[str, ...]:
        return self._letters

    def __mul__(self, other: NCMono) -> NCMono:
        if not isinstance(other, NCMono):
            return NotImplemented
        return NCMono(self._letters + other._letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NCMono) and self._letters == other._letters

    def __hash__(self) -> int:
        return self._hash

    def render(self) -> str:
        return " o ".join(self._letters)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NCMono({self.render()!r})"


Mono = Union[CMono, NCMono]
Letter = tuple[Mono, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for mono, sign in letters:
        if out and out[-1][0] == mono and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((mono, sign))
    return tuple(out)


class Word:
    """A freely reduced word in the free group on monomials.

    Letters are ``(monomial, sign)`` pairs with sign +1 or -1, all over one
    alphabet kind; the constructor performs full free reduction, so adjacent
    inverse pairs never survive and structural equality is equality in the
    free group.

    >>> w = Word.from_monos([("x", 1), ("x", -1)])
    >>> w == Word.empty()
    True
    """

    __slots__ = ("_letters", "_commutative", "_hash")

    def __init__(self, letters: Iterable[Letter] = (), commutative: bool = True):
        mono_type = CMono if commutative else NCMono
        checked: list[Letter] = []
        for mono, sign in letters:
            if not isinstance(mono, mono_type):
                raise WrongAlphabetError(
                    f"expected {mono_type.__name__} letters, got {type(mono).__name__}"
                )
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            checked.append((mono, sign))
        self._letters = _reduce(checked)
        self._commutative = bool(commutative)
        self._hash = hash((self._letters, self._commutative))

    @classmethod
    def empty(cls, commutative: bool = True) -> Word:
        return cls((), commutative)

    @classmethod
    def of(cls, mono: Mono, sign: int = 1) -> Word:
        """The one-letter word on ``mono``."""
        return cls(((mono, sign),), isinstance(mono, CMono))

    @classmethod
    def from_monos(
        cls, monos: Iterable[tuple[str, int]], commutative: bool = True
    ) -> Word:
        """Build a word of single-generator letters from (name, sign) pairs."""
        make = CMono.generator if commutative else NCMono.generator
        return cls(((make(n), s) for n, s in monos), commutative)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self._letters

    @property
    def commutative(self) -> bool:
        return self._commutative

    @property
    def is_empty(self) -> bool:
        return not self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def _check_kind(self, other: Word) -> None:
        if self._commutative != other._commutative:
            raise WrongAlphabetError("words over different alphabet kinds")

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        self._check_kind(other)
        return Word(self._letters + other._letters, self._commutative)

    def inverse(self) -> Word:
        return Word(
            tuple((m, -s) for m, s in reversed(self._letters)), self._commutative
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self._commutative == other._commutative
            and self._letters == other._letters
        )

    def __hash__(self) -> int:
        return self._hash

    def render(self) -> str:
        if not self._letters:
            return "e"
        return ".".join(
            f"[{m.render()}]" + ("^-1" if s < 0 else "") for m, s in self._letters
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.render()!r})"


def _mono_of_kind(mono: Mono, word: Word) -> None:
    expected = CMono if word.commutative else NCMono
    if not isinstance(mono, expected):
        raise WrongAlphabetError(
            f"monomial kind {type(mono).__name__} does not match the word alphabet"
        )


def circ_word_mono(u: Word, mono: Mono) -> Word:
    """The circle product of a word with a monomial on the right.

    Distributes through ``rho``: each letter ``m^s`` contributes the
    two-letter block ``(m o l) . l^-1`` (inverted when ``s`` is negative),
    and a final ``l`` closes the product.
    """
    _mono_of_kind(mono, u)
    letters: list[Letter] = []
    for m, s in u.letters:
        ml = m * mono
        if s > 0:
            letters += [(ml, 1), (mono, -1)]
        else:
            letters += [(mono, 1), (ml, -1)]
    letters.append((mono, 1))
    return Word(letters, u.commutative)


def circ_mono_word(mono: Mono, u: Word) -> Word:
    """The circle product of a monomial with a word on the right.

    Distributes through ``lambda``: a leading ``l``, then per letter ``m^s``
    the block ``l^-1 . (l o m)`` (inverted when ``s`` is negative).
    """
    _mono_of_kind(mono, u)
    letters: list[Letter] = [(mono, 1)]
    for m, s in u.letters:
        lm = mono * m
        if s > 0:
            letters += [(mono, -1), (lm, 1)]
        else:
            letters += [(lm, -1), (mono, 1)]
    return Word(letters, u.commutative)


def circ_l(u: Word, v: Word) -> Word:
    """The left circle operation ``u`` then the lambda-twisted letters of ``v``."""
    u._check_kind(v)
    letters: list[Letter] = list(u.letters)
    u_inv = u.inverse().letters
    for m, s in v.letters:
        block = u_inv + circ_word_mono(u, m).letters
        if s > 0:
            letters += block
        else:
            letters += [(bm, -bs) for bm, bs in reversed(block)]
    return Word(letters, u.commutative)


def circ_r(u: Word, v: Word) -> Word:
    """The right circle operation: rho-twisted letters of ``u``, then ``v``."""
    u._check_kind(v)
    letters: list[Letter] = []
    v_inv = v.inverse().letters
    for m, s in u.letters:
        block = circ_mono_word(m, v).letters + v_inv
        if s > 0:
            letters += block
        else:
            letters += [(bm, -bs) for bm, bs in reversed(block)]
    letters += v.letters
    return Word(letters, u.commutative)


def _require_commutative(u: Word) -> None:
    if not u.commutative:
        raise WrongAlphabetError(
            "this operation is only defined over the commutative alphabet"
        )


def project(u: Word) -> GroupElt:
    """The image of a commutative-alphabet word in the free commutative group."""
    _require_commutative(u)
    total = GroupElt.identity()
    for m, s in u.letters:
        g = m.as_group_elt()
        total = total * (g if s > 0 else g.inverse())
    return total


def fox_all(u: Word) -> dict[CMono, GroupRingElt]:
    """All nonzero Fox derivatives of ``u``, keyed by monomial.

    The derivative with respect to ``s`` is the signed sum of the projected
    initial sections at the occurrences of ``s``: for a positive letter the
    section is the prefix before it, for a negative letter the prefix
    including it.
    """
    _require_commutative(u)
    acc: dict[CMono, dict[GroupElt, int]] = {}
    prefix = GroupElt.identity()
    for m, s in u.letters:
        if s > 0:
            section = prefix
            prefix = prefix * m.as_group_elt()
        else:
            prefix = prefix * m.as_group_elt().inverse()
            section = prefix
        terms = acc.setdefault(m, {})
        c = terms.get(section, 0) + s
        if c:
            terms[section] = c
        else:
            del terms[section]
    return {
        m: GroupRingElt(terms) for m, terms in acc.items() if terms
    }


def fox(u: Word, s: Mono) -> GroupRingElt:
    """The Fox derivative of ``u`` with respect to the monomial ``s``."""
    if not isinstance(s, CMono):
        raise WrongAlphabetError("Fox derivatives need commutative monomials")
    return fox_all(u).get(s, GroupRingElt.zero())


def embed(u: Word) -> BracePoly:
    """The canonical polynomial of a commutative-alphabet word.

    The coefficient at ``t_s`` is ``fox(u, s)`` and the constant slot is one
    minus the sum of all derivatives; the result is always a member of the
    canonical wire and evaluates at ``t[x] = x`` to ``project(u)``.
    """
    derivs = fox_all(u)
    coeffs: dict[TMono, GroupRingElt] = {}
    total = GroupRingElt.zero()
    for m, d in derivs.items():
        coeffs[m.as_tmono()] = d
        total = total + d
    const = GroupRingElt.one() - total
    if not const.is_zero:
        coeffs[TMono.constant()] = const
    return BracePoly(coeffs)
