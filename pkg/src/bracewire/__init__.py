"""Exact symbolic computation in free commutative skew braces and wires.

The kernel normalizes wire expressions into polynomials over an integral
group ring, where equality is plain coefficient comparison; fractions of
those polynomials realize the free commutative skew brace.  See README.md
for the tour.
"""

from .brace_fractions import Fraction, FractionBrace
from .canonical_wire import BracePoly, NotAMemberError, TMono
from .exprs import ParseError, eval_canonical, eval_word, parse, parse_mono, parse_word
from .group_algebra import GroupElt, GroupRingElt, ZeroElementError
from .radical_model import RadicalPoly
from .word_model import (
    CMono,
    NCMono,
    Word,
    WrongAlphabetError,
    circ_l,
    circ_r,
    embed,
    fox,
    project,
)

__all__ = [
    "BracePoly",
    "CMono",
    "Fraction",
    "FractionBrace",
    "GroupElt",
    "GroupRingElt",
    "NCMono",
    "NotAMemberError",
    "ParseError",
    "RadicalPoly",
    "TMono",
    "Word",
    "WrongAlphabetError",
    "ZeroElementError",
    "circ_l",
    "circ_r",
    "embed",
    "eval_canonical",
    "eval_word",
    "fox",
    "parse",
    "parse_mono",
    "parse_word",
    "project",
]

__version__ = "0.1.0"
