"""Seeded random generators for the property suites.

All sampling goes through ``random.Random`` instances so that every suite is
reproducible from its seed.  The default bounds (at most 3 generators, words
of at most 6 letters, monomials of total degree at most 3, expression depth
at most 5) keep canonical polynomials small enough for the exhaustive-style
axiom sweeps while still exercising nontrivial cancellation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .brace_fractions import Fraction
from .canonical_wire import BracePoly
from .exprs import Circ, Expr, Gen, Identity, Star, StarInv, eval_canonical
from .group_algebra import GroupElt, GroupRingElt
from .radical_model import RadicalPoly
from .word_model import CMono, NCMono, Word

__all__ = ["SampleConfig", "DEFAULT_CONFIG"]


@dataclass(frozen=True)
class SampleConfig:
    generators: tuple[str, ...] = ("x", "y", "z")
    max_word_letters: int = 6
    max_mono_degree: int = 3
    max_expr_depth: int = 5
    max_exponent: int = 3
    max_ring_terms: int = 4
    max_ring_coeff: int = 5


DEFAULT_CONFIG = SampleConfig()


def random_group_elt(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> GroupElt:
    exps = {}
    for name in cfg.generators:
        if rng.random() < 0.6:
            e = rng.randint(-cfg.max_exponent, cfg.max_exponent)
            if e:
                exps[name] = e
    return GroupElt(exps)


def random_group_ring(
    rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG
) -> GroupRingElt:
    terms = {}
    for _ in range(rng.randint(0, cfg.max_ring_terms)):
        c = rng.randint(-cfg.max_ring_coeff, cfg.max_ring_coeff)
        if c:
            terms[random_group_elt(rng, cfg)] = c
    return GroupRingElt(terms)


def random_nonzero_group_ring(
    rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG
) -> GroupRingElt:
    while True:
        f = random_group_ring(rng, cfg)
        if not f.is_zero:
            return f


def random_cmono(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> CMono:
    degree = rng.randint(1, cfg.max_mono_degree)
    degrees: dict[str, int] = {}
    for _ in range(degree):
        name = rng.choice(cfg.generators)
        degrees[name] = degrees.get(name, 0) + 1
    return CMono(degrees)


def random_ncmono(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> NCMono:
    degree = rng.randint(1, cfg.max_mono_degree)
    return NCMono(tuple(rng.choice(cfg.generators) for _ in range(degree)))


def random_word(
    rng: random.Random,
    cfg: SampleConfig = DEFAULT_CONFIG,
    commutative: bool = True,
    max_letters: int | None = None,
) -> Word:
    n = rng.randint(0, cfg.max_word_letters if max_letters is None else max_letters)
    make = random_cmono if commutative else random_ncmono
    letters = [(make(rng, cfg), rng.choice((1, -1))) for _ in range(n)]
    return Word(letters, commutative)


def random_expr(
    rng: random.Random,
    cfg: SampleConfig = DEFAULT_CONFIG,
    depth: int | None = None,
) -> Expr:
    depth = cfg.max_expr_depth if depth is None else depth
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.12:
            return Identity()
        return Gen(rng.choice(cfg.generators))
    roll = rng.random()
    if roll < 0.2:
        return StarInv(random_expr(rng, cfg, depth - 1))
    if roll < 0.62:
        return Star(random_expr(rng, cfg, depth - 1), random_expr(rng, cfg, depth - 1))
    return Circ(random_expr(rng, cfg, depth - 1), random_expr(rng, cfg, depth - 1))


def random_member(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> BracePoly:
    """A random canonical-wire member (the image of a random expression)."""
    return eval_canonical(random_expr(rng, cfg))


def random_relator(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> Word:
    """A generator ``m^-1 . (m o l) . l^-1`` of the dot subgroup."""
    m = random_cmono(rng, cfg)
    l = random_cmono(rng, cfg)
    return Word([(m, -1), (m * l, 1), (l, -1)])


def random_dot_subgroup_element(
    rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG, factors: int = 2
) -> Word:
    """A product of conjugated relators (an element of the dot subgroup)."""
    out = Word.empty()
    for _ in range(rng.randint(1, factors)):
        w = random_word(rng, cfg, max_letters=3)
        out = out * (w.inverse() * random_relator(rng, cfg) * w)
    return out


def random_fraction(
    rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG
) -> Fraction[BracePoly]:
    return Fraction(random_member(rng, cfg), random_member(rng, cfg))


def random_radical(rng: random.Random, cfg: SampleConfig = DEFAULT_CONFIG) -> RadicalPoly:
    return RadicalPoly.from_brace_poly(random_member(rng, cfg))
