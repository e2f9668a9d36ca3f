"""Named, seeded property suites over all models.

Each block draws its own samples from a ``random.Random`` and returns one
:class:`CheckOutcome` per named law, counting failures and keeping the first
counterexample.  The ``axioms`` CLI command wraps the five suites (wire,
fractions, fox, radical, ringwire); the acceptance tests call the same
blocks with pinned sample counts and seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import ring_wires
from .brace_fractions import Fraction, FractionBrace
from .canonical_wire import BracePoly, TMono
from .exprs import eval_canonical, render
from .group_algebra import GroupRingElt
from .radical_model import RadicalPoly, ipoly_add, ipoly_mul
from .ring_wires import builtin_wire, check_conditions, make_instance, verify
from .sampling import (
    DEFAULT_CONFIG,
    SampleConfig,
    random_cmono,
    random_dot_subgroup_element,
    random_expr,
    random_group_elt,
    random_member,
    random_nonzero_group_ring,
    random_word,
)
from .word_model import (
    Word,
    circ_l,
    circ_r,
    embed,
    fox,
    fox_all,
    project,
)

__all__ = [
    "CheckOutcome",
    "SuiteReport",
    "UnknownSuiteError",
    "SUITE_NAMES",
    "run_suite",
]

SUITE_NAMES = ("wire", "fractions", "fox", "radical", "ringwire")


class UnknownSuiteError(ValueError):
    """Raised for a suite name outside SUITE_NAMES."""


@dataclass
class CheckOutcome:
    """Result of one named law over a number of samples.

    ``samples < 0`` means the sweep was exhaustive rather than sampled.
    """

    name: str
    samples: int
    failures: int = 0
    counterexample: str | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "samples": self.samples,
            "failures": self.failures,
            "status": "pass" if self.passed else "fail",
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class SuiteReport:
    suite: str
    seed: int
    samples: int
    checks: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }

    def format_text(self) -> str:
        lines = [f"suite {self.suite} (samples={self.samples}, seed={self.seed})"]
        for c in self.checks:
            count = "exhaustive" if c.samples < 0 else f"{c.samples} samples"
            status = "PASS" if c.passed else f"FAIL ({c.failures} failures)"
            lines.append(f"  {status:<20} {c.name} [{count}]")
            if c.counterexample is not None:
                lines.append(f"      counterexample: {c.counterexample}")
            if c.note is not None:
                lines.append(f"      note: {c.note}")
        lines.append(
            f"result: {'all checks passed' if self.passed else 'FAILURES detected'}"
        )
        return "\n".join(lines)


Check = tuple[str, Callable]


def _run_block(
    rng: random.Random,
    samples: int,
    draw: Callable[[random.Random], tuple],
    checks: Sequence[Check],
) -> list[CheckOutcome]:
    outcomes = [CheckOutcome(name, samples) for name, _ in checks]
    for _ in range(samples):
        args = draw(rng)
        for outcome, (_, pred) in zip(outcomes, checks):
            ce = pred(*args)
            if ce is not None:
                outcome.failures += 1
                if outcome.counterexample is None:
                    outcome.counterexample = ce
    return outcomes


# ---------------------------------------------------------------------------
# wire suite: canonical polynomial model + group-ring substrate


def _draw_member_triple(cfg: SampleConfig):
    def draw(rng: random.Random):
        exprs = tuple(random_expr(rng, cfg) for _ in range(3))
        f, g, h = (eval_canonical(e) for e in exprs)
        label = ", ".join(render(e) for e in exprs)
        return f, g, h, label

    return draw


def wire_axiom_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    one = BracePoly.identity()
    checks: list[Check] = [
        (
            "star is associative",
            lambda f, g, h, L: None
            if f.star(g).star(h) == f.star(g.star(h))
            else L,
        ),
        (
            "star has neutral element",
            lambda f, g, h, L: None if f.star(one) == f and one.star(f) == f else L,
        ),
        (
            "star inverses invert",
            lambda f, g, h, L: None
            if f.star(f.star_inv()) == one and f.star_inv().star(f) == one
            else L,
        ),
        (
            "circ is associative",
            lambda f, g, h, L: None
            if f.circ(g).circ(h) == f.circ(g.circ(h))
            else L,
        ),
        (
            "circ is commutative",
            lambda f, g, h, L: None if f.circ(g) == g.circ(f) else L,
        ),
        (
            "circ has neutral element",
            lambda f, g, h, L: None if f.circ(one) == f else L,
        ),
        (
            "left brace distributivity",
            lambda f, g, h, L: None
            if f.circ(g.star(h)) == f.circ(g).star(f.star_inv()).star(f.circ(h))
            else L,
        ),
        (
            "right brace distributivity",
            lambda f, g, h, L: None
            if g.star(h).circ(f) == g.circ(f).star(f.star_inv()).star(h.circ(f))
            else L,
        ),
    ]
    return _run_block(rng, samples, _draw_member_triple(cfg), checks)


def wire_truss_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return tuple(random_member(rng, cfg) for _ in range(4))

    def truss(f, g, h, k):
        lhs = f.circ(g.star(h.star_inv()).star(k))
        rhs = f.circ(g).star(f.circ(h).star_inv()).star(f.circ(k))
        return None if lhs == rhs else f"f={f}, g={g}, h={h}, k={k}"

    return _run_block(rng, samples, draw, [("truss bracket preserved by circ", truss)])


def wire_action_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    one = BracePoly.identity()

    def draw(rng):
        return tuple(random_member(rng, cfg) for _ in range(3))

    checks: list[Check] = [
        (
            "lambda acts by star endomorphisms",
            lambda u, v, w: None
            if u.lambda_action(v.star(w)) == u.lambda_action(v).star(u.lambda_action(w))
            else f"u={u}, v={v}, w={w}",
        ),
        (
            "lambda is a circ action",
            lambda u, v, w: None
            if u.circ(v).lambda_action(w) == u.lambda_action(v.lambda_action(w))
            else f"u={u}, v={v}, w={w}",
        ),
        (
            "rho acts by star endomorphisms",
            lambda u, v, w: None
            if u.rho_action(v.star(w)) == u.rho_action(v).star(u.rho_action(w))
            else f"u={u}, v={v}, w={w}",
        ),
        (
            "lambda fixes the identity",
            lambda u, v, w: None
            if u.lambda_action(one) == one and one.lambda_action(v) == v
            else f"u={u}, v={v}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def wire_dot_commute_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return tuple(random_member(rng, cfg) for _ in range(4))

    def commute(a, b, c, d):
        p, q = a.dot(b), c.dot(d)
        return None if p.star(q) == q.star(p) else f"a={a}, b={b}, c={c}, d={d}"

    return _run_block(
        rng, samples, draw, [("dot values commute under star", commute)]
    )


def wire_cancel_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        f = random_member(rng, cfg)
        g = random_member(rng, cfg)
        h = random_member(rng, cfg)
        while h == g:
            h = random_member(rng, cfg)
        return f, g, h

    def cancel(f, g, h):
        return None if f.circ(g) != f.circ(h) else f"f={f}, g={g}, h={h}"

    return _run_block(rng, samples, draw, [("circ is cancellative", cancel)])


def wire_evalx_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return random_member(rng, cfg), random_member(rng, cfg)

    checks: list[Check] = [
        (
            "eval_x is a circ morphism",
            lambda f, g: None
            if f.circ(g).eval_x() == f.eval_x() * g.eval_x()
            else f"f={f}, g={g}",
        ),
        (
            "eval_x is a star morphism",
            lambda f, g: None
            if f.star(g).eval_x() == f.eval_x() * g.eval_x()
            else f"f={f}, g={g}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def group_ring_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        f = random_nonzero_group_ring(rng, cfg)
        g = random_nonzero_group_ring(rng, cfg)
        h = random_nonzero_group_ring(rng, cfg)
        a = random_group_elt(rng, cfg)
        b = random_group_elt(rng, cfg)
        c = random_group_elt(rng, cfg)
        return f, g, h, a, b, c

    checks: list[Check] = [
        (
            "group ring is associative and distributive",
            lambda f, g, h, a, b, c: None
            if (f * g) * h == f * (g * h)
            and f * (g + h) == f * g + f * h
            and f * g == g * f
            and f + g == g + f
            else f"f={f}, g={g}, h={h}",
        ),
        (
            "initial term is multiplicative",
            lambda f, g, h, a, b, c: None
            if (f * g).initial() == f.initial() * g.initial()
            else f"f={f}, g={g}",
        ),
        (
            "no zero divisors",
            lambda f, g, h, a, b, c: None if not (f * g).is_zero else f"f={f}, g={g}",
        ),
        (
            "order is translation invariant",
            lambda f, g, h, a, b, c: None
            if (a.compare(b)) == ((a * c).compare(b * c))
            else f"a={a}, b={b}, c={c}",
        ),
        (
            "augmentation is a ring morphism",
            lambda f, g, h, a, b, c: None
            if (f * g).augmentation() == f.augmentation() * g.augmentation()
            and (f + g).augmentation() == f.augmentation() + g.augmentation()
            else f"f={f}, g={g}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def wire_suite(
    samples: int = 200, seed: int = 0, cfg: SampleConfig = DEFAULT_CONFIG
) -> SuiteReport:
    rng = random.Random(seed)
    checks = []
    checks += wire_axiom_block(rng, samples, cfg)
    checks += wire_truss_block(rng, samples, cfg)
    checks += wire_action_block(rng, samples, cfg)
    checks += wire_dot_commute_block(rng, samples, cfg)
    checks += wire_cancel_block(rng, samples, cfg)
    checks += wire_evalx_block(rng, samples, cfg)
    checks += group_ring_block(rng, samples, cfg)
    return SuiteReport("wire", seed, samples, checks)


# ---------------------------------------------------------------------------
# fox suite: word model, Fox derivatives, the embedding


def fox_hom_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return random_word(rng, cfg), random_word(rng, cfg)

    checks: list[Check] = [
        (
            "embedding is a circ morphism",
            lambda u, v: None
            if embed(circ_l(u, v)) == embed(u).circ(embed(v))
            else f"u={u}, v={v}",
        ),
        (
            "embedding is a star morphism",
            lambda u, v: None
            if embed(u * v) == embed(u).star(embed(v))
            else f"u={u}, v={v}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fox_agreement_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return random_word(rng, cfg), random_word(rng, cfg)

    def agree(u, v):
        return (
            None
            if embed(circ_l(u, v)) == embed(circ_r(u, v))
            else f"u={u}, v={v}"
        )

    return _run_block(
        rng, samples, draw, [("circ_l and circ_r agree in the image", agree)]
    )


def fox_image_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return (random_word(rng, cfg),)

    checks: list[Check] = [
        (
            "embedding lands in coefficient-sum one",
            lambda u: None if embed(u).eval_one() == GroupRingElt.one() else f"u={u}",
        ),
        (
            "eval_x recovers the projection",
            lambda u: None if embed(u).eval_x() == project(u) else f"u={u}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fox_rules_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return random_word(rng, cfg), random_word(rng, cfg)

    def product_rule(u, v):
        monos = set(fox_all(u)) | set(fox_all(v)) | set(fox_all(u * v))
        pu = GroupRingElt.from_group(project(u))
        for s in monos:
            if fox(u * v, s) != fox(u, s) + pu * fox(v, s):
                return f"u={u}, v={v}, s={s}"
        return None

    def inverse_rule(u, v):
        inv = u.inverse()
        pinv = GroupRingElt.from_group(project(u).inverse())
        for s in set(fox_all(u)) | set(fox_all(inv)):
            if fox(inv, s) != -(pinv * fox(u, s)):
                return f"u={u}, s={s}"
        return None

    return _run_block(
        rng,
        samples,
        draw,
        [
            ("fox product rule", product_rule),
            ("fox inverse rule", inverse_rule),
        ],
    )


def fox_collapse_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    one = BracePoly.identity()

    def draw(rng):
        n1 = random_dot_subgroup_element(rng, cfg)
        n2 = random_dot_subgroup_element(rng, cfg)
        return n1, n2

    def collapse(n1, n2):
        comm = n1 * n2 * n1.inverse() * n2.inverse()
        return None if embed(comm) == one else f"n1={n1}, n2={n2}"

    return _run_block(
        rng,
        samples,
        draw,
        [("commutators of dot-subgroup elements embed to 1", collapse)],
    )


def word_assoc_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        commutative = rng.random() < 0.5
        u = random_word(rng, cfg, commutative, max_letters=4)
        v = random_word(rng, cfg, commutative, max_letters=4)
        w = random_word(rng, cfg, commutative, max_letters=4)
        return u, v, w

    checks: list[Check] = [
        (
            "circ_l is associative (literal words)",
            lambda u, v, w: None
            if circ_l(u, circ_l(v, w)) == circ_l(circ_l(u, v), w)
            else f"u={u}, v={v}, w={w}",
        ),
        (
            "circ_r is associative (literal words)",
            lambda u, v, w: None
            if circ_r(u, circ_r(v, w)) == circ_r(circ_r(u, v), w)
            else f"u={u}, v={v}, w={w}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def word_distrib_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        commutative = rng.random() < 0.5
        u = random_word(rng, cfg, commutative, max_letters=4)
        v = random_word(rng, cfg, commutative, max_letters=4)
        w = random_word(rng, cfg, commutative, max_letters=4)
        return u, v, w

    checks: list[Check] = [
        (
            "circ_l distributes on the left (literal words)",
            lambda u, v, w: None
            if circ_l(u, v * w)
            == circ_l(u, v) * u.inverse() * circ_l(u, w)
            else f"u={u}, v={v}, w={w}",
        ),
        (
            "circ_r distributes on the right (literal words)",
            lambda u, v, w: None
            if circ_r(u * v, w)
            == circ_r(u, w) * w.inverse() * circ_r(v, w)
            else f"u={u}, v={v}, w={w}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fox_suite(
    samples: int = 200, seed: int = 0, cfg: SampleConfig = DEFAULT_CONFIG
) -> SuiteReport:
    rng = random.Random(seed)
    checks = []
    checks += fox_hom_block(rng, samples, cfg)
    checks += fox_agreement_block(rng, samples, cfg)
    checks += fox_image_block(rng, samples, cfg)
    checks += fox_rules_block(rng, samples, cfg)
    checks += fox_collapse_block(rng, max(1, samples // 2), cfg)
    checks += word_assoc_block(rng, samples, cfg)
    checks += word_distrib_block(rng, samples, cfg)
    return SuiteReport("fox", seed, samples, checks)


# ---------------------------------------------------------------------------
# fractions suite


FRACTION_CONFIG = SampleConfig(max_expr_depth=3)


def _scale(brace: FractionBrace, a: Fraction, k: BracePoly) -> Fraction:
    return Fraction(a.num.circ(k), a.den.circ(k))


def fraction_equiv_block(
    rng: random.Random, samples: int, cfg: SampleConfig = FRACTION_CONFIG
) -> list[CheckOutcome]:
    brace = FractionBrace(BracePoly.identity())

    def draw(rng):
        a = Fraction(random_member(rng, cfg), random_member(rng, cfg))
        d = Fraction(random_member(rng, cfg), random_member(rng, cfg))
        k1 = random_member(rng, cfg)
        k2 = random_member(rng, cfg)
        return a, d, k1, k2

    checks: list[Check] = [
        (
            "equality is reflexive",
            lambda a, d, k1, k2: None if brace.equal(a, a) else f"a={a}",
        ),
        (
            "equality is symmetric",
            lambda a, d, k1, k2: None
            if brace.equal(a, d) == brace.equal(d, a)
            else f"a={a}, d={d}",
        ),
        (
            "scaling gives equal fractions, transitively",
            lambda a, d, k1, k2: None
            if brace.equal(a, _scale(brace, a, k1))
            and brace.equal(_scale(brace, a, k1), _scale(brace, a, k1.circ(k2)))
            and brace.equal(a, _scale(brace, a, k1.circ(k2)))
            else f"a={a}, k1={k1}, k2={k2}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fraction_congruence_block(
    rng: random.Random, samples: int, cfg: SampleConfig = FRACTION_CONFIG
) -> list[CheckOutcome]:
    brace = FractionBrace(BracePoly.identity())

    def draw(rng):
        a = Fraction(random_member(rng, cfg), random_member(rng, cfg))
        b = Fraction(random_member(rng, cfg), random_member(rng, cfg))
        a2 = _scale(brace, a, random_member(rng, cfg))
        b2 = _scale(brace, b, random_member(rng, cfg))
        return a, b, a2, b2

    checks: list[Check] = [
        (
            "star respects equality",
            lambda a, b, a2, b2: None
            if brace.equal(brace.star(a, b), brace.star(a2, b2))
            else f"a={a}, b={b}",
        ),
        (
            "circ respects equality",
            lambda a, b, a2, b2: None
            if brace.equal(brace.circ(a, b), brace.circ(a2, b2))
            else f"a={a}, b={b}",
        ),
        (
            "star_inv respects equality",
            lambda a, b, a2, b2: None
            if brace.equal(brace.star_inv(a), brace.star_inv(a2))
            else f"a={a}",
        ),
        (
            "circ_inv respects equality",
            lambda a, b, a2, b2: None
            if brace.equal(brace.circ_inv(a), brace.circ_inv(a2))
            else f"a={a}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fraction_group_block(
    rng: random.Random, samples: int, cfg: SampleConfig = FRACTION_CONFIG
) -> list[CheckOutcome]:
    brace = FractionBrace(BracePoly.identity())
    neutral = brace.neutral()

    def draw(rng):
        return tuple(
            Fraction(random_member(rng, cfg), random_member(rng, cfg))
            for _ in range(3)
        )

    checks: list[Check] = [
        (
            "fraction star is associative",
            lambda a, b, c: None
            if brace.equal(
                brace.star(brace.star(a, b), c), brace.star(a, brace.star(b, c))
            )
            else f"a={a}, b={b}, c={c}",
        ),
        (
            "fraction star neutral and inverses",
            lambda a, b, c: None
            if brace.equal(brace.star(a, neutral), a)
            and brace.equal(brace.star(neutral, a), a)
            and brace.equal(brace.star(a, brace.star_inv(a)), neutral)
            and brace.equal(brace.star(brace.star_inv(a), a), neutral)
            else f"a={a}",
        ),
        (
            "fraction circ is a commutative group",
            lambda a, b, c: None
            if brace.equal(
                brace.circ(brace.circ(a, b), c), brace.circ(a, brace.circ(b, c))
            )
            and brace.equal(brace.circ(a, b), brace.circ(b, a))
            and brace.equal(brace.circ(a, neutral), a)
            and brace.equal(brace.circ(a, brace.circ_inv(a)), neutral)
            else f"a={a}, b={b}, c={c}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fraction_distrib_block(
    rng: random.Random, samples: int, cfg: SampleConfig = FRACTION_CONFIG
) -> list[CheckOutcome]:
    brace = FractionBrace(BracePoly.identity())

    def draw(rng):
        return tuple(
            Fraction(random_member(rng, cfg), random_member(rng, cfg))
            for _ in range(3)
        )

    def left(a, b, c):
        lhs = brace.circ(a, brace.star(b, c))
        rhs = brace.star(
            brace.circ(a, b), brace.star(brace.star_inv(a), brace.circ(a, c))
        )
        return None if brace.equal(lhs, rhs) else f"a={a}, b={b}, c={c}"

    def right(a, b, c):
        lhs = brace.circ(brace.star(b, c), a)
        rhs = brace.star(
            brace.circ(b, a), brace.star(brace.star_inv(a), brace.circ(c, a))
        )
        return None if brace.equal(lhs, rhs) else f"a={a}, b={b}, c={c}"

    return _run_block(
        rng,
        samples,
        draw,
        [
            ("fraction left brace distributivity", left),
            ("fraction right brace distributivity", right),
        ],
    )


def fraction_iota_block(
    rng: random.Random, samples: int, cfg: SampleConfig = FRACTION_CONFIG
) -> list[CheckOutcome]:
    brace = FractionBrace(BracePoly.identity())

    def draw(rng):
        return random_member(rng, cfg), random_member(rng, cfg)

    checks: list[Check] = [
        (
            "canonical map is a wire morphism",
            lambda u, v: None
            if brace.equal(brace.make(u.circ(v)), brace.circ(brace.make(u), brace.make(v)))
            and brace.equal(brace.make(u.star(v)), brace.star(brace.make(u), brace.make(v)))
            else f"u={u}, v={v}",
        ),
        (
            "canonical map is injective",
            lambda u, v: None
            if brace.equal(brace.make(u), brace.make(v)) == (u == v)
            else f"u={u}, v={v}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def fractions_suite(
    samples: int = 200, seed: int = 0, cfg: SampleConfig = FRACTION_CONFIG
) -> SuiteReport:
    rng = random.Random(seed)
    brace = FractionBrace(BracePoly.identity())
    checks = []
    checks += fraction_equiv_block(rng, samples, cfg)
    checks += fraction_congruence_block(rng, samples, cfg)
    checks += fraction_group_block(rng, samples, cfg)
    checks += fraction_distrib_block(rng, samples, cfg)
    checks += fraction_iota_block(rng, samples, cfg)

    x, y = BracePoly.generator("x"), BracePoly.generator("y")
    regression = CheckOutcome("frac(x o y, y) equals frac(x, e)", 1)
    if not brace.equal(Fraction(x.circ(y), y), brace.make(x)):
        regression.failures = 1
        regression.counterexample = "frac(x o y, y) != frac(x, e)"
    checks.append(regression)
    return SuiteReport("fractions", seed, samples, checks)


# ---------------------------------------------------------------------------
# radical suite


def radical_morphism_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return random_member(rng, cfg), random_member(rng, cfg)

    P = RadicalPoly.from_brace_poly
    checks: list[Check] = [
        (
            "projection is a star morphism",
            lambda f, g: None
            if P(f.star(g)) == P(f).star(P(g))
            else f"f={f}, g={g}",
        ),
        (
            "projection is a circ morphism",
            lambda f, g: None
            if P(f.circ(g)) == P(f).circ(P(g))
            else f"f={f}, g={g}",
        ),
        (
            "star commutators die under projection",
            lambda f, g: None if P(f.star(g)) == P(g.star(f)) else f"f={f}, g={g}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def radical_shift_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        r = RadicalPoly.from_brace_poly(random_member(rng, cfg))
        s = RadicalPoly.from_brace_poly(random_member(rng, cfg))
        return r, s

    const = TMono.constant()
    checks: list[Check] = [
        (
            "shift is multiplicative",
            lambda r, s: None
            if r.circ(s).shift_by_one() == ipoly_mul(r.shift_by_one(), s.shift_by_one())
            else f"r={r}, s={s}",
        ),
        (
            "shift sends star to a + b - 1",
            lambda r, s: None
            if r.star(s).shift_by_one()
            == ipoly_add(ipoly_add(r.shift_by_one(), s.shift_by_one()), {const: -1})
            else f"r={r}, s={s}",
        ),
        (
            "shift has constant term one",
            lambda r, s: None if r.shift_by_one().get(const, 0) == 1 else f"r={r}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def radical_wire_block(
    rng: random.Random, samples: int, cfg: SampleConfig = DEFAULT_CONFIG
) -> list[CheckOutcome]:
    def draw(rng):
        return tuple(
            RadicalPoly.from_brace_poly(random_member(rng, cfg)) for _ in range(3)
        )

    checks: list[Check] = [
        (
            "radical model satisfies both distributivities",
            lambda f, g, h: None
            if f.circ(g.star(h)) == f.circ(g).star(f.star_inv()).star(f.circ(h))
            and g.star(h).circ(f) == g.circ(f).star(f.star_inv()).star(h.circ(f))
            else f"f={f}, g={g}, h={h}",
        ),
        (
            "radical circ is commutative",
            lambda f, g, h: None if f.circ(g) == g.circ(f) else f"f={f}, g={g}",
        ),
        (
            "radical star is a commutative group",
            lambda f, g, h: None
            if f.star(g) == g.star(f)
            and f.star(g).star(h) == f.star(g.star(h))
            and f.star(f.star_inv()) == RadicalPoly.one()
            else f"f={f}, g={g}, h={h}",
        ),
    ]
    return _run_block(rng, samples, draw, checks)


def radical_suite(
    samples: int = 200, seed: int = 0, cfg: SampleConfig = DEFAULT_CONFIG
) -> SuiteReport:
    rng = random.Random(seed)
    checks = []
    checks += radical_morphism_block(rng, samples, cfg)
    checks += radical_shift_block(rng, samples, cfg)
    checks += radical_wire_block(rng, samples, cfg)

    # pinned value: both star orders of the generators project to the same line
    u = embed(Word.from_monos([("x", 1), ("y", 1)]))
    v = embed(Word.from_monos([("y", 1), ("x", 1)]))
    expected = RadicalPoly(
        {
            TMono.constant(): -1,
            TMono.variable("x"): 1,
            TMono.variable("y"): 1,
        }
    )
    pinned = CheckOutcome("projection collapses star commutators of generators", 1)
    pf, pv = RadicalPoly.from_brace_poly(u), RadicalPoly.from_brace_poly(v)
    if not (pf == pv == expected):
        pinned.failures = 1
        pinned.counterexample = f"{pf} vs {pv}, expected {expected}"
    checks.append(pinned)
    return SuiteReport("radical", seed, samples, checks)


# ---------------------------------------------------------------------------
# ringwire suite (exhaustive finite instances)


def _results_to_outcomes(prefix: str, results) -> list[CheckOutcome]:
    out = []
    for res in results:
        outcome = CheckOutcome(f"{prefix}: {res.condition}", -1)
        if not res.passed:
            if res.required:
                outcome.failures = 1
                outcome.counterexample = str(res.witnesses[:1])
            else:
                outcome.note = f"does not hold; first witness {res.witnesses[:1]}"
        elif not res.required:
            outcome.note = "holds on this instance"
        out.append(outcome)
    return out


def ringwire_suite(samples: int = 0, seed: int = 0) -> SuiteReport:
    checks: list[CheckOutcome] = []

    for size, modulus in ((2, 2), (2, 3)):
        ring, spec = builtin_wire("indicator_diag", size=size, modulus=modulus, E=(1,))
        inst = make_instance(ring, spec)
        prefix = f"indicator_diag n={size} m={modulus} E={{1}}"
        checks += _results_to_outcomes(
            prefix, check_conditions(ring, spec, inst.G, inst.H)
        )
        checks += _results_to_outcomes(prefix, verify(inst))

    ring, spec = builtin_wire("trivial_both", size=2, modulus=2)
    inst = make_instance(ring, spec)
    prefix = "trivial_both n=2 m=2"
    checks += _results_to_outcomes(prefix, check_conditions(ring, spec, inst.G, inst.H))
    checks += _results_to_outcomes(prefix, verify(inst))

    twist = CheckOutcome(f"{prefix}: star is the twisted addition u - 1 + v", -1)
    one = ring.one()
    for u in ring.elements():
        for v in ring.elements():
            expected = ring.add(ring.sub(u, one), v)
            if ring_wires.star(ring, spec, u, v) != expected:
                twist.failures += 1
                if twist.counterexample is None:
                    twist.counterexample = f"u={ring.render(u)}, v={ring.render(v)}"
    checks.append(twist)

    ring, spec = builtin_wire("identity_p_trivial_pi", size=2, modulus=3)
    units = ring_wires.unit_group(ring)
    inst = make_instance(ring, spec, G=units, H=None)
    prefix = "identity_p_trivial_pi n=2 m=3 G=units"
    checks += _results_to_outcomes(prefix, check_conditions(ring, spec, inst.G, inst.H))
    checks += _results_to_outcomes(prefix, verify(inst))

    # commutative scalar ring with p = pi = identity
    ring = ring_wires.TriangularRing(modulus=6, size=1)
    spec = ring_wires.EndoSpec("identity_both", p=lambda a: a, pi=lambda a: a)
    units = ring_wires.unit_group(ring)
    inst = make_instance(ring, spec, G=units, H=units)
    prefix = "identity_both scalars mod 6"
    checks += _results_to_outcomes(prefix, check_conditions(ring, spec, inst.G, inst.H))
    checks += _results_to_outcomes(prefix, verify(inst))

    # negative control: an endomorphism pair that does not fix the unit
    ring = ring_wires.TriangularRing(modulus=2, size=2)
    broken = ring_wires.EndoSpec(
        "broken", p=lambda a: ring.zero(), pi=lambda a: ring.one()
    )
    control = CheckOutcome("negative control: broken spec is detected", -1)
    detected = any(
        not res.passed
        for res in check_conditions(
            ring, broken, ring_wires.trivial_subgroup(ring), ring_wires.trivial_subgroup(ring)
        )
    )
    if not detected:
        control.failures = 1
        control.counterexample = "no condition failed for a spec with p == 0"
    checks.append(control)

    return SuiteReport("ringwire", seed, samples, checks)


# ---------------------------------------------------------------------------


def run_suite(name: str, samples: int = 200, seed: int = 0) -> SuiteReport:
    if name == "wire":
        return wire_suite(samples, seed)
    if name == "fractions":
        return fractions_suite(samples, seed)
    if name == "fox":
        return fox_suite(samples, seed)
    if name == "radical":
        return radical_suite(samples, seed)
    if name == "ringwire":
        return ringwire_suite(samples, seed)
    raise UnknownSuiteError(
        f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
    )
