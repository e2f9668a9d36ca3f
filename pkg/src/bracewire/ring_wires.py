"""Right wires built from a finite unital ring and a pair of commuting
monoid endomorphisms, with exhaustive axiom verification.

The carrier ring is the ring of upper-triangular ``n x n`` matrices over the
integers mod ``m`` (``n = 1`` gives plain modular scalars).  Given monoid
endomorphisms ``p`` and ``pi`` of the multiplicative monoid whose values
commute pointwise, the twisted operation

    ``u * v = pi(v) u - p(u) pi(v) + p(u) v``

is associative whenever ``p(u*v) = p(u) p(v)`` and ``pi(u*v) = pi(v) pi(u)``;
restricted to ``U = p^-1(G) /\\ pi^-1(H)`` for subgroups G, H of the unit
group, and with the inverse-compatibility conditions, ``(U, *, .)`` is a
right wire.  Everything here is checked by enumeration, not assumed: the
condition checker reports every failing pair with values, and the wire
verifier sweeps the axioms over carrier triples (exhaustively for small
rings, by seeded sampling otherwise).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator

__all__ = [
    "Matrix",
    "TriangularRing",
    "EndoSpec",
    "WireInstance",
    "CheckResult",
    "NotInvertibleError",
    "UnknownExampleError",
    "builtin_wire",
    "carrier",
    "make_instance",
    "check_conditions",
    "verify",
    "trivial_subgroup",
    "unit_group",
    "validate_subgroup",
]

Matrix = tuple[tuple[int, ...], ...]


class NotInvertibleError(ValueError):
    """Raised when a star inverse needs a non-unit endomorphism value."""


class UnknownExampleError(ValueError):
    """Raised for an unrecognized builtin example name."""


@dataclass(frozen=True)
class TriangularRing:
    """Upper-triangular ``size x size`` matrices over the integers mod ``modulus``."""

    modulus: int
    size: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if self.size < 1:
            raise ValueError("size must be >= 1")

    @property
    def positions(self) -> list[tuple[int, int]]:
        n = self.size
        return [(i, j) for i in range(n) for j in range(i, n)]

    def zero(self) -> Matrix:
        n = self.size
        return tuple(tuple(0 for _ in range(n)) for _ in range(n))

    def one(self) -> Matrix:
        n = self.size
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def from_entries(self, entries: dict[tuple[int, int], int]) -> Matrix:
        n, m = self.size, self.modulus
        return tuple(
            tuple(entries.get((i, j), 0) % m if j >= i else 0 for j in range(n))
            for i in range(n)
        )

    def elements(self) -> Iterator[Matrix]:
        pos = self.positions
        for combo in itertools.product(range(self.modulus), repeat=len(pos)):
            yield self.from_entries(dict(zip(pos, combo)))

    def card(self) -> int:
        return self.modulus ** len(self.positions)

    def add(self, a: Matrix, b: Matrix) -> Matrix:
        m = self.modulus
        return tuple(
            tuple((x + y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def sub(self, a: Matrix, b: Matrix) -> Matrix:
        m = self.modulus
        return tuple(
            tuple((x - y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def neg(self, a: Matrix) -> Matrix:
        m = self.modulus
        return tuple(tuple((-x) % m for x in row) for row in a)

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        n, m = self.size, self.modulus
        return tuple(
            tuple(
                sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n)
            )
            for i in range(n)
        )

    def is_unit(self, a: Matrix) -> bool:
        return all(gcd(a[i][i], self.modulus) == 1 for i in range(self.size))

    def inv(self, a: Matrix) -> Matrix:
        """Inverse of a unit (back substitution on the triangle)."""
        if not self.is_unit(a):
            raise NotInvertibleError(f"{a} is not a unit mod {self.modulus}")
        n, m = self.size, self.modulus
        out = [[0] * n for _ in range(n)]
        diag_inv = [pow(a[i][i], -1, m) for i in range(n)]
        for i in range(n):
            out[i][i] = diag_inv[i]
        for width in range(1, n):
            for i in range(n - width):
                j = i + width
                s = sum(a[i][k] * out[k][j] for k in range(i + 1, j + 1)) % m
                out[i][j] = (-diag_inv[i] * s) % m
        return tuple(tuple(row) for row in out)

    def units(self) -> list[Matrix]:
        return [a for a in self.elements() if self.is_unit(a)]

    def render(self, a: Matrix) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in a) + "]"


@dataclass(frozen=True)
class EndoSpec:
    """A named pair of multiplicative-monoid endomorphisms of a ring."""

    name: str
    p: Callable[[Matrix], Matrix]
    pi: Callable[[Matrix], Matrix]


def star(ring: TriangularRing, spec: EndoSpec, u: Matrix, v: Matrix) -> Matrix:
    """The twisted operation ``pi(v) u - p(u) pi(v) + p(u) v``."""
    pu, piv = spec.p(u), spec.pi(v)
    out = ring.sub(ring.mul(piv, u), ring.mul(pu, piv))
    return ring.add(out, ring.mul(pu, v))


def inv_star(ring: TriangularRing, spec: EndoSpec, u: Matrix) -> Matrix:
    """The star inverse ``pi(u)^-1 - p(u)^-1 pi(u)^-1 u + p(u)^-1``."""
    pu_inv = ring.inv(spec.p(u))
    piu_inv = ring.inv(spec.pi(u))
    out = ring.sub(piu_inv, ring.mul(ring.mul(pu_inv, piu_inv), u))
    return ring.add(out, pu_inv)


def trivial_subgroup(ring: TriangularRing) -> frozenset[Matrix]:
    return frozenset((ring.one(),))


def unit_group(ring: TriangularRing) -> frozenset[Matrix]:
    return frozenset(ring.units())


def validate_subgroup(ring: TriangularRing, elems: Iterable[Matrix]) -> frozenset[Matrix]:
    """Check that ``elems`` is a subgroup of the unit group and return it."""
    group = frozenset(elems)
    if ring.one() not in group:
        raise ValueError("a subgroup must contain the identity matrix")
    for a in group:
        if not ring.is_unit(a):
            raise ValueError(f"{ring.render(a)} is not a unit")
        if ring.inv(a) not in group:
            raise ValueError(f"subgroup not closed under inverse at {ring.render(a)}")
        for b in group:
            if ring.mul(a, b) not in group:
                raise ValueError(
                    f"subgroup not closed under product at "
                    f"{ring.render(a)}, {ring.render(b)}"
                )
    return group


BUILTIN_NAMES = ("indicator_diag", "trivial_both", "identity_p_trivial_pi")


def builtin_wire(
    name: str, *, size: int = 2, modulus: int = 2, E: Iterable[int] = (1,)
) -> tuple[TriangularRing, EndoSpec]:
    """A named (ring, endomorphism pair) example.

    ``indicator_diag``: ``pi`` trivial and ``p`` the diagonal indicator map
    keeping the ``i``-th diagonal entry for 1-based ``i`` in ``E`` and
    replacing the rest with 1.  ``trivial_both``: both endomorphisms send
    everything to 1, giving the twisted addition ``u - 1 + v``.
    ``identity_p_trivial_pi``: ``p`` the identity, ``pi`` trivial, so the
    twisted operation collapses to the ring product.
    """
    ring = TriangularRing(modulus=modulus, size=size)
    one = ring.one()

    def trivial(_: Matrix) -> Matrix:
        return one

    def identity(a: Matrix) -> Matrix:
        return a

    if name == "indicator_diag":
        kept = frozenset(E)
        if not kept <= set(range(1, size + 1)):
            raise ValueError(f"E must be a subset of 1..{size}, got {sorted(kept)}")

        def indicator(a: Matrix) -> Matrix:
            return tuple(
                tuple(
                    (a[i][i] if (i + 1) in kept else 1) if i == j else 0
                    for j in range(size)
                )
                for i in range(size)
            )

        return ring, EndoSpec(name=name, p=indicator, pi=trivial)
    if name == "trivial_both":
        return ring, EndoSpec(name=name, p=trivial, pi=trivial)
    if name == "identity_p_trivial_pi":
        return ring, EndoSpec(name=name, p=identity, pi=trivial)
    raise UnknownExampleError(
        f"unknown example {name!r}; expected one of {', '.join(BUILTIN_NAMES)}"
    )


def carrier(
    ring: TriangularRing,
    spec: EndoSpec,
    G: frozenset[Matrix],
    H: frozenset[Matrix],
) -> tuple[Matrix, ...]:
    """Enumerate ``U = p^-1(G) /\\ pi^-1(H)`` in a fixed order."""
    return tuple(
        a for a in ring.elements() if spec.p(a) in G and spec.pi(a) in H
    )


@dataclass(frozen=True)
class WireInstance:
    """A candidate right wire: ring, endomorphisms, subgroups and carrier."""

    ring: TriangularRing
    spec: EndoSpec
    G: frozenset[Matrix]
    H: frozenset[Matrix]
    carrier: tuple[Matrix, ...]

    def star(self, u: Matrix, v: Matrix) -> Matrix:
        return star(self.ring, self.spec, u, v)

    def inv_star(self, u: Matrix) -> Matrix:
        return inv_star(self.ring, self.spec, u)


def make_instance(
    ring: TriangularRing,
    spec: EndoSpec,
    G: frozenset[Matrix] | None = None,
    H: frozenset[Matrix] | None = None,
) -> WireInstance:
    G = trivial_subgroup(ring) if G is None else validate_subgroup(ring, G)
    H = trivial_subgroup(ring) if H is None else validate_subgroup(ring, H)
    return WireInstance(ring=ring, spec=spec, G=G, H=H, carrier=carrier(ring, spec, G, H))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified condition.

    ``witnesses`` holds the failing tuples (each entry already rendered to
    plain nested lists/strings); ``required`` is False for conditions that
    are recorded but do not decide the verdict (left distributivity on a
    right wire).
    """

    condition: str
    status: str
    witnesses: tuple = ()
    required: bool = True

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "condition": self.condition,
            "status": self.status,
            "witness": list(self.witnesses),
        }
        if not self.required:
            out["required"] = False
        return out


def _sweep(
    name: str,
    pairs: Iterable[tuple],
    predicate: Callable[..., tuple | None],
    required: bool = True,
    max_witnesses: int | None = None,
) -> CheckResult:
    witnesses = []
    for args in pairs:
        w = predicate(*args)
        if w is not None:
            witnesses.append(w)
            if max_witnesses is not None and len(witnesses) >= max_witnesses:
                break
    status = "pass" if not witnesses else "fail"
    return CheckResult(name, status, tuple(witnesses), required)


def check_conditions(
    ring: TriangularRing,
    spec: EndoSpec,
    G: frozenset[Matrix],
    H: frozenset[Matrix],
    *,
    sample: int | None = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Verify the endomorphism and compatibility conditions.

    With ``sample=None`` the sweep over pairs is exhaustive; otherwise
    ``sample`` seeded random pairs are drawn.  Failures are reported as
    witness entries (every failing pair, with values), not raised.
    """
    elems = list(ring.elements())
    one = ring.one()
    r = ring.render

    if sample is None:
        pair_source = lambda: itertools.product(elems, elems)
    else:
        rng = random.Random(seed)

        def pair_source():
            return (
                (rng.choice(elems), rng.choice(elems)) for _ in range(sample)
            )

    results = [
        _sweep(
            "p fixes the unit",
            [(one,)],
            lambda u: None if spec.p(u) == one else (r(u), r(spec.p(u))),
        ),
        _sweep(
            "pi fixes the unit",
            [(one,)],
            lambda u: None if spec.pi(u) == one else (r(u), r(spec.pi(u))),
        ),
        _sweep(
            "p is multiplicative",
            pair_source(),
            lambda u, v: None
            if spec.p(ring.mul(u, v)) == ring.mul(spec.p(u), spec.p(v))
            else (r(u), r(v), r(spec.p(ring.mul(u, v)))),
        ),
        _sweep(
            "pi is multiplicative",
            pair_source(),
            lambda u, v: None
            if spec.pi(ring.mul(u, v)) == ring.mul(spec.pi(u), spec.pi(v))
            else (r(u), r(v), r(spec.pi(ring.mul(u, v)))),
        ),
        _sweep(
            "p and pi values commute",
            pair_source(),
            lambda u, v: None
            if ring.mul(spec.p(u), spec.pi(v)) == ring.mul(spec.pi(v), spec.p(u))
            else (r(u), r(v)),
        ),
        _sweep(
            "p(u*v) = p(u)p(v)",
            pair_source(),
            lambda u, v: None
            if spec.p(star(ring, spec, u, v)) == ring.mul(spec.p(u), spec.p(v))
            else (r(u), r(v), r(spec.p(star(ring, spec, u, v)))),
        ),
        _sweep(
            "pi(u*v) = pi(v)pi(u)",
            pair_source(),
            lambda u, v: None
            if spec.pi(star(ring, spec, u, v)) == ring.mul(spec.pi(v), spec.pi(u))
            else (r(u), r(v), r(spec.pi(star(ring, spec, u, v)))),
        ),
    ]

    U = carrier(ring, spec, G, H)

    def inv_cond(u: Matrix):
        try:
            w = inv_star(ring, spec, u)
        except NotInvertibleError:
            return (r(u), "not invertible")
        ok = spec.p(w) == ring.inv(spec.p(u)) and spec.pi(w) == ring.inv(spec.pi(u))
        return None if ok else (r(u), r(w))

    results.append(
        _sweep("p,pi invert star inverses on the carrier", [(u,) for u in U], inv_cond)
    )
    return results


def verify(
    instance: WireInstance,
    *,
    sample: int | None = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Check the right-wire axioms on the carrier.

    Exhaustive over carrier triples when ``sample`` is None, else seeded
    random triples.  Left brace distributivity is evaluated and reported but
    marked non-required: a right wire need not satisfy it.  Each failing
    check carries its first counterexample.
    """
    ring, U = instance.ring, instance.carrier
    one = ring.one()
    st, inv = instance.star, instance.inv_star
    r = ring.render
    cset = frozenset(U)

    if sample is None or not U:
        def triples():
            return itertools.product(U, U, U)

        def pairs():
            return itertools.product(U, U)

        singles = [(u,) for u in U]
    else:
        rng = random.Random(seed)

        def triples():
            return (
                (rng.choice(U), rng.choice(U), rng.choice(U)) for _ in range(sample)
            )

        def pairs():
            return ((rng.choice(U), rng.choice(U)) for _ in range(sample))

        singles = [(rng.choice(U),) for _ in range(sample)]

    def first(name, source, pred, required=True):
        return _sweep(name, source, pred, required=required, max_witnesses=1)

    results = [
        first(
            "carrier closed under star",
            pairs(),
            lambda u, v: None if st(u, v) in cset else (r(u), r(v), r(st(u, v))),
        ),
        first(
            "carrier closed under star inverse",
            singles,
            lambda u: None if inv(u) in cset else (r(u), r(inv(u))),
        ),
        first(
            "carrier closed under product",
            pairs(),
            lambda u, v: None
            if ring.mul(u, v) in cset
            else (r(u), r(v), r(ring.mul(u, v))),
        ),
        first(
            "star is associative",
            triples(),
            lambda u, v, w: None
            if st(st(u, v), w) == st(u, st(v, w))
            else (r(u), r(v), r(w)),
        ),
        first(
            "star has neutral element 1",
            singles,
            lambda u: None if st(u, one) == u and st(one, u) == u else (r(u),),
        ),
        first(
            "star inverses invert",
            singles,
            lambda u: None
            if st(u, inv(u)) == one and st(inv(u), u) == one
            else (r(u), r(inv(u))),
        ),
        first(
            "product is associative",
            triples(),
            lambda u, v, w: None
            if ring.mul(ring.mul(u, v), w) == ring.mul(u, ring.mul(v, w))
            else (r(u), r(v), r(w)),
        ),
        first(
            "product has neutral element 1",
            singles,
            lambda u: None
            if ring.mul(u, one) == u and ring.mul(one, u) == u
            else (r(u),),
        ),
        first(
            "right brace distributivity",
            triples(),
            lambda u, v, w: None
            if st(ring.mul(v, u), st(inv(u), ring.mul(w, u)))
            == ring.mul(st(v, w), u)
            else (r(u), r(v), r(w)),
        ),
        first(
            "left brace distributivity (informational)",
            triples(),
            lambda u, v, w: None
            if st(ring.mul(u, v), st(inv(u), ring.mul(u, w)))
            == ring.mul(u, st(v, w))
            else (r(u), r(v), r(w)),
            required=False,
        ),
    ]
    return results
