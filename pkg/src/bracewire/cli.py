"""Command-line surface.

Commands::

    eval <expr>                 normal form of a wire or fraction expression
    eq <expr> :: <expr>         EQUAL/DIFFERENT verdict plus both normal forms
    feq <fexpr> :: <fexpr>      same, but requires fraction expressions
    fox <word> --wrt <mono>     Fox derivative of a word literal
    project <word>              image of a word in the free commutative group
    axioms <suite> [--samples N] [--seed S]
    ringwire --example NAME --n N --mod M --E 1,2 [...]

Exit codes: 0 for equal/pass, 1 for different/fail, 2 for usage or parse
errors.  ``--json`` (global or per command) switches to machine-readable
output.  All numbers are decimal and arbitrary precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from .brace_fractions import FractionBrace
from .canonical_wire import BracePoly, NotAMemberError
from .exprs import (
    ParseError,
    category,
    eval_canonical,
    eval_fraction,
    parse,
    parse_mono,
    parse_word,
)
from .ring_wires import (
    UnknownExampleError,
    builtin_wire,
    check_conditions,
    make_instance,
    trivial_subgroup,
    unit_group,
    verify,
)
from .suites import SUITE_NAMES, UnknownSuiteError, run_suite
from .word_model import WrongAlphabetError, fox, project

EXHAUSTIVE_TRIPLE_BUDGET = 300_000
EXHAUSTIVE_PAIR_BUDGET = 600_000


def _fraction_json(fr) -> dict:
    return {"num": fr.num.to_json(), "den": fr.den.to_json()}


def cmd_eval(args) -> int:
    text = " ".join(args.expr)
    node = parse(text)
    if category(node) == "wire":
        value = eval_canonical(node)
        if args.json:
            print(
                json.dumps(
                    {
                        "expr": text,
                        "category": "wire",
                        "text": value.render(),
                        "value": value.to_json(),
                    }
                )
            )
        else:
            print(value.render())
        return 0
    fr = eval_fraction(node, FractionBrace(BracePoly.identity()))
    if args.json:
        print(
            json.dumps(
                {
                    "expr": text,
                    "category": "fraction",
                    "text": fr.render(),
                    "value": _fraction_json(fr),
                }
            )
        )
    else:
        print(fr.render())
    return 0


def _split_eq_terms(terms: list[str]) -> tuple[str, str]:
    text = " ".join(terms)
    parts = text.split("::")
    if len(parts) != 2:
        raise ParseError("expected exactly one '::' separator", 0, ("::",))
    return parts[0], parts[1]


def _run_eq(args, require_fraction: bool) -> int:
    lhs_text, rhs_text = _split_eq_terms(args.terms)
    lhs, rhs = parse(lhs_text), parse(rhs_text)
    lcat, rcat = category(lhs), category(rhs)
    if lcat != rcat:
        raise ParseError(
            f"cannot compare a {lcat} expression with a {rcat} expression", 0
        )
    if require_fraction and lcat != "fraction":
        raise ParseError(
            "feq compares fraction expressions; use eq for wire expressions", 0
        )
    if lcat == "wire":
        lval, rval = eval_canonical(lhs), eval_canonical(rhs)
        equal = lval == rval
        ljson, rjson = lval.to_json(), rval.to_json()
        ltext, rtext = lval.render(), rval.render()
    else:
        brace = FractionBrace(BracePoly.identity())
        lval, rval = eval_fraction(lhs, brace), eval_fraction(rhs, brace)
        equal = brace.equal(lval, rval)
        ljson, rjson = _fraction_json(lval), _fraction_json(rval)
        ltext, rtext = lval.render(), rval.render()
    verdict = "EQUAL" if equal else "DIFFERENT"
    if args.json:
        print(
            json.dumps(
                {
                    "verdict": verdict,
                    "equal": equal,
                    "category": lcat,
                    "lhs": {"expr": lhs_text.strip(), "text": ltext, "value": ljson},
                    "rhs": {"expr": rhs_text.strip(), "text": rtext, "value": rjson},
                }
            )
        )
    else:
        print(verdict)
        print(f"lhs: {ltext}")
        print(f"rhs: {rtext}")
    return 0 if equal else 1


def cmd_eq(args) -> int:
    return _run_eq(args, require_fraction=False)


def cmd_feq(args) -> int:
    return _run_eq(args, require_fraction=True)


def cmd_fox(args) -> int:
    word = parse_word(args.word)
    mono = parse_mono(args.wrt)
    value = fox(word, mono)
    if args.json:
        print(
            json.dumps(
                {
                    "word": args.word,
                    "wrt": args.wrt,
                    "text": value.render(),
                    "value": value.to_json(),
                }
            )
        )
    else:
        print(value.render())
    return 0


def cmd_project(args) -> int:
    value = project(parse_word(args.word))
    if args.json:
        print(
            json.dumps(
                {"word": args.word, "text": value.render(), "value": value.to_json()}
            )
        )
    else:
        print(value.render())
    return 0


def cmd_axioms(args) -> int:
    report = run_suite(args.suite, samples=args.samples, seed=args.seed)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.format_text())
    return 0 if report.passed else 1


def _parse_subset(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def cmd_ringwire(args) -> int:
    ring, spec = builtin_wire(
        args.example, size=args.n, modulus=args.mod, E=_parse_subset(args.E)
    )
    G = unit_group(ring) if args.G == "units" else trivial_subgroup(ring)
    H = unit_group(ring) if args.H == "units" else trivial_subgroup(ring)
    instance = make_instance(ring, spec, G=G, H=H)
    n_elems = ring.card()
    n_carrier = len(instance.carrier)

    exhaustive = args.exhaustive or (
        n_carrier**3 <= EXHAUSTIVE_TRIPLE_BUDGET
        and n_elems**2 <= EXHAUSTIVE_PAIR_BUDGET
    )
    if exhaustive:
        results = check_conditions(ring, spec, G, H) + verify(instance)
        mode = "exhaustive"
    else:
        results = check_conditions(
            ring, spec, G, H, sample=args.samples, seed=args.seed
        ) + verify(instance, sample=args.samples, seed=args.seed)
        mode = f"sampled (samples={args.samples}, seed={args.seed})"

    ok = all(res.passed for res in results if res.required)
    if args.json:
        print(
            json.dumps(
                {
                    "example": args.example,
                    "n": args.n,
                    "mod": args.mod,
                    "E": list(_parse_subset(args.E)),
                    "carrier_size": n_carrier,
                    "mode": mode,
                    "status": "pass" if ok else "fail",
                    "checks": [res.to_json() for res in results],
                }
            )
        )
    else:
        print(
            f"example {args.example} (n={args.n}, mod={args.mod}, "
            f"E={{{args.E}}}, carrier size {n_carrier}, {mode})"
        )
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            print(f"  {status:<6} {res.condition}")
            for witness in res.witnesses[:5]:
                print(f"         witness: {witness}")
            if len(res.witnesses) > 5:
                print(f"         ... {len(res.witnesses) - 5} more")
        print(f"result: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="machine-readable output",
    )

    parser = argparse.ArgumentParser(
        prog="bracewire",
        description="Exact computation in free commutative skew braces and wires.",
        parents=[shared],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[shared], help="normalize an expression")
    p.add_argument("expr", nargs="+", help="wire or fraction expression")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eq", parents=[shared], help="compare two expressions")
    p.add_argument("terms", nargs="+", help="LHS :: RHS")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("feq", parents=[shared], help="compare two fraction expressions")
    p.add_argument("terms", nargs="+", help="LHS :: RHS")
    p.set_defaults(func=cmd_feq)

    p = sub.add_parser("fox", parents=[shared], help="Fox derivative of a word")
    p.add_argument("word", help="word literal, e.g. [x].[x o y].[x]^-1")
    p.add_argument("--wrt", required=True, help="monomial, e.g. 'x o y'")
    p.set_defaults(func=cmd_fox)

    p = sub.add_parser("project", parents=[shared], help="abelianize a word")
    p.add_argument("word", help="word literal")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("axioms", parents=[shared], help="run a property suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITE_NAMES)}")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("ringwire", parents=[shared], help="verify a finite ring wire")
    p.add_argument("--example", required=True, help="builtin example name")
    p.add_argument("--n", type=int, default=2, help="matrix size")
    p.add_argument("--mod", type=int, default=2, help="modulus")
    p.add_argument("--E", default="1", help="comma-separated 1-based diagonal subset")
    p.add_argument("--G", choices=("trivial", "units"), default="trivial")
    p.add_argument("--H", choices=("trivial", "units"), default="trivial")
    p.add_argument("--exhaustive", action="store_true", help="force exhaustive sweeps")
    p.add_argument("--samples", type=int, default=2000, help="sampled-mode triples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_ringwire)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        UnknownSuiteError,
        UnknownExampleError,
        WrongAlphabetError,
        NotAMemberError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
