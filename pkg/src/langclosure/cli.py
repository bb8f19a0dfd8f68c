"""Command-line interface.

Exit codes: 0 the property holds / success, 1 the property fails (a
certificate is printed), 2 bad usage, unreadable input or exhausted budget.
"""

from __future__ import annotations

import argparse
import sys

from .automata import (
    DEFAULT_BUDGET,
    Alphabet,
    Dfa,
    determinize,
    dump_automaton,
    format_word,
    load_automaton,
    parse_word,
)
from .closure_check import (
    PROPERTIES,
    _ALIASES,
    Counterexample,
    check_nfa_closed,
    check_property,
    interior,
    normalize_property,
)
from .errors import CommuteError, LangClosureError, PowerError
from .generators import WitnessSpec, witness_automaton
from .langexpr import Finite, OpenViolation, expr_alphabet, load_expr, oracle_check
from .laws import SUITES, LawBounds, run_law_suite
from .separation import (
    distinguish_open,
    separate_clopen,
    separate_open,
    separate_open_pair,
)
from .words import connected_components, parse_word_list


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _property(text):
    try:
        return normalize_property(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _alphabet(text):
    return Alphabet.of(text.replace(",", " "))


def _cert_line(cert) -> str:
    if isinstance(cert, Counterexample):
        return f"u={format_word(cert.u)} v={format_word(cert.v)} uv={format_word(cert.uv)}"
    if isinstance(cert, OpenViolation):
        return (f"w={format_word(cert.word)} split={cert.split} "
                f"u={format_word(cert.u)} v={format_word(cert.v)}")
    return str(cert)


def _finite(words) -> str:
    return str(Finite(frozenset(words)))


def cmd_check(args, out) -> int:
    fa = load_automaton(args.input)
    prop = args.property
    if args.nfa:
        if prop not in ("positive-closed", "kleene-closed"):
            print("--nfa supports pos-closed and kl-closed only", file=sys.stderr)
            return 2
        verdict = check_nfa_closed(fa, args.budget)
        if verdict.holds and prop == "kleene-closed" and not fa.accepts(()):
            print("FAIL epsilon-missing", file=out)
            return 1
    else:
        dfa = fa if isinstance(fa, Dfa) else determinize(fa, args.budget)
        verdict = check_property(dfa, prop)
    if verdict.holds:
        print("OK", file=out)
        return 0
    parts = ["FAIL"]
    if verdict.complemented:
        parts.append("complement")
    if verdict.reason:
        parts.append(verdict.reason)
    if verdict.certificate is not None:
        parts.append(_cert_line(verdict.certificate))
    print(" ".join(parts), file=out)
    return 1


def cmd_separate(args, out) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    alphabet = args.alphabet or Alphabet.infer(u, v)
    try:
        if args.mode == "clopen":
            expr, trace = separate_clopen(u, v, alphabet)
            print(expr, file=out)
            for line in trace.lines():
                print("  " + line, file=out)
        elif args.mode == "open":
            print(_finite(separate_open(u, v, alphabet)), file=out)
        elif args.mode == "distinguish":
            words, which = distinguish_open(u, v, alphabet)
            print(_finite(words), file=out)
            print(f"contains {which}", file=out)
        else:
            left, right = separate_open_pair(u, v, alphabet)
            print("L " + _finite(left), file=out)
            print("M " + _finite(right), file=out)
    except CommuteError as exc:
        print(f"COMMUTE {exc}; no separator exists", file=out)
        return 1
    except PowerError as exc:
        print(f"POWER {exc}; every open language containing it contains the other", file=out)
        return 1
    return 0


def cmd_components(args, out) -> int:
    with open(args.input, encoding="utf-8") as fh:
        words = parse_word_list(fh.read())
    for group in connected_components(words, args.alphabet):
        print(" ".join(format_word(w) for w in group), file=out)
    return 0


def cmd_witness(args, out) -> int:
    which = "M'" if args.which in ("mprime", "M'") else "M"
    text = dump_automaton(witness_automaton(WitnessSpec(args.n, which)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_oracle(args, out) -> int:
    expr = load_expr(args.input, args.alphabet)
    alphabet = args.alphabet or expr_alphabet(expr)
    verdict = oracle_check(expr, args.check, args.max_len, alphabet)
    if verdict.holds:
        print(f"OK(bounded {args.max_len})", file=out)
        return 0
    print(f"FAIL(bounded {args.max_len}) {_cert_line(verdict.certificate)}", file=out)
    return 1


def cmd_laws(args, out) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    bounds = LawBounds(budget=args.budget)
    failed = False
    chunks = []
    for suite in suites:
        report = run_law_suite(suite, args.trials, args.seed, bounds)
        failed |= not report.ok
        chunks.append(report.serialize())
    text = "".join(chunks)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        for chunk in chunks:
            print(chunk.splitlines()[0], file=out)
    else:
        out.write(text)
    return 1 if failed else 0


def cmd_interior(args, out) -> int:
    fa = load_automaton(args.input)
    dfa = fa if isinstance(fa, Dfa) else determinize(fa, args.budget)
    text = dump_automaton(interior(dfa, args.kind, args.budget))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="langclosure",
        description="Closed, open and clopen languages: checks, separators and law suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    props = ", ".join(list(PROPERTIES) + list(_ALIASES))

    p = sub.add_parser("check", help="decide a closure property of a .aut automaton")
    p.add_argument("input")
    p.add_argument("--property", type=_property, default="positive-closed",
                   help=f"one of: {props} (default pos-closed)")
    p.add_argument("--nfa", action="store_true",
                   help="check the NFA directly instead of determinizing first")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("separate", help="separate two dotted words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--mode", choices=("clopen", "open", "distinguish", "pair"), default="clopen")
    p.add_argument("--alphabet", type=_alphabet, default=None,
                   help="symbol order, e.g. 'a b' (default: order of first appearance)")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("components", help="group a word list by primitive root")
    p.add_argument("input")
    p.add_argument("--alphabet", type=_alphabet, default=None)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("witness", help="write the witness DFA M_n or M'_n")
    p.add_argument("n", type=int)
    p.add_argument("--which", choices=("M", "mprime", "M'"), default="M")
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", help="bounded closed/open check of a .lang expression")
    p.add_argument("input")
    p.add_argument("--check", choices=("closed", "open"), default="closed")
    p.add_argument("--max-len", type=_positive, default=8)
    p.add_argument("--alphabet", type=_alphabet, default=None,
                   help="default: symbols mentioned in the expression, sorted")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("laws", help="run randomized law suites")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=_positive, default=LawBounds().budget)
    p.add_argument("--out")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("interior", help="write the interior (open kernel) of a .aut automaton")
    p.add_argument("input")
    p.add_argument("--kind", choices=("positive", "kleene"), default="positive")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=cmd_interior)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (LangClosureError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
