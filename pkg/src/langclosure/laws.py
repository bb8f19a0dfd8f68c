"""Lattice operations, compact languages, and randomized law suites.

Each suite draws random regular languages meeting a law's hypotheses
(rejection sampling), evaluates the conclusion exactly with automata, and
records any instance where it fails.  Two suites (T3d, T4c) are fixed
fixtures rather than random draws; T4c is reported as violated because its
product LM genuinely is not closed.

Trial ``i`` draws from ``rng(seed, i, attempt)`` so reports do not depend on
scheduling or on how many trials are run.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .automata import (
    Alphabet,
    Dfa,
    accept_all,
    closure_dfa,
    complement,
    concat_dfa,
    difference,
    dump_automaton,
    equivalent,
    format_word,
    from_words,
    intersect,
    is_empty,
    minimize,
    parse_dfa,
    parse_word,
    power,
    determinize,
    subset_of,
    union,
)
from .closure_check import check_property, interior, is_closed, is_open
from .errors import BudgetExceeded, NotClosedError
from .generators import SplitMix64, random_dfa, random_finite_language, rng
from .langexpr import FreqCmp, Finite, Union, member, oracle_check

log = logging.getLogger(__name__)

LAW_BUDGET = 2**14


# --- lattice and compactness ---------------------------------------------------------

def meet(left: Dfa, right: Dfa) -> Dfa:
    return minimize(intersect(left, right))


def join(left: Dfa, right: Dfa, kind: str = "positive", budget: int = LAW_BUDGET) -> Dfa:
    return closure_dfa(union(left, right), kind, budget)


@dataclass(frozen=True)
class CompactLang:
    """The closure of a finite basis."""

    basis: frozenset
    kind: str
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "basis", frozenset(tuple(w) for w in self.basis))
        object.__setattr__(self, "alphabet", Alphabet.of(self.alphabet))
        if self.kind not in ("positive", "kleene"):
            raise ValueError(f"unknown closure kind {self.kind!r}")
        for w in self.basis:
            self.alphabet.check(w)

    def to_dfa(self, budget: int = LAW_BUDGET) -> Dfa:
        return closure_dfa(from_words(self.basis, self.alphabet), self.kind, budget)


def compact_union(c1: CompactLang, c2: CompactLang) -> CompactLang:
    if c1.kind != c2.kind:
        raise ValueError("compact languages use different closure kinds")
    if c1.alphabet != c2.alphabet:
        raise ValueError("compact languages use different alphabets")
    return CompactLang(c1.basis | c2.basis, c1.kind, c1.alphabet)


@dataclass(frozen=True)
class CompactResult:
    """``found`` with a verified basis, or unknown up to ``m`` (not a disproof)."""

    found: bool
    basis: Optional[frozenset]
    m: int


def is_compact(k: Dfa, kind: str = "positive", m_max: int = 6,
               budget: int = LAW_BUDGET) -> CompactResult:
    """Look for m ≤ m_max with (K ∩ Σ^≤m)^□ = K.

    Semi-decision only: ``found=False`` says no basis of short words exists,
    not that K is non-compact.
    """
    if not is_closed(k, kind):
        raise NotClosedError(f"language is not {kind}-closed")
    basis: set = set()
    for m in range(0, m_max + 1):
        basis.update(w for w in k.alphabet.words(m) if k.accepts(w))
        if m == 0:
            continue
        candidate = closure_dfa(from_words(basis, k.alphabet), kind, budget)
        if equivalent(candidate, k):
            return CompactResult(True, frozenset(basis), m)
    return CompactResult(False, None, m_max)


# --- instance encoding -------------------------------------------------------------

_ESCAPES = {"\\": "\\\\", "\n": "\\n", "\t": "\\t"}
_UNESCAPES = {"n": "\n", "t": "\t"}


def _escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def _unescape(text: str) -> str:
    out, i = [], 0
    while i < len(text):
        if text[i] == "\\" and i + 1 < len(text):
            out.append(_UNESCAPES.get(text[i + 1], text[i + 1]))
            i += 2
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


def _encode(value) -> str:
    if isinstance(value, Dfa):
        return "aut:" + _escape(dump_automaton(value))
    if isinstance(value, frozenset):
        return "words:" + ",".join(format_word(w) for w in sorted(value, key=lambda w: (len(w), w)))
    return "str:" + _escape(str(value))


def _decode(text: str):
    kind, _, payload = text.partition(":")
    if kind == "aut":
        return parse_dfa(_unescape(payload))
    if kind == "words":
        return frozenset(parse_word(w) for w in payload.split(",")) if payload else frozenset()
    if kind == "str":
        return _unescape(payload)
    raise ValueError(f"unknown payload kind {kind!r}")


@dataclass
class Violation:
    suite: str
    trial: int
    instance: dict
    problems: list

    def line(self) -> str:
        fields = [self.suite, f"trial={self.trial}"]
        fields += [f"{name}={_encode(value)}" for name, value in self.instance.items()]
        fields.append("problems=" + "; ".join(self.problems))
        return "\t".join(fields)


def parse_violation(line: str) -> Violation:
    suite, trial, *rest = line.rstrip("\n").split("\t")
    instance = {}
    problems: list = []
    for item in rest:
        name, _, payload = item.partition("=")
        if name == "problems":
            problems = payload.split("; ") if payload else []
        else:
            instance[name] = _decode(payload)
    return Violation(suite, int(trial.partition("=")[2]), instance, problems)


def replay_violation(line: str, budget: int = LAW_BUDGET) -> list:
    """Re-run a serialized violation's check from its instance alone."""
    v = parse_violation(line)
    problems, _ = SUITES[v.suite].check(v.instance, budget)
    return problems


@dataclass
class LawBounds:
    budget: int = LAW_BUDGET
    max_attempts: int = 400


@dataclass
class LawReport:
    suite: str
    seed: int
    trials: int
    qualifying: int = 0
    draws: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        rate = f"{self.qualifying}/{self.draws}" if self.draws else "fixture"
        status = "OK" if self.ok else "VIOLATED"
        return (f"{self.suite} {status} trials={self.trials} qualifying={self.qualifying} "
                f"accepted={rate} skipped={self.skipped} violations={len(self.violations)} "
                f"warnings={len(self.warnings)} seed={self.seed}")

    def serialize(self) -> str:
        lines = [self.summary()]
        lines += ["WARNING " + w for w in self.warnings]
        lines += [v.line() for v in self.violations]
        return "\n".join(lines) + "\n"


# --- random language helpers ----------------------------------------------------------

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))
UNARY = Alphabet(("a",))


def _alphabet(g: SplitMix64) -> Alphabet:
    return ABC if g.below(4) == 0 else AB


def _kind(g: SplitMix64) -> str:
    return "kleene" if g.below(2) else "positive"


def _base(g: SplitMix64, alphabet: Alphabet, max_len: int = 3, max_count: int = 3) -> frozenset:
    available = sum(len(alphabet) ** i for i in range(1, max_len + 1))
    count = g.between(1, min(max_count, available))
    return random_finite_language(max_len, count, alphabet, g.next())


def _finite(words, alphabet) -> Dfa:
    return minimize(from_words(words, alphabet))


def _closed(g: SplitMix64, alphabet: Alphabet, kind: str, budget: int) -> Dfa:
    if g.below(4) == 0:
        for _ in range(20):
            d = random_dfa(g.between(1, 4), alphabet, Fraction(1, 2), g.next())
            if is_closed(d, kind):
                return minimize(d)
    return closure_dfa(from_words(_base(g, alphabet), alphabet), kind, budget)


def _open(g: SplitMix64, alphabet: Alphabet, budget: int) -> Dfa:
    choice = g.below(3)
    if choice == 0:
        return complement(_closed(g, alphabet, "positive", budget))
    if choice == 1:
        for _ in range(20):
            words = _base(g, alphabet, max_len=3, max_count=4)
            d = _finite(words, alphabet)
            if is_open(d):
                return d
    # unions of prefix languages are open
    words = set()
    for w in _base(g, alphabet, max_len=4, max_count=2):
        words.update(w[:i] for i in range(len(w) + 1))
    if g.below(2):
        words.discard(())
    return _finite(words, alphabet)


def _with_eps(d: Dfa) -> Dfa:
    return minimize(union(d, from_words([()], d.alphabet)))


def _without_eps(d: Dfa) -> Dfa:
    return minimize(difference(d, from_words([()], d.alphabet)))


def _cat(x: Dfa, y: Dfa, budget: int) -> Dfa:
    return concat_dfa(x, y, budget)


def _words_over(factors: int):
    """All words over {L, M} of length 1..factors, as tuples of 'L'/'M'."""
    for n in range(1, factors + 1):
        yield from itertools.product("LM", repeat=n)


def _products(lang: dict, factors: int, budget: int) -> dict:
    """DFA for every product W over {L, M} up to ``factors`` factors."""
    out: dict = {}
    for word in _words_over(factors):
        if len(word) == 1:
            out[word] = lang[word[0]]
        else:
            out[word] = _cat(out[word[:-1]], lang[word[-1]], budget)
    return out


# --- suites ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    ident: str
    description: str
    draw: Optional[Callable]
    check: Callable
    fixture: Optional[Callable] = None


def _draw_t1a(g, budget):
    a = _alphabet(g)
    return {"L": _closed(g, a, "positive", budget)}


def _check_t1a(inst, budget):
    lang, problems = inst["L"], []
    if not is_closed(lang):
        return ["hypothesis: L not closed"], []
    for k in (2, 3):
        lk = minimize(determinize(power(lang, k), budget))
        if not subset_of(lk, lang):
            problems.append(f"L^{k} not contained in L")
        if not is_closed(lk):
            problems.append(f"L^{k} not closed")
    return problems, []


def _draw_t1b(g, budget):
    a = _alphabet(g)
    return {"L": _closed(g, a, "kleene", budget)}


def _check_t1b(inst, budget):
    lang, problems = inst["L"], []
    if not is_closed(lang, "kleene"):
        return ["hypothesis: L not Kleene-closed"], []
    for k in (2, 3):
        lk = minimize(determinize(power(lang, k), budget))
        if not equivalent(lk, lang):
            problems.append(f"L^{k} differs from L")
    return problems, []


def _draw_t1c(g, budget):
    a, kind = _alphabet(g), _kind(g)
    choice = g.below(3)
    if choice == 0:
        left, right = _closed(g, a, kind, budget), _closed(g, a, kind, budget)
    elif choice == 1:
        x = random_finite_language(2, 1, a, g.next())
        (x,) = x
        powers = [x * i for i in range(1, 4)]
        pick = lambda: [w for w in powers if g.below(2)] or [powers[g.below(3)]]  # noqa: E731
        left = closure_dfa(from_words(pick(), a), kind, budget)
        right = closure_dfa(from_words(pick(), a), kind, budget)
    else:
        left = _closed(g, a, kind, budget)
        right = left if g.below(2) else _cat(left, left, budget)
    if not (is_closed(left, kind) and is_closed(right, kind)):
        return None
    if not equivalent(_cat(left, right, budget), _cat(right, left, budget)):
        return None
    return {"kind": kind, "L": left, "M": right}


def _check_closed_product(inst, budget):
    kind, left, right = inst["kind"], inst["L"], inst["M"]
    if not (is_closed(left, kind) and is_closed(right, kind)):
        return ["hypothesis: L or M not closed"], []
    if not is_closed(_cat(left, right, budget), kind):
        return [f"LM not {kind}-closed"], []
    return [], []


def _check_t1c(inst, budget):
    if not equivalent(_cat(inst["L"], inst["M"], budget), _cat(inst["M"], inst["L"], budget)):
        return ["hypothesis: LM != ML"], []
    return _check_closed_product(inst, budget)


def _draw_t1d(g, budget):
    kind = _kind(g)
    langs = []
    for _ in range(2):
        if g.below(4) == 0:
            d = random_dfa(g.between(1, 5), UNARY, Fraction(1, 2), g.next())
            if not is_closed(d, kind):
                return None
            langs.append(minimize(d))
        else:
            base = _base(g, UNARY, max_len=6, max_count=3)
            langs.append(closure_dfa(from_words(base, UNARY), kind, budget))
    return {"kind": kind, "L": langs[0], "M": langs[1]}


def _draw_t2(g, budget):
    a, kind = _alphabet(g), _kind(g)
    left = _closed(g, a, kind, budget)
    if g.below(2):
        right = _closed(g, a, kind, budget)
    else:
        right = meet(left, _closed(g, a, kind, budget))
    if g.below(2):
        left, right = right, left
    if not (is_closed(left, kind) and is_closed(right, kind)):
        return None
    if not is_closed(minimize(union(left, right)), kind):
        return None
    return {"kind": kind, "L": left, "M": right}


def _check_t2_hyp(inst):
    kind, left, right = inst["kind"], inst["L"], inst["M"]
    ok = is_closed(left, kind) and is_closed(right, kind) and is_closed(union(left, right), kind)
    return [] if ok else ["hypothesis: L, M, L∪M not all closed"]


def _check_t2a(inst, budget):
    problems = _check_t2_hyp(inst)
    return (problems, []) if problems else _check_closed_product(inst, budget)


def _check_t2b(inst, budget):
    problems = _check_t2_hyp(inst)
    if problems:
        return problems, []
    kind = inst["kind"]
    for word, d in _products({"L": inst["L"], "M": inst["M"]}, 4, budget).items():
        if not is_closed(d, kind):
            problems.append(f"{''.join(word)} not {kind}-closed")
    return problems, []


def _draw_t3a(g, budget):
    a = _alphabet(g)
    return {"L": _with_eps(_open(g, a, budget)), "M": _with_eps(_open(g, a, budget))}


def _check_t3a(inst, budget):
    left, right = inst["L"], inst["M"]
    if not (is_open(left) and is_open(right) and left.accepts(()) and right.accepts(())):
        return ["hypothesis: L, M open with ε"], []
    return ([] if is_open(_cat(left, right, budget)) else ["LM not open"]), []


def _draw_t3b(g, budget):
    a = _alphabet(g)
    left, right = _without_eps(_open(g, a, budget)), _without_eps(_open(g, a, budget))
    if is_empty(left) or is_empty(right):
        return None
    return {"L": left, "M": right}


def _check_t3b(inst, budget):
    left, right = inst["L"], inst["M"]
    if not (is_open(left) and is_open(right)) or left.accepts(()) or right.accepts(()):
        return ["hypothesis: L, M open without ε"], []
    if is_empty(left) or is_empty(right):
        return ["hypothesis: L or M empty"], []
    return (["LM open"] if is_open(_cat(left, right, budget)) else []), []


def _fixture_t3d(budget):
    a = UNARY
    m = _finite([("a",)], a)
    not_open = _finite([(), ("a",), ("a",) * 3, ("a",) * 5], a)
    is_open_l = _finite([(), ("a",), ("a",) * 3], a)
    return {"L1": not_open, "L2": is_open_l, "M": m}


def _check_t3d(inst, budget):
    problems = []
    for name in ("L1", "L2", "M"):
        if not is_open(inst[name]):
            problems.append(f"fixture {name} not open")
    first = _cat(inst["L1"], inst["M"], budget)
    six, three = ("a",) * 6, ("a",) * 3
    if not (first.accepts(six) and not first.accepts(three)):
        problems.append("L1·M should contain aaaaaa but not aaa")
    if is_open(first):
        problems.append("L1·M should not be open")
    second = _cat(inst["L2"], inst["M"], budget)
    if not equivalent(second, _finite([("a",), ("a",) * 2, ("a",) * 4], UNARY)):
        problems.append("L2·M should be {a, aa, aaaa}")
    if not is_open(second):
        problems.append("L2·M should be open")
    return problems, []


def _clopen(d: Dfa) -> bool:
    return check_property(d, "clopen-positive").holds


def _draw_t4(g, budget):
    a = _alphabet(g)
    left = closure_dfa(_open(g, a, budget), "positive", budget)
    choice = g.below(3)
    rest = complement(left)
    if choice == 0:
        right = minimize(rest)
    elif choice == 1:
        right = _with_eps(rest)
    else:
        right = minimize(union(rest, closure_dfa(_open(g, a, budget), "positive", budget)))
    if g.below(2):
        left, right = right, left
    if not (_clopen(left) and _clopen(right)):
        return None
    return {"L": left, "M": right}


def _check_t4_hyp(inst):
    left, right = inst["L"], inst["M"]
    ok = _clopen(left) and _clopen(right) and equivalent(union(left, right), accept_all(left.alphabet))
    return [] if ok else ["hypothesis: L, M clopen covering Σ*"]


def _check_t4a(inst, budget):
    problems = _check_t4_hyp(inst)
    if problems:
        return problems, []
    return ([] if _clopen(_cat(inst["L"], inst["M"], budget)) else ["LM not clopen"]), []


def _check_t4b(inst, budget):
    problems = _check_t4_hyp(inst)
    if problems:
        return problems, []
    lang = {"L": inst["L"], "M": inst["M"]}
    eps_free = {name for name, d in lang.items() if not d.accepts(())}
    for word, d in _products(lang, 4, budget).items():
        predicted = is_empty(d) or sum(1 for f in word if f in eps_free) <= 1
        if _clopen(d) != predicted:
            problems.append(f"{''.join(word)}: clopen={not predicted}, expected {predicted}")
    return problems, []


MAJORITY_B = Union(Finite({()}), FreqCmp("a", "<", Fraction(1, 2)))
MAJORITY_A = Union(Finite({()}), FreqCmp("a", ">", Fraction(1, 2)))


def majority_product(word) -> bool:
    """Membership in L·M for the two majority languages."""
    word = tuple(word)
    return any(member(MAJORITY_B, word[:i]) and member(MAJORITY_A, word[i:])
               for i in range(len(word) + 1))


def _fixture_t4c(budget):
    return {"max_len": "10"}


def _check_t4c(inst, budget):
    n = int(inst["max_len"])
    problems = []
    for name, e in (("L", MAJORITY_B), ("M", MAJORITY_A)):
        for prop in ("closed", "open"):
            if not oracle_check(e, prop, n, AB).holds:
                problems.append(f"{name} not {prop} up to {n}")
    for prop in ("closed", "open"):
        verdict = oracle_check(majority_product, prop, n, AB)
        if not verdict.holds:
            cert = verdict.certificate
            problems.append(f"LM not {prop} up to {n}: u={format_word(cert.u)} "
                            f"v={format_word(cert.v)}")
    joint = Union(MAJORITY_B, MAJORITY_A)
    if oracle_check(joint, "closed", n, AB).holds:
        problems.append("L ∪ M unexpectedly closed")
    if not (member(MAJORITY_B, ("b",)) and member(MAJORITY_A, ("a",))
            and not member(joint, ("b", "a"))):
        problems.append("ba is not a witness against L ∪ M")
    return problems, []


def _draw_t7(g, budget):
    a = _alphabet(g)
    left = _open(g, a, budget)
    if g.below(2):
        right = _open(g, a, budget)
    else:
        drop = _finite(_base(g, a), a)
        right = interior(difference(complement(left), drop), "positive", budget)
    if is_empty(left) or is_empty(right) or not is_empty(intersect(left, right)):
        return None
    if not (is_open(left) and is_open(right)):
        return None
    return {"L": left, "M": right}


def _check_t7(inst, budget):
    left, right = inst["L"], inst["M"]
    if not (is_open(left) and is_open(right) and is_empty(intersect(left, right))):
        return ["hypothesis: L, M disjoint and open"], []
    lp = closure_dfa(left, "positive", budget)
    mp = closure_dfa(right, "positive", budget)
    return ([] if is_empty(intersect(lp, mp)) else ["L+ and M+ intersect"]), []


def _draw_c2(g, budget):
    a = _alphabet(g)
    left = _closed(g, a, "positive", budget)
    extra = _finite(_base(g, a), a) if g.below(2) else from_words([], a)
    right = closure_dfa(union(complement(left), extra), "positive", budget)
    if g.below(2):
        left, right = right, left
    return {"L": left, "M": right}


def _check_c2(inst, budget):
    left, right = inst["L"], inst["M"]
    everything = accept_all(left.alphabet)
    if not (is_closed(left) and is_closed(right) and equivalent(union(left, right), everything)):
        return ["hypothesis: L, M closed covering Σ*"], []
    problems = []
    li, mi = interior(left, "positive", budget), interior(right, "positive", budget)
    for name, d, inner in (("L", left, li), ("M", right, mi)):
        if not is_open(inner):
            problems.append(f"interior of {name} not open")
        if not subset_of(inner, d):
            problems.append(f"interior of {name} not inside {name}")
    if not equivalent(union(li, mi), everything):
        problems.append("interiors do not cover Σ*")
    return problems, []


def _draw_t12(g, budget):
    kind = _kind(g)
    a = AB
    basis = _base(g, a, max_len=3, max_count=3)
    extra = set(_base(g, a, max_len=3, max_count=3))
    if g.below(4) == 0:
        extra.add(())
    return {"kind": kind, "basis": basis, "M": frozenset(extra)}


def _compact_check(name, d, kind, m_max, budget, problems, warnings):
    if not is_closed(d, kind):
        return
    result = is_compact(d, kind, m_max, budget)
    if not result.found:
        warnings.append(f"{name} closed but no basis up to length {m_max}")
        return
    rebuilt = closure_dfa(from_words(result.basis, d.alphabet), kind, budget)
    if not equivalent(rebuilt, d):
        problems.append(f"{name} basis does not regenerate the language")


def _check_t12(inst, budget):
    kind, basis, extra = inst["kind"], inst["basis"], inst["M"]
    lang = CompactLang(basis, kind, AB).to_dfa(budget)
    finite = _finite(extra, AB)
    longest = max((len(w) for w in basis), default=0)
    longest_m = max((len(w) for w in extra), default=0)
    m_max = longest + longest_m + 2
    problems: list = []
    warnings: list = []
    _compact_check("L ∪ M", minimize(union(lang, finite)), kind, m_max, budget, problems, warnings)
    _compact_check("L \\ M", minimize(difference(lang, finite)), kind, m_max, budget, problems, warnings)
    return problems, warnings


def _draw_t13(g, budget):
    words = set()
    if g.below(2):
        for w in _base(g, AB, max_len=3, max_count=2):
            words.update(w[:i] for i in range(len(w) + 1))
        if g.below(2):
            words.discard(())
    else:
        words = set(_base(g, AB, max_len=3, max_count=4))
    if not is_open(_finite(words, AB)):
        return None
    return {"L": frozenset(words)}


def _check_t13(inst, budget):
    words = inst["L"]
    finite = _finite(words, AB)
    if not is_open(finite):
        return ["hypothesis: L not open"], []
    rest = complement(finite)
    if not is_closed(rest):
        return ["complement of a finite open language is not closed"], []
    m_max = 2 * max((len(w) for w in words), default=0) + 2
    problems: list = []
    warnings: list = []
    _compact_check("complement of L", rest, "positive", m_max, budget, problems, warnings)
    return problems, warnings


SUITES = {
    s.ident: s
    for s in [
        Suite("T1a", "closed L: L^k ⊆ L and L^k closed", _draw_t1a, _check_t1a),
        Suite("T1b", "Kleene-closed L: L^k = L", _draw_t1b, _check_t1b),
        Suite("T1c", "closed L, M with LM = ML: LM closed", _draw_t1c, _check_t1c),
        Suite("T1d", "unary closed L, M: LM closed", _draw_t1d, _check_closed_product),
        Suite("T2a", "closed L, M, L ∪ M: LM closed", _draw_t2, _check_t2a),
        Suite("T2b", "closed L, M, L ∪ M: every product of ≤ 4 factors closed", _draw_t2, _check_t2b),
        Suite("T3a", "open L, M containing ε: LM open", _draw_t3a, _check_t3a),
        Suite("T3b", "open non-empty L, M without ε: LM not open", _draw_t3b, _check_t3b),
        Suite("T3d", "fixtures: LM open or not when only one side has ε", None, _check_t3d, _fixture_t3d),
        Suite("T4a", "clopen L, M covering Σ*: LM clopen", _draw_t4, _check_t4a),
        Suite("T4b", "clopen L, M covering Σ*: which products are clopen", _draw_t4, _check_t4b),
        Suite("T4c", "fixture: majority languages, LM clopen but L ∪ M not closed", None, _check_t4c, _fixture_t4c),
        Suite("T7", "disjoint open L, M: L+ and M+ disjoint", _draw_t7, _check_t7),
        Suite("C2", "closed L, M covering Σ*: interiors cover Σ*", _draw_c2, _check_c2),
        Suite("T12", "compact L, finite M: L ∪ M, L \\ M compact when closed", _draw_t12, _check_t12),
        Suite("T13", "finite open L: complement compact", _draw_t13, _check_t13),
    ]
}


def run_law_suite(suite: str, trials: int = 200, seed: int = 0,
                  bounds: Optional[LawBounds] = None) -> LawReport:
    """Run ``trials`` qualifying trials of a suite (fixtures run once)."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    bounds = bounds or LawBounds()
    suite_def = SUITES[suite]
    if suite_def.fixture is not None:
        report = LawReport(suite, seed, 1)
        _run_trial(suite_def, 0, suite_def.fixture(bounds.budget), bounds, report)
        return report
    report = LawReport(suite, seed, trials)
    for i in range(trials):
        instance = None
        try:
            for attempt in range(bounds.max_attempts):
                report.draws += 1
                instance = suite_def.draw(rng(seed, i, attempt), bounds.budget)
                if instance is not None:
                    break
        except BudgetExceeded:
            report.skipped += 1
            continue
        if instance is None:
            report.warnings.append(f"trial {i}: no qualifying draw in {bounds.max_attempts} attempts")
            continue
        _run_trial(suite_def, i, instance, bounds, report)
    log.info("%s", report.summary())
    return report


def _run_trial(suite_def, i, instance, bounds, report):
    try:
        problems, warnings = suite_def.check(instance, bounds.budget)
    except BudgetExceeded:
        report.skipped += 1
        return
    report.qualifying += 1
    report.warnings += [f"trial {i}: {w}" for w in warnings]
    if problems:
        report.violations.append(Violation(suite_def.ident, i, instance, problems))
