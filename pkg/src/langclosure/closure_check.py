"""Deciding whether a regular language is closed, open or clopen.

The counterexample automaton of an n-state DFA has the n original ("flat")
states plus n² pair states.  Reading u in the flat part, an ε-move from a
final flat state p enters the pair [p, q0]; a pair [p, q] then tracks the DFA
from the end of u (first component) and from scratch (second component) while
reading v.  Pairs [p, q] with p ∉ F and q ∈ F accept.  It accepts exactly the
words uv with u, v ∈ L and uv ∉ L, so L is positive-closed iff it is empty.

States are encoded as integers: flat p is ``p``, pair [p, q] is
``n + p*n + q``.  The ε-move from flat to pair is the only way into the pair
half, so a path crosses it exactly once and the u/v boundary can be read off
the state kind.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional

from .automata import (
    DEFAULT_BUDGET,
    EPS,
    Dfa,
    Nfa,
    Word,
    closure,
    complement,
    determinize,
    minimize,
)
from .errors import BudgetExceeded

PROPERTIES = (
    "positive-closed",
    "kleene-closed",
    "positive-open",
    "kleene-open",
    "clopen-positive",
    "clopen-kleene",
)
_ALIASES = {
    "pos-closed": "positive-closed",
    "kl-closed": "kleene-closed",
    "pos-open": "positive-open",
    "kl-open": "kleene-open",
    "clopen": "clopen-positive",
    "pos-clopen": "clopen-positive",
    "kl-clopen": "clopen-kleene",
}
EPSILON_MISSING = "epsilon-missing"
EPSILON_PRESENT = "epsilon-present"


@dataclass(frozen=True)
class Counterexample:
    """u, v in the language with uv outside it."""

    u: Word
    v: Word

    @property
    def uv(self) -> Word:
        return self.u + self.v

    def verify(self, fa) -> bool:
        return fa.accepts(self.u) and fa.accepts(self.v) and not fa.accepts(self.uv)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check.

    ``complemented`` marks a certificate that refers to the complement of the
    analysed language (failed openness).  ``reason`` is set when the failure
    has no (u, v) witness, e.g. ``"epsilon-missing"`` for a Kleene check.
    """

    holds: bool
    certificate: Optional[object] = None
    reason: Optional[str] = None
    complemented: bool = False
    bounded: Optional[int] = None

    def __post_init__(self):
        if self.holds and self.certificate is not None:
            raise ValueError("a holding verdict carries no certificate")

    def __bool__(self):
        return self.holds


def normalize_property(prop: str) -> str:
    prop = _ALIASES.get(prop, prop)
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    return prop


def build_counterexample_nfa(d: Dfa) -> Nfa:
    """Materialize the counterexample automaton of ``d`` (n + n² states).

    Flat states keep ``d``'s names; pair states are named ``[p,q]``.  State
    ids below ``d.n`` are flat, the rest are pairs.
    """
    n = d.n
    syms = d.alphabet.symbols
    moves = []
    for p in range(n):
        m = {sym: {d.delta[p][i]} for i, sym in enumerate(syms)}
        if p in d.finals:
            m[EPS] = {n + p * n + d.initial}
        moves.append(m)
    for p in range(n):
        for q in range(n):
            moves.append(
                {sym: {n + d.delta[p][i] * n + d.delta[q][i]} for i, sym in enumerate(syms)}
            )
    finals = {n + p * n + q for p in range(n) if p not in d.finals for q in d.finals}
    flat = [d.state_name(p) for p in range(n)]
    names = tuple(flat) + tuple(f"[{a},{b}]" for a in flat for b in flat)
    return Nfa(d.alphabet, n + n * n, {d.initial}, finals, moves, names)


def is_pair_state(d: Dfa, state: int) -> bool:
    return state >= d.n


def _search(d: Dfa):
    """Ordered BFS over the implicit counterexample automaton.

    Returns ``(state, parent, symbol)`` for the first accepting state reached
    (its path spells the lexicographically least shortest counterexample
    word), or None when the automaton's language is empty.  ``symbol[s]`` is
    the symbol index used to enter s, or -1 for the ε-move.
    """
    n, k = d.n, len(d.alphabet)
    delta, finals, q0 = d.delta, d.finals, d.initial
    final_flags = bytes(int(s in finals) for s in range(n))
    parent = array("l", [-2]) * (n + n * n)
    symbol = array("b", [0]) * (n + n * n)

    def eps(p):
        # flat p is final: append [p, q0] if unseen
        t = n + p * n + q0
        if parent[t] == -2:
            parent[t] = p
            symbol[t] = -1
            return t
        return -1

    # the frontier is a list of groups; states in a group share one word (a
    # flat state and its ε-successor), and groups are in strict lex order, so
    # each group is expanded symbol by symbol to keep the next level ordered
    parent[d.initial] = -1
    group = [d.initial]
    if final_flags[d.initial]:
        t = eps(d.initial)
        if t >= 0:
            group.append(t)
    frontier = [group]
    rng = range(k)
    while frontier:
        for group in frontier:
            for s in group:
                if s >= n:
                    p, q = divmod(s - n, n)
                    if not final_flags[p] and final_flags[q]:
                        return s, parent, symbol
        nxt = []
        for group in frontier:
            for i in rng:
                out = []
                for s in group:
                    if s < n:
                        t = delta[s][i]
                        if parent[t] == -2:
                            parent[t] = s
                            symbol[t] = i
                            out.append(t)
                            if final_flags[t]:
                                e = eps(t)
                                if e >= 0:
                                    out.append(e)
                    else:
                        p, q = divmod(s - n, n)
                        t = n + delta[p][i] * n + delta[q][i]
                        if parent[t] == -2:
                            parent[t] = s
                            symbol[t] = i
                            out.append(t)
                if out:
                    nxt.append(out)
        frontier = nxt
    return None


def _path(d: Dfa, found) -> tuple[Word, int]:
    """Word spelled by the BFS path and the position of its ε-crossing."""
    s, parent, symbol = found
    syms = d.alphabet.symbols
    out = []
    boundary_from_end = None
    while parent[s] != -1:
        if symbol[s] == -1:
            boundary_from_end = len(out)
        else:
            out.append(syms[symbol[s]])
        s = parent[s]
    word = tuple(reversed(out))
    return word, len(word) - boundary_from_end


def _least_split(d: Dfa, word: Word, fallback: int) -> int:
    """Smallest i with word[:i] and word[i:] both accepted.

    Walks the flat half once; at every final flat state it follows the pair
    half from [p, q0] over the remaining suffix.
    """
    index = d.alphabet.index
    letters = [index[s] for s in word]
    p = d.initial
    for i in range(1, fallback):
        p = d.delta[p][letters[i - 1]]
        if p not in d.finals:
            continue
        q = d.initial
        for c in letters[i:]:
            q = d.delta[q][c]
        if q in d.finals:
            return i
    return fallback


def shortest_counterexample(d: Dfa) -> Optional[Counterexample]:
    """Counterexample (u, v) with |uv| minimal, uv lexicographically least among
    those, then |u| minimal.  None iff L(d) is positive-closed.

    For an n-state DFA the word has length at most n² + n − 1.
    """
    found = _search(d)
    if found is None:
        return None
    word, boundary = _path(d, found)
    i = _least_split(d, word, boundary)
    return Counterexample(word[:i], word[i:])


def check_property(d: Dfa, prop: str = "positive-closed") -> Verdict:
    """Decide a closure property of L(d) in time quadratic in the state count.

    Failed closedness carries a shortest counterexample; failed openness
    carries one for the complement (``complemented=True``).  A Kleene check
    that fails only on ε carries no certificate and a ``reason`` flag.
    """
    prop = normalize_property(prop)
    if prop.startswith("clopen"):
        kind = prop.split("-")[1]
        closed = check_property(d, f"{kind}-closed")
        if not closed.holds:
            return closed
        return check_property(d, f"{kind}-open")
    kind, what = prop.split("-")
    if what == "open":
        v = check_property(complement(d), f"{kind}-closed")
        if v.holds:
            return v
        reason = EPSILON_PRESENT if v.reason == EPSILON_MISSING else v.reason
        return Verdict(False, v.certificate, reason, complemented=True)
    cx = shortest_counterexample(d)
    if cx is not None:
        return Verdict(False, cx)
    if kind == "kleene" and d.initial not in d.finals:
        return Verdict(False, reason=EPSILON_MISSING)
    return Verdict(True)


def is_closed(d: Dfa, kind: str = "positive") -> bool:
    return check_property(d, f"{kind}-closed").holds


def is_open(d: Dfa, kind: str = "positive") -> bool:
    return check_property(d, f"{kind}-open").holds


def interior(d: Dfa, kind: str = "positive", budget: int = DEFAULT_BUDGET) -> Dfa:
    """Complement of the closure of the complement, as a minimal DFA."""
    closed = determinize(closure(complement(d), kind), budget)
    return minimize(complement(closed))


def check_nfa_closed(a, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Positive-closedness of L(a) for an NFA without building the DFA.

    Breadth-first over configurations: a state set S reached by u, then, once
    S meets F, pairs (T, U) with T the states reached by v from the initial
    states and U those reached by uv.  A pair with T ∩ F ≠ ∅ and U ∩ F = ∅
    witnesses u, v ∈ L and uv ∉ L.  The visited set replaces the length
    counter of the nondeterministic algorithm; with N ≤ 2ⁿ subsets any
    shortest witness has |uv| ≤ 2²ⁿ + 2ⁿ − 1.
    """
    a = a.as_nfa()
    finals = a.finals
    start = a.closure(a.initials)
    parent: dict = {("S", start): None}
    if len(parent) > budget:
        raise BudgetExceeded("configuration search", budget)
    frontier = [("S", start)]

    def add(conf, how, out):
        if conf in parent:
            return
        if len(parent) >= budget:
            raise BudgetExceeded("configuration search", budget)
        parent[conf] = how
        out.append(conf)

    def split(conf, out):
        out.append(conf)
        if conf[0] == "S" and conf[1] & finals:
            add(("P", start, conf[1]), (conf, EPS), out)

    initial = []
    split(frontier[0], initial)
    frontier = initial
    while frontier:
        for conf in frontier:
            if conf[0] == "P" and conf[1] & finals and not conf[2] & finals:
                return Verdict(False, _nfa_certificate(parent, conf))
        nxt: list = []
        for conf in frontier:
            for sym in a.alphabet.symbols:
                if conf[0] == "S":
                    new = ("S", a.post(conf[1], sym))
                else:
                    new = ("P", a.post(conf[1], sym), a.post(conf[2], sym))
                if new not in parent:
                    add(new, (conf, sym), nxt)
                    if new[0] == "S" and new[1] & finals:
                        add(("P", start, new[1]), (new, EPS), nxt)
        frontier = nxt
    return Verdict(True)


def _nfa_certificate(parent, conf) -> Counterexample:
    u, v = [], []
    target = v
    while parent[conf] is not None:
        conf, sym = parent[conf]
        if sym is EPS:
            target = u
        else:
            target.append(sym)
    return Counterexample(tuple(reversed(u)), tuple(reversed(v)))
