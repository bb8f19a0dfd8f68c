"""Finite automata over token alphabets and the regular operations built on them.

Words are tuples of symbol tokens.  A token is any non-empty string without
whitespace, parentheses or ``#``; a ``.`` may only appear inside angle
brackets, so block tokens such as ``<a.b>`` (a word of the outer alphabet
packed into a single symbol) can be written in dotted word syntax.

All automata are immutable.  DFAs are total: every (state, symbol) pair has a
successor.  In NFAs the ε label is ``None``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from .errors import AlphabetMismatch, BudgetExceeded, ParseError, SymbolError

Word = tuple  # tuple[str, ...]
EPS = None
EPS_TOKEN = "eps"
DEFAULT_BUDGET = 2**20

_FORBIDDEN = set("()#")


def split_dotted(text: str) -> list[str]:
    """Split ``text`` at the dots that are not nested inside ``<...>``."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
            if depth < 0:
                raise SymbolError(f"unbalanced '>' in {text!r}")
        elif ch == "." and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise SymbolError(f"unbalanced '<' in {text!r}")
    parts.append(text[start:])
    return parts


def check_token(token: str) -> str:
    if not isinstance(token, str) or not token:
        raise SymbolError(f"invalid symbol token {token!r}")
    if token == EPS_TOKEN:
        raise SymbolError("'eps' is reserved for the empty word")
    if any(ch.isspace() or ch in _FORBIDDEN for ch in token):
        raise SymbolError(f"invalid symbol token {token!r}")
    if len(split_dotted(token)) != 1:
        raise SymbolError(f"symbol token {token!r} has a top-level '.'")
    return token


def parse_word(text: str) -> Word:
    """Parse dotted word syntax: ``a.b.a``; ``eps`` (or the empty string) is ε."""
    text = text.strip()
    if text in ("", EPS_TOKEN):
        return ()
    return tuple(check_token(t) for t in split_dotted(text))


def format_word(word: Sequence[str]) -> str:
    return ".".join(word) if word else EPS_TOKEN


def block_token(chunk: Sequence[str]) -> str:
    """Name of the block symbol standing for the word ``chunk``."""
    return "<" + ".".join(chunk) + ">"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of symbol tokens; the order fixes every lexicographic tie-break."""

    symbols: tuple

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        for s in syms:
            check_token(s)
        if len(set(syms)) != len(syms):
            raise SymbolError(f"duplicate symbols in alphabet {syms}")

    @classmethod
    def of(cls, symbols: Union[str, Iterable[str], "Alphabet"]) -> "Alphabet":
        """Build from an Alphabet, a whitespace-separated string, or an iterable."""
        if isinstance(symbols, Alphabet):
            return symbols
        if isinstance(symbols, str):
            symbols = symbols.split()
        return cls(tuple(symbols))

    @classmethod
    def infer(cls, *words: Sequence[str]) -> "Alphabet":
        """Alphabet of the given words, in order of first appearance."""
        seen = dict.fromkeys(s for w in words for s in w)
        return cls(tuple(seen))

    @cached_property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol):
        return symbol in self.index

    def __str__(self):
        return " ".join(self.symbols)

    def check(self, word: Sequence[str]) -> Word:
        word = tuple(word)
        for s in word:
            if s not in self.index:
                raise SymbolError(f"symbol {s!r} not in alphabet {{{', '.join(self.symbols)}}}")
        return word

    def key(self, word: Sequence[str]) -> tuple:
        """Sort key: shortlex (length first, then alphabet order)."""
        return (len(word), tuple(self.index[s] for s in word))

    def lex_key(self, word: Sequence[str]) -> tuple:
        """Sort key: plain lexicographic order (prefixes first)."""
        return tuple(self.index[s] for s in word)

    def words(self, length: int) -> Iterator[Word]:
        """All words of exactly ``length`` symbols, in lexicographic order."""
        return itertools.product(self.symbols, repeat=length)

    def words_upto(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        for n in range(min_len, max_len + 1):
            yield from self.words(n)


def _check_same_alphabet(a, b):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {{{a.alphabet}}} vs {{{b.alphabet}}}")


@dataclass(frozen=True)
class Dfa:
    """Total DFA.  ``delta[state][i]`` is the successor on ``alphabet.symbols[i]``."""

    alphabet: Alphabet
    delta: tuple
    initial: int
    finals: frozenset
    names: tuple = field(default=None, compare=False)

    def __post_init__(self):
        delta = tuple(tuple(row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", frozenset(self.finals))
        n, k = len(delta), len(self.alphabet)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        for row in delta:
            if len(row) != k:
                raise ValueError("transition table is not total")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition to invalid state {t}")
        if not 0 <= self.initial < n:
            raise ValueError(f"invalid initial state {self.initial}")
        if any(not 0 <= f < n for f in self.finals):
            raise ValueError("invalid final state")
        if self.names is not None and len(self.names) != n:
            raise ValueError("names must label every state")

    @property
    def n(self) -> int:
        return len(self.delta)

    def step(self, state: int, word: Sequence[str]) -> int:
        index = self.alphabet.index
        for s in word:
            state = self.delta[state][index[s]]
        return state

    def accepts(self, word: Sequence[str]) -> bool:
        return self.step(self.initial, self.alphabet.check(word)) in self.finals

    def state_name(self, state: int) -> str:
        return self.names[state] if self.names else f"s{state}"

    def as_nfa(self) -> "Nfa":
        moves = tuple(
            {sym: frozenset((row[i],)) for i, sym in enumerate(self.alphabet.symbols)}
            for row in self.delta
        )
        return Nfa(self.alphabet, self.n, frozenset((self.initial,)), self.finals, moves, self.names)


@dataclass(frozen=True, eq=False)
class Nfa:
    """NFA with ε-moves.  ``moves[state]`` maps a symbol (or ``None`` for ε) to a set of states."""

    alphabet: Alphabet
    n: int
    initials: frozenset
    finals: frozenset
    moves: tuple
    names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        moves = tuple(
            {sym: frozenset(ts) for sym, ts in m.items() if ts} for m in self.moves
        )
        object.__setattr__(self, "moves", moves)
        if len(moves) != self.n:
            raise ValueError("moves must list every state")
        for m in moves:
            for sym, targets in m.items():
                if sym is not EPS and sym not in self.alphabet:
                    raise SymbolError(f"move on unknown symbol {sym!r}")
                if any(not 0 <= t < self.n for t in targets):
                    raise ValueError("move to invalid state")
        if any(not 0 <= s < self.n for s in self.initials | self.finals):
            raise ValueError("invalid initial or final state")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names must label every state")

    def closure(self, states: Iterable[int]) -> frozenset:
        """ε-closure of a set of states."""
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.moves[s].get(EPS, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def post(self, states: Iterable[int], symbol: str) -> frozenset:
        out = set()
        for s in states:
            out.update(self.moves[s].get(symbol, ()))
        return self.closure(out)

    def accepts(self, word: Sequence[str]) -> bool:
        current = self.closure(self.initials)
        for s in self.alphabet.check(word):
            current = self.post(current, s)
            if not current:
                return False
        return bool(current & self.finals)

    def state_name(self, state: int) -> str:
        return self.names[state] if self.names else f"s{state}"

    def as_nfa(self) -> "Nfa":
        return self


Automaton = Union[Dfa, Nfa]


# --- constructors -----------------------------------------------------------

def accept_all(alphabet) -> Dfa:
    alphabet = Alphabet.of(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, {0})


def empty_language(alphabet) -> Dfa:
    alphabet = Alphabet.of(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, set())


def from_words(words: Iterable[Sequence[str]], alphabet) -> Dfa:
    """DFA (a trie plus sink) accepting exactly the finite set ``words``."""
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    rows: list[list[int]] = [[-1] * k]
    finals = set()
    for w in words:
        state = 0
        for s in alphabet.check(w):
            i = alphabet.index[s]
            if rows[state][i] < 0:
                rows.append([-1] * k)
                rows[state][i] = len(rows) - 1
            state = rows[state][i]
        finals.add(state)
    sink = len(rows)
    rows.append([sink] * k)
    delta = [[sink if t < 0 else t for t in row] for row in rows]
    return Dfa(alphabet, delta, 0, finals)


def letters_plus(letters: Iterable[str], alphabet) -> Dfa:
    """DFA for Γ⁺, the non-empty words using only the letters in Γ."""
    alphabet = Alphabet.of(alphabet)
    letters = set(letters)
    delta = [
        [1 if s in letters else 2 for s in alphabet],
        [1 if s in letters else 2 for s in alphabet],
        [2] * len(alphabet),
    ]
    return Dfa(alphabet, delta, 0, {1})


def to_nfa(fa: Automaton) -> Nfa:
    return fa.as_nfa()


def to_dfa(fa: Automaton, budget: int = DEFAULT_BUDGET) -> Dfa:
    return fa if isinstance(fa, Dfa) else determinize(fa, budget)


# --- core operations ---------------------------------------------------------

def run(fa: Automaton, word: Sequence[str]) -> bool:
    """Membership test; raises SymbolError for symbols outside the alphabet."""
    return fa.accepts(word)


_OPS = {
    "and": lambda x, y: x and y,
    "or": lambda x, y: x or y,
    "diff": lambda x, y: x and not y,
    "xor": lambda x, y: x != y,
}


def boolean_combine(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Product construction over the reachable pairs; ``op`` in and/or/diff/xor."""
    _check_same_alphabet(d1, d2)
    accept = _OPS[op]
    k = len(d1.alphabet)
    start = (d1.initial, d2.initial)
    ids = {start: 0}
    order = [start]
    delta = []
    for p, q in order:
        row = []
        for i in range(k):
            nxt = (d1.delta[p][i], d2.delta[q][i])
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
            row.append(ids[nxt])
        delta.append(row)
    finals = {ids[pq] for pq in order if accept(pq[0] in d1.finals, pq[1] in d2.finals)}
    return Dfa(d1.alphabet, delta, 0, finals)


def intersect(d1: Dfa, d2: Dfa) -> Dfa:
    return boolean_combine(d1, d2, "and")


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return boolean_combine(d1, d2, "or")


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return boolean_combine(d1, d2, "diff")


def complement(d: Dfa) -> Dfa:
    return Dfa(d.alphabet, d.delta, d.initial, frozenset(range(d.n)) - d.finals, d.names)


def _shifted(moves, offset):
    return [{sym: {t + offset for t in ts} for sym, ts in m.items()} for m in moves]


def concatenate(a1: Automaton, a2: Automaton) -> Nfa:
    """NFA for L(a1)·L(a2): ε-moves from the finals of a1 to the initials of a2."""
    _check_same_alphabet(a1, a2)
    a1, a2 = a1.as_nfa(), a2.as_nfa()
    moves = _shifted(a1.moves, 0) + _shifted(a2.moves, a1.n)
    for f in a1.finals:
        moves[f].setdefault(EPS, set()).update(s + a1.n for s in a2.initials)
    finals = {f + a1.n for f in a2.finals}
    return Nfa(a1.alphabet, a1.n + a2.n, a1.initials, finals, moves)


def nfa_union(a1: Automaton, a2: Automaton) -> Nfa:
    _check_same_alphabet(a1, a2)
    a1, a2 = a1.as_nfa(), a2.as_nfa()
    moves = _shifted(a1.moves, 0) + _shifted(a2.moves, a1.n)
    return Nfa(
        a1.alphabet,
        a1.n + a2.n,
        a1.initials | {s + a1.n for s in a2.initials},
        a1.finals | {f + a1.n for f in a2.finals},
        moves,
    )


def closure(a: Automaton, kind: str = "positive") -> Nfa:
    """NFA for L(a)⁺ (``kind="positive"``) or L(a)* (``kind="kleene"``)."""
    if kind not in ("positive", "kleene"):
        raise ValueError(f"unknown closure kind {kind!r}")
    a = a.as_nfa()
    moves = _shifted(a.moves, 0)
    for f in a.finals:
        moves[f].setdefault(EPS, set()).update(a.initials)
    if kind == "positive":
        return Nfa(a.alphabet, a.n, a.initials, a.finals, moves)
    fresh = a.n
    moves.append({EPS: set(a.initials)})
    return Nfa(a.alphabet, a.n + 1, {fresh}, a.finals | {fresh}, moves)


def determinize(a: Automaton, budget: int = DEFAULT_BUDGET) -> Dfa:
    """Subset construction over ε-closures, completed with an empty-set sink.

    Raises BudgetExceeded when more than ``budget`` subsets are reachable.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if isinstance(a, Dfa):
        return a
    start = a.closure(a.initials)
    ids = {start: 0}
    order = [start]
    delta = []
    for subset in order:
        row = []
        for sym in a.alphabet.symbols:
            nxt = a.post(subset, sym)
            if nxt not in ids:
                if len(order) >= budget:
                    raise BudgetExceeded("subset construction", budget)
                ids[nxt] = len(order)
                order.append(nxt)
            row.append(ids[nxt])
        delta.append(row)
    finals = {i for i, subset in enumerate(order) if subset & a.finals}
    return Dfa(a.alphabet, delta, 0, finals)


def shortest_accepted(fa: Automaton):
    """Shortest accepted word, ties broken lexicographically; ``None`` if L(fa) is empty.

    Breadth-first search over single states with an ordered frontier: the
    frontier at depth k is sorted by the lexicographically least word of
    length k reaching each state, so the first accepting state found carries
    the answer.  ε-moves cost nothing.
    """
    a = fa.as_nfa()
    parent: dict = {}
    frontier = []
    for s in sorted(a.initials):
        if s not in parent:
            parent[s] = None
            frontier.append(s)
    frontier = _eps_expand(a, frontier, parent)
    while frontier:
        for s in frontier:
            if s in a.finals:
                return _trace(parent, s)
        nxt = []
        for s in frontier:
            for sym in a.alphabet.symbols:
                for t in sorted(a.moves[s].get(sym, ())):
                    if t not in parent:
                        parent[t] = (s, sym)
                        nxt.append(t)
                        nxt.extend(_eps_expand(a, [t], parent)[1:])
        frontier = nxt
    return None


def _eps_expand(a: Nfa, states, parent):
    out = []
    for s in states:
        out.append(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for t in sorted(a.moves[x].get(EPS, ())):
                if t not in parent:
                    parent[t] = (x, EPS)
                    out.append(t)
                    stack.append(t)
    return out


def _trace(parent, s) -> Word:
    out = []
    while parent[s] is not None:
        s, sym = parent[s]
        if sym is not EPS:
            out.append(sym)
    return tuple(reversed(out))


def is_empty(fa: Automaton) -> bool:
    if isinstance(fa, Dfa):
        return not (_reachable(fa) & fa.finals)
    return shortest_accepted(fa) is None


def _reachable(d: Dfa) -> set:
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        s = stack.pop()
        for t in d.delta[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    _check_same_alphabet(d1, d2)
    return is_empty(boolean_combine(d1, d2, "xor"))


def subset_of(d1: Dfa, d2: Dfa) -> bool:
    """L(d1) ⊆ L(d2)."""
    return is_empty(difference(d1, d2))


def minimize(d: Dfa) -> Dfa:
    """Minimal equivalent DFA, states numbered in BFS order from the initial state.

    Moore-style partition refinement on the reachable part.
    """
    k = len(d.alphabet)
    reach = sorted(_reachable(d))
    block = {s: int(s in d.finals) for s in reach}
    count = len(set(block.values()))
    while True:
        sigs: dict = {}
        new = {}
        for s in reach:
            sig = (block[s],) + tuple(block[d.delta[s][i]] for i in range(k))
            new[s] = sigs.setdefault(sig, len(sigs))
        block = new
        if len(sigs) == count:
            break
        count = len(sigs)
    # canonical renumbering by BFS over blocks, symbols in alphabet order
    rep = {}
    for s in reach:
        rep.setdefault(block[s], s)
    ids = {block[d.initial]: 0}
    queue = deque([block[d.initial]])
    delta = []
    while queue:
        b = queue.popleft()
        row = []
        for i in range(k):
            t = block[d.delta[rep[b]][i]]
            if t not in ids:
                ids[t] = len(ids)
                queue.append(t)
            row.append(ids[t])
        delta.append(row)
    finals = {ids[block[s]] for s in reach if s in d.finals}
    return Dfa(d.alphabet, delta, 0, finals)


def power(a: Automaton, k: int) -> Nfa:
    """NFA for L(a)^k, k ≥ 1."""
    if k < 1:
        raise ValueError("power needs k >= 1")
    out = a.as_nfa()
    for _ in range(k - 1):
        out = concatenate(out, a)
    return out


def concat_dfa(d1: Automaton, d2: Automaton, budget: int = DEFAULT_BUDGET) -> Dfa:
    """Minimal DFA for the concatenation."""
    return minimize(determinize(concatenate(d1, d2), budget))


def closure_dfa(a: Automaton, kind: str = "positive", budget: int = DEFAULT_BUDGET) -> Dfa:
    return minimize(determinize(closure(a, kind), budget))


# --- .aut text format --------------------------------------------------------

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_automaton(text: str) -> Automaton:
    """Parse ``.aut`` text.  Returns a Dfa when the table is deterministic
    (one initial state, no ε lines, no duplicate (state, symbol) pairs) and an
    Nfa otherwise.  Partial deterministic tables are completed with a sink.
    """
    header: dict = {}
    moves: list[tuple[int, str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in ("alphabet", "states", "initial", "finals"):
            key = key.strip()
            if key in header:
                raise ParseError(f"duplicate '{key}:' line", line=lineno)
            header[key] = rest.split()
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'src symbol dst', got {line!r}", line=lineno)
        moves.append((lineno, *parts))
    for key in ("alphabet", "states", "initial", "finals"):
        if key not in header:
            raise ParseError(f"missing '{key}:' line")
    try:
        alphabet = Alphabet(tuple(header["alphabet"]))
    except SymbolError as exc:
        raise ParseError(str(exc)) from None
    names = list(header["states"])
    if len(set(names)) != len(names):
        raise ParseError("duplicate state names")
    ids = {name: i for i, name in enumerate(names)}

    def state(name, lineno=None):
        if name not in ids:
            raise ParseError(f"unknown state {name!r}", line=lineno)
        return ids[name]

    initials = [state(s) for s in header["initial"]]
    finals = {state(s) for s in header["finals"]}
    if not initials:
        raise ParseError("no initial state")
    table: dict = {}
    deterministic = len(initials) == 1
    for lineno, src, sym, dst in moves:
        if sym != EPS_TOKEN and sym not in alphabet:
            raise ParseError(f"symbol {sym!r} not in alphabet", line=lineno)
        label = EPS if sym == EPS_TOKEN else sym
        targets = table.setdefault((state(src, lineno), label), [])
        targets.append(state(dst, lineno))
        if label is EPS or len(targets) > 1:
            deterministic = False
    if not deterministic:
        nfa_moves = [dict() for _ in names]
        for (s, label), targets in table.items():
            nfa_moves[s][label] = set(targets)
        return Nfa(alphabet, len(names), initials, finals, nfa_moves, tuple(names))
    sink = None
    delta = []
    for s in range(len(names)):
        row = []
        for sym in alphabet.symbols:
            targets = table.get((s, sym))
            if targets is None:
                if sink is None:
                    sink = len(names)
                row.append(sink)
            else:
                row.append(targets[0])
        delta.append(row)
    if sink is not None:
        delta.append([sink] * len(alphabet))
        sink_name = "sink"
        while sink_name in ids:
            sink_name = "_" + sink_name
        names.append(sink_name)
    return Dfa(alphabet, delta, initials[0], finals, tuple(names))


def parse_dfa(text: str) -> Dfa:
    fa = parse_automaton(text)
    if not isinstance(fa, Dfa):
        raise ParseError("automaton is nondeterministic or has ε-moves")
    return fa


def parse_nfa(text: str) -> Nfa:
    return parse_automaton(text).as_nfa()


def load_automaton(path) -> Automaton:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def dump_automaton(fa: Automaton) -> str:
    """Serialize to ``.aut`` text.  DFAs list every transition of the total table."""
    name = fa.state_name
    lines = [f"alphabet: {fa.alphabet}"]
    lines.append("states: " + " ".join(name(s) for s in range(fa.n)))
    if isinstance(fa, Dfa):
        lines.append(f"initial: {name(fa.initial)}")
    else:
        lines.append("initial: " + " ".join(name(s) for s in sorted(fa.initials)))
    lines.append(("finals: " + " ".join(name(s) for s in sorted(fa.finals))).rstrip())
    if isinstance(fa, Dfa):
        for s, row in enumerate(fa.delta):
            for sym, t in zip(fa.alphabet.symbols, row):
                lines.append(f"{name(s)} {sym} {name(t)}")
    else:
        labels = [EPS] + list(fa.alphabet.symbols)
        for s in range(fa.n):
            for label in labels:
                for t in sorted(fa.moves[s].get(label, ())):
                    lines.append(f"{name(s)} {EPS_TOKEN if label is EPS else label} {name(t)}")
    return "\n".join(lines) + "\n"
