"""Witness automata and seeded random instances.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014), implemented
here so that instances are reproducible from a seed on any platform:

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z      = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output = z ^ (z >> 31)

Integers in [0, m) are drawn by rejection: outputs at or above the largest
multiple of m below 2**64 are discarded, the rest are reduced mod m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automata import EPS, Alphabet, Dfa, Nfa, Word, complement
from .errors import EmptyWordError

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        if m < 1:
            raise ValueError("range must be non-empty")
        limit = (1 << 64) - (1 << 64) % m
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p) -> bool:
        p = Fraction(p)
        return self.below(p.denominator) < p.numerator

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def derive_seed(seed: int, *path: int) -> int:
    """Child seed for ``path`` (e.g. trial index, attempt) under ``seed``."""
    value = seed & _MASK
    for p in path:
        value = SplitMix64(value ^ ((p * _GOLDEN) & _MASK)).next()
    return value


def rng(seed: int, *path: int) -> SplitMix64:
    return SplitMix64(derive_seed(seed, *path))


# --- witness family -----------------------------------------------------------

@dataclass(frozen=True)
class WitnessSpec:
    n: int
    which: str = "M"  # "M" or "M'"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("witness family needs n >= 2")
        if self.which not in ("M", "M'"):
            raise ValueError(f"unknown witness variant {self.which!r}")


def witness_automaton(spec: WitnessSpec) -> Dfa:
    """The 2n+5 state DFA M'_n over {0, 1}, or its complement M_n.

    M_n's shortest counterexample to closedness has length n² + 2n + 2.
    """
    n = spec.n
    names = (
        [f"q{i}" for i in range(n + 1)] + ["r"] + [f"p{i}" for i in range(n + 1)] + ["s", "d"]
    )
    ids = {name: i for i, name in enumerate(names)}
    q = lambda i: ids[f"q{i}"]  # noqa: E731
    p = lambda i: ids[f"p{i}"]  # noqa: E731
    r, s, d = ids["r"], ids["s"], ids["d"]
    delta = [None] * len(names)
    delta[q(0)] = (d, q(1))
    for i in range(1, n):
        delta[q(i)] = (q(i + 1), s)
    delta[q(n)] = (q(1), r)
    delta[r] = (d, p(0))
    for i in range(n):
        delta[p(i)] = (p(i + 1), d)
    delta[p(n)] = (p(0), s)
    delta[s] = (d, d)
    delta[d] = (d, d)
    finals = {q(i) for i in range(n + 1)} | {p(i) for i in range(n + 1)} | {s}
    mprime = Dfa(Alphabet(("0", "1")), delta, q(0), finals, tuple(names))
    return mprime if spec.which == "M'" else complement(mprime)


# --- random instances -----------------------------------------------------------

def random_dfa(states: int, alphabet, accept_prob=Fraction(1, 2), seed: int = 0) -> Dfa:
    """Uniformly random total DFA; each state is final with probability ``accept_prob``.

    Draw order: the transition table row by row (symbols in alphabet order),
    then one finality draw per state.  State 0 is initial.
    """
    if states < 1:
        raise ValueError("need at least one state")
    alphabet = Alphabet.of(alphabet)
    g = SplitMix64(seed)
    delta = [[g.below(states) for _ in alphabet] for _ in range(states)]
    finals = {s for s in range(states) if g.chance(accept_prob)}
    return Dfa(alphabet, delta, 0, finals)


def random_nfa(states: int, alphabet, edge_prob=Fraction(1, 3), eps_prob=Fraction(1, 8),
               accept_prob=Fraction(1, 2), seed: int = 0) -> Nfa:
    """Random NFA with ε-moves; every (state, symbol-or-ε, state) edge is an independent draw.

    Draw order: for each state, each symbol in alphabet order then ε, each
    target state; then one finality draw per state.  State 0 is the only initial.
    """
    if states < 1:
        raise ValueError("need at least one state")
    alphabet = Alphabet.of(alphabet)
    g = SplitMix64(seed)
    moves = []
    for _ in range(states):
        row = {}
        for sym in alphabet.symbols + (EPS,):
            p = eps_prob if sym is EPS else edge_prob
            targets = frozenset(t for t in range(states) if g.chance(p))
            if targets:
                row[sym] = targets
        moves.append(row)
    finals = {s for s in range(states) if g.chance(accept_prob)}
    return Nfa(alphabet, states, {0}, finals, moves)


def random_finite_language(max_len: int, count: int, alphabet, seed: int = 0) -> frozenset:
    """``count`` distinct non-empty words of length at most ``max_len``."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    available = sum(k**i for i in range(1, max_len + 1))
    if count > available:
        raise ValueError(f"only {available} words of length 1..{max_len} exist")
    g = SplitMix64(seed)
    chosen: set = set()
    while len(chosen) < count:
        # uniform over all candidate words, by index in shortlex order
        idx = g.below(available)
        length = 1
        while idx >= k**length:
            idx -= k**length
            length += 1
        word = []
        for _ in range(length):
            idx, digit = divmod(idx, k)
            word.append(alphabet.symbols[digit])
        chosen.add(tuple(reversed(word)))
    return frozenset(chosen)


def prefix_language(word: Word) -> frozenset:
    """All prefixes of ``word``, ε included."""
    if not word:
        raise EmptyWordError("prefix language of the empty word is not defined here")
    word = tuple(word)
    return frozenset(word[:i] for i in range(len(word) + 1))
