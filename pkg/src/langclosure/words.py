"""Commutation, primitive roots and connected components of words.

Two non-empty words cannot be told apart by any clopen language exactly when
they commute, i.e. when they are powers of one primitive word; the connected
components of Σ⁺ are therefore the sets {x, x², x³, ...} for primitive x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .automata import Alphabet, Word, format_word, parse_word
from .errors import EmptyWordError, ParseError, SymbolError


@dataclass(frozen=True)
class PrimitiveDecomposition:
    root: Word
    exponent: int

    def word(self) -> Word:
        return self.root * self.exponent


def _nonempty(*words):
    for w in words:
        if not w:
            raise EmptyWordError("operation requires non-empty words")


def commutes(u: Word, v: Word) -> bool:
    """uv = vu.  Either word may be empty."""
    u, v = tuple(u), tuple(v)
    return u + v == v + u


def primitive_root(w: Word) -> PrimitiveDecomposition:
    """Shortest x with w = x^k, found by scanning the divisors of |w|.

    (The other classic test, locating w inside ww[1:-1], gives the same root.)
    """
    w = tuple(w)
    _nonempty(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return PrimitiveDecomposition(w[:d], n // d)
    raise AssertionError("unreachable")


def is_primitive(w: Word) -> bool:
    return primitive_root(w).exponent == 1


def power_exponent(u: Word, v: Word) -> Optional[int]:
    """k ≥ 0 with u = v^k, or None.  k = 0 exactly when u is empty."""
    u, v = tuple(u), tuple(v)
    _nonempty(v)
    k, rem = divmod(len(u), len(v))
    if rem == 0 and v * k == u:
        return k
    return None


def connected(u: Word, v: Word) -> bool:
    """No clopen language separates u from v."""
    _nonempty(u, v)
    return primitive_root(u).root == primitive_root(v).root


def connected_components(words: Iterable[Word], alphabet=None) -> list[list[Word]]:
    """Group words by primitive root.

    Groups are ordered by their root in lexicographic order (prefixes first),
    words inside a group by increasing exponent.  Without an explicit
    alphabet the symbol order is that of first appearance.
    """
    words = [tuple(w) for w in dict.fromkeys(tuple(w) for w in words)]
    _nonempty(*words)
    alphabet = Alphabet.infer(*words) if alphabet is None else Alphabet.of(alphabet)
    groups: dict = {}
    for w in words:
        alphabet.check(w)
        groups.setdefault(primitive_root(w).root, []).append(w)
    out = []
    for root in sorted(groups, key=alphabet.lex_key):
        out.append(sorted(groups[root], key=len))
    return out


# --- the four equivalent forms of commutation, used as cross-checks -------------

def common_base(u: Word, v: Word) -> Optional[tuple]:
    """(x, p, q) with u = x^p and v = x^q, searching every candidate x; or None."""
    u, v = tuple(u), tuple(v)
    _nonempty(u, v)
    for d in range(1, gcd(len(u), len(v)) + 1):
        x = u[:d]
        p, q = power_exponent(u, x), power_exponent(v, x)
        if p and q:
            return x, p, q
    return None


def common_power(u: Word, v: Word) -> bool:
    """Whether some y equals both u^p and v^q (p, q ≥ 1).

    If such y exists, the shortest one is u^(|v|/g) = v^(|u|/g) with
    g = gcd(|u|, |v|).
    """
    u, v = tuple(u), tuple(v)
    _nonempty(u, v)
    g = gcd(len(u), len(v))
    return u * (len(v) // g) == v * (len(u) // g)


def same_primitive_root(u: Word, v: Word) -> bool:
    return primitive_root(u).root == primitive_root(v).root


# --- word list files --------------------------------------------------------------

def parse_word_list(text: str) -> list[Word]:
    """One dotted word per line; ``eps`` is ε; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_word(line))
        except SymbolError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return out


def format_word_list(words: Iterable[Word]) -> str:
    return "".join(format_word(w) + "\n" for w in words)
