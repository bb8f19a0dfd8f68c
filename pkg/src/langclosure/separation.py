"""Constructive separators for pairs of words.

``separate_clopen`` builds a clopen language containing u but not v whenever
uv ≠ vu.  Each step either finds disjoint letter sets, finds a letter whose
relative frequency differs between u and v, or (all common frequencies
equal, say λ = c/n in lowest terms) cuts both words into length-n blocks and
recurses on the block words, wrapping the result as

    (image n L ∩ {w : |w|_a = λ|w|}) ∪ {w : |w|_a < λ|w|}

Total length shrinks by a factor n ≥ 2 per descent, so the depth is at most
log₂(|u| + |v|).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .automata import Alphabet, Word, format_word
from .errors import CommuteError, EmptyWordError, EqualWordsError, PowerError
from .generators import prefix_language
from .langexpr import FreqCmp, Image, Intersect, LangExpr, SubalphabetPlus, Union, blocks, member
from .words import commutes, power_exponent


@dataclass(frozen=True)
class DisjointAlphabets:
    letters: frozenset

    def describe(self):
        return "disjoint-alphabets {" + ", ".join(sorted(self.letters)) + "}"


@dataclass(frozen=True)
class FreqSplit:
    symbol: str
    ratio_u: Fraction
    ratio_v: Fraction

    def describe(self):
        return f"freq-split {self.symbol} ratio_u={self.ratio_u} ratio_v={self.ratio_v}"


@dataclass(frozen=True)
class BlockDescent:
    symbol: str
    ratio: Fraction
    n: int
    p: Word
    q: Word

    def describe(self):
        return (f"block-descent {self.symbol} ratio={self.ratio} n={self.n} "
                f"p={format_word(self.p)} q={format_word(self.q)}")


@dataclass(frozen=True)
class SeparationTrace:
    steps: tuple
    result: LangExpr

    def replay(self) -> LangExpr:
        """Rebuild the separator from the steps alone."""
        *descents, last = self.steps
        if isinstance(last, DisjointAlphabets):
            expr = SubalphabetPlus(last.letters)
        else:
            cmp = ">=" if last.ratio_u > last.ratio_v else "<="
            expr = FreqCmp(last.symbol, cmp, last.ratio_u)
        for step in reversed(descents):
            expr = _wrap(expr, step.symbol, step.ratio, step.n)
        return expr

    def lines(self) -> list[str]:
        return ["  " * depth + step.describe() for depth, step in enumerate(self.steps)]


def _wrap(inner: LangExpr, a: str, ratio: Fraction, n: int) -> LangExpr:
    return Union(Intersect(Image(n, inner), FreqCmp(a, "=", ratio)), FreqCmp(a, "<", ratio))


def _prepare(u, v, alphabet):
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise EmptyWordError("separation is defined for non-empty words")
    alphabet = Alphabet.infer(u, v) if alphabet is None else Alphabet.of(alphabet)
    return alphabet.check(u), alphabet.check(v), alphabet


def separate_clopen(u: Word, v: Word, alphabet=None) -> tuple[LangExpr, SeparationTrace]:
    """Clopen language containing u and not v, with the trace of how it was built.

    Raises CommuteError when uv = vu (no separator exists then).  Among the
    common letters the one with the largest frequency gap is used, ties going
    to the earlier letter of the alphabet.
    """
    u, v, alphabet = _prepare(u, v, alphabet)
    if commutes(u, v):
        raise CommuteError(f"{format_word(u)} and {format_word(v)} commute")
    order = {s: i for i, s in enumerate(alphabet.symbols)}
    steps: list = []
    expr = _separate(u, v, order, steps)
    return expr, SeparationTrace(tuple(steps), expr)


def _separate(u: Word, v: Word, order: dict, steps: list) -> LangExpr:
    common = set(u) & set(v)
    if not common:
        letters = frozenset(u)
        steps.append(DisjointAlphabets(letters))
        return SubalphabetPlus(letters)
    ratios = {a: (Fraction(u.count(a), len(u)), Fraction(v.count(a), len(v))) for a in common}
    a = min(common, key=lambda s: (-abs(ratios[s][0] - ratios[s][1]), order[s]))
    ru, rv = ratios[a]
    if ru != rv:
        steps.append(FreqSplit(a, ru, rv))
        return FreqCmp(a, ">=" if ru > rv else "<=", ru)
    # 0 < ru < 1 here: ru = 1 would make u and v powers of a
    n = ru.denominator
    p, q = blocks(u, n), blocks(v, n)
    steps.append(BlockDescent(a, ru, n, p, q))
    block_order = {}
    for word in (u, v):
        for i in range(0, len(word), n):
            chunk = word[i:i + n]
            block_order[blocks(chunk, n)[0]] = tuple(order[s] for s in chunk)
    inner = _separate(p, q, block_order, steps)
    return _wrap(inner, a, ru, n)


def separate_open(u: Word, v: Word, alphabet=None) -> frozenset:
    """Finite open language containing u and avoiding {v}⁺.

    The set is every non-empty word of length ≤ |u| that is not a power of v.
    Raises PowerError when u itself is a power of v.
    """
    u, v, alphabet = _prepare(u, v, alphabet)
    if power_exponent(u, v):
        raise PowerError(f"{format_word(u)} is a power of {format_word(v)}")
    return frozenset(
        x for x in alphabet.words_upto(len(u), min_len=1) if not power_exponent(x, v)
    )


def distinguish_open(u: Word, v: Word, alphabet=None) -> tuple[frozenset, str]:
    """Prefix language of the shorter word; it holds exactly one of u, v.

    Returns the set and ``"u"`` or ``"v"`` naming the word it contains.  For
    distinct words of equal length the lexicographically smaller one is used.
    """
    u, v, alphabet = _prepare(u, v, alphabet)
    if u == v:
        raise EqualWordsError("the two words are equal")
    if len(u) != len(v):
        pick = "u" if len(u) < len(v) else "v"
    else:
        pick = "u" if alphabet.lex_key(u) < alphabet.lex_key(v) else "v"
    return prefix_language(u if pick == "u" else v), pick


def separate_open_pair(u: Word, v: Word, alphabet=None,
                       separator: Optional[LangExpr] = None) -> tuple[frozenset, frozenset]:
    """Disjoint finite open languages L ∋ u and M ∋ v.

    With K a clopen separator of u from v, L collects the members of K of
    length 1..|u| and M the non-members of length 1..|v|.  ε is left out of
    both.
    """
    u, v, alphabet = _prepare(u, v, alphabet)
    if separator is None:
        separator, _ = separate_clopen(u, v, alphabet)
    left = frozenset(w for w in alphabet.words_upto(len(u), 1) if member(separator, w))
    right = frozenset(w for w in alphabet.words_upto(len(v), 1) if not member(separator, w))
    return left, right
