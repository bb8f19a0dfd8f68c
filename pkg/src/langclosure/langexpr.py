"""Symbolic languages with decidable membership and a bounded closed/open oracle.

Expressions may denote non-regular languages (frequency languages such as
{w : |w|_a < λ|w|}), so closedness is only verified up to a length bound:
a holding verdict means "no violation among words of length ≤ N".

Grammar of ``.lang`` files (whitespace-insensitive)::

    (sig+ a b ...)            Γ⁺ for the listed letters
    (freq a CMP NUM/DEN)      {w : |w|_a CMP λ|w|}, CMP in < <= = >= >
    (finite w1 w2 ...)        finite set of dotted words, eps for ε
    (union E E)  (inter E E)  (not E)
    (image N E)               words cut into length-N blocks satisfying E,
                              where E is over block tokens like <a.b>
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .automata import (
    Alphabet,
    Dfa,
    Word,
    block_token,
    check_token,
    format_word,
    parse_word,
    split_dotted,
)
from .closure_check import Counterexample, Verdict
from .errors import BudgetExceeded, ParseError, SymbolError

CMPS = {
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    ">=": operator.ge,
    ">": operator.gt,
}
DEFAULT_ORACLE_BUDGET = 2**22


class LangExpr:
    """Base class of expression nodes."""

    def __contains__(self, word):
        return member(self, word)

    def __str__(self):
        return serialize_expr(self)


@dataclass(frozen=True)
class SubalphabetPlus(LangExpr):
    letters: frozenset

    def __post_init__(self):
        object.__setattr__(self, "letters", frozenset(self.letters))
        if not self.letters:
            raise ValueError("sig+ needs at least one letter")
        for s in self.letters:
            check_token(s)


@dataclass(frozen=True)
class FreqCmp(LangExpr):
    symbol: str
    cmp: str
    ratio: Fraction

    def __post_init__(self):
        check_token(self.symbol)
        if self.cmp not in CMPS:
            raise ValueError(f"unknown comparison {self.cmp!r}")
        ratio = Fraction(self.ratio)
        if not 0 <= ratio <= 1:
            raise ValueError("ratio must lie in [0, 1]")
        object.__setattr__(self, "ratio", ratio)


@dataclass(frozen=True)
class Finite(LangExpr):
    words: frozenset

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(tuple(w) for w in self.words))


@dataclass(frozen=True)
class Union(LangExpr):
    left: LangExpr
    right: LangExpr


@dataclass(frozen=True)
class Intersect(LangExpr):
    left: LangExpr
    right: LangExpr


@dataclass(frozen=True)
class Complement(LangExpr):
    inner: LangExpr


@dataclass(frozen=True)
class Image(LangExpr):
    n: int
    inner: LangExpr

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("image block length must be at least 2")


def blocks(word: Sequence[str], n: int) -> Word:
    """Cut ``word`` into length-n chunks and name each chunk by its block token."""
    word = tuple(word)
    if len(word) % n:
        raise ValueError(f"length {len(word)} is not a multiple of {n}")
    return tuple(block_token(word[i:i + n]) for i in range(0, len(word), n))


def member(e: LangExpr, word: Sequence[str]) -> bool:
    word = tuple(word)
    if isinstance(e, SubalphabetPlus):
        return bool(word) and all(s in e.letters for s in word)
    if isinstance(e, FreqCmp):
        count = sum(1 for s in word if s == e.symbol)
        r = e.ratio
        return CMPS[e.cmp](count * r.denominator, r.numerator * len(word))
    if isinstance(e, Finite):
        return word in e.words
    if isinstance(e, Union):
        return member(e.left, word) or member(e.right, word)
    if isinstance(e, Intersect):
        return member(e.left, word) and member(e.right, word)
    if isinstance(e, Complement):
        return not member(e.inner, word)
    if isinstance(e, Image):
        if len(word) % e.n:
            return False
        return member(e.inner, blocks(word, e.n))
    raise TypeError(f"not a language expression: {e!r}")


def check_expr(e: LangExpr, alphabet) -> None:
    """Raise SymbolError if ``e`` names a symbol outside ``alphabet`` (block
    alphabets are checked inside images)."""
    alphabet = Alphabet.of(alphabet)
    if isinstance(e, SubalphabetPlus):
        for s in e.letters:
            _known(s, alphabet)
    elif isinstance(e, FreqCmp):
        _known(e.symbol, alphabet)
    elif isinstance(e, Finite):
        for w in e.words:
            alphabet.check(w)
    elif isinstance(e, (Union, Intersect)):
        check_expr(e.left, alphabet)
        check_expr(e.right, alphabet)
    elif isinstance(e, Complement):
        check_expr(e.inner, alphabet)
    elif isinstance(e, Image):
        check_expr(e.inner, block_alphabet(alphabet, e.n))
    else:
        raise TypeError(f"not a language expression: {e!r}")


def _known(symbol, alphabet):
    if symbol not in alphabet:
        raise SymbolError(f"unknown symbol {symbol!r}")


@lru_cache(maxsize=64)
def block_alphabet(alphabet: Alphabet, n: int) -> Alphabet:
    """All words of length n as block tokens, in lexicographic order."""
    return Alphabet(tuple(block_token(w) for w in alphabet.words(n)))


# --- vectorized membership ----------------------------------------------------------

@lru_cache(maxsize=256)
def _digits(k: int, length: int) -> np.ndarray:
    """Row i holds the base-k digits (most significant first) of i, for i < k**length."""
    idx = np.arange(k**length, dtype=np.int64)
    out = np.empty((k**length, length), dtype=np.int64)
    for j in range(length):
        out[:, j] = (idx // k ** (length - 1 - j)) % k
    return out


def member_table(e: LangExpr, alphabet, length: int) -> np.ndarray:
    """Membership of every word of the given length, indexed in lexicographic order.

    Word index = its value as a base-|Σ| numeral.  Cutting a word into
    length-n blocks leaves that index unchanged when read in base |Σ|ⁿ, which
    is how images recurse.
    """
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    size = k**length
    if isinstance(e, SubalphabetPlus):
        if length == 0:
            return np.zeros(1, dtype=bool)
        ok = np.array([s in e.letters for s in alphabet.symbols])
        return ok[_digits(k, length)].all(axis=1)
    if isinstance(e, FreqCmp):
        if e.symbol in alphabet and length:
            count = (_digits(k, length) == alphabet.index[e.symbol]).sum(axis=1)
        else:
            count = np.zeros(size, dtype=np.int64)
        r = e.ratio
        return CMPS[e.cmp](count * r.denominator, r.numerator * length)
    if isinstance(e, Finite):
        out = np.zeros(size, dtype=bool)
        for w in e.words:
            if len(w) == length and all(s in alphabet for s in w):
                idx = 0
                for s in w:
                    idx = idx * k + alphabet.index[s]
                out[idx] = True
        return out
    if isinstance(e, Union):
        return member_table(e.left, alphabet, length) | member_table(e.right, alphabet, length)
    if isinstance(e, Intersect):
        return member_table(e.left, alphabet, length) & member_table(e.right, alphabet, length)
    if isinstance(e, Complement):
        return ~member_table(e.inner, alphabet, length)
    if isinstance(e, Image):
        if length % e.n:
            return np.zeros(size, dtype=bool)
        return member_table(e.inner, block_alphabet(alphabet, e.n), length // e.n)
    raise TypeError(f"not a language expression: {e!r}")


def _dfa_table(d: Dfa, alphabet: Alphabet, length: int) -> np.ndarray:
    delta = np.array(d.delta, dtype=np.int64)
    finals = np.zeros(d.n, dtype=bool)
    finals[list(d.finals)] = True
    k = len(alphabet)
    state = np.full(k**length, d.initial, dtype=np.int64)
    digits = _digits(k, length)
    for j in range(length):
        state = delta[state, digits[:, j]]
    return finals[state]


def _predicate_table(pred: Callable, alphabet: Alphabet, length: int) -> np.ndarray:
    return np.fromiter((bool(pred(w)) for w in alphabet.words(length)), dtype=bool,
                       count=len(alphabet) ** length)


# --- bounded oracle ------------------------------------------------------------------

@dataclass(frozen=True)
class OpenViolation:
    """A member ``word`` whose split at ``split`` has neither part in the language."""

    word: Word
    split: int

    @property
    def u(self) -> Word:
        return self.word[:self.split]

    @property
    def v(self) -> Word:
        return self.word[self.split:]


def _tables(source, alphabet: Alphabet, max_len: int) -> list:
    if isinstance(source, LangExpr):
        return [member_table(source, alphabet, t) for t in range(max_len + 1)]
    if isinstance(source, Dfa):
        if source.alphabet != alphabet:
            raise SymbolError("oracle alphabet differs from the automaton's")
        return [_dfa_table(source, alphabet, t) for t in range(max_len + 1)]
    if callable(source):
        return [_predicate_table(source, alphabet, t) for t in range(max_len + 1)]
    raise TypeError(f"cannot evaluate membership for {source!r}")


def _word_at(alphabet: Alphabet, length: int, idx: int) -> Word:
    k = len(alphabet)
    out = []
    for _ in range(length):
        idx, digit = divmod(idx, k)
        out.append(alphabet.symbols[digit])
    return tuple(reversed(out))


def oracle_check(source, prop: str, max_len: int, alphabet=None,
                 budget: int = DEFAULT_ORACLE_BUDGET) -> Verdict:
    """Exhaustively test the pairwise closed/open characterization up to ``max_len``.

    closed: every u, v ∈ Σ⁺ in the language with |uv| ≤ max_len has uv in it.
    open:   every member w with 2 ≤ |w| ≤ max_len has, for each split w = uv
            with u, v ∈ Σ⁺, u or v in the language.

    ``source`` is a LangExpr, a Dfa, or a predicate on words.  The first
    violation in (length, lexicographic, split position) order is returned as
    certificate.  The verdict is labelled ``bounded=max_len``.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if prop not in ("closed", "open"):
        raise ValueError(f"unknown oracle property {prop!r}")
    if alphabet is None:
        if not isinstance(source, Dfa):
            raise ValueError("an alphabet is required unless the source is a Dfa")
        alphabet = source.alphabet
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    total = sum(k**t for t in range(max_len + 1))
    if total > budget:
        raise BudgetExceeded(f"oracle enumeration of {total} words", budget)
    table = _tables(source, alphabet, max_len)
    for t in range(2, max_len + 1):
        idx = np.arange(k**t, dtype=np.int64)
        splits = []
        for i in range(1, t):
            u, v = np.divmod(idx, k ** (t - i))
            a, b = table[i][u], table[t - i][v]
            splits.append((a & b) if prop == "closed" else ~(a | b))
        hit = np.logical_or.reduce(splits)
        bad = hit & ~table[t] if prop == "closed" else hit & table[t]
        if bad.any():
            w = int(np.argmax(bad))
            i = 1 + next(j for j, s in enumerate(splits) if s[w])
            word = _word_at(alphabet, t, w)
            if prop == "closed":
                cert = Counterexample(word[:i], word[i:])
            else:
                cert = OpenViolation(word, i)
            return Verdict(False, cert, bounded=max_len)
    return Verdict(True, bounded=max_len)


# --- s-expression syntax -------------------------------------------------------------

def _format_ratio(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def serialize_expr(e: LangExpr) -> str:
    if isinstance(e, SubalphabetPlus):
        return "(sig+ " + " ".join(sorted(e.letters)) + ")"
    if isinstance(e, FreqCmp):
        return f"(freq {e.symbol} {e.cmp} {_format_ratio(e.ratio)})"
    if isinstance(e, Finite):
        words = sorted(e.words, key=lambda w: (len(w), w))
        return "(finite" + "".join(" " + format_word(w) for w in words) + ")"
    if isinstance(e, Union):
        return f"(union {serialize_expr(e.left)} {serialize_expr(e.right)})"
    if isinstance(e, Intersect):
        return f"(inter {serialize_expr(e.left)} {serialize_expr(e.right)})"
    if isinstance(e, Complement):
        return f"(not {serialize_expr(e.inner)})"
    if isinstance(e, Image):
        return f"(image {e.n} {serialize_expr(e.inner)})"
    raise TypeError(f"not a language expression: {e!r}")


def _tokenize(text: str):
    tokens, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append((text[i:j], i))
            i = j
    return tokens


def _parse_ratio(text: str, pos: int) -> Fraction:
    num, sep, den = text.partition("/")
    try:
        if not num.isdigit() or (sep and not den.isdigit()):
            raise ValueError
        return Fraction(int(num), int(den) if sep else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", pos) from None


def parse_expr(text: str, alphabet=None) -> LangExpr:
    """Parse the s-expression syntax.  With ``alphabet``, unknown symbols are rejected."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, len(text))

    def take():
        nonlocal pos
        tok = peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input", len(text))
        pos += 1
        return tok

    def atom():
        tok, at = take()
        if tok in "()":
            raise ParseError(f"expected an atom, got {tok!r}", at)
        return tok, at

    def symbol():
        tok, at = atom()
        try:
            return check_token(tok)
        except SymbolError as exc:
            raise ParseError(str(exc), at) from None

    def expr():
        tok, at = take()
        if tok != "(":
            raise ParseError(f"expected '(', got {tok!r}", at)
        head, hat = atom()
        try:
            if head == "sig+":
                letters = []
                while peek()[0] not in (")", None):
                    letters.append(symbol())
                if not letters:
                    raise ParseError("sig+ needs at least one letter", hat)
                node = SubalphabetPlus(frozenset(letters))
            elif head == "freq":
                a = symbol()
                cmp, cat = atom()
                if cmp not in CMPS:
                    raise ParseError(f"unknown comparison {cmp!r}", cat)
                ratio_text, rat = atom()
                ratio = _parse_ratio(ratio_text, rat)
                if ratio > 1:
                    raise ParseError("ratio must lie in [0, 1]", rat)
                node = FreqCmp(a, cmp, ratio)
            elif head == "finite":
                words = []
                while peek()[0] not in (")", None):
                    w, wat = atom()
                    try:
                        words.append(parse_word(w))
                    except SymbolError as exc:
                        raise ParseError(str(exc), wat) from None
                node = Finite(frozenset(words))
            elif head in ("union", "inter"):
                left, right = expr(), expr()
                node = Union(left, right) if head == "union" else Intersect(left, right)
            elif head == "not":
                node = Complement(expr())
            elif head == "image":
                ntext, nat = atom()
                if not ntext.isdigit() or int(ntext) < 2:
                    raise ParseError(f"image block length must be an integer >= 2, got {ntext!r}", nat)
                node = Image(int(ntext), expr())
            else:
                raise ParseError(f"unknown form {head!r}", hat)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), hat) from None
        tok, cat = take()
        if tok != ")":
            raise ParseError(f"expected ')', got {tok!r}", cat)
        return node

    node = expr()
    if pos != len(tokens):
        raise ParseError("trailing input", tokens[pos][1])
    if alphabet is not None:
        check_expr(node, alphabet)
    return node


def load_expr(path, alphabet=None) -> LangExpr:
    with open(path, encoding="utf-8") as fh:
        return parse_expr(fh.read(), alphabet)


def expr_alphabet(e: LangExpr) -> Alphabet:
    """Outer-level symbols mentioned by ``e``, sorted by spelling."""
    return Alphabet(tuple(sorted(_mentioned(e))))


def _mentioned(e: LangExpr) -> set:
    if isinstance(e, SubalphabetPlus):
        return set(e.letters)
    if isinstance(e, FreqCmp):
        return {e.symbol}
    if isinstance(e, Finite):
        return {s for w in e.words for s in w}
    if isinstance(e, (Union, Intersect)):
        return _mentioned(e.left) | _mentioned(e.right)
    if isinstance(e, Complement):
        return _mentioned(e.inner)
    if isinstance(e, Image):
        out = set()
        for tok in _mentioned(e.inner):
            if tok.startswith("<") and tok.endswith(">"):
                out.update(split_dotted(tok[1:-1]))
        return out
    raise TypeError(f"not a language expression: {e!r}")
