import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import AB, pairs_upto, words_over
from langclosure.automata import closure_dfa, from_words, intersect, is_empty, parse_word
from langclosure.errors import CommuteError, EmptyWordError, EqualWordsError, PowerError
from langclosure.langexpr import Complement, Finite, member, oracle_check, serialize_expr
from langclosure.separation import (
    BlockDescent,
    DisjointAlphabets,
    FreqSplit,
    distinguish_open,
    separate_clopen,
    separate_open,
    separate_open_pair,
)
from langclosure.words import commutes

W = parse_word


def words(*texts):
    return frozenset(W(t) for t in texts)


# --- clopen separators ---------------------------------------------------------------

@pytest.mark.parametrize("u, v, expected", [
    ("a", "b", "(sig+ a)"),
    ("a.a.b", "a.b", "(freq a >= 2/3)"),
    ("a.b", "b.a", "(union (inter (image 2 (sig+ <a.b>)) (freq a = 1/2)) (freq a < 1/2))"),
])
def test_clopen_examples(u, v, expected):
    expr, trace = separate_clopen(W(u), W(v))
    assert serialize_expr(expr) == expected
    assert member(expr, W(u)) and not member(expr, W(v))
    assert trace.replay() == expr


def test_clopen_example_trace():
    _, trace = separate_clopen(W("a.b"), W("b.a"))
    descent, base = trace.steps
    assert descent == BlockDescent("a", Fraction(1, 2), 2, ("<a.b>",), ("<b.a>",))
    assert base == DisjointAlphabets(frozenset({"<a.b>"}))
    assert trace.lines()[1].startswith("  disjoint-alphabets")


def test_clopen_example_is_clopen_to_length_12():
    expr, _ = separate_clopen(W("a.b"), W("b.a"))
    for e in (expr, Complement(expr)):
        assert oracle_check(e, "closed", 12, AB).holds
        assert oracle_check(e, "open", 12, AB).holds


def test_clopen_errors():
    with pytest.raises(CommuteError):
        separate_clopen(W("a.b"), W("a.b.a.b"))
    with pytest.raises(EmptyWordError):
        separate_clopen((), W("a"))


def test_freq_split_prefers_largest_gap():
    # over {a, b, c}: gap on a is 0, on b it is 1/3, so b is split on
    u, v = W("a.b.b"), W("a.c.b")
    _, trace = separate_clopen(u, v, "a b c")
    assert trace.steps == (FreqSplit("b", Fraction(2, 3), Fraction(1, 3)),)


def test_freq_split_tie_uses_alphabet_order():
    u, v = W("a.a.b"), W("a.b.b")
    _, t1 = separate_clopen(u, v, "a b")
    _, t2 = separate_clopen(u, v, "b a")
    assert t1.steps[0].symbol == "a" and t2.steps[0].symbol == "b"


def test_nested_descent():
    u, v = W("a.b.b.a"), W("b.a.a.b")
    expr, trace = separate_clopen(u, v)
    assert [type(s) for s in trace.steps] == [BlockDescent, BlockDescent, DisjointAlphabets]
    assert member(expr, u) and not member(expr, v)
    assert "<<a.b>.<b.a>>" in serialize_expr(expr)


def test_separation_exhaustive_up_to_6():
    separated = 0
    for u, v in pairs_upto(AB, 6):
        if commutes(u, v):
            with pytest.raises(CommuteError):
                separate_clopen(u, v, AB)
            continue
        expr, trace = separate_clopen(u, v, AB)
        assert member(expr, u) and not member(expr, v)
        assert trace.replay() == expr
        assert len(trace.steps) - 1 <= math.log2(len(u) + len(v))
        for e in (expr, Complement(expr)):
            assert oracle_check(e, "closed", 12, AB).holds, (u, v)
            assert oracle_check(e, "open", 12, AB).holds, (u, v)
        separated += 1
    assert separated > 80


# --- open separators ----------------------------------------------------------------

def test_separate_open_examples():
    assert separate_open(W("a.b"), W("a"), AB) == words("b", "a.b", "b.a", "b.b")
    assert separate_open(W("b"), W("a"), AB) == words("b")
    with pytest.raises(PowerError):
        separate_open(W("a.a"), W("a"))


@settings(max_examples=120, deadline=None)
@given(words_over(min_size=1, max_size=5), words_over(min_size=1, max_size=5))
def test_separate_open_properties(u, v):
    try:
        s = separate_open(u, v, AB)
    except PowerError:
        assert u == v * (len(u) // len(v))
        return
    assert u in s and v not in s
    assert oracle_check(Finite(s), "open", len(u) + 2, AB).holds


def test_distinguish_examples():
    assert distinguish_open(W("a.b"), W("a.b.b")) == (words("eps", "a", "a.b"), "u")
    assert distinguish_open(W("a.a.b"), W("a.b")) == (words("eps", "a", "a.b"), "v")
    with pytest.raises(EqualWordsError):
        distinguish_open(W("a.b"), W("a.b"))


def test_distinguish_equal_lengths_takes_smaller_word():
    assert distinguish_open(W("b.a"), W("a.b"), AB)[1] == "v"
    assert distinguish_open(W("b.a"), W("a.b"), "b a")[1] == "u"


@settings(max_examples=120, deadline=None)
@given(words_over(min_size=1, max_size=5), words_over(min_size=1, max_size=5))
def test_distinguish_holds_exactly_one(u, v):
    if u == v:
        return
    s, which = distinguish_open(u, v, AB)
    assert (u in s) != (v in s)
    assert (u in s) == (which == "u")
    assert oracle_check(Finite(s), "open", 8, AB).holds


def test_open_pair_examples():
    assert separate_open_pair(W("a"), W("b")) == (words("a"), words("b"))
    left, right = separate_open_pair(W("a.b"), W("b.a"))
    assert left == words("b", "a.b", "b.b")
    assert right == words("a", "a.a", "b.a")
    with pytest.raises(CommuteError):
        separate_open_pair(W("a.b"), W("a.b.a.b"))


def test_open_pairs_exhaustive_up_to_6():
    for u, v in pairs_upto(AB, 6):
        if commutes(u, v):
            continue
        left, right = separate_open_pair(u, v, AB)
        assert u in left and v in right
        assert not left & right
        assert () not in left and () not in right
        assert oracle_check(Finite(left), "open", 8, AB).holds
        assert oracle_check(Finite(right), "open", 8, AB).holds
        lp = closure_dfa(from_words(left, AB))
        rp = closure_dfa(from_words(right, AB))
        assert is_empty(intersect(lp, rp)), (u, v)
