import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import AB, ABC, a_plus_b_plus, all_words, dfas, nfas
from langclosure.automata import (
    Alphabet,
    Dfa,
    Nfa,
    accept_all,
    boolean_combine,
    closure,
    complement,
    concatenate,
    determinize,
    dump_automaton,
    empty_language,
    equivalent,
    from_words,
    is_empty,
    letters_plus,
    minimize,
    parse_automaton,
    parse_dfa,
    parse_word,
    run,
    shortest_accepted,
)
from langclosure.errors import AlphabetMismatch, BudgetExceeded, ParseError, SymbolError
from langclosure.generators import WitnessSpec, witness_automaton

W = parse_word


def eps_only(alphabet):
    return from_words([()], alphabet)


# --- examples ------------------------------------------------------------------

def test_run_examples():
    assert run(accept_all("a"), W("a.a.a"))
    d = a_plus_b_plus()
    assert run(d, ()) == (d.initial in d.finals)
    m5 = witness_automaton(WitnessSpec(5, "M'"))
    assert not run(m5, W("1.0.0.0.0.1"))


def test_run_rejects_foreign_symbol():
    with pytest.raises(SymbolError):
        run(accept_all(AB), ("c",))


def test_boolean_combine_examples():
    d = a_plus_b_plus()
    assert is_empty(boolean_combine(d, empty_language(AB), "and"))
    assert is_empty(boolean_combine(d, d, "xor"))
    a_plus = letters_plus("a", AB)
    square = determinize(concatenate(a_plus, a_plus))
    assert is_empty(boolean_combine(square, a_plus, "diff"))


def test_boolean_combine_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        boolean_combine(accept_all(AB), accept_all(ABC), "or")


def test_product_size_bound():
    d1, d2 = a_plus_b_plus(), letters_plus("a", AB)
    assert boolean_combine(d1, d2, "or").n <= d1.n * d2.n


def test_complement_examples():
    assert is_empty(complement(accept_all(AB)))
    d = a_plus_b_plus()
    assert equivalent(complement(complement(d)), d)
    for n in (2, 3):
        mp = witness_automaton(WitnessSpec(n, "M'"))
        assert equivalent(complement(mp), witness_automaton(WitnessSpec(n, "M")))


def test_concatenate_examples():
    d = a_plus_b_plus()
    assert d.accepts(W("a.b")) and not d.accepts(W("a.b.a.b"))
    assert equivalent(determinize(concatenate(d, eps_only(AB))), d)
    assert is_empty(concatenate(empty_language(AB), d))


def test_closure_examples():
    ab_plus = closure(from_words([W("a.b")], AB), "positive")
    assert ab_plus.accepts(W("a.b.a.b"))
    assert not ab_plus.accepts(())
    star_empty = determinize(closure(empty_language(AB), "kleene"))
    assert equivalent(star_empty, eps_only(AB))
    letters = determinize(closure(from_words([("a",), ("b",)], AB), "positive"))
    assert equivalent(letters, complement(eps_only(AB)))


def test_determinize_examples():
    d = a_plus_b_plus()
    assert equivalent(determinize(d.as_nfa()), d)
    raw = determinize(concatenate(letters_plus("a", AB), letters_plus("b", AB)))
    assert minimize(raw).n <= 5
    assert raw.accepts(W("a.a.b")) and not raw.accepts(W("a.b.a"))


def test_determinize_budget():
    # the classic "k-th symbol from the end is a" NFA needs 2^k subsets
    k = 6
    moves = [{"a": {0, 1}, "b": {0}}] + [{"a": {i + 1}, "b": {i + 1}} for i in range(1, k)] + [{}]
    nfa = Nfa(AB, k + 1, {0}, {k}, moves)
    assert determinize(nfa).n == 2**k
    with pytest.raises(BudgetExceeded):
        determinize(nfa, budget=10)


def test_determinize_within_subset_bound():
    rng = random.Random(3)
    for _ in range(20):
        moves = [{s: {rng.randrange(5) for _ in range(2)} for s in "ab"} for _ in range(5)]
        nfa = Nfa(AB, 5, {0}, {4}, moves)
        assert determinize(nfa).n <= 2**5


def test_shortest_accepted_examples():
    assert shortest_accepted(empty_language(AB)) is None
    assert shortest_accepted(closure(from_words([W("a.b")], AB))) == W("a.b")
    assert shortest_accepted(witness_automaton(WitnessSpec(5, "M'"))) == ()


def test_shortest_accepted_eps_costs_nothing():
    nfa = Nfa(AB, 3, {0}, {2}, [{None: {1}}, {"b": {2}}, {}])
    assert shortest_accepted(nfa) == ("b",)


def test_equivalent_examples():
    d = a_plus_b_plus()
    assert equivalent(d, d)
    assert equivalent(accept_all(AB), empty_language(AB)) is False
    f = from_words([W("a.b"), W("b")], AB)
    once = closure(f)
    twice = closure(once)
    assert equivalent(determinize(twice), determinize(once))


def test_minimize_examples():
    d = a_plus_b_plus()
    assert minimize(minimize(d)).n == minimize(d).n
    redundant = Dfa(AB, [[1, 2], [2, 1], [0, 0]], 0, {0, 1, 2})
    assert minimize(redundant).n == 1
    mp = witness_automaton(WitnessSpec(4, "M'"))
    small = minimize(mp)
    rng = random.Random(11)
    for _ in range(1000):
        w = tuple(rng.choice("01") for _ in range(rng.randrange(30)))
        assert run(small, w) == run(mp, w)


def test_minimize_renumbers_in_bfs_order():
    # the same language under two different state numberings
    d1 = Dfa(AB, [[1, 2], [1, 2], [2, 2]], 0, {1})
    d2 = Dfa(AB, [[0, 0], [2, 0], [2, 0]], 1, {2})
    assert minimize(d1) == minimize(d2)


# --- invariants against brute-force oracles ------------------------------------------

@settings(max_examples=60, deadline=None)
@given(dfas())
def test_complement_pointwise(d):
    comp = complement(d)
    for w in all_words(d.alphabet, 8 if len(d.alphabet) == 2 else 5):
        assert run(comp, w) != run(d, w)


@settings(max_examples=60, deadline=None)
@given(nfas(), nfas())
def test_concatenate_matches_split_oracle(a, b):
    cat = concatenate(a, b)
    for w in all_words(AB, 6):
        expected = any(run(a, w[:i]) and run(b, w[i:]) for i in range(len(w) + 1))
        assert run(cat, w) == expected


def factorizable(word, accepts):
    """DP: can ``word`` be cut into one or more factors each accepted?"""
    n = len(word)
    ok = [False] * (n + 1)  # ok[i]: word[:i] is a product of >= 1 factors
    for j in range(1, n + 1):
        ok[j] = any((i == 0 or ok[i]) and accepts(word[i:j]) for i in range(j))
    if n == 0:
        return accepts(())
    return ok[n]


@settings(max_examples=60, deadline=None)
@given(nfas(max_states=3))
def test_positive_closure_matches_factor_dp(a):
    plus = closure(a, "positive")
    for w in all_words(AB, 8):
        assert run(plus, w) == factorizable(w, a.accepts)


@settings(max_examples=40, deadline=None)
@given(nfas(max_states=3))
def test_kleene_closure_adds_only_eps(a):
    star, plus = closure(a, "kleene"), closure(a, "positive")
    assert run(star, ())
    for w in all_words(AB, 6, 1):
        assert run(star, w) == run(plus, w)


@settings(max_examples=60, deadline=None)
@given(st.one_of(nfas(), nfas(max_states=3, alphabet=ABC)))
def test_determinize_preserves_membership(a):
    d = determinize(a)
    for w in all_words(a.alphabet, 8 if len(a.alphabet) == 2 else 5):
        assert run(d, w) == run(a, w)


def first_accepted(fa, max_len):
    for length in range(max_len + 1):
        for w in fa.alphabet.words(length):
            if fa.accepts(w):
                return w
    return None


@settings(max_examples=80, deadline=None)
@given(st.one_of(dfas(max_states=6), nfas()))
def test_shortest_accepted_is_shortlex_least(fa):
    found = shortest_accepted(fa)
    expected = first_accepted(fa, fa.n - 1)
    assert found == expected
    if found is not None:
        assert len(found) <= fa.n - 1
    else:
        assert is_empty(fa)


@settings(max_examples=60, deadline=None)
@given(dfas(max_states=6))
def test_minimize_is_equivalent_and_not_larger(d):
    m = minimize(d)
    assert equivalent(m, d)
    assert m.n <= d.n
    assert minimize(m) == m


# --- .aut format ---------------------------------------------------------------

SAMPLE = """\
# a partial table
alphabet: 0 1
states: q0 q1 r
initial: q0
finals: q0 q1   # trailing comment
q0 0 q1
q1 1 r
"""


def test_parse_completes_partial_table():
    d = parse_automaton(SAMPLE)
    assert isinstance(d, Dfa)
    assert d.n == 4 and d.names[-1] == "sink"
    assert d.accepts(W("0")) and not d.accepts(W("0.1")) and not d.accepts(W("1"))


def test_parse_nondeterministic_and_eps():
    text = SAMPLE + "q0 0 r\nq1 eps q0\n"
    fa = parse_automaton(text)
    assert isinstance(fa, Nfa)
    with pytest.raises(ParseError):
        parse_dfa(text)


@settings(max_examples=50, deadline=None)
@given(st.one_of(dfas(), nfas()))
def test_dump_parse_round_trip(fa):
    text = dump_automaton(fa)
    back = parse_automaton(text)
    if isinstance(fa, Dfa):
        assert dump_automaton(back) == text
    for w in all_words(fa.alphabet, 4):
        assert run(back, w) == run(fa, w)


@pytest.mark.parametrize("text", [
    "states: a\ninitial: a\nfinals:\n",
    "alphabet: 0\nstates: a\ninitial: b\nfinals:\n",
    "alphabet: 0\nstates: a\ninitial: a\nfinals:\na 1 a\n",
    "alphabet: 0\nstates: a\ninitial: a\nfinals:\na 0\n",
    "alphabet: 0 0\nstates: a\ninitial: a\nfinals:\n",
    "alphabet: 0\nstates: a a\ninitial: a\nfinals:\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_automaton(text)


def test_alphabet_order_and_tokens():
    alpha = Alphabet.of("b a")
    assert alpha.symbols == ("b", "a")
    assert list(alpha.words(2))[0] == ("b", "b")
    assert parse_word("eps") == ()
    assert parse_word("<a.b>.c") == ("<a.b>", "c")
