import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import AB, a_plus_b_plus, dfas, nfas, shortest_in_square_minus
from langclosure.automata import (
    Dfa,
    accept_all,
    complement,
    concatenate,
    determinize,
    difference,
    equivalent,
    from_words,
    is_empty,
    letters_plus,
    parse_word,
    shortest_accepted,
    subset_of,
    union,
)
from langclosure.closure_check import (
    EPSILON_MISSING,
    EPSILON_PRESENT,
    Counterexample,
    Verdict,
    _search,
    build_counterexample_nfa,
    check_nfa_closed,
    check_property,
    interior,
    is_open,
    normalize_property,
    shortest_counterexample,
)
from langclosure.errors import BudgetExceeded

W = parse_word


def square_contained(d):
    """Independent route: L·L ⊆ L via concatenation, determinization and difference."""
    return is_empty(difference(determinize(concatenate(d, d)), d))


def least_counterexample_bruteforce(d, max_len):
    """First (u, v) in (length of uv, lex uv, |u|) order, by enumeration."""
    for length in range(max_len + 1):
        for w in d.alphabet.words(length):
            if d.accepts(w):
                continue
            for i in range(length + 1):
                if d.accepts(w[:i]) and d.accepts(w[i:]):
                    return Counterexample(w[:i], w[i:])
    return None


# --- examples ------------------------------------------------------------------

def test_counterexample_nfa_examples():
    a_plus = letters_plus("a", AB)
    assert is_empty(build_counterexample_nfa(a_plus))
    assert is_empty(build_counterexample_nfa(accept_all(AB)))
    m = build_counterexample_nfa(a_plus_b_plus())
    assert shortest_accepted(m) == W("a.b.a.b")


def test_counterexample_nfa_shape():
    d = a_plus_b_plus()
    m = build_counterexample_nfa(d)
    assert m.n == d.n + d.n**2
    assert m.names[d.n].startswith("[")


def test_check_property_examples():
    assert check_property(letters_plus("a", AB), "pos-closed").holds
    v = check_property(a_plus_b_plus(), "pos-closed")
    assert not v.holds and v.certificate == Counterexample(W("a.b"), W("a.b"))
    pref = from_words([(), W("a"), W("a.b")], AB)
    assert check_property(pref, "pos-open").holds


def test_shortest_counterexample_examples():
    cx = shortest_counterexample(a_plus_b_plus())
    assert (cx.u, cx.v) == (W("a.b"), W("a.b"))
    assert shortest_counterexample(letters_plus("a", AB)) is None


def test_kleene_closed_epsilon_missing():
    v = check_property(letters_plus("a", AB), "kleene-closed")
    assert not v.holds
    assert v.certificate is None and v.reason == EPSILON_MISSING
    # a real (u, v) failure takes precedence over the ε flag
    v = check_property(a_plus_b_plus(), "kl-closed")
    assert v.certificate is not None and v.reason is None


def test_kleene_open_needs_eps_outside():
    # a* is positive-open, but its complement lacks ε so it is not Kleene-open
    a_star = union(letters_plus("a", AB), from_words([()], AB))
    assert check_property(a_star, "positive-open").holds
    v = check_property(a_star, "kleene-open")
    assert not v.holds and v.complemented
    assert v.certificate is None and v.reason == EPSILON_PRESENT


def test_clopen_examples():
    assert check_property(letters_plus("a", AB), "clopen").holds
    v = check_property(from_words([W("a")], AB), "clopen-positive")
    assert not v.holds and not v.complemented  # {a} fails closedness first


def test_verdict_rejects_certificate_on_success():
    with pytest.raises(ValueError):
        Verdict(True, Counterexample(("a",), ("a",)))


def test_property_aliases():
    assert normalize_property("pos-open") == "positive-open"
    assert normalize_property("clopen") == "clopen-positive"
    with pytest.raises(ValueError):
        normalize_property("closed-ish")


def test_nfa_check_examples():
    assert check_nfa_closed(accept_all(AB).as_nfa()).holds
    nfa = concatenate(letters_plus("a", AB), letters_plus("b", AB))
    v = check_nfa_closed(nfa)
    assert not v.holds and v.certificate.verify(nfa)


def test_nfa_check_budget():
    with pytest.raises(BudgetExceeded):
        check_nfa_closed(concatenate(letters_plus("a", AB), letters_plus("b", AB)), budget=2)


def test_interior_examples():
    top = accept_all(AB)
    assert equivalent(interior(top), top)
    a_plus = letters_plus("a", AB)
    assert equivalent(interior(a_plus), a_plus)
    # closed L, M covering Σ*: words with an a, and b*
    has_a = complement(determinize(concatenate(from_words([()], AB), letters_plus("b", AB))))
    has_a = difference(has_a, from_words([()], AB))
    b_star = union(letters_plus("b", AB), from_words([()], AB))
    assert check_property(has_a, "pos-closed") and check_property(b_star, "pos-closed")
    assert equivalent(union(has_a, b_star), top)
    assert equivalent(union(interior(has_a), interior(b_star)), top)


# --- invariants ----------------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(dfas(max_states=6))
def test_closed_check_matches_square_containment(d):
    assert check_property(d, "positive-closed").holds == square_contained(d)


@settings(max_examples=150, deadline=None)
@given(dfas(max_states=5, alphabets=(AB,)))
def test_shortest_counterexample_matches_enumeration(d):
    bound = d.n**2 + d.n - 1
    cx = shortest_counterexample(d)
    expected = least_counterexample_bruteforce(d, min(bound, 12))
    if cx is None:
        assert expected is None
        return
    assert len(cx.uv) <= bound
    assert cx.verify(d)
    if len(cx.uv) <= 12:
        assert cx == expected


def test_counterexample_word_is_lex_least_when_flat_and_pair_states_tie():
    # babab and babba both break closedness; the flat state reached by "ba"
    # and its ε-successor share a word and must be expanded symbol by symbol
    d = Dfa(AB, ((0, 4), (0, 0), (0, 3), (3, 0), (2, 0)), 0, frozenset({2, 3}))
    assert shortest_counterexample(d) == least_counterexample_bruteforce(d, 6)
    assert shortest_counterexample(d).uv == W("b.a.b.a.b")


@settings(max_examples=100, deadline=None)
@given(dfas(max_states=6))
def test_counterexample_length_is_shortest_of_square_minus(d):
    cx = shortest_counterexample(d)
    witness = shortest_accepted(difference(determinize(concatenate(d, d)), d))
    if cx is None:
        assert witness is None
    else:
        assert len(cx.uv) == len(witness)
        assert cx.uv == witness  # both break ties by alphabet order


@settings(max_examples=60, deadline=None)
@given(dfas(max_states=4, alphabets=(AB,)))
def test_square_minus_oracle_agrees_with_bruteforce(d):
    # cross-check the two independent oracles against each other
    witness = shortest_accepted(difference(determinize(concatenate(d, d)), d))
    brute = shortest_in_square_minus(d, 10)
    if witness is None or len(witness) <= 10:
        assert witness == brute


@settings(max_examples=100, deadline=None)
@given(dfas(max_states=6), st.sampled_from(["positive", "kleene"]))
def test_open_is_closedness_of_complement(d, kind):
    assert check_property(d, f"{kind}-open").holds == check_property(complement(d), f"{kind}-closed").holds


@settings(max_examples=100, deadline=None)
@given(dfas(max_states=6), st.sampled_from(["positive-closed", "kleene-closed", "positive-open",
                                            "kleene-open", "clopen-positive", "clopen-kleene"]))
def test_certificates_verify(d, prop):
    v = check_property(d, prop)
    if v.certificate is not None:
        target = complement(d) if v.complemented else d
        assert v.certificate.verify(target)
    if v.holds:
        assert v.certificate is None and v.reason is None


@settings(max_examples=80, deadline=None)
@given(dfas(max_states=5))
def test_materialized_nfa_matches_search(d):
    m = build_counterexample_nfa(d)
    found = _search(d) is not None
    assert (not is_empty(m)) == found
    cx = shortest_counterexample(d)
    if cx is not None:
        assert shortest_accepted(m) == cx.uv
        assert m.accepts(cx.uv)


@settings(max_examples=80, deadline=None)
@given(nfas(max_states=4))
def test_nfa_check_agrees_with_determinized(a):
    v = check_nfa_closed(a)
    assert v.holds == check_property(determinize(a), "positive-closed").holds
    if not v.holds:
        assert v.certificate.verify(a)


@settings(max_examples=60, deadline=None)
@given(dfas(max_states=4), st.sampled_from(["positive", "kleene"]))
def test_interior_is_open_and_inside(d, kind):
    inner = interior(d, kind)
    assert subset_of(inner, d)
    assert is_open(inner, kind)
