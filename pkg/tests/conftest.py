import pytest
from hypothesis import strategies as st

from langclosure.automata import Alphabet, Dfa, Nfa, concatenate, determinize, from_words, letters_plus

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


@st.composite
def dfas(draw, max_states=5, alphabets=(AB, ABC)):
    alphabet = draw(st.sampled_from(alphabets))
    n = draw(st.integers(1, max_states))
    k = len(alphabet)
    delta = [[draw(st.integers(0, n - 1)) for _ in range(k)] for _ in range(n)]
    finals = draw(st.sets(st.integers(0, n - 1), max_size=n))
    return Dfa(alphabet, delta, 0, finals)


@st.composite
def nfas(draw, max_states=4, alphabet=AB):
    n = draw(st.integers(1, max_states))
    moves = []
    for _ in range(n):
        row = {}
        for sym in alphabet.symbols + (None,):
            targets = draw(st.frozensets(st.integers(0, n - 1), max_size=n))
            if targets:
                row[sym] = targets
        moves.append(row)
    initials = draw(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=n))
    finals = draw(st.frozensets(st.integers(0, n - 1), max_size=n))
    return Nfa(alphabet, n, initials, finals, moves)


def words_over(alphabet=AB, min_size=0, max_size=6):
    return st.lists(st.sampled_from(alphabet.symbols), min_size=min_size, max_size=max_size).map(tuple)


def all_words(alphabet, max_len, min_len=0):
    return list(alphabet.words_upto(max_len, min_len))


def a_plus_b_plus():
    """Minimal DFA for {a}⁺{b}⁺."""
    return determinize(concatenate(letters_plus("a", AB), letters_plus("b", AB)))


def shortest_in_square_minus(d: Dfa, max_len: int):
    """Brute force: shortest word of (L·L) \\ L up to max_len, or None."""
    members = {w for w in d.alphabet.words_upto(max_len) if d.accepts(w)}
    for length in range(max_len + 1):
        for w in d.alphabet.words(length):
            if d.accepts(w):
                continue
            if any(w[:i] in members and w[i:] in members for i in range(length + 1)):
                return w
    return None


@pytest.fixture
def ab():
    return AB


@pytest.fixture
def abplus():
    return a_plus_b_plus()


@pytest.fixture
def finite_ab():
    return from_words([("a", "b")], AB)


def pairs_upto(alphabet, total):
    """All (u, v) with u, v non-empty and |u| + |v| <= total."""
    for lu in range(1, total):
        for lv in range(1, total - lu + 1):
            for u in alphabet.words(lu):
                for v in alphabet.words(lv):
                    yield u, v


# --- acceptance report ------------------------------------------------------------

_ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance_log():
    """Collects one verdict line per acceptance criterion for the terminal summary."""
    def record(line):
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
