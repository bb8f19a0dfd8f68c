"""Closed, open and clopen formal languages under positive and Kleene closure."""

from .automata import (
    Alphabet,
    Dfa,
    Nfa,
    boolean_combine,
    closure,
    complement,
    concatenate,
    determinize,
    equivalent,
    format_word,
    minimize,
    parse_automaton,
    parse_word,
    run,
    shortest_accepted,
)
from .closure_check import (
    Counterexample,
    Verdict,
    build_counterexample_nfa,
    check_nfa_closed,
    check_property,
    interior,
    shortest_counterexample,
)
from .generators import WitnessSpec, witness_automaton
from .langexpr import member, oracle_check, parse_expr, serialize_expr
from .laws import CompactLang, compact_union, is_compact, join, meet, run_law_suite
from .separation import distinguish_open, separate_clopen, separate_open, separate_open_pair
from .words import commutes, connected, connected_components, power_exponent, primitive_root

__version__ = "0.1.0"
