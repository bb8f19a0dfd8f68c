"""Exception hierarchy shared by every module."""


class LangClosureError(Exception):
    """Base class for all errors raised by this package."""


class SymbolError(LangClosureError, ValueError):
    """A word uses a symbol outside the declared alphabet, or a token is malformed."""


class AlphabetMismatch(LangClosureError, ValueError):
    """Two automata (or an automaton and a word) disagree on the alphabet."""


class BudgetExceeded(LangClosureError):
    """A desk-scale exploration limit was hit.  The input is not at fault."""

    def __init__(self, what, budget):
        super().__init__(f"{what} exceeded budget of {budget}")
        self.budget = budget


class ParseError(LangClosureError, ValueError):
    def __init__(self, message, pos=None, line=None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif pos is not None:
            where = f"position {pos}: "
        super().__init__(where + message)
        self.pos = pos
        self.line = line


class EmptyWordError(LangClosureError, ValueError):
    """The operation is only defined on non-empty words."""


class CommuteError(LangClosureError):
    """The two words commute, so no clopen separator exists."""


class PowerError(LangClosureError):
    """u is a positive power of v, so no open language contains u but not v."""


class EqualWordsError(LangClosureError, ValueError):
    pass


class NotClosedError(LangClosureError, ValueError):
    pass
