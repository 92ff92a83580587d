class SpiderEkrError(Exception):
    """Base class of every error raised by the library."""


class InvalidDescriptor(SpiderEkrError, ValueError):
    """A leg sequence or a tree file that does not describe a valid input."""


class CoordinateRangeError(SpiderEkrError, IndexError):
    """A vertex id or a spider coordinate out of range."""


class NotATree(SpiderEkrError, ValueError):
    """A graph handed to a tree-only routine is disconnected or cyclic."""


class CountOverflow(SpiderEkrError, ArithmeticError):
    """
    A count does not fit in the configured width.

    Counts are python integers, so nothing wraps silently; we refuse
    values the 64-bit contract cannot carry.
    """


class ContractError(SpiderEkrError, ValueError):
    """The input of a map does not satisfy its precondition."""


class ImpossibleCase(SpiderEkrError):
    """A branch of the best-leaf map whose domain is provably empty."""


class InjectionAssertion(SpiderEkrError, AssertionError):
    """A map produced a set violating its postcondition."""


class BudgetExceeded(SpiderEkrError):
    """The clique search would go past its family or node budget."""

    def __init__(self, message, kind='nodes', limit=None):
        super(BudgetExceeded, self).__init__(message)
        self.kind = kind
        self.limit = limit
