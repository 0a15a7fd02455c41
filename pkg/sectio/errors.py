"""Exception types raised by the engine."""
from typing import Iterable, Optional, Union


class SectioError(Exception):
    """Base class for every error raised by sectio."""


class OrderCapExceeded(SectioError, ValueError):
    """A construction would exceed the configured order cap."""

    def __init__(self, order: Union[int, str], cap: int):
        super().__init__(f"Group order {order} exceeds the order cap {cap}")
        self.order = order
        self.cap = cap


class InvalidParameter(SectioError, ValueError):
    """A constructor or operation received an out-of-range parameter."""


class InvalidGroupTable(SectioError, ValueError):
    """A Cayley table violates a group axiom."""


class InvalidHomomorphism(SectioError, ValueError):
    """An image array is not a homomorphism between the given groups."""


class InvalidAction(SectioError, ValueError):
    """An action table is not an action by automorphisms."""


class NotNormal(SectioError, ValueError):
    """A quotient was requested by a subgroup that is not normal."""


class CodomainMismatch(SectioError, ValueError):
    """Two homomorphisms that must share a codomain do not."""


class ParentMismatch(SectioError, ValueError):
    """A subgroup does not belong to the group an operation expects."""


class NotAbelian(SectioError, ValueError):
    """An operation requires an abelian group."""


class KernelNotAbelian(NotAbelian):
    """An extension-theoretic operation requires an abelian kernel."""


class NotSurjective(SectioError, ValueError):
    """An operation requires an epimorphism."""


class SearchBudgetExceeded(SectioError):
    """A backtracking search exhausted its node budget before finishing."""

    def __init__(self, search: str, budget: int):
        super().__init__(f"{search} exceeded its budget of {budget} nodes")
        self.search = search
        self.budget = budget


class BudgetExceeded(SearchBudgetExceeded):
    """A cochain search space is larger than the coboundary budget."""


class ExpressionSyntaxError(SectioError, ValueError):
    """A group or homomorphism expression does not parse."""

    def __init__(self, offset: int, expected: Iterable[str], found: Optional[str] = None):
        self.offset = offset
        self.expected = sorted(set(expected))
        self.found = found
        what = f"found {found!r}" if found else "found end of input"
        super().__init__(
            f"Syntax error at offset {offset}: expected one of {', '.join(self.expected)}; {what}"
        )


class ElaborationError(SectioError, ValueError):
    """A well-formed expression does not denote a valid group or homomorphism."""
