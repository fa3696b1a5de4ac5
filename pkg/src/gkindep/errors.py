"""Exception types shared across the package."""
from __future__ import annotations


class GkError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GkError):
    """Malformed edge-list input. Carries the 1-based offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class SelfLoopError(ParseError):
    """An edge joins a vertex to itself (forbidden in simple graphs)."""


class DuplicateEdgeError(ParseError):
    """The same unordered edge appears more than once."""


class RangeError(GkError):
    """A vertex id falls outside 0..n-1."""


class ParameterError(GkError):
    """A numeric parameter violates its precondition (e.g. k < 2)."""


class CyclicInputError(GkError):
    """An operation requiring a forest received a graph with a cycle."""


class NotATreeError(GkError):
    """An operation requiring a single tree received something else."""


class TooLargeError(GkError):
    """Input exceeds the hard size limit of the brute-force oracle."""


class NotExtremalError(GkError):
    """The equality-case refinement was asked for on a non-extremal graph."""


class RefinementFailure(GkError):
    """The equality-case refinement could not validate its output.

    Unreachable for graphs that pass the extremal recognizer; raised instead
    of silently returning an invalid set.
    """


class InternalGuaranteeViolation(GkError):
    """The constructor produced a set below its proven size guarantee.

    Signals an implementation bug, never a property of the input.
    """


class BudgetExhausted(GkError):
    """The exact solver hit its node budget before proving optimality.

    Carries the best incumbent found so far; ``incumbent.alpha`` is a valid
    lower bound on the true value but optimality is unproven.
    """

    def __init__(self, incumbent, nodes_explored: int):
        super().__init__(
            f"node budget exhausted after {nodes_explored} nodes "
            f"(best incumbent alpha={incumbent.alpha})"
        )
        self.incumbent = incumbent
        self.nodes_explored = nodes_explored
