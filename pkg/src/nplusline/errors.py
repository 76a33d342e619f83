"""Exception types shared across the package."""

from __future__ import annotations


class NPlusLineError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(NPlusLineError, ValueError):
    """Malformed graph data or invalid operation arguments."""


class ContractError(NPlusLineError, ValueError):
    """A precondition of an operation does not hold for the given input.

    ``predicate`` names the failed check; ``node`` is a violating node when
    one can be named (for hypomatchability, a node whose deletion leaves a
    graph without perfect matching).
    """

    def __init__(self, message: str, predicate: str | None = None, node: int | None = None):
        super().__init__(message)
        self.predicate = predicate
        self.node = node


class ResourceLimitError(NPlusLineError, RuntimeError):
    """Input exceeds a configured desk-scale limit."""

    def __init__(self, message: str, limit: int | None = None, size: int | None = None):
        super().__init__(message)
        self.limit = limit
        self.size = size
