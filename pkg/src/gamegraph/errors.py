"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GamegraphError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GamegraphError):
    """A graph violates one of the rulegraph/gamegraph invariants."""


class DuplicateLabel(ValidationError):
    def __init__(self, label: str):
        super().__init__(f"duplicate position label {label!r}")
        self.label = label


class UnknownEndpoint(ValidationError):
    def __init__(self, label: str):
        super().__init__(f"arrow endpoint {label!r} is not a position")
        self.label = label


class SelfLoop(ValidationError):
    def __init__(self, label: str):
        super().__init__(f"self-loop at position {label!r}")
        self.label = label


class CycleDetected(ValidationError):
    def __init__(self, cycle: list[str]):
        super().__init__("directed cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class NoSource(ValidationError):
    def __init__(self, message: str = "graph has no source position"):
        super().__init__(message)


class MultipleSources(ValidationError):
    def __init__(self, sources: list[str]):
        super().__init__("graph has several sources: " + ", ".join(sources))
        self.sources = sources


class UnknownPosition(GamegraphError, KeyError):
    def __init__(self, position):
        super().__init__(f"unknown position {position!r}")
        self.position = position

    def __str__(self) -> str:
        return self.args[0]


class LabelMismatch(GamegraphError):
    """Terminal labeling does not cover exactly the terminal positions."""


class NotOptionPreserving(GamegraphError):
    pass


class NotACongruence(GamegraphError):
    pass


class NotRefinement(GamegraphError):
    pass


class NotMembershipClosed(GamegraphError):
    def __init__(self, missing: str):
        super().__init__(f"collection is not membership closed: {missing} is missing")
        self.missing = missing


class BudgetExceeded(GamegraphError):
    pass


class InvalidSpec(GamegraphError):
    pass


class ParseError(GamegraphError):
    def __init__(self, message: str, location: str | None = None):
        text = message if location is None else f"{location}: {message}"
        super().__init__(text)
        self.location = location
