from __future__ import annotations

from typing import Sequence


class InvalidRequestError(Exception):
    pass


class ParseError(InvalidRequestError):
    """Malformed AutomatonFile or ProblemFile text; ``line`` is 1-based, 0 when unknown."""

    def __init__(self, message: str, line: int = 0, source: str = "<string>"):
        self.line: int = line
        self.source: str = source
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")


class InvalidStateError(Exception):
    pass


class DecompositionError(InvalidStateError):
    """The specification is not (two-level) conditionally decomposable for the given alphabets."""

    def __init__(
        self,
        message: str,
        witness: Sequence[str] = (),
        group: int = 0,
        suggestion: str | None = None,
        stage: str | None = None,
    ):
        self.witness: tuple[str, ...] = tuple(witness)
        self.group: int = group
        self.suggestion: str | None = suggestion
        self.stage: str | None = stage
        super().__init__(message)


class GeneralError(Exception):
    pass
