"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed text input (edge list, labeling file, set literal).

    ``line`` is the 1-based line number inside the offending document, or
    None when the error is not tied to a particular line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotBipartiteError(ValueError):
    """Raised by constructions that require a bipartite graph.

    Carries an odd cycle as the refutation certificate.
    """

    def __init__(self, message: str, odd_cycle: tuple[int, ...]):
        self.odd_cycle = odd_cycle
        super().__init__(f"{message} (odd cycle: {' '.join(map(str, odd_cycle))})")


class BudgetExceededError(RuntimeError):
    """Exhaustive search ran out of step budget before covering the space.

    Distinct from a completed search that found nothing: a budget abort
    proves nothing about existence.  ``found`` holds any labelings already
    collected before the abort.
    """

    def __init__(self, steps: int, found: tuple = ()):
        self.steps = steps
        self.found = found
        super().__init__(f"search aborted: step budget exceeded after {steps} steps")
