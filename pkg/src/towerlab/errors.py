"""Exception types shared across the library.

Each exception carries a stable machine-readable ``code`` used by the CLI
error envelope, so library users and the command line report failures the
same way.
"""

from __future__ import annotations


class TowerlabError(ValueError):
    """Base class for all towerlab errors."""

    code = "ERROR"


class DomainError(TowerlabError):
    """An input lies outside the documented domain of an operation."""

    code = "DOMAIN"


class ConditionViolated(TowerlabError):
    """A constructive witness precondition failed.

    ``condition`` is one of the stable tokens ``"not-prime"``,
    ``"m-equals-n"``, ``"p-divides-m"``, ``"p-divides-n"`` naming the exact
    condition that failed; the message is the human-readable form.
    """

    code = "CONDITION_VIOLATED"

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class OutOfInterval(TowerlabError):
    """The rational target lies outside (or too close to the edge of) the
    interval on which the rational/irrational dichotomy is established."""

    code = "OUT_OF_INTERVAL"
