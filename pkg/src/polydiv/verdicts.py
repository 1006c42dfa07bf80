"""Shared verdict vocabulary.

Unknown is a first-class answer, reserved for questions that are genuinely
undecidable from the given data (torsion or principality on an abstract base),
never a synonym for "not computed".
"""

from __future__ import annotations

from enum import Enum


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "not_applicable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value
