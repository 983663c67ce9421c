"""Outcome types returned by the bounded checks.

Every bounded procedure returns one of these small frozen records rather
than a bare boolean, so that a negative answer always carries its witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

Word = Tuple[str, ...]


def format_word(word) -> str:
    return "·".join(word) if word else "ε"


@dataclass(frozen=True)
class OkUpTo:
    bound: int

    def __str__(self):
        return f"OkUpTo({self.bound})"


@dataclass(frozen=True)
class AmbiguousWitness:
    word: Word
    first: "object"  # Run
    second: "object"  # Run
    first_indices: Tuple[int, ...] = ()
    second_indices: Tuple[int, ...] = ()

    def __str__(self):
        return f"AmbiguousWitness({format_word(self.word)})"


@dataclass(frozen=True)
class Counterexample:
    word: Word

    def __str__(self):
        return f"Counterexample({format_word(self.word)})"


@dataclass(frozen=True)
class EqualUpTo:
    bound: int

    def __str__(self):
        return f"EqualUpTo({self.bound})"


@dataclass(frozen=True)
class Distinguished:
    word: Word
    in_first: bool

    def __str__(self):
        return f"Distinguished({format_word(self.word)}, in_first={self.in_first})"


@dataclass(frozen=True)
class ContainedUpTo:
    bound: int

    def __str__(self):
        return f"ContainedUpTo({self.bound})"


@dataclass(frozen=True)
class Witness:
    word: Word

    def __str__(self):
        return f"Witness({format_word(self.word)})"


@dataclass(frozen=True)
class SpoilerWins:
    depth: int
    witness: Word

    def __str__(self):
        return f"SpoilerWins({self.depth}, {format_word(self.witness)})"


@dataclass(frozen=True)
class NoRefutationUpTo:
    """No Spoiler win exists within ``depth`` rounds. Not a proof of simulation."""

    depth: int

    def __str__(self):
        return f"NoRefutationUpTo({self.depth})"


@dataclass(frozen=True)
class FailureAt:
    """The resolver returned no transition for the ``position``-th letter (1-based)."""

    position: int
    prefix_run: Optional[object] = None

    def __str__(self):
        return f"FailureAt({self.position})"
