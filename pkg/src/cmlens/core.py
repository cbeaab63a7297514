"""Changemaker vectors and the subset-sum predicates built on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


class CapacityError(ValueError):
    """Raised when an exhaustive routine is asked for more than it can enumerate."""


ORACLE_MAX_DIM = 25


def _as_positive_ints(entries: Iterable[int]) -> list[int]:
    vals = list(entries)
    if not vals:
        raise InvalidInput("empty vector")
    for v in vals:
        if isinstance(v, bool) or int(v) != v:
            raise InvalidInput(f"non-integer entry {v!r}")
        if v < 1:
            raise InvalidInput(f"entries must be positive, got {v}")
    return [int(v) for v in vals]


def _covers_interval(sorted_increasing: list[int]) -> bool:
    reach = 0
    for v in sorted_increasing:
        if v > reach + 1:
            return False
        reach += v
    return True


def is_changemaker(entries: Iterable[int]) -> bool:
    """True iff every integer in ``[0, sum(entries)]`` is a subset sum.

    Uses the prefix criterion: sorted increasingly, each entry is at most
    one more than the sum of those before it.
    """
    return _covers_interval(sorted(_as_positive_ints(entries)))


def reachable_sums(entries: Iterable[int]) -> set[int]:
    """Exact set of subset sums by exhaustive enumeration (oracle, dim <= 25)."""
    vals = _as_positive_ints(entries)
    if len(vals) > ORACLE_MAX_DIM:
        raise CapacityError(f"dimension {len(vals)} exceeds oracle limit {ORACLE_MAX_DIM}")
    out = set()
    for size in range(len(vals) + 1):
        for combo in combinations(vals, size):
            out.add(sum(combo))
    return out


@dataclass(frozen=True)
class Changemaker:
    """A changemaker vector, stored non-increasing."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        vals = _as_positive_ints(entries)
        vals.sort(reverse=True)
        if not _covers_interval(vals[::-1]):
            raise InvalidInput(f"{tuple(vals)} is not a changemaker vector")
        object.__setattr__(self, "entries", tuple(vals))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def p(self) -> int:
        return sum(v * v for v in self.entries)

    @property
    def l1(self) -> int:
        return sum(self.entries)

    @property
    def odd_count(self) -> int:
        return sum(v & 1 for v in self.entries)

    def to_json(self) -> dict:
        return {"sigma": list(self.entries)}

    @classmethod
    def from_json(cls, data) -> "Changemaker":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict):
            if "sigma" not in data:
                raise InvalidInput("changemaker JSON needs a 'sigma' key")
            data = data["sigma"]
        if not isinstance(data, list):
            raise InvalidInput("changemaker JSON must be a list or {'sigma': [...]}")
        return cls(data)


def derived_scalars(sigma: Changemaker) -> tuple[int, int, int]:
    """``(p, l1_norm, odd_count)`` = (sum of squares, sum, number of odd entries)."""
    return sigma.p, sigma.l1, sigma.odd_count


def even_equal_partition(sigma: Changemaker | Iterable[int]) -> bool:
    """Whether the even entries split into two sub-multisets of equal sum."""
    evens = [v for v in sigma if v % 2 == 0]
    total = sum(evens)
    if total % 2:
        return False
    half = total // 2
    reach = 1  # bit s set <=> s is a subset sum
    for v in evens:
        reach |= reach << v
    return bool((reach >> half) & 1)
