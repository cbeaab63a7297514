"""The triangular-cost coin game on a changemaker.

Item i scores ``sigma[i]`` points per copy and its k-th copy costs k coins,
so ``alpha[i]`` copies cost ``alpha[i] * (alpha[i] + 1) / 2``.  ``T_m`` is the
best score affordable with m coins; the relevant coefficients ``V_i`` are
its inverse staircase, ``V_i = min{m : T_m >= i}``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .core import Changemaker, InvalidInput, even_equal_partition


def _entries(sigma) -> list[int]:
    vals = list(sigma.entries if isinstance(sigma, Changemaker) else sigma)
    if any(v < 1 for v in vals):
        raise InvalidInput("item values must be positive")
    return vals


def _check_budget(m: int) -> None:
    if m < 0:
        raise InvalidInput(f"coin budget must be non-negative, got {m}")


def plan_cost(alpha: Sequence[int]) -> int:
    return sum(a * (a + 1) // 2 for a in alpha)


def plan_value(sigma, alpha: Sequence[int]) -> int:
    return sum(s * a for s, a in zip(_entries(sigma), alpha))


def t_sigma_sweep(sigma, m: int) -> list[int]:
    """``[T_0, ..., T_m]``: best score with budget at most each m."""
    _check_budget(m)
    return kernels.t_sweep(_entries(sigma), m)


def t_sigma(sigma, m: int) -> int:
    return t_sigma_sweep(sigma, m)[m]


def t_sigma_exact_sweep(sigma, m: int) -> list[int | None]:
    """Best score when exactly m coins are spent; None where no plan costs m."""
    _check_budget(m)
    row = kernels.t_sweep(_entries(sigma), m, exact=True)
    return [v if v >= 0 else None for v in row]


def t_sigma_rational(sigma, m: int) -> Fraction:
    """Optimum of the fractional game, by the greedy over coin-per-point ratios.

    The k-th copy of item i is an option costing k coins for ``sigma[i]``
    points.  Options are bought cheapest ratio ``k / sigma[i]`` first; the
    last one is bought fractionally.  Ties may be broken arbitrarily since
    only the optimal value is returned.
    """
    _check_budget(m)
    vals = _entries(sigma)
    heap = [(Fraction(1, v), i, 1) for i, v in enumerate(vals)]
    heapq.heapify(heap)
    left = Fraction(m)
    score = Fraction(0)
    while left > 0:
        _, i, k = heapq.heappop(heap)
        if k <= left:
            left -= k
            score += vals[i]
            heapq.heappush(heap, (Fraction(k + 1, vals[i]), i, k + 1))
        else:
            score += left / k * vals[i]
            left = Fraction(0)
    return score


def count_plans(m: int) -> int:
    """Number of non-increasing positive vectors alpha with sum alpha_j(alpha_j+1) <= 2m.

    The empty vector is counted; with that convention m=100 and m=200 give
    157452 and 13552451.
    """
    _check_budget(m)
    return sum(kernels.plan_counts(m))


@dataclass(frozen=True)
class SigmaRelevantTable:
    """``V^sigma_1 .. V^sigma_p`` for one changemaker; larger indices follow by periodicity."""

    sigma: Changemaker
    base: tuple[int, ...]
    p: int = field(init=False)
    l1: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "p", self.sigma.p)
        object.__setattr__(self, "l1", self.sigma.l1)

    def __getitem__(self, i: int) -> int:
        return v_sigma(self, i)


def staircase(t_row: Sequence[int], count: int) -> list[int]:
    """Invert a non-decreasing T-row: ``out[i-1] = min{m : T_m >= i}`` for i = 1..count."""
    out = []
    m = 0
    for i in range(1, count + 1):
        while m < len(t_row) and t_row[m] < i:
            m += 1
        if m == len(t_row):
            raise InvalidInput(f"T-row too short to locate index {i}")
        out.append(m)
    return out


def v_sigma_table(sigma: Changemaker) -> SigmaRelevantTable:
    p, l1 = sigma.p, sigma.l1
    row = t_sigma_sweep(sigma, (p + l1) // 2)
    return SigmaRelevantTable(sigma, tuple(staircase(row, p)))


def v_sigma(table: SigmaRelevantTable, i: int) -> int:
    """``V^sigma_i`` via ``V_{xp+k} = (x^2 p + x l1)/2 + x k + V_k`` with ``V_0 = 0``."""
    if i < 0:
        raise InvalidInput("index must be non-negative")
    if i == 0:
        return 0
    p, l1 = table.p, table.l1
    x, k = divmod(i, p)
    vk = table.base[k - 1] if k else 0
    if x == 0:
        return vk
    return (x * x * p + x * l1) // 2 + x * k + vk


def v_sigma_direct(sigma, indices: Iterable[int]) -> list[int]:
    """``V^sigma_i`` for each index straight from an exact T sweep (no periodicity)."""
    idx = list(indices)
    top = max(idx, default=0)
    vals = _entries(sigma)
    p, l1 = sum(v * v for v in vals), sum(vals)
    x = -(-top // p)  # T reaches x*p at budget (x^2 p + x l1)/2
    row = t_sigma_sweep(vals, (x * x * p + x * l1) // 2)
    stairs = [0] + staircase(row, top)
    return [stairs[i] for i in idx]


@dataclass
class StructureReport:
    sigma: tuple[int, ...]
    x_max: int
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "x_max": self.x_max, "ok": self.ok,
                "checks": dict(self.checks), "notes": {k: str(v) for k, v in self.notes.items()}}


def verify_structure(sigma: Changemaker, x_max: int = 2) -> StructureReport:
    """Evaluate the periodicity identities and the half-period bounds of ``V^sigma``.

    Everything is computed from exact T sweeps, independently of the
    closed form used by :func:`v_sigma`, and then compared with it.
    """
    if x_max < 1:
        raise InvalidInput("x_max must be >= 1")
    p, l1, odd = sigma.p, sigma.l1, sigma.odd_count
    top_x = x_max + 1
    budget = (top_x * top_x * p + top_x * l1) // 2
    row = t_sigma_sweep(sigma, budget)
    V = [0] + staircase(row, top_x * p)
    rep = StructureReport(sigma.entries, x_max)
    ck = rep.checks

    for x in range(1, x_max + 1):
        plus = (x * x * p + x * l1) // 2
        minus = (x * x * p - x * l1) // 2
        ck[f"T at (x^2p+x|s|)/2 = xp [x={x}]"] = row[plus] == x * p
        ck[f"T at (x^2p-x|s|)/2 = xp-|s| [x={x}]"] = row[minus] == x * p - l1
        ck[f"V_xp = (x^2p+x|s|)/2 [x={x}]"] = V[x * p] == plus
        ck[f"V_(xp-|s|) = (x^2p-x|s|)/2 [x={x}]"] = V[x * p - l1] == minus
        ck[f"V_a - V_(a-1) <= x for 0<a<=xp [x={x}]"] = all(
            V[a] - V[a - 1] <= x for a in range(1, x * p + 1))
        ck[f"V_(a+1) - V_a >= x for a>=xp-|s| [x={x}]"] = all(
            V[a + 1] - V[a] >= x for a in range(max(x * p - l1, 0), top_x * p))

    table = SigmaRelevantTable(sigma, tuple(V[1:p + 1]))
    ck["periodic closed form matches sweep"] = all(
        v_sigma(table, i) == V[i] for i in range(top_x * p + 1))

    if p % 2 == 0:
        ck["half-period value (p even)"] = V[(2 * p - l1) // 2] == p // 2
    else:
        ck["half-period value (p odd)"] = V[(2 * p - l1 - 1) // 2] == (p - 1) // 2
    mid = V[(p - l1) // 2]
    lower = Fraction(p - odd, 8)
    upper = Fraction(p + 3 * odd, 8)
    split = even_equal_partition(sigma)
    ck["quarter value lower bound"] = mid >= lower
    ck["quarter value equality iff even split"] = (mid == lower) == split
    ck["quarter value upper bound"] = mid <= upper
    rep.notes.update({"V_(p-|s|)/2": mid, "lower": lower, "upper": upper,
                      "even_equal_partition": split})
    return rep
