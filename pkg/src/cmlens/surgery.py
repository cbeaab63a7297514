"""Slope bounds, changemaker reconstruction from relevant data, and the one-family analysis.

Everything here is a necessary-condition filter: a candidate that survives
is combinatorially consistent with the knot data, nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from . import kernels
from .coin_game import staircase, t_sigma_exact_sweep, t_sigma_sweep
from .core import Changemaker, InvalidInput, even_equal_partition
from .knot import RelevantView, VSequence, extract_relevant, relevant_offset


class MissingBound(InvalidInput):
    """r = 1 reconstruction was asked for without any bound on p."""


@dataclass(frozen=True)
class SlopeCandidate:
    r: int
    p: int
    sigma: Changemaker | None = None

    @property
    def slope(self) -> int:
        return self.r * self.r * self.p

    def to_json(self) -> dict:
        out = {"r": self.r, "p": self.p, "slope": self.slope}
        if self.sigma is not None:
            out["sigma"] = list(self.sigma.entries)
        return out


# --- slope bounds -----------------------------------------------------------

@dataclass(frozen=True)
class SlopeWindow:
    """Admissible values of the slope ``r^2 p``; ``slope_max`` is None when unbounded."""

    r: int
    nu_plus: int
    slope_min: int
    slope_max: int | None

    @property
    def bounded(self) -> bool:
        return self.slope_max is not None

    def p_values(self, p_max: int | None = None) -> list[int]:
        r2 = self.r * self.r
        hi = self.slope_max // r2 if self.bounded else None
        if p_max is not None:
            hi = p_max if hi is None else min(hi, p_max)
        if hi is None:
            raise MissingBound("slope window is unbounded; supply p_max")
        lo = max(1, -(-self.slope_min // r2))
        return list(range(lo, hi + 1))

    def to_json(self) -> dict:
        return {"r": self.r, "nu_plus": self.nu_plus, "slope_min": self.slope_min,
                "slope_max": self.slope_max, "unbounded": not self.bounded}


def slope_window(nu_plus: int, r: int) -> SlopeWindow:
    """``2 nu+ + r <= r^2 p``; above, ``4 nu+ + 5`` for r >= 2, sharpened for r >= 3."""
    if nu_plus < 0 or r < 1:
        raise InvalidInput("need nu_plus >= 0 and r >= 1")
    lo = 2 * nu_plus + r
    if r == 1:
        return SlopeWindow(r, nu_plus, lo, None)
    hi = 4 * nu_plus + 5
    if r >= 3:
        hi = min(hi, (2 * r * r * nu_plus) // ((r - 1) * (r - 2)))
    return SlopeWindow(r, nu_plus, lo, hi)


@dataclass(frozen=True)
class Verdict:
    name: str
    holds: bool
    lower: object
    value: object
    upper: object
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"check": self.name, "holds": self.holds, "lower": str(self.lower),
               "value": str(self.value), "upper": str(self.upper)}
        out.update({k: v for k, v in self.detail.items()})
        return out


def check_slope_vs_l1(sigma: Changemaker, r: int, nu_plus: int) -> Verdict:
    """``2 nu+ <= r^2 p - r |sigma|_1 <= 2 nu+ + 2(r-1)``."""
    val = r * r * sigma.p - r * sigma.l1
    lo, hi = 2 * nu_plus, 2 * nu_plus + 2 * (r - 1)
    return Verdict("slope_vs_l1", lo <= val <= hi, lo, val, hi)


def check_thm61(sigma: Changemaker, r: int, v0: int) -> Verdict:
    """Compare the slope with ``8 V_0`` according to the parities of r and p."""
    if r < 1 or v0 < 0:
        raise InvalidInput("need r >= 1 and v0 >= 0")
    slope = r * r * sigma.p
    eight = 8 * v0
    if r % 2 == 0 and sigma.p % 2 == 0:
        return Verdict("slope_vs_8V0", slope == eight, eight, slope, eight,
                       {"case": "r even, p even"})
    if r % 2 == 0:
        lo, hi = eight - 2 * r, eight + 2 * r
        return Verdict("slope_vs_8V0", lo <= slope <= hi, lo, slope, hi,
                       {"case": "r even, p odd"})
    odd = sigma.odd_count
    lo, hi = eight - 3 * odd, eight + odd
    split = even_equal_partition(sigma)
    at_top = slope == hi
    return Verdict("slope_vs_8V0", lo <= slope <= hi and at_top == split, lo, slope, hi,
                   {"case": "r odd", "upper_attained": at_top,
                    "even_equal_partition": split, "equality_criterion_ok": at_top == split})


def count_bound(r: int) -> int:
    if r < 1:
        raise InvalidInput("r must be >= 1")
    if r == 1:
        return 3
    return 2 if r % 2 == 0 else 1


def feasible_r(sigma: Changemaker, nu_plus: int) -> set[int]:
    """All r with ``r^2 p - r |sigma|_1`` inside ``[2 nu+, 2 nu+ + 2(r-1)]``."""
    p, l1 = sigma.p, sigma.l1
    out = set()
    r = 1
    while True:
        val = r * r * p - r * l1
        if 2 * nu_plus <= val <= 2 * nu_plus + 2 * (r - 1):
            out.add(r)
        # val - 2(r-1) is non-decreasing from r = 2 on
        if r >= 2 and val - 2 * (r - 1) > 2 * nu_plus:
            return out
        r += 1


# --- reconstruction -----------------------------------------------------------

def expected_l1(r: int, p: int, nu_rel: int) -> int:
    """``|sigma|_1`` forced by the count of non-zero relevant coefficients."""
    return r * p - 2 * nu_rel - (1 if (r % 2 == 0 and p % 2 == 1) else 0)


def _parity_ok(view: RelevantView, p: int) -> bool:
    if view.r % 2:
        return True
    return (p % 2 == 1) == (view.p_parity == "odd")


def _search(view: RelevantView, p: int, l1: int, memo: dict | None = None) -> list[Changemaker]:
    """DFS over shapes with incremental T rows pruned against ``T^rel``.

    Rows depend only on the prefix of entries, so ``memo`` can be shared
    between calls for different p on the same view.
    """
    memo = {} if memo is None else memo
    v0 = view.v0
    strict_top = view.r >= 2  # equality also at m = V_0
    horizon = v0 if strict_top else v0 - 1
    target = [view.t_rel(m) for m in range(horizon + 1)] if horizon >= 0 else []
    found: list[Changemaker] = []
    entries: list[int] = []

    def rec(prefix: int, sq_left: int, cap: int, row):
        left = l1 - prefix
        if left == 0:
            if sq_left == 0 and list(row) == target:
                found.append(Changemaker(entries))
            return
        if sq_left < left:
            return
        lo = max(1, -(-sq_left // left))
        hi = min(cap, left, isqrt(sq_left), (l1 + 1 - prefix) // 2)
        for x in range(hi, lo - 1, -1):
            entries.append(x)
            key = tuple(entries)
            if key not in memo:
                nxt = kernels.add_item(row, x) if target else row
                # later entries are <= x, so each further coin adds at most x points
                memo[key] = (nxt, bool(target) and kernels.row_check(nxt, target, x) != 0)
            nxt, dead = memo[key]
            if not dead:
                rec(prefix + x, sq_left - x * x, x, nxt)
            entries.pop()

    rec(0, p, p, kernels.empty_row(horizon, False) if target else [])
    if not strict_top:
        nu = view.nu_plus_rel
        kept = []
        for sig in found:
            best = t_sigma_exact_sweep(sig, v0)[v0]
            if best is not None and best >= nu:
                kept.append(sig)
        found = kept
    return found


def candidate_ps(view: RelevantView, p_hint: int | None = None,
                 p_max: int | None = None) -> list[int]:
    if p_hint is not None:
        if p_hint < 1:
            raise InvalidInput("p_hint must be positive")
        ps = [p_hint]
    else:
        win = slope_window(view.nu_plus, view.r)
        if not win.bounded and p_max is None:
            raise MissingBound("r = 1 needs p_hint or p_max")
        ps = win.p_values(p_max)
    return [p for p in ps if _parity_ok(view, p)]


def reconstruct_sigma(view: RelevantView, p_hint: int | None = None,
                      p_max: int | None = None) -> list[tuple[int, Changemaker]]:
    """Every changemaker consistent with the relevant data, sorted by p then entries."""
    out = []
    memo: dict = {}
    for p in candidate_ps(view, p_hint, p_max):
        l1 = expected_l1(view.r, p, view.nu_plus_rel)
        if l1 < 1 or l1 > p or (p - l1) % 2:
            continue
        out.extend((p, s) for s in _search(view, p, l1, memo))
    out.sort(key=lambda ps: (ps[0], ps[1].entries))
    return out


def predicted_view_ok(view: RelevantView, sigma: Changemaker) -> bool:
    """Re-check a reconstructed candidate against the view from scratch."""
    if not _parity_ok(view, sigma.p):
        return False
    if expected_l1(view.r, sigma.p, view.nu_plus_rel) != sigma.l1:
        return False
    v0 = view.v0
    row = t_sigma_sweep(sigma, v0)
    if any(row[m] != view.t_rel(m) for m in range(v0)):
        return False
    if view.r >= 2:
        return row[v0] == view.nu_plus_rel
    best = t_sigma_exact_sweep(sigma, v0)[v0]
    return best is not None and best >= view.nu_plus_rel


# --- the (4s+3, 2s+1, s+1, s, 1^s) family -----------------------------------------

@dataclass(frozen=True)
class FamilyX:
    s: int

    def __post_init__(self):
        if self.s < 2:
            raise InvalidInput(f"family parameter must be >= 2, got {self.s}")

    @property
    def sigma(self) -> Changemaker:
        s = self.s
        return Changemaker([4 * s + 3, 2 * s + 1, s + 1, s] + [1] * s)

    @property
    def p(self) -> int:
        return 22 * self.s ** 2 + 31 * self.s + 11

    @property
    def l1(self) -> int:
        return 9 * self.s + 5

    def b_range(self) -> tuple[int, int]:
        s = self.s
        return 11 * s * s - 33 * s + 25, 11 * s * s + 11 * s + 3


def family_sigma(s: int) -> Changemaker:
    return FamilyX(s).sigma


def family_statistics(v: VSequence) -> tuple[int, int | None]:
    """``a = #{i : 296 <= V_i <= 300}`` and the largest b taken by at least a/2 indices."""
    a = v.count_between(300, 295)
    if a == 0:
        return 0, None
    counts: dict[int, int] = {}
    for val in v.values:
        counts[val] = counts.get(val, 0) + 1
    good = [val for val, c in counts.items() if 2 * c >= a]
    return a, max(good) if good else None


def family_recover_s(v: VSequence, mode: str) -> list[int]:
    """Family parameters consistent with the V-sequence, for r = 1 or for r >= 2 (s >= 5)."""
    if mode == "r1":
        ones = sum(1 for val in v.values if val == 1)
        s, rem = divmod(ones - 3, 4)
        return [s] if rem == 0 and s >= 2 else []
    if mode != "rge2":
        raise InvalidInput(f"mode must be 'r1' or 'rge2', got {mode!r}")
    a, b = family_statistics(v)
    if b is None:
        return []
    # a must sit strictly between 4r and 6r for some r >= 2
    if not any(4 * r < a < 6 * r for r in range(2, a // 4 + 1)):
        return []
    base = isqrt(b // 11)
    out = []
    for s in (base, base + 1, base + 2):
        if s < 5:
            continue
        lo, hi = FamilyX(s).b_range()
        if lo <= b <= hi:
            out.append(s)
    return out


def family_recover_all(v: VSequence) -> list[int]:
    """Union over both modes plus the unconstrained small parameters 2, 3, 4."""
    return sorted(set(family_recover_s(v, "r1")) | set(family_recover_s(v, "rge2")) | {2, 3, 4})


@dataclass
class FamilyReport:
    s: int
    values: dict[str, int] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"s": self.s, "ok": self.ok, "values": dict(self.values), "checks": dict(self.checks)}


def verify_family_T(s: int) -> FamilyReport:
    if s < 5:
        raise InvalidInput("the family identities are stated for s >= 5")
    fam = FamilyX(s)
    m_lo = 11 * s * s - 33 * s + 24
    row = t_sigma_sweep(fam.sigma, max(300, m_lo + 1))
    rep = FamilyReport(s)
    rep.values.update({"T_295": row[295], "T_300": row[300],
                       f"T_{m_lo}": row[m_lo], f"T_{m_lo + 1}": row[m_lo + 1]})
    rep.checks["T_295 = 110s+75"] = row[295] == 110 * s + 75
    rep.checks["T_300 = 110s+80"] = row[300] == 110 * s + 80
    rep.checks["T_(11s^2-33s+24) <= 22s^2-22s-28"] = row[m_lo] <= 22 * s * s - 22 * s - 28
    rep.checks["T_(11s^2-33s+25) >= 22s^2-22s-24"] = row[m_lo + 1] >= 22 * s * s - 22 * s - 24
    return rep


# --- synthetic knot data ------------------------------------------------------

@dataclass(frozen=True)
class SyntheticV:
    v: VSequence | None
    r: int
    p_parity: str
    nu_rel: int
    testable: bool
    reason: str = ""


def synthetic_v_sequence(sigma: Changemaker, r: int) -> SyntheticV:
    """A V-sequence whose relevant samples at spacing r are exactly those predicted by sigma.

    ``V^rel_i = V^sigma_(nu_rel - i)``; between samples the sequence drops as
    early as allowed, and indices before the first sample repeat it.  If two
    consecutive samples differ by more than r no admissible filling exists.
    """
    if r < 1:
        raise InvalidInput("r must be >= 1")
    p, l1 = sigma.p, sigma.l1
    parity = "odd" if p % 2 else "even"
    num = r * p - l1 - (1 if (r % 2 == 0 and p % 2) else 0)
    nu = num // 2
    if nu < 0:
        return SyntheticV(None, r, parity, nu, False, "negative relevant count")
    stairs = [0] + staircase(t_sigma_sweep(sigma, _budget_for(sigma, nu)), nu) if nu else [0]
    rel = [stairs[nu - i] for i in range(nu)] + [0]
    off = relevant_offset(r, p % 2 == 1)
    vals = [rel[0]] * off
    for i in range(len(rel) - 1):
        a, b = rel[i], rel[i + 1]
        if a - b > r:
            return SyntheticV(None, r, parity, nu, False,
                              f"gap {a - b} between samples exceeds spacing {r}")
        vals.extend(max(a - j, b) for j in range(r))
    vals.append(0)
    return SyntheticV(VSequence(vals), r, parity, nu, True)


def _budget_for(sigma: Changemaker, count: int) -> int:
    p, l1 = sigma.p, sigma.l1
    x = -(-count // p)
    return (x * x * p + x * l1) // 2


def family_view(s: int, r: int) -> tuple[SyntheticV, RelevantView | None]:
    syn = synthetic_v_sequence(family_sigma(s), r)
    if not syn.testable:
        return syn, None
    return syn, extract_relevant(syn.v, r, syn.p_parity)
