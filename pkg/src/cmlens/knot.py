"""Knot-side data: Alexander polynomials, torsion coefficients, V-sequences.

Knots enter as V-sequences.  Torus knots are generated from their
Alexander polynomial; anything else is supplied as JSON ``{"v": [...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from .core import InvalidInput


# --- integer polynomials as coefficient lists, lowest degree first ---------

def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c, r = divmod(num[shift + len(den) - 1], lead)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        q[shift] = c
        for j, d in enumerate(den):
            num[shift + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return q


def _t_power_minus_one(k: int) -> list[int]:
    return [-1] + [0] * (k - 1) + [1]


@dataclass(frozen=True)
class LaurentPoly:
    """Symmetric Laurent polynomial, stored as {exponent: coefficient} without zeros."""

    coeffs: Mapping[int, int]

    def __init__(self, coeffs: Mapping[int, int]):
        clean = {int(e): int(c) for e, c in coeffs.items() if c}
        for e, c in clean.items():
            if clean.get(-e, 0) != c:
                raise InvalidInput(f"not symmetric: a_{e}={c} but a_{-e}={clean.get(-e, 0)}")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "" if e == 0 else ("T" if e == 1 else f"T^{e}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the (p, q) torus knot."""
    if p < 2 or q < 2:
        raise InvalidInput("torus knot parameters must be >= 2")
    if gcd(p, q) != 1:
        raise InvalidInput(f"torus knot parameters must be coprime, got ({p}, {q})")
    num = _poly_mul(_t_power_minus_one(p * q), _t_power_minus_one(1))
    den = _poly_mul(_t_power_minus_one(p), _t_power_minus_one(q))
    body = _poly_divexact(num, den)
    g = (p - 1) * (q - 1) // 2
    return LaurentPoly({i - g: c for i, c in enumerate(body)})


@dataclass(frozen=True)
class VSequence:
    """Non-increasing non-negative integers, steps of 0 or 1, implicitly 0 past the end.

    Stored up to and including the first zero.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = [int(v) for v in values]
        if not vals:
            vals = [0]
        for i, v in enumerate(vals):
            if v < 0:
                raise InvalidInput(f"V_{i} = {v} is negative")
            if i and vals[i - 1] - v not in (0, 1):
                raise InvalidInput(f"V_{i-1} - V_{i} = {vals[i - 1] - v}, must be 0 or 1")
        if vals[-1] > 1:
            raise InvalidInput(f"sequence ends at {vals[-1]}; cannot step to the implicit 0")
        if vals[-1] == 1:
            vals.append(0)
        object.__setattr__(self, "values", tuple(vals[: vals.index(0) + 1]))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative index")
        return self.values[i] if i < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)

    @property
    def nu_plus(self) -> int:
        return self.values.index(0)

    def count_between(self, m1: int, m2: int) -> int:
        """``|{i >= 0 : m1 >= V_i > m2}|`` (m2 >= 0, so the zero tail never counts)."""
        return sum(1 for v in self.values if m2 < v <= m1)

    def to_json(self) -> dict:
        return {"v": list(self.values)}

    @classmethod
    def from_json(cls, data) -> "VSequence":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict):
            if "torus" in data:
                return torsion_coeffs(torus_alexander(*data["torus"]))
            if "v" not in data:
                raise InvalidInput("knot JSON needs a 'v' or 'torus' key")
            data = data["v"]
        return cls(data)


def torsion_coeffs(poly: LaurentPoly) -> VSequence:
    """``t_i = sum_{j>=1} j * a_{i+j}`` for i = 0..g."""
    g = poly.degree
    return VSequence(sum(j * poly[i + j] for j in range(1, g - i + 1)) for i in range(g + 1))


def torus_v(p: int, q: int) -> VSequence:
    return torsion_coeffs(torus_alexander(p, q))


@dataclass(frozen=True)
class RelevantView:
    """The coefficients of a V-sequence visible at spacing r, with their counting function.

    ``offset`` is r/2 when r is even and p is odd, otherwise 0; entry i of
    ``v_rel`` is ``V[offset + i*r]``, stored through the first zero.
    """

    r: int
    p_parity: str | None
    v_rel: tuple[int, ...]
    offset: int
    nu_plus: int
    parity_used: bool
    _t_rel: tuple[int, ...] = field(repr=False, compare=False, default=())

    @property
    def v0(self) -> int:
        return self.v_rel[0]

    @property
    def nu_plus_rel(self) -> int:
        return self.v_rel.index(0)

    def t_rel(self, m: int) -> int:
        """Number of non-zero relevant coefficients that are <= m."""
        if m < 0:
            return 0
        if m < len(self._t_rel):
            return self._t_rel[m]
        return self.nu_plus_rel

    @property
    def mu(self) -> int | None:
        """Smallest jump of T_rel over 1..V_0-1; None when that range is empty."""
        if self.v0 <= 1:
            return None
        return min(self.t_rel(i) - self.t_rel(i - 1) for i in range(1, self.v0))

    def to_json(self) -> dict:
        return {"r": self.r, "p_parity": self.p_parity, "parity_used": self.parity_used,
                "offset": self.offset, "v_rel": list(self.v_rel),
                "nu_plus_rel": self.nu_plus_rel, "mu": self.mu}


def _parity(p_parity) -> str | None:
    if p_parity is None:
        return None
    if p_parity in ("odd", "even"):
        return p_parity
    raise InvalidInput(f"parity must be 'odd' or 'even', got {p_parity!r}")


def relevant_offset(r: int, p_odd: bool) -> int:
    return r // 2 if (r % 2 == 0 and p_odd) else 0


def extract_relevant(v: VSequence, r: int, p_parity: str | None = None) -> RelevantView:
    if r < 1:
        raise InvalidInput("r must be >= 1")
    parity = _parity(p_parity)
    used = r % 2 == 0
    if used and parity is None:
        raise InvalidInput("parity of p is required when r is even")
    offset = relevant_offset(r, parity == "odd") if used else 0
    rel = []
    i = offset
    while True:
        rel.append(v[i])
        if rel[-1] == 0:
            break
        i += r
    nonzero = rel[:-1]
    counts = [0] * (rel[0] + 1)
    for val in nonzero:
        counts[val] += 1
    t = []
    run = 0
    for m, c in enumerate(counts):
        if m:
            run += c
        t.append(run)
    return RelevantView(r, parity if used else p_parity, tuple(rel), offset,
                        v.nu_plus, used, tuple(t))


def conversion_window(view: RelevantView, m1: int, m2: int) -> tuple[int, int]:
    """Open bounds on ``|{i : m1 >= V_i > m2}|`` from the relevant counts."""
    if not m1 > m2 >= 0:
        raise InvalidInput("need m1 > m2 >= 0")
    d = view.t_rel(m1) - view.t_rel(m2)
    return (d - 1) * view.r, (d + 1) * view.r
