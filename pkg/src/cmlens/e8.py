"""The lattice -E8 + -Z^k, its short characteristic vectors, and the E8-changemaker test.

E8 is modelled as the vectors of R^8 whose coordinates are all integers or
all half-integers with even coordinate sum.  Internally coordinates are
stored doubled, as integers.  Pairings are negated Euclidean dot products.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .core import CapacityError, InvalidInput

MAX_K = 20
BRUTE_MAX_K = 3


def _parse_coord(c) -> Fraction:
    if isinstance(c, str):
        return Fraction(c.strip())
    if isinstance(c, float):
        f = Fraction(c)
        if f.denominator > 2:
            raise InvalidInput(f"coordinate {c!r} is not a half-integer")
        return f
    return Fraction(c)


def _fmt(c: Fraction) -> int | str:
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _is_e8_doubled(d: Sequence[int]) -> bool:
    if len(d) != 8:
        return False
    parity = d[0] & 1
    if any((x & 1) != parity for x in d):
        return False
    return sum(d) % 4 == 0


@dataclass(frozen=True)
class E8Vector:
    """A point of E8, kept as doubled integer coordinates."""

    doubled: tuple[int, ...]

    def __init__(self, coords: Iterable):
        fr = [_parse_coord(c) for c in coords]
        if len(fr) != 8:
            raise InvalidInput(f"E8 vectors have 8 coordinates, got {len(fr)}")
        d = []
        for c in fr:
            if (2 * c).denominator != 1:
                raise InvalidInput(f"coordinate {c} is not a half-integer")
            d.append(int(2 * c))
        if not _is_e8_doubled(d):
            raise InvalidInput("coordinates must be all integers or all half-integers with even sum")
        object.__setattr__(self, "doubled", tuple(d))

    @classmethod
    def from_doubled(cls, d: Sequence[int]) -> "E8Vector":
        return cls(Fraction(x, 2) for x in d)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def pair(self, other: "E8Vector") -> int:
        """Pairing in -E8 (always an integer)."""
        return -sum(a * b for a, b in zip(self.doubled, other.doubled)) // 4

    @property
    def norm(self) -> int:
        return self.pair(self)

    def to_json(self) -> list:
        return [_fmt(c) for c in self.coords]


def e8_roots_doubled() -> list[tuple[int, ...]]:
    """The 240 roots, doubled: 112 of shape (+-2,+-2,0^6) and 128 of shape (+-1)^8 with evenly many minus signs."""
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (2, -2):
                for sj in (2, -2):
                    v = [0] * 8
                    v[i], v[j] = si, sj
                    out.append(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(signs)
    return out


def e8_roots() -> list[E8Vector]:
    return [E8Vector.from_doubled(r) for r in e8_roots_doubled()]


def pi_set(a: int, b: int) -> list[int]:
    """``{a, a+2, ..., b}``; empty when a > b."""
    if (a - b) % 2:
        raise InvalidInput(f"{a} and {b} have different parities")
    return list(range(a, b + 1, 2))


def _check_k(k: int, limit: int = MAX_K) -> None:
    if k < 0:
        raise InvalidInput("k must be non-negative")
    if k > limit:
        raise CapacityError(f"k = {k} exceeds the enumeration bound {limit}")


# --- characteristic vectors of -E8 + -Z^k --------------------------------------------
# A vector is written (s, w) with s doubled E8 coordinates and w integer.

class VectorFamily:
    """A finite set of characteristic vectors given by its closed form, iterated lazily."""

    def __init__(self, k: int, count: int, gen, member):
        self.k = k
        self._count = count
        self._gen = gen
        self._member = member

    def __len__(self) -> int:
        return self._count

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        return self._gen()

    def __contains__(self, item) -> bool:
        s, w = item
        return len(s) == 8 and len(w) == self.k and self._member(tuple(s), tuple(w))

    def as_set(self) -> set:
        return set(iter(self))


def _is_char(s: Sequence[int], w: Sequence[int]) -> bool:
    # s holds doubled coordinates of a vector in 2*E8, so s/2 is E8 doubled
    if any(x % 2 for x in s):
        return False
    return _is_e8_doubled([x // 2 for x in s]) and all(x % 2 for x in w)


def _euclid_norm(s: Sequence[int], w: Sequence[int]) -> int:
    return sum(x * x for x in s) // 4 + sum(x * x for x in w)


def max_char_norm(k: int) -> int:
    """``m(L)`` for ``-E8 + -Z^k``."""
    return -k


def short_set(k: int) -> VectorFamily:
    """``{0} x {+-1}^k``: the characteristic vectors of largest norm."""
    _check_k(k)

    def gen():
        zero = (0,) * 8
        for w in product((1, -1), repeat=k):
            yield zero, w

    def member(s, w):
        return not any(s) and all(abs(x) == 1 for x in w)

    return VectorFamily(k, 2 ** k, gen, member)


def Short_set(k: int) -> VectorFamily:
    """Characteristic vectors of norm ``m(L) - 8``.

    Either twice a root paired with a sign vector, or zero on E8 and a
    vector of odd entries with a single +-3.
    """
    _check_k(k)
    roots = e8_roots_doubled()

    def gen():
        for r in roots:
            s = tuple(2 * x for x in r)
            for w in product((1, -1), repeat=k):
                yield s, w
        zero = (0,) * 8
        for i in range(k):
            for w in product((1, -1), repeat=k):
                w = list(w)
                w[i] *= 3
                yield zero, tuple(w)

    def member(s, w):
        return _is_char(s, w) and _euclid_norm(s, w) == k + 8

    return VectorFamily(k, 240 * 2 ** k + k * 2 ** k, gen, member)


def _e8_points_doubled(max_norm: int) -> np.ndarray:
    """Every E8 point of Euclidean norm <= max_norm, doubled coordinates."""
    budget = 4 * max_norm
    out = []
    for parity in (0, 1):
        cur = [0] * 8

        def rec(i: int, left: int):
            if i == 8:
                if sum(cur) % 4 == 0:
                    out.append(tuple(cur))
                return
            x = parity
            while x * x <= left:
                for v in ((x, -x) if x else (0,)):
                    cur[i] = v
                    rec(i + 1, left - v * v)
                x += 2

        rec(0, budget)
    return np.array(out, dtype=np.int64)


def brute_force_char_sets(k: int) -> tuple[int, set, set]:
    """``(m(L), short, Short)`` by direct enumeration, without using the closed forms.

    Candidates are all E8 points of norm <= 8 + k and integer vectors with
    entries in [-3, 3]; characteristic means pairing with every root is even
    on the E8 part and every entry odd on the Z part.
    """
    _check_k(k, BRUTE_MAX_K)
    pts = _e8_points_doubled(8 + k)
    roots = np.array(e8_roots_doubled())
    dots = pts @ roots.T  # = 4 * Euclidean dot
    # characteristic in -E8: <c, x> = <x, x> = -2 (mod 2) for roots, which generate E8
    char_e8 = pts[np.all(dots % 8 == 0, axis=1)]
    z_part = [w for w in product(range(-3, 4), repeat=k) if all(x % 2 for x in w)]
    chars = []
    for s in char_e8:
        sn = int((s * s).sum()) // 4
        for w in z_part:
            chars.append((tuple(int(x) for x in s), w, sn + sum(x * x for x in w)))
    m = -min(n for _, _, n in chars)
    short = {(s, w) for s, w, n in chars if -n == m}
    Short = {(s, w) for s, w, n in chars if -n == m - 8}
    return m, short, Short


# --- E8-changemakers ---------------------------------------------------------------

def _signed_sums(values: Sequence[int]) -> set[int]:
    """``{sum eps_i v_i : eps in {+-1}^k}`` via subset sums."""
    total = sum(values)
    reach = 1
    for v in values:
        reach |= reach << v
    return {total - 2 * t for t in range(total + 1) if (reach >> t) & 1}


@dataclass(frozen=True)
class E8Changemaker:
    s: E8Vector
    sigma: tuple[int, ...]

    def __init__(self, s, sigma: Iterable[int]):
        vec = s if isinstance(s, E8Vector) else E8Vector(s)
        vals = [int(x) for x in sigma]
        if any(x < 0 for x in vals):
            raise InvalidInput("sigma part must be non-negative")
        object.__setattr__(self, "s", vec)
        object.__setattr__(self, "sigma", tuple(sorted(vals, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.sigma)

    def to_json(self) -> dict:
        return {"s": self.s.to_json(), "sigma": list(self.sigma)}

    @classmethod
    def from_json(cls, data) -> "E8Changemaker":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data.get("s", [0] * 8), data["sigma"])


def short_values(tau: E8Changemaker) -> set[int]:
    _check_k(tau.k)
    return _signed_sums(tau.sigma)


def Short_values(tau: E8Changemaker) -> set[int]:
    """Pairings of tau with every vector of ``Short_set``, without listing the vectors."""
    _check_k(tau.k)
    sig = tau.sigma
    root_vals = {sum(a * b for a, b in zip(r, tau.s.doubled)) // 2 for r in e8_roots_doubled()}
    signed = _signed_sums(sig)
    out = {a + b for a in root_vals for b in signed}
    for i, v in enumerate(sig):
        rest = _signed_sums(sig[:i] + sig[i + 1:]) if len(sig) > 1 else {0}
        out.update(e + 3 * v for e in rest)
        out.update(e - 3 * v for e in rest)
    return out


def c_and_C(tau: E8Changemaker) -> tuple[int, int]:
    """Largest pairing of tau with ``short`` and with ``Short``."""
    return max(short_values(tau)), max(Short_values(tau))


def is_changemaker_weak(values: Iterable[int]) -> bool:
    """Changemaker condition with zero entries allowed."""
    vals = sorted(int(v) for v in values)
    if any(v < 0 for v in vals):
        raise InvalidInput("entries must be non-negative")
    reach = 0
    for v in vals:
        if v > reach + 1:
            return False
        reach += v
    return True


@dataclass(frozen=True)
class E8Report:
    c: int
    C: int
    short_condition: bool
    Short_condition: bool
    sigma_weak_changemaker: bool

    @property
    def is_e8_changemaker(self) -> bool:
        return self.short_condition and self.Short_condition

    def to_json(self) -> dict:
        return {"e8_changemaker": self.is_e8_changemaker, "c": self.c, "C": self.C,
                "short_condition": self.short_condition, "Short_condition": self.Short_condition,
                "sigma_weak_changemaker": self.sigma_weak_changemaker}


def e8_report(tau: E8Changemaker) -> E8Report:
    sv = short_values(tau)
    Sv = Short_values(tau)
    c, C = max(sv), max(Sv)
    first = sv == set(pi_set(-c, c))
    second = set(pi_set(c + 2, C)) <= Sv if c + 2 <= C else True
    return E8Report(c, C, first, second, is_changemaker_weak(tau.sigma))


def is_e8_changemaker(tau: E8Changemaker) -> bool:
    return e8_report(tau).is_e8_changemaker


POINCARE = "PoincareRealized"
S3 = "S3Realized"


def poincare_threshold(g: int, r: int, p: int) -> int:
    return 2 * g + r if p % 2 else 2 * g


def classify_poincare(g: int, r: int, p: int) -> str:
    if g < 0 or r < 1 or p < 1:
        raise InvalidInput("need g >= 0, r >= 1, p >= 1")
    return POINCARE if r * r * p >= poincare_threshold(g, r, p) else S3
