"""Slow, obviously-correct reference implementations used to cross-check the fast paths."""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .core import CapacityError


def plans(dim: int, m: int):
    """Every ``alpha >= 0`` in ``Z^dim`` with ``sum alpha_j(alpha_j+1)/2 <= m``."""
    alpha = [0] * dim

    def rec(i: int, left: int):
        if i == dim:
            yield tuple(alpha)
            return
        a, cost = 0, 0
        while cost <= left:
            alpha[i] = a
            yield from rec(i + 1, left - cost)
            a += 1
            cost += a
        alpha[i] = 0

    yield from rec(0, m)


def t_sigma_brute(sigma: Sequence[int], m: int) -> int:
    return max(sum(s * a for s, a in zip(sigma, al)) for al in plans(len(sigma), m))


def t_sigma_exact_brute(sigma: Sequence[int], m: int) -> int | None:
    best = None
    for al in plans(len(sigma), m):
        if sum(a * (a + 1) // 2 for a in al) == m:
            v = sum(s * a for s, a in zip(sigma, al))
            best = v if best is None or v > best else best
    return best


def v_sigma_brute(sigma: Sequence[int], i: int) -> int:
    """``min{m : T_m >= i}`` by scanning budgets upward."""
    if i == 0:
        return 0
    m = 0
    while t_sigma_brute(sigma, m) < i:
        m += 1
    return m


def count_plans_brute(m: int) -> int:
    """Partitions-with-repetition counted as non-increasing part lists, empty list included."""
    out = 0

    def rec(left: int, cap: int):
        nonlocal out
        out += 1
        for a in range(min(cap, m), 0, -1):
            w = a * (a + 1) // 2
            if w <= left:
                rec(left - w, a)

    rec(m, m)
    return out


def poly_from_roots_of_unity(p: int, q: int) -> dict[int, int]:
    """Symmetrized torus-knot Alexander polynomial by explicit long division on dicts."""
    num = {p * q + 1: 1, p * q: -1, 1: -1, 0: 1}
    den = {p + q: 1, p: -1, q: -1, 0: 1}
    quot: dict[int, int] = {}
    rem = dict(num)
    top_d = max(den)
    while rem and max(rem) >= top_d:
        t = max(rem)
        c = rem[t]
        shift = t - top_d
        quot[shift] = quot.get(shift, 0) + c
        for e, d in den.items():
            rem[e + shift] = rem.get(e + shift, 0) - c * d
            if rem[e + shift] == 0:
                del rem[e + shift]
    if rem:
        raise ArithmeticError("non-exact division")
    g = (p - 1) * (q - 1) // 2
    return {e - g: c for e, c in quot.items() if c}


def signed_sum_set_brute(values: Sequence[int]) -> set[int]:
    if len(values) > 20:
        raise CapacityError("too many entries for sign enumeration")
    return {sum(e * v for e, v in zip(eps, values)) for eps in product((1, -1), repeat=len(values))}


def _block_plans(count: int, m: int):
    """Non-increasing plans of length <= count on one block of equal entries: (copies, cost)."""
    out = []

    def rec(slots: int, cap: int, copies: int, cost: int):
        out.append((copies, cost))
        if slots == 0:
            return
        for a in range(1, cap + 1):
            c = a * (a + 1) // 2
            if cost + c > m:
                break
            rec(slots - 1, a, copies + a, cost + c)

    rec(count, m, 0, 0)
    return out


def t_sigma_row_brute(sigma: Sequence[int], m: int) -> list[int]:
    """``[T_0..T_m]`` by listing every plan, with equal entries grouped.

    Permuting copies among equal entries does not change cost or score, so
    each block contributes a non-increasing vector; the listing is still
    exhaustive over plans up to that symmetry.
    """
    blocks: dict[int, int] = {}
    for v in sigma:
        blocks[v] = blocks.get(v, 0) + 1
    items = sorted(blocks.items(), reverse=True)
    per_block = [(v, _block_plans(c, m)) for v, c in items]
    best = [-1] * (m + 1)

    def rec(i: int, cost: int, score: int):
        if i == len(per_block):
            if score > best[cost]:
                best[cost] = score
            return
        v, options = per_block[i]
        for copies, c in options:
            if cost + c <= m:
                rec(i + 1, cost + c, score + copies * v)

    rec(0, 0, 0)
    run = 0
    out = []
    for b in best:
        run = max(run, b)
        out.append(run)
    return out
