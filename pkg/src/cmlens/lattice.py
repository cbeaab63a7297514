"""Lens-space lattices and their embeddings as changemaker complements.

Bilinear forms are negative definite throughout: a vertex of weight ``a``
has self-pairing ``-a`` and adjacent vertices pair to ``+1``.  Vectors in
``Z^{n+1}`` use the negated Euclidean form, so a vertex vector x must have
Euclidean norm ``a`` and adjacent vertex vectors Euclidean dot ``-1``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .core import CapacityError, Changemaker, InvalidInput

REALIZE_MAX_P = 500
REDUCEDNESS_NOTE = "reducedness not checked"


@dataclass(frozen=True)
class HJExpansion:
    p: int
    q: int | None
    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def value(self) -> Fraction | None:
        return evaluate_hj(self.coeffs)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "expansion": list(self.coeffs)}


def hj_expansion(p: int, q: int | None = None) -> HJExpansion:
    """``p/q = a1 - 1/(a2 - 1/(...))`` with every ``a_i >= 2``; p = 1 gives the empty expansion."""
    if p == 1:
        return HJExpansion(1, None, ())
    if q is None or not 0 < q < p:
        raise InvalidInput(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"p and q must be coprime, got ({p}, {q})")
    out = []
    a, b = p, q
    while b:
        c = -(-a // b)
        out.append(c)
        a, b = b, c * b - a
    return HJExpansion(p, q, tuple(out))


def evaluate_hj(coeffs: Sequence[int]) -> Fraction | None:
    if not coeffs:
        return None
    val = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        val = a - 1 / val
    return val


def inverse_q(p: int, q: int) -> int:
    return pow(q, -1, p)


def linear_gram(e: HJExpansion | Sequence[int]) -> list[list[int]]:
    coeffs = e.coeffs if isinstance(e, HJExpansion) else tuple(e)
    n = len(coeffs)
    g = [[0] * n for _ in range(n)]
    for i, a in enumerate(coeffs):
        g[i][i] = -a
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = 1
    return g


def det_bareiss(mat: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in mat]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_negative_definite(mat: Sequence[Sequence[int]]) -> bool:
    """Leading principal minors alternate in sign, starting negative."""
    n = len(mat)
    for k in range(1, n + 1):
        d = det_bareiss([row[:k] for row in mat[:k]])
        if d == 0 or (d > 0) != (k % 2 == 0):
            return False
    return True


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def gram_of(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Gram matrix under the negated Euclidean form."""
    return [[-_dot(u, v) for v in vectors] for u in vectors]


def complement_basis(sigma: Changemaker) -> list[tuple[int, ...]]:
    """A basis of the vectors orthogonal to sigma.

    For each index j except the last, ``e_j`` minus the indicator of a set
    of later indices whose entries sum to ``sigma_j`` (greedy, largest
    first).  When the later entries fall one short, all of them are used
    and the final entry, which is 1, is taken twice.  The matrix is unit
    upper triangular on the first n coordinates, hence a basis.
    """
    s = sigma.entries
    n1 = len(s)
    out = []
    for j in range(n1 - 1):
        v = [0] * n1
        v[j] = 1
        need = s[j]
        tail = sum(s[j + 1:])
        if need == tail + 1:
            for k in range(j + 1, n1):
                v[k] = -1
            v[n1 - 1] = -2
        else:
            for k in range(j + 1, n1):
                if s[k] <= need:
                    v[k] = -1
                    need -= s[k]
                if need == 0:
                    break
        out.append(tuple(v))
    return out


# --- vertex embedding search ----------------------------------------------------------

def _vectors(norm: int, dim: int, constraints: list[tuple[Sequence[int], int]]):
    """All integer vectors of given Euclidean norm meeting ``dot(u, x) == t`` for each (u, t)."""
    suffix = []
    for u, _ in constraints:
        tails = [0] * (dim + 1)
        for k in range(dim - 1, -1, -1):
            tails[k] = tails[k + 1] + u[k] * u[k]
        suffix.append(tails)
    x = [0] * dim
    partial = [0] * len(constraints)

    def rec(k: int, left: int):
        for ci, (u, t) in enumerate(constraints):
            gap = t - partial[ci]
            if gap * gap > left * suffix[ci][k]:
                return
        if k == dim:
            if left == 0:
                yield tuple(x)
            return
        b = isqrt(left)
        for c in range(b, -b - 1, -1):
            x[k] = c
            for ci, (u, _) in enumerate(constraints):
                partial[ci] += u[k] * c
            yield from rec(k + 1, left - c * c)
            for ci, (u, _) in enumerate(constraints):
                partial[ci] -= u[k] * c
        x[k] = 0

    yield from rec(0, norm)


def _canonical_first(x: tuple[int, ...], sigma: tuple[int, ...]) -> bool:
    """Symmetry breaking: x is the lex-largest image under block permutations and sign."""
    best = None
    for sgn in (1, -1):
        y = [sgn * c for c in x]
        out = []
        i = 0
        while i < len(sigma):
            j = i
            while j < len(sigma) and sigma[j] == sigma[i]:
                j += 1
            out.extend(sorted(y[i:j], reverse=True))
            i = j
        t = tuple(out)
        if best is None or t > best:
            best = t
    return tuple(x) == best


@dataclass(frozen=True)
class EmbeddingCertificate:
    sigma: tuple[int, ...]
    p: int
    q: int
    expansion: tuple[int, ...]
    vectors: tuple[tuple[int, ...], ...]

    def verify(self) -> bool:
        if gram_of(self.vectors) != linear_gram(self.expansion):
            return False
        return all(_dot(v, self.sigma) == 0 for v in self.vectors)

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "p": self.p, "q": self.q,
                "expansion": list(self.expansion), "vectors": [list(v) for v in self.vectors]}


def embed_linear(sigma: Changemaker, p: int, q: int) -> EmbeddingCertificate | None:
    """Place the path vertices of the (p, q) plumbing inside sigma's complement, or None."""
    if p != sigma.p:
        raise InvalidInput(f"p = {p} but sigma has square sum {sigma.p}")
    e = hj_expansion(p, q)
    dim = len(sigma)
    if len(e) != dim - 1:
        raise InvalidInput(f"expansion length {len(e)} does not match rank {dim - 1}")
    s = sigma.entries
    a = e.coeffs
    placed: list[tuple[int, ...]] = []

    def rec(i: int):
        if i == len(a):
            return True
        cons = [(s, 0)]
        for j, v in enumerate(placed):
            cons.append((v, -1 if j == i - 1 else 0))
        for x in _vectors(a[i], dim, cons):
            if i == 0 and not _canonical_first(x, s):
                continue
            placed.append(x)
            if rec(i + 1):
                return True
            placed.pop()
        return False

    if not rec(0):
        return None
    return EmbeddingCertificate(s, p, q, a, tuple(placed))


@dataclass(frozen=True)
class Realization:
    p: int
    q: int | None
    q_inverse: int | None
    certificate: EmbeddingCertificate | None

    def to_json(self) -> dict:
        out = {"p": self.p, "q": self.q, "q_inverse": self.q_inverse, "note": REDUCEDNESS_NOTE}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def _try_q(args):
    entries, p, q = args
    return embed_linear(Changemaker(entries), p, q)


def realize(sigma: Changemaker, threads: int = 1) -> list[Realization]:
    """Every lens space ``L(p, q)`` (q canonicalized to min(q, q^-1 mod p)) whose lattice sigma realizes."""
    p = sigma.p
    if p > REALIZE_MAX_P:
        raise CapacityError(f"p = {p} exceeds the search bound {REALIZE_MAX_P}")
    if p == 1:
        return [Realization(1, None, None, None)]
    rank = len(sigma) - 1
    qs = []
    for q in range(1, p):
        if gcd(p, q) != 1:
            continue
        qi = inverse_q(p, q)
        if q <= qi and len(hj_expansion(p, q)) == rank:
            qs.append(q)
    jobs = [(sigma.entries, p, q) for q in qs]
    if threads and threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(_try_q, jobs))
    else:
        certs = [_try_q(j) for j in jobs]
    return [Realization(p, q, inverse_q(p, q), c) for q, c in zip(qs, certs) if c is not None]
