"""Pure-Python versions of the hot kernels.

Every function here has a twin of the same name and signature in
``_kernels.pyx``; ``cmlens.kernels`` picks one at import time.
"""

NEG = -1  # marks an unreachable exact cost; all reachable values are >= 0


def add_item(row, value, exact=False):
    """Fold one coin-game item into a DP row.

    ``row[c]`` is the best score reachable with budget ``c`` (``exact=False``)
    or with exactly ``c`` coins spent (``exact=True``).  Buying the k-th copy
    costs k coins, so k copies cost k(k+1)/2 and score ``k * value``.
    """
    m = len(row) - 1
    out = list(row)
    k = 1
    cost = 1
    while cost <= m:
        gain = k * value
        for c in range(cost, m + 1):
            prev = row[c - cost]
            if exact and prev == NEG:
                continue
            cand = prev + gain
            if cand > out[c]:
                out[c] = cand
        k += 1
        cost += k
    return out


def empty_row(m, exact=False):
    if exact:
        return [0] + [NEG] * m
    return [0] * (m + 1)


def t_sweep(entries, m, exact=False):
    """Return ``[T_0, ..., T_m]`` for the item values ``entries``."""
    row = empty_row(m, exact)
    for v in entries:
        row = add_item(row, v, exact)
    return row


def plan_counts(m):
    """``out[c]`` = number of multisets of positive parts whose triangular weights sum to c."""
    ways = [0] * (m + 1)
    ways[0] = 1
    a = 1
    w = 1
    while w <= m:
        for c in range(w, m + 1):
            ways[c] += ways[c - w]
        a += 1
        w += a
    return ways


def row_check(row, target, cap):
    """Compare a partial DP row with the row it must grow into.

    Returns 1 if some entry already exceeds ``target``, 2 if ``target`` is out
    of reach when every further coin adds at most ``cap`` points, else 0.
    """
    best = None
    for m in range(len(target)):
        a = row[m]
        b = target[m]
        if a > b:
            return 1
        cand = a - m * cap
        if best is None or cand > best:
            best = cand
        if best + m * cap < b:
            return 2
    return 0
