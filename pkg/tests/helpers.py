"""Shared generators for tests."""

import random

from cmlens import Changemaker


def random_changemaker(rng: random.Random, p_max: int, stop: float = 0.15) -> Changemaker:
    """Grow a changemaker one entry at a time while the square sum stays <= p_max."""
    vals = [1]
    while True:
        nxt = rng.randint(1, sum(vals) + 1)
        if sum(v * v for v in vals) + nxt * nxt > p_max:
            break
        vals.append(nxt)
        if rng.random() < stop:
            break
    return Changemaker(vals)


def random_changemakers(seed: int, count: int, p_max: int) -> list[Changemaker]:
    rng = random.Random(seed)
    return [random_changemaker(rng, p_max) for _ in range(count)]
