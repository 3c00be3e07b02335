"""
Prime and coprime-matching helpers for the firecracker construction.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from nprimelabel.errors import InvariantViolation, UsageError


def prime_flags_upto(limit):
    """Boolean array where flags[i] is True iff i is prime, for 0 <= i <= limit."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[: min(2, limit + 1)] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


@lru_cache(maxsize=None)
def _primes_upto(limit):
    return np.flatnonzero(prime_flags_upto(limit))


def bertrand_prime(n):
    """Smallest prime p with n < p <= 2n."""
    if n < 1:
        raise UsageError(f"bertrand_prime needs n >= 1, got {n}")
    # sieve sizes are powers of two so the cache stays small across many calls
    limit = max(16, 1 << (2 * n).bit_length())
    primes = _primes_upto(limit)
    p = int(primes[np.searchsorted(primes, n, side="right")])
    if p > 2 * n:
        raise InvariantViolation(f"no prime in ({n}, {2 * n}]")
    return p


@dataclass(frozen=True)
class CoprimeMatching:
    """Bijection {1..n} -> {2n+1..3n}; targets[x - 1] is the partner of x."""

    n: int
    targets: tuple

    def __getitem__(self, x):
        return self.targets[x - 1]

    def pairs(self):
        return [(x, self[x]) for x in range(1, self.n + 1)]

    def is_valid(self):
        low, high = 2 * self.n + 1, 3 * self.n
        return (
            len(self.targets) == self.n
            and len(set(self.targets)) == self.n
            and all(low <= y <= high for y in self.targets)
            and all(math.gcd(x, y) == 1 for x, y in self.pairs())
        )


def coprime_matching(n):
    """
    Perfect matching of {1..n} with {2n+1..3n} pairing coprime integers.

    Each x in turn takes the smallest free coprime y; when none is free an
    augmenting path (trying y in ascending order) re-routes earlier choices.
    """
    if n < 1:
        raise UsageError(f"coprime_matching needs n >= 1, got {n}")

    ys = range(2 * n + 1, 3 * n + 1)
    owner = {}
    partner = [0] * (n + 1)
    free = list(ys)

    def augment(root):
        # path holds the current alternating path as (x, remaining candidate ys) frames
        seen = set()
        path = [(root, iter(ys))]
        while path:
            x, candidates = path[-1]
            for y in candidates:
                if y in seen or math.gcd(x, y) != 1:
                    continue
                seen.add(y)
                if y in owner:
                    path.append((owner[y], iter(ys)))
                    break
                for x, _ in reversed(path):
                    owner[y] = x
                    partner[x], y = y, partner[x]
                return True
            else:
                path.pop()
        return False

    for x in range(1, n + 1):
        for idx, y in enumerate(free):
            if math.gcd(x, y) == 1:
                owner[y] = x
                partner[x] = y
                del free[idx]
                break
        else:
            logging.debug(f"coprime_matching({n}): augmenting for x={x}")
            if not augment(x):
                raise InvariantViolation(f"no perfect coprime matching found for n={n}")
            free = [y for y in free if y not in owner]

    matching = CoprimeMatching(n, tuple(partner[1:]))
    if not matching.is_valid():
        raise InvariantViolation(f"coprime matching for n={n} breaks its invariants")
    return matching
