"""Finite abelian group plumbing: mixed-radix coordinates and group tables.

Elements of Z_{d1} x ... x Z_{dk} are encoded by the fixed mixed-radix rule
(c1, ..., ck) -> sum ci * prod(dj for j > i), i.e. c1 is the most significant
digit.  Every table builder and structure-constant reader in the package uses
this one bijection.
"""

import math
from functools import lru_cache

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError("no prime divisor of %d" % n)
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def radix_weights(factors: tuple[int, ...]) -> tuple[int, ...]:
    k = len(factors)
    w = [1] * k
    for i in range(k - 2, -1, -1):
        w[i] = w[i + 1] * factors[i + 1]
    return tuple(w)


def coeff_vectors(factors: tuple[int, ...]) -> np.ndarray:
    """(n, k) array: row x is the digit vector of element x."""
    k = len(factors)
    n = math.prod(factors)
    out = np.zeros((n, max(k, 1)), dtype=np.int64)
    w = radix_weights(factors)
    for i in range(k):
        out[:, i] = (np.arange(n) // w[i]) % factors[i]
    return out[:, :k] if k else np.zeros((1, 0), dtype=np.int64)


def encode(factors: tuple[int, ...], digits) -> int:
    w = radix_weights(factors)
    return int(sum((int(c) % d) * wi for c, d, wi in zip(digits, factors, w)))


def group_add_table(factors: tuple[int, ...]) -> np.ndarray:
    """Cayley table of Z_{d1} x ... x Z_{dk} under the mixed-radix encoding."""
    factors = tuple(int(d) for d in factors)
    n = math.prod(factors)
    if not factors:
        return np.zeros((1, 1), dtype=np.int64)
    cv = coeff_vectors(factors)
    d = np.array(factors, dtype=np.int64)
    w = np.array(radix_weights(factors), dtype=np.int64)
    sums = (cv[:, None, :] + cv[None, :, :]) % d
    return (sums * w).sum(axis=2)


def _partitions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def abelian_group_types(n: int) -> tuple[tuple[int, ...], ...]:
    """Invariant-factor chains (ascending divisibility) of all abelian groups
    of order n, in deterministic sorted order."""
    if n == 1:
        return ((),)
    fact = prime_factorization(n)
    per_prime: list[list[tuple[int, ...]]] = []
    primes = sorted(fact)
    for p in primes:
        per_prime.append(_partitions(fact[p]))
    types = set()
    idx = [0] * len(primes)
    while True:
        combo = [per_prime[i][idx[i]] for i in range(len(primes))]
        depth = max(len(c) for c in combo)
        invs = []
        for pos in range(depth):
            f = 1
            for p, part in zip(primes, combo):
                if pos < len(part):
                    f *= p ** part[pos]
            invs.append(f)
        # descending prime partitions give descending invariant factors
        types.add(tuple(reversed(invs)))
        for i in range(len(primes) - 1, -1, -1):
            idx[i] += 1
            if idx[i] < len(per_prime[i]):
                break
            idx[i] = 0
        else:
            break
    return tuple(sorted(types))


def torsion_mask(factors: tuple[int, ...], g: int) -> np.ndarray:
    """Boolean mask of elements x with g*x = 0 in the encoded group."""
    cv = coeff_vectors(factors)
    d = np.array(factors, dtype=np.int64)
    if len(factors) == 0:
        return np.ones(1, dtype=bool)
    return ((cv * g) % d == 0).all(axis=1)
