"""Invariant-factor classification of finite abelian groups.

Classification works from the element-order census: for each prime p, the
count of elements killed by p^j determines the p-part partition, and the
p-part partitions merge into one divisibility chain.  No matrix machinery is
needed because we always hold a full Cayley table.
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import NotAdditiveSubgroup, NotPrime
from .groups import is_prime, prime_factorization
from .rings import ElementSet, FiniteRing, is_additive_subgroup


@dataclass(frozen=True)
class AbelianGroupType:
    """Invariant factors d1 | d2 | ... | dk (ascending); [] is the trivial
    group.  Equal types == isomorphic groups."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = self.invariant_factors
        for a, b in zip(f, f[1:]):
            if b % a != 0:
                raise ValueError(f"{f} is not a divisibility chain")
        if f and f[0] < 2:
            raise ValueError("invariant factors must be >= 2")

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def render(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z_{d}" for d in self.invariant_factors)

    def to_json(self) -> list[int]:
        return list(self.invariant_factors)


def is_cyclic(t: AbelianGroupType) -> bool:
    return len(t.invariant_factors) <= 1


def is_elementary_p_squared(t: AbelianGroupType, p: int) -> bool:
    """True iff t is Z_p x Z_p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return t.invariant_factors == (p, p)


def _classify_orders(orders: np.ndarray) -> AbelianGroupType:
    n = orders.shape[0]
    if n == 1:
        return AbelianGroupType(())
    partitions: dict[int, list[int]] = {}
    for p, a in prime_factorization(n).items():
        # e_j = log_p #{x : p^j x = 0}; parts >= j in the p-partition = e_j - e_{j-1}
        prev = 0
        at_least = []
        for j in range(1, a + 1):
            pj = p**j
            count = int((pj % orders == 0).sum())
            e_j = count.bit_length() - 1 if p == 2 else round(np.log(count) / np.log(p))
            assert p**e_j == count, "census is not a p-group layer"
            at_least.append(e_j - prev)
            prev = e_j
            if e_j == a:
                break
        parts = [sum(1 for m in at_least if m >= i + 1) for i in range(max(at_least, default=0))]
        partitions[p] = sorted(parts, reverse=True)
    depth = max(len(v) for v in partitions.values())
    descending = []
    for pos in range(depth):
        f = 1
        for p, parts in partitions.items():
            if pos < len(parts):
                f *= p ** parts[pos]
        descending.append(f)
    return AbelianGroupType(tuple(reversed(descending)))


def classify_additive(R: FiniteRing) -> AbelianGroupType:
    """Invariant factors of the additive group (R, +)."""
    return _classify_orders(R.additive_orders())


def quotient_type(R: FiniteRing, S: ElementSet) -> AbelianGroupType:
    """Type of the additive quotient group R/S.

    Coset representatives are the smallest element index in each coset; the
    quotient's Cayley table is built on those and classified.
    """
    if not is_additive_subgroup(R, S):
        raise NotAdditiveSubgroup(f"{S.members} is not an additive subgroup")
    n = R.order
    m = np.array(S.members)
    rep = R.add[:, m].min(axis=1)  # smallest index in the coset of each x
    reps = np.unique(rep)
    pos = {int(r): i for i, r in enumerate(reps)}
    q = reps.shape[0]
    table = np.zeros((q, q), dtype=np.int64)
    for i, a in enumerate(reps):
        table[i] = [pos[int(rep[R.add[a, b]])] for b in reps]
    quotient = FiniteRing(table, np.zeros((q, q), dtype=np.int64), f"{R.label}/S")
    return classify_additive(quotient)
