"""Finite rings as validated Cayley tables, plus element-set algebra.

A ring of order n is a pair of n x n tables over element indices 0..n-1 with
index 0 the additive identity.  Validation is eager and total: every triple
of every law is checked on load (n <= 256 keeps that cheap), so downstream
code never revalidates.
"""

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import groups, kernels
from .errors import (
    BadIdentityConvention,
    IndexOutOfRange,
    NoAdditiveInverse,
    NonAbelianAddition,
    NotAdditiveSubgroup,
    NotAssociative,
    NotDistributive,
    TooLarge,
    ValidationError,
)

MAX_ORDER = 256


@dataclass(frozen=True)
class ElementSet:
    """Canonical subset of a ring's element indices: sorted, deduplicated."""

    members: tuple[int, ...]
    parent_order: int

    @staticmethod
    def of(indices: Iterable[int], parent_order: int) -> "ElementSet":
        members = tuple(sorted({int(i) for i in indices}))
        for i in members:
            if not 0 <= i < parent_order:
                raise IndexOutOfRange(
                    f"element {i} outside ring of order {parent_order}"
                )
        return ElementSet(members, parent_order)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)


class FiniteRing:
    """Order-n ring as immutable addition and multiplication tables."""

    def __init__(self, add: np.ndarray, mul: np.ndarray, label: Optional[str] = None):
        add = np.ascontiguousarray(np.asarray(add, dtype=np.int64))
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int64))
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise ValidationError("tables must be equal-sized square matrices")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add = add
        self.mul = mul
        self.label = label or f"ring{add.shape[0]}"

    @property
    def order(self) -> int:
        return self.add.shape[0]

    @property
    def zero(self) -> int:
        return 0

    @property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def neg(self, x: int) -> int:
        return int(np.flatnonzero(self.add[x] == 0)[0])

    def additive_orders(self) -> np.ndarray:
        """Additive order of every element, by walking the addition table."""
        n = self.order
        out = np.ones(n, dtype=np.int64)
        for x in range(1, n):
            y = x
            t = 1
            while y != 0:
                y = int(self.add[y, x])
                t += 1
            out[x] = t
        return out

    def unity(self) -> Optional[int]:
        n = self.order
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self.mul[e], ar) and np.array_equal(self.mul[:, e], ar):
                return e
        return None

    def has_unity(self) -> bool:
        return self.unity() is not None

    def whole_set(self) -> ElementSet:
        return ElementSet(tuple(range(self.order)), self.order)

    def relabel(self, perm: np.ndarray, label: Optional[str] = None) -> "FiniteRing":
        """Transport the tables along new_index -> old_index map `perm`."""
        perm = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(self.order)
        add = inv[self.add[np.ix_(perm, perm)]]
        mul = inv[self.mul[np.ix_(perm, perm)]]
        return FiniteRing(add, mul, label or self.label)

    def opposite(self) -> "FiniteRing":
        return FiniteRing(self.add, self.mul.T, f"{self.label}^op")

    def spec(self) -> "RingSpec":
        return RingSpec.explicit(self.add.tolist(), self.mul.tolist(), self.label)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"


class RingSpec:
    """On-disk ring description: explicit tables or structure constants."""

    def __init__(self, label, order=None, add=None, mul=None,
                 group=None, mul_constants=None):
        self.label = label
        self.order = order
        self.add = add
        self.mul = mul
        self.group = group
        self.mul_constants = mul_constants

    @staticmethod
    def explicit(add, mul, label=None) -> "RingSpec":
        return RingSpec(label, order=len(add), add=add, mul=mul)

    @staticmethod
    def structure(group, mul_constants, label=None) -> "RingSpec":
        return RingSpec(label, group=list(group), mul_constants=mul_constants)

    @property
    def is_explicit(self) -> bool:
        return self.add is not None

    @staticmethod
    def from_json(doc: dict) -> "RingSpec":
        if "add" in doc:
            spec = RingSpec.explicit(doc["add"], doc["mul"], doc.get("label"))
            if "order" in doc:
                spec.order = doc["order"]
            return spec
        if "group" in doc:
            return RingSpec.structure(
                doc["group"], doc["mul_constants"], doc.get("label")
            )
        raise ValidationError("ring spec needs either explicit tables or a group")

    def to_json(self) -> dict:
        if self.is_explicit:
            doc = {"order": self.order, "add": self.add, "mul": self.mul}
        else:
            doc = {"group": self.group, "mul_constants": self.mul_constants}
        if self.label is not None:
            doc = {"label": self.label, **doc}
        return doc

    @staticmethod
    def load(path) -> "RingSpec":
        with open(path) as fh:
            return RingSpec.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")


def _expand_structure(spec: RingSpec) -> tuple[np.ndarray, np.ndarray]:
    factors = tuple(int(d) for d in spec.group)
    if any(d < 2 for d in factors):
        raise ValidationError("generator orders must all be >= 2")
    k = len(factors)
    n = math.prod(factors) if k else 1
    if n > MAX_ORDER:
        raise TooLarge(f"structure-constant group has order {n} > {MAX_ORDER}")
    C = np.asarray(spec.mul_constants, dtype=np.int64)
    if C.shape != (k, k, k):
        raise ValidationError(
            f"mul_constants must be {k}x{k} coefficient vectors of length {k}"
        )
    d = np.array(factors, dtype=np.int64)
    C = C % d  # reduce each coefficient mod its generator order
    add = groups.group_add_table(factors)
    cv = groups.coeff_vectors(factors)
    w = np.array(groups.radix_weights(factors), dtype=np.int64)
    # (sum a_i g_i)(sum b_j g_j) = sum_{i,j} a_i b_j (g_i g_j)
    prod_vec = np.einsum("xi,yj,ijm->xym", cv, cv, C) % d
    mul = (prod_vec * w).sum(axis=2)
    return add, mul


def validate(spec) -> FiniteRing:
    """Check every ring law on the spec's tables and return the ring.

    Accepts a RingSpec (either form), a parsed JSON dict, or a FiniteRing
    whose tables should be (re)checked.  Raises the specific law violation,
    naming the first failing triple in scan order.
    """
    if isinstance(spec, FiniteRing):
        spec = spec.spec()
    if isinstance(spec, dict):
        spec = RingSpec.from_json(spec)
    if spec.is_explicit:
        add = np.asarray(spec.add, dtype=np.int64)
        mul = np.asarray(spec.mul, dtype=np.int64)
        if spec.order is not None and spec.order != add.shape[0]:
            raise ValidationError(
                f"declared order {spec.order} != table size {add.shape[0]}"
            )
    else:
        add, mul = _expand_structure(spec)
    n = add.shape[0]
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds the ceiling of {MAX_ORDER}")
    if add.ndim != 2 or add.shape != (n, n) or mul.shape != (n, n):
        raise ValidationError("tables must be n x n")
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise IndexOutOfRange(
                f"{name}[{bad[0]}][{bad[1]}] = {t[bad[0], bad[1]]} "
                f"outside 0..{n - 1}"
            )

    code, i, j, k = kernels.add_table_check(add)
    if code == kernels.BAD_IDENTITY:
        raise BadIdentityConvention(
            f"element 0 is not the additive identity: add[{i}][{j}] != {max(i, j)}"
        )
    if code == kernels.NONCOMMUTATIVE_ADD:
        raise NonAbelianAddition(f"add[{i}][{j}] != add[{j}][{i}]")
    if code == kernels.NONASSOCIATIVE_ADD:
        raise NonAbelianAddition(
            f"addition not associative at triple ({i}, {j}, {k})"
        )
    if code == kernels.NO_INVERSE:
        raise NoAdditiveInverse(f"element {i} has no additive inverse")

    code, i, j, k = kernels.mul_assoc_check(mul)
    if code != kernels.OK:
        raise NotAssociative(
            f"multiplication not associative at triple ({i}, {j}, {k})"
        )

    code, i, j, k = kernels.distrib_check(add, mul)
    if code == kernels.NONDISTRIBUTIVE_LEFT:
        raise NotDistributive(
            f"left distributivity fails at triple ({i}, {j}, {k})"
        )
    if code == kernels.NONDISTRIBUTIVE_RIGHT:
        raise NotDistributive(
            f"right distributivity fails at triple ({i}, {j}, {k})"
        )

    return FiniteRing(add, mul, spec.label)


def load_ring(path) -> FiniteRing:
    return validate(RingSpec.load(path))


# ---------------------------------------------------------------------------
# element-set algebra


def _require_same_ring(R: FiniteRing, S: ElementSet) -> None:
    if S.parent_order != R.order:
        raise IndexOutOfRange(
            f"set over order {S.parent_order} used with ring of order {R.order}"
        )


def set_sum(R: FiniteRing, A: ElementSet, B: ElementSet) -> ElementSet:
    """A + B = all pairwise sums, as a canonical set."""
    _require_same_ring(R, A)
    _require_same_ring(R, B)
    if not A.members or not B.members:
        return ElementSet.of((), R.order)
    sums = R.add[np.ix_(A.members, B.members)]
    return ElementSet.of(np.unique(sums), R.order)


def is_additive_subgroup(R: FiniteRing, S: ElementSet) -> bool:
    _require_same_ring(R, S)
    if 0 not in S.members:
        return False
    m = np.array(S.members)
    return bool(np.isin(R.add[np.ix_(m, m)], m).all())


def index(R: FiniteRing, S: ElementSet) -> int:
    """Additive index |R : S| = |R| / |S| for an additive subgroup S."""
    if not is_additive_subgroup(R, S):
        raise NotAdditiveSubgroup(f"{S.members} is not an additive subgroup")
    return R.order // len(S)


def is_subring(R: FiniteRing, S: ElementSet) -> bool:
    """True iff S contains 0 and is closed under add, neg, and mul."""
    _require_same_ring(R, S)
    if 0 not in S.members:
        return False
    m = np.array(S.members)
    if not np.isin(R.add[np.ix_(m, m)], m).all():
        return False
    if not all(R.neg(x) in S.members for x in S.members):
        return False
    return bool(np.isin(R.mul[np.ix_(m, m)], m).all())


def additive_closure(R: FiniteRing, seed: Iterable[int]) -> ElementSet:
    """Smallest additive subgroup containing the seed elements."""
    cur = set(int(x) for x in seed) | {0}
    while True:
        m = np.array(sorted(cur))
        new = set(np.unique(R.add[np.ix_(m, m)]).tolist())
        if new <= cur:
            return ElementSet.of(cur, R.order)
        cur |= new


def additive_subgroups(R: FiniteRing, cap: int = 100_000) -> list[ElementSet]:
    """All additive subgroups, smallest first (then lexicographic)."""
    trivial = ElementSet.of([0], R.order)
    seen = {trivial.members: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for S in frontier:
            inside = set(S.members)
            for x in range(1, R.order):
                if x in inside:
                    continue
                T = additive_closure(R, S.members + (x,))
                if T.members not in seen:
                    if len(seen) >= cap:
                        raise TooLarge(
                            f"more than {cap} additive subgroups in {R.label}"
                        )
                    seen[T.members] = T
                    nxt.append(T)
        frontier = nxt
    return sorted(seen.values(), key=lambda s: (len(s), s.members))


def subrings(R: FiniteRing) -> list[ElementSet]:
    """All subrings (additive subgroups closed under multiplication)."""
    return [S for S in additive_subgroups(R) if is_subring(R, S)]
