"""Centralizers, the center, the centralizer set, and commutativity degree.

The whole engine runs off one boolean matrix B = (mul == mul.T): row r is the
indicator of C(r), the center is the all-true rows, and the distinct rows are
exactly the distinct centralizers.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .abelian import AbelianGroupType, classify_additive, quotient_type
from .errors import IndexOutOfRange
from .rings import ElementSet, FiniteRing, is_subring


def _commutation_matrix(R: FiniteRing) -> np.ndarray:
    return R.mul == R.mul.T


def centralizer(R: FiniteRing, r: int) -> ElementSet:
    """C(r) = {s : rs = sr}, always a subring containing the center."""
    if not 0 <= r < R.order:
        raise IndexOutOfRange(f"element {r} outside ring of order {R.order}")
    members = np.flatnonzero(R.mul[r] == R.mul[:, r])
    result = ElementSet.of(members, R.order)
    assert is_subring(R, result), "centralizer is not a subring"
    return result


def center(R: FiniteRing) -> ElementSet:
    """Z(R) = elements commuting with everything."""
    return ElementSet.of(np.flatnonzero(_commutation_matrix(R).all(axis=1)), R.order)


def cent_set(R: FiniteRing) -> list[ElementSet]:
    """Distinct centralizers of all elements, sorted lexicographically.

    The whole ring is always a member (it is C(0)); a commutative ring has
    exactly one centralizer.
    """
    B = _commutation_matrix(R)
    rows = np.unique(B, axis=0)
    sets = [ElementSet.of(np.flatnonzero(row), R.order) for row in rows]
    return sorted(sets, key=lambda s: s.members)


def commutativity_degree(R: FiniteRing) -> Fraction:
    """d(R) = sum |C(r)| / |R|^2, exact and reduced."""
    commuting_pairs = int(_commutation_matrix(R).sum())
    return Fraction(commuting_pairs, R.order**2)


@dataclass(frozen=True)
class CentReport:
    """Everything the package knows about one ring's centralizer structure."""

    ring_label: str
    order: int
    is_commutative: bool
    center: ElementSet
    centralizers: tuple[ElementSet, ...]
    cent_count: int
    degree: Fraction
    quotient_type: AbelianGroupType
    additive_type: AbelianGroupType

    def to_json(self) -> dict:
        return {
            "ring_label": self.ring_label,
            "order": self.order,
            "is_commutative": self.is_commutative,
            "center": list(self.center.members),
            "centralizers": [list(c.members) for c in self.centralizers],
            "cent_count": self.cent_count,
            "degree": {"num": self.degree.numerator, "den": self.degree.denominator},
            "quotient_type": self.quotient_type.to_json(),
            "additive_type": self.additive_type.to_json(),
        }


def analyze(R: FiniteRing) -> CentReport:
    """Full per-ring summary; deterministic for a given ring."""
    cs = cent_set(R)
    z = center(R)
    return CentReport(
        ring_label=R.label,
        order=R.order,
        is_commutative=R.is_commutative,
        center=z,
        centralizers=tuple(cs),
        cent_count=len(cs),
        degree=commutativity_degree(R),
        quotient_type=quotient_type(R, z),
        additive_type=classify_additive(R),
    )
