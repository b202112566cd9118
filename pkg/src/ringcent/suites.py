"""Named theorem suites run over a universe of rings.

Each suite checks one proved statement about centralizer structure across
every ring in the universe.  A violation therefore indicates an artifact
bug, not a counterexample; the offending ring's spec is kept on the result
so the CLI can dump it for triage.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from . import gallery
from .abelian import quotient_type
from .centralizers import cent_set, center, commutativity_degree
from .enumeration import cached_catalog, read_catalog
from .errors import EmptyUniverse, UnknownSuite, ValidationError
from .groups import is_prime, prime_factorization, smallest_prime_divisor
from .rings import ElementSet, FiniteRing, load_ring, subrings, validate


@dataclass
class Violation:
    ring_label: str
    expected: str
    observed: str
    spec: dict

    def to_json(self) -> dict:
        return {
            "ring": self.ring_label,
            "expected": self.expected,
            "observed": self.observed,
        }


@dataclass
class SuiteResult:
    suite_id: str
    universe: str
    checked: int
    violations: list[Violation] = field(default_factory=list)
    elapsed_secs: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self, with_timing: bool = True) -> dict:
        return {
            "suite": self.suite_id,
            "universe": self.universe,
            "checked": self.checked,
            "passed": self.passed,
            "violations": [v.to_json() for v in self.violations],
            "elapsed_secs": round(self.elapsed_secs, 3) if with_timing else 0.0,
        }


def _report(violations: list[Violation], ring: FiniteRing,
            expected: str, observed: str) -> None:
    violations.append(
        Violation(ring.label, expected, observed, ring.spec().to_json())
    )


def _proper_centralizers(R: FiniteRing) -> list[ElementSet]:
    return [c for c in cent_set(R) if len(c) < R.order]


# --- suite bodies; each takes (rings, violations) -------------------------


def _suite_t1_no_2_3(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        cc = len(cent_set(R))
        if cc in (2, 3):
            _report(v, R, "|Cent(R)| not in {2, 3}", f"|Cent(R)| = {cc}")
    return checked


def _suite_p2_product(rings, v):
    # deterministic sample: ordered pairs with small product order
    pool = [R for R in rings if R.order <= 36]
    pairs = [(a, b) for a in pool for b in pool if a.order * b.order <= 36]
    pairs = pairs[:60]
    checked = 0
    for A, B in pairs:
        checked += 1
        P = gallery.direct_product(A, B)
        ca, cb, cp = cent_set(A), cent_set(B), cent_set(P)
        if len(cp) != len(ca) * len(cb):
            _report(v, P, f"|Cent| = {len(ca)}*{len(cb)}", str(len(cp)))
            continue
        expected = {
            tuple(sorted(x * B.order + y for x in Sa for y in Sb))
            for Sa in ca for Sb in cb
        }
        got = {c.members for c in cp}
        if expected != got:
            _report(v, P, "Cent(RxS) = Cent(R) x Cent(S)", "set mismatch")
    return checked


def _is_prime_power(n: int) -> Optional[int]:
    fact = prime_factorization(n)
    if len(fact) == 1:
        return next(iter(fact))
    return None


def _suite_t_p2(rings, v):
    checked = 0
    for R in rings:
        p = _is_prime_power(R.order)
        if p is None or R.order != p * p or R.is_commutative:
            continue
        checked += 1
        cc = len(cent_set(R))
        z = center(R)
        if cc != p + 2:
            _report(v, R, f"|Cent(R)| = {p + 2}", str(cc))
        if z.members != (0,):
            _report(v, R, "Z(R) = {0}", str(z.members))
    return checked


def _suite_t_p3_unital(rings, v):
    checked = 0
    for R in rings:
        p = _is_prime_power(R.order)
        if p is None or R.order != p**3 or R.is_commutative:
            continue
        if not R.has_unity():
            continue
        checked += 1
        cc = len(cent_set(R))
        if cc != p + 2:
            _report(v, R, f"|Cent(R)| = {p + 2}", str(cc))
    return checked


def _suite_t_dc(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        qt = quotient_type(R, center(R)).invariant_factors
        if len(qt) == 2 and qt[0] == qt[1] and is_prime(qt[0]):
            p = qt[0]
            cc = len(cent_set(R))
            if cc != p + 2:
                _report(v, R, f"R/Z = [p,p] implies |Cent(R)| = {p + 2}", str(cc))
    return checked


def _suite_t_pring(rings, v):
    checked = 0
    for R in rings:
        p = _is_prime_power(R.order)
        if p is None or R.is_commutative:
            continue
        checked += 1
        cc = len(cent_set(R))
        qt = quotient_type(R, center(R)).invariant_factors
        if cc < p + 2:
            _report(v, R, f"|Cent(R)| >= {p + 2}", str(cc))
        if (cc == p + 2) != (qt == (p, p)):
            _report(
                v, R,
                f"|Cent(R)| = {p + 2} iff R/Z = Z_{p} x Z_{p}",
                f"|Cent(R)| = {cc}, R/Z = {list(qt)}",
            )
    return checked


def _suite_t_4c(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        cc = len(cent_set(R))
        qt = quotient_type(R, center(R)).invariant_factors
        if (cc == 4) != (qt == (2, 2)):
            _report(v, R, "|Cent(R)| = 4 iff R/Z = Z_2 x Z_2",
                    f"|Cent(R)| = {cc}, R/Z = {list(qt)}")
    return checked


def _suite_l4_index2(rings, v):
    checked = 0
    for R in rings:
        if len(cent_set(R)) != 4:
            continue
        checked += 1
        if not any(R.order == 2 * len(c) for c in _proper_centralizers(R)):
            _report(v, R, "some proper centralizer of index 2",
                    str([len(c) for c in _proper_centralizers(R)]))
    return checked


def _suite_t_5c(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        cc = len(cent_set(R))
        qt = quotient_type(R, center(R)).invariant_factors
        if (cc == 5) != (qt == (3, 3)):
            _report(v, R, "|Cent(R)| = 5 iff R/Z = Z_3 x Z_3",
                    f"|Cent(R)| = {cc}, R/Z = {list(qt)}")
    return checked


def _suite_l5c2_counting(rings, v):
    checked = 0
    for R in rings:
        if len(cent_set(R)) != 5:
            continue
        checked += 1
        z = center(R)
        proper = _proper_centralizers(R)
        if len(proper) != 4:
            _report(v, R, "exactly 4 proper centralizers", str(len(proper)))
            continue
        total = sum(len(c) for c in proper) - 3 * len(z)
        if total != R.order:
            _report(v, R, "|R| = |A|+|B|+|C|+|D| - 3|Z(R)|",
                    f"{total} != {R.order}")
        for i in range(4):
            for j in range(i + 1, 4):
                cap = tuple(sorted(set(proper[i].members) & set(proper[j].members)))
                if cap != z.members:
                    _report(v, R, "pairwise intersections equal Z(R)", str(cap))
        if 6 * len(z) > R.order:
            _report(v, R, "|Z(R)| <= |R|/6", f"|Z| = {len(z)}, |R| = {R.order}")
    return checked


def _suite_d_58(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        cc = len(cent_set(R))
        d = commutativity_degree(R)
        if (cc == 4) != (d == Fraction(5, 8)):
            _report(v, R, "|Cent(R)| = 4 iff d(R) = 5/8",
                    f"|Cent(R)| = {cc}, d = {d}")
    return checked


def _machale_bound(n: int) -> Fraction:
    p = smallest_prime_divisor(n)
    return Fraction(p * p + p - 1, p**3)


def _suite_d_bound(rings, v):
    checked = 0
    for R in rings:
        if R.is_commutative or R.order < 2:
            continue
        checked += 1
        d = commutativity_degree(R)
        bound = _machale_bound(R.order)
        p = smallest_prime_divisor(R.order)
        if d > bound:
            _report(v, R, f"d(R) <= {bound}", str(d))
        index_z = R.order // len(center(R))
        if (d == bound) != (index_z == p * p):
            _report(v, R, f"d(R) = {bound} iff |R:Z(R)| = {p * p}",
                    f"d = {d}, |R:Z| = {index_z}")
    return checked


def _suite_d_rc(rings, v):
    checked = 0
    for R in rings:
        if R.is_commutative or R.order < 2:
            continue
        checked += 1
        p = smallest_prime_divisor(R.order)
        if commutativity_degree(R) == _machale_bound(R.order):
            cc = len(cent_set(R))
            if cc != p + 2:
                _report(v, R, f"d at the bound implies |Cent(R)| = {p + 2}",
                        str(cc))
    return checked


def _suite_d_conv(rings, v):
    checked = 0
    for R in rings:
        p = _is_prime_power(R.order)
        if p is None or R.is_commutative:
            continue
        checked += 1
        if len(cent_set(R)) == p + 2:
            d = commutativity_degree(R)
            expected = Fraction(p * p + p - 1, p**3)
            if d != expected:
                _report(v, R, f"|Cent(R)| = {p + 2} implies d(R) = {expected}",
                        str(d))
    return checked


def _suite_l1_intersection(rings, v):
    checked = 0
    for R in rings:
        checked += 1
        inter = set(range(R.order))
        for c in cent_set(R):
            inter &= set(c.members)
        if tuple(sorted(inter)) != center(R).members:
            _report(v, R, "Z(R) = intersection of all centralizers",
                    str(sorted(inter)))
    return checked


def _suite_l2_union(rings, v):
    checked = 0
    for R in rings:
        if R.is_commutative:
            continue
        checked += 1
        z = set(center(R).members)
        union: set[int] = set()
        B = R.mul == R.mul.T
        for r in range(R.order):
            if r not in z:
                union.update(np.flatnonzero(B[r]).tolist())
        if union != set(range(R.order)):
            _report(v, R, "union of non-central centralizers is R",
                    f"covers {len(union)} of {R.order}")
    return checked


def _suite_l3_two_subrings(rings, v):
    checked = 0
    for R in rings:
        if R.order < 2:
            continue
        checked += 1
        proper = [set(S.members) for S in subrings(R) if len(S) < R.order]
        for i in range(len(proper)):
            for j in range(i, len(proper)):
                if len(proper[i] | proper[j]) == R.order:
                    _report(v, R, "no union of two proper subrings covers R",
                            f"{sorted(proper[i])} + {sorted(proper[j])}")
    return checked


SUITES: dict[str, Callable] = {
    "T1_no_2_3": _suite_t1_no_2_3,
    "P2_product": _suite_p2_product,
    "T_p2": _suite_t_p2,
    "T_p3_unital": _suite_t_p3_unital,
    "T_dc": _suite_t_dc,
    "T_pring": _suite_t_pring,
    "T_4c": _suite_t_4c,
    "L4_index2": _suite_l4_index2,
    "T_5c": _suite_t_5c,
    "L5C2_counting": _suite_l5c2_counting,
    "D_58": _suite_d_58,
    "D_bound": _suite_d_bound,
    "D_rc": _suite_d_rc,
    "D_conv": _suite_d_conv,
    "L1_intersection": _suite_l1_intersection,
    "L2_union": _suite_l2_union,
    "L3_two_subrings": _suite_l3_two_subrings,
}


def run_suite(suite_id: str, universe: Iterable[FiniteRing],
              universe_name: str = "universe") -> SuiteResult:
    """Run one named suite over the given rings."""
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}; "
                           f"choices: {', '.join(sorted(SUITES))}")
    rings = list(universe)
    if not rings:
        raise EmptyUniverse("the universe contains no rings")
    t0 = time.perf_counter()
    violations: list[Violation] = []
    checked = SUITES[suite_id](rings, violations)
    return SuiteResult(
        suite_id, universe_name, checked, violations,
        elapsed_secs=time.perf_counter() - t0,
    )


def run_all(universe: Iterable[FiniteRing],
            universe_name: str = "universe") -> list[SuiteResult]:
    rings = list(universe)
    return [run_suite(sid, rings, universe_name) for sid in sorted(SUITES)]


# --- universes -------------------------------------------------------------


def load_universe(spec: str, max_order: int = 13,
                  budget_secs: Optional[float] = None
                  ) -> tuple[list[FiniteRing], str]:
    """Materialize a universe: "gallery", "catalog[:N]", a catalog directory,
    or a single RingSpec file."""
    if spec == "gallery":
        return gallery.default_gallery(), "gallery"
    if spec == "catalog" or spec.startswith("catalog:"):
        hi = int(spec.split(":", 1)[1]) if ":" in spec else max_order
        rings: list[FiniteRing] = []
        for n in range(1, hi + 1):
            rings.extend(cached_catalog(n, budget_secs).representatives)
        return rings, f"catalog orders 1..{hi}"
    path = Path(spec)
    if path.is_dir():
        catalog = read_catalog(path)
        return list(catalog.representatives), f"catalog {path}"
    return [load_ring(path)], f"ring {path}"


# --- mutation harness ------------------------------------------------------


def mutate_entry(R: FiniteRing, i: int, j: int, value: int) -> dict:
    """Explicit spec of R with mul[i][j] overwritten."""
    doc = R.spec().to_json()
    doc["mul"][i][j] = value
    doc["label"] = f"{R.label}~mut({i},{j}->{value})"
    return doc


def detect_mutation(doc: dict) -> str:
    """Classify a (possibly corrupted) explicit spec.

    Returns "validation" when the tables no longer form a ring, else the id
    of the first suite that reports a violation on it, else "undetected".
    The tables are force-loaded without law checks for the suite pass, since
    a corrupted table usually is not a ring at all.
    """
    try:
        validate(doc)
    except ValidationError:
        return "validation"
    forced = FiniteRing(
        np.asarray(doc["add"]), np.asarray(doc["mul"]), doc.get("label")
    )
    for sid in sorted(SUITES):
        try:
            result = run_suite(sid, [forced], "mutation")
        except ValidationError:
            return sid  # the suite tripped over the corruption while building
        if not result.passed:
            return sid
    return "undetected"
