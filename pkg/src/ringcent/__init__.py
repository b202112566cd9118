"""Centralizer structure, commutativity degree, and exhaustive enumeration
of small finite rings represented as Cayley tables."""

from .abelian import (
    AbelianGroupType,
    classify_additive,
    is_cyclic,
    is_elementary_p_squared,
    quotient_type,
)
from .centralizers import (
    CentReport,
    analyze,
    cent_set,
    center,
    centralizer,
    commutativity_degree,
)
from .enumeration import (
    IsoClassCatalog,
    canonical_form,
    enumerate_rings,
    isomorphic,
    search_n_centralizer,
)
from .errors import (
    BadIdentityConvention,
    EmptyUniverse,
    IndexOutOfRange,
    NoAdditiveInverse,
    NonAbelianAddition,
    NotAdditiveSubgroup,
    NotAssociative,
    NotDistributive,
    NotOddPrime,
    NotPrime,
    PartialUniverse,
    RingError,
    TooLarge,
    UnknownSuite,
    ValidationError,
)
from .rings import (
    ElementSet,
    FiniteRing,
    RingSpec,
    index,
    is_subring,
    load_ring,
    set_sum,
    validate,
)
from .suites import SUITES, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupType", "CentReport", "ElementSet", "FiniteRing",
    "IsoClassCatalog", "RingSpec", "SuiteResult", "SUITES",
    "analyze", "canonical_form", "cent_set", "center", "centralizer",
    "classify_additive", "commutativity_degree", "enumerate_rings",
    "index", "is_cyclic", "is_elementary_p_squared", "is_subring",
    "isomorphic", "load_ring", "quotient_type", "run_all", "run_suite",
    "search_n_centralizer", "set_sum", "validate",
    "RingError", "ValidationError", "BadIdentityConvention",
    "NonAbelianAddition", "NoAdditiveInverse", "NotAssociative",
    "NotDistributive", "IndexOutOfRange", "NotAdditiveSubgroup",
    "NotPrime", "NotOddPrime", "TooLarge", "UnknownSuite",
    "EmptyUniverse", "PartialUniverse",
]
