"""Exact arithmetic for polyadic (m, n)-rings, n-ary groups and the
polyadic group-ring construction, with an axiom-verification engine and a
small expression-language CLI."""

from .arity import (
    ArityProfile,
    admissible_length,
    iterate_op,
    polyadic_power,
    power_for_length,
    validate_profile,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    ConfigError,
    DomainError,
    InadmissibleLength,
    InfiniteUniverse,
    KeyRangeError,
    NotClosed,
    NoZero,
    ParseError,
    PgrError,
    QuantizationMismatch,
)
from .groupring import GroupRing, GroupRingElement, make_group_ring
from .groups import AdiagGroup, DerivedCyclicGroup, NaryGroup
from .rings import (
    ADJOINED_ZERO,
    AdjoinedZeroRing,
    JRootRing,
    OddJRootSemigroup,
    PolyadicRing,
    adjoin_zero,
)

__all__ = [
    "ADJOINED_ZERO",
    "AdiagGroup",
    "AdjoinedZeroRing",
    "ArityMismatch",
    "ArityProfile",
    "BudgetExceeded",
    "ConfigError",
    "DerivedCyclicGroup",
    "DomainError",
    "GroupRing",
    "GroupRingElement",
    "InadmissibleLength",
    "InfiniteUniverse",
    "JRootRing",
    "KeyRangeError",
    "NaryGroup",
    "NotClosed",
    "NoZero",
    "OddJRootSemigroup",
    "ParseError",
    "PgrError",
    "PolyadicRing",
    "QuantizationMismatch",
    "admissible_length",
    "adjoin_zero",
    "iterate_op",
    "make_group_ring",
    "polyadic_power",
    "power_for_length",
    "validate_profile",
]
