"""Exact line-bundle cohomology on smooth complete toric surfaces.

Fans are validated ray lists; cohomology of an invariant divisor is read
off the sign patterns of lattice points against the associated line
arrangement, exactly and in integer arithmetic.  On top of that sit the
classification of bi-acyclic bundles on the thrice blown-up second
Hirzebruch surface and a certified search showing that surface carries no
strongly exceptional sequence of 7 line bundles.

The scanning kernels exist twice: a compiled extension and a pure-Python
fallback chosen at import time (see `active_backend`).
"""

from ._backend import active_backend, worker_count
from .fan import (
    BadConsecutiveDeterminant,
    Fan,
    FanError,
    IntersectionData,
    MixedFans,
    NonPrimitiveRay,
    TDivisor,
    TooFewRays,
    UnknownName,
    blowup,
    build_named,
    canonical_divisor,
    divisor,
    fan_from_json,
    fan_to_json,
    intersection,
    intersection_data,
    normalize,
    pairing,
    principal_divisor,
    validate_fan,
)
from .cohomology import (
    CohomologyDims,
    CohomologyWitness,
    ScanRegion,
    chamber_contribution,
    cohomology,
    euler_char_rr,
    higher_cohomology_vanishes,
    minus_interval_count,
    scan_region,
    signature_at,
)
from .classify import (
    BiacyclicLabel,
    ClassificationTable,
    KING_TABLE,
    MismatchFound,
    SeriesDescriptor,
    WrongSurface,
    cross_validate,
    enumerate_biacyclic,
    is_biacyclic,
    membership,
)
from .exceptional import (
    Certificate,
    Claim,
    ClaimFailed,
    DuplicateClass,
    ExtProfile,
    FoundSequence,
    OffsetSolutions,
    compatible,
    compatible_set,
    ext_profile,
    find_sequences,
    is_strongly_exceptional,
    solve_offsets,
    verify_counterexample,
)

__version__ = "0.1.0"
