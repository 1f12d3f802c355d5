"""Cross Z-complementary sets from generalized Boolean functions."""

from .construct import (
    CzcsFamily,
    FamilyShape,
    build_set,
    derived_params,
    enumerate_params,
    ordered_partitions,
    ordered_set_partitions,
    validate,
)
from .gbf import AffineOffset, ConstructionParams, OrderedPartition
from .seqcore import (
    CorrelationProfile,
    CorrelationValue,
    DomainError,
    ZqSequence,
    aacf,
    accf,
    bit_decompose,
    cyclotomic_poly,
    is_zero,
    profile,
)
from .verify import (
    VerificationReport,
    aacs,
    accs_adjacent,
    max_zcz_width,
    verify_cs,
    verify_czcp,
    verify_czcs,
    verify_zcp,
)

__version__ = "0.1.0"
