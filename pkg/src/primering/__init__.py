"""Cyclic-group tools: exact arithmetic, projections, ring orbitals, and
an exact simulator of the order-finding circuit used for factoring."""

from .arithmetic import (
    INT128_MAX,
    Convergent,
    IntegerOverflowError,
    PrimeFactorization,
    checked_mul,
    checked_pow,
    convergents,
    factorize,
    gcd,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from .groups import (
    BY_A,
    BY_N,
    Coset,
    CyclicGroup,
    ExtendedGroupSpec,
    GroupElement,
    coset_partition,
    crt_residues,
    recompose_slices,
    slice_coordinates,
    subgroup_compose,
    subgroup_decompose,
    subgroup_generated,
)
from .oracle import (
    CosetLabel,
    PeriodCheckReport,
    oracle_eval,
    residue_sequence,
    residue_spectrum,
    verify_period_subgroup,
)
from .representations import (
    DeviationReport,
    character_table,
    irrep_value,
    project,
    project_via_primes,
    shift,
    translation_phase_check,
    verify_great_orthogonality,
)
from .ring import (
    OrbitalVector,
    RingMode,
    RingSpec,
    analytic_modes,
    build_ring_hamiltonian,
    degeneracy_pattern,
    salc,
    salc_coset_equality,
    salc_via_primes,
)
from .rng import SplitMix64
from .shor import (
    MODE_PAPER_ORDER,
    MODE_POWER_OF_TWO,
    CollapsedState,
    EntangledState,
    FactoringError,
    FactorReport,
    MeasurementDistribution,
    Progression,
    RegisterConfig,
    Sample,
    extract_period,
    factor,
    measure_bottom,
    prepare_uniform,
    qft_distribution,
    sample_outcome,
)

__version__ = "0.1.0"
