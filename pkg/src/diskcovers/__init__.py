"""Simple branched coverings of the disk: classification, liftable braids,
restrictions, and orbit/coset verification of the half-twist generator sets."""

from .core import (
    ComponentInvariants,
    ComponentSignature,
    CycleType,
    DisconnectedCoveringError,
    MonodromySequence,
    NotRealizable,
    Permutation,
    SurfaceInvariants,
    Transposition,
    canonical_target,
    components,
    conjugating_permutation,
    disk_covering,
    is_disk,
    is_equivalent,
    omega_class,
    surface_invariants,
    total_monodromy,
)
from .hurwitz import (
    FORWARD,
    INVERSE,
    BraidWord,
    CanonicalizationResult,
    act,
    apply_moves,
    canonicalize,
    elementary_move,
    replay_certificate,
)
from .lift import (
    CurveRef,
    IntervalRef,
    count_regular_bases,
    curve_monodromy,
    index0_curve,
    index0_interval,
    index1_curve,
    index1_interval,
    interval_braid,
    interval_type,
    is_liftable,
    is_regular_curve,
    liftable_interval_powers,
    reference_alpha_monodromy,
    standard_curve,
    standard_interval,
    systems_liftable_equivalent,
    theorem_c_generators,
    transport_curve,
    transport_interval,
    twisted_interval,
)
from .restrict import END, START, RestrictionSpec, restrict, restricted_total_monodromy, restriction_signature
from .orbit import (
    CapExceeded,
    OrbitClass,
    OrbitTable,
    all_sequences,
    classify_all,
    enumeration_bound,
    hurwitz_orbit,
    schreier_generators,
    stabilizer_index,
)
from .cosets import (
    CosetTable,
    Inconclusive,
    IntervalGenerationReport,
    Presentation,
    TheoremCReport,
    braid_presentation,
    interval_powers_index,
    todd_coxeter,
    verify_theorem_c,
)

__version__ = "0.1.0"
