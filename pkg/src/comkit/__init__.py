"""comkit: sign-vector calculus for complexes of oriented matroids.

Covector axioms, minors and rank, Kirchberger-style separation with witness
certificates, an exact-rational realizable backend, deterministic fuzz
corpora, and a CLI over all of it.
"""

from ._kernels import BACKEND as kernel_backend
from .signvectors import (
    MINUS,
    PLUS,
    ZERO,
    GroundMismatchError,
    GroundSet,
    SignSystem,
    SignVector,
    compose,
    full_system,
    negate,
    separator,
    support,
    system_equals,
)
from .minors import (
    contraction,
    deletion,
    directed_circuit,
    face_restriction,
    is_shattered,
    rank,
    reorient_system,
)
from .separation import (
    SeparationQuery,
    WitnessReport,
    all_targets,
    audit_circuit_collapse,
    audit_kirchberger,
    audit_monotonicity,
    check_circuit_collapse,
    circuit_collapse_findings,
    hypothesis_holds,
    hypothesis_table,
    is_separable,
    minimal_witness,
    separating_covector,
    target_tope_present,
    target_vector,
    verify_circuit_structure,
)
from .realizable import (
    AffineFunctional,
    LinearConstraintSystem,
    PointConfiguration,
    Rational,
    affine_com,
    affine_dependence,
    affine_span_dimension,
    elimination_covector,
    face_symmetry_functional,
    linear_om,
    lp_feasible,
    parse_rational,
    radon_partition,
    realize_sign_vector,
    separating_functional,
)
from .corpus import (
    CorpusInstance,
    CorpusSpec,
    SplitMix64,
    com_corpus,
    dump_corpus,
    random_point_config,
)

__version__ = "0.1.0"

__all__ = [
    "AffineFunctional",
    "CorpusInstance",
    "CorpusSpec",
    "GroundMismatchError",
    "GroundSet",
    "LinearConstraintSystem",
    "MINUS",
    "PLUS",
    "PointConfiguration",
    "Rational",
    "SeparationQuery",
    "SignSystem",
    "SignVector",
    "SplitMix64",
    "WitnessReport",
    "ZERO",
    "affine_com",
    "affine_dependence",
    "affine_span_dimension",
    "all_targets",
    "audit_circuit_collapse",
    "audit_kirchberger",
    "audit_monotonicity",
    "check_circuit_collapse",
    "circuit_collapse_findings",
    "com_corpus",
    "compose",
    "contraction",
    "deletion",
    "directed_circuit",
    "dump_corpus",
    "elimination_covector",
    "face_restriction",
    "face_symmetry_functional",
    "full_system",
    "hypothesis_holds",
    "hypothesis_table",
    "is_separable",
    "is_shattered",
    "kernel_backend",
    "linear_om",
    "lp_feasible",
    "minimal_witness",
    "negate",
    "parse_rational",
    "radon_partition",
    "random_point_config",
    "rank",
    "realize_sign_vector",
    "reorient_system",
    "separating_covector",
    "separating_functional",
    "separator",
    "support",
    "system_equals",
    "target_tope_present",
    "target_vector",
    "verify_circuit_structure",
]
