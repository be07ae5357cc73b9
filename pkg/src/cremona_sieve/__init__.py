"""Exact-arithmetic classification engine for special Cremona transformations.

The package derives the numerical invariants of the base locus symbolically,
packages the classical inequality and equality constraints as exact integer
filters, and runs staged sieves that isolate the admissible transformations
with three- and four-dimensional base loci.
"""

from .config import (
    MODE_FOURFOLD_P7,
    MODE_THREEFOLD_P6,
    TransformationConfig,
)
from .exactq import (
    G,
    LAM,
    NU,
    T,
    LinearSystem,
    LinearSystemError,
    InconsistentSystemError,
    SingularSystemError,
    Poly,
    Rational,
    binomial_poly,
    evaluate,
    linear_system,
    solve_linear_system,
)
from .invariants import (
    HilbertPolynomial,
    InvariantTable,
    ReductionTable,
    adjoint_power,
    chi_values,
    hilbert_polynomial,
    interpolation_constraints,
    multidegree_of,
    pluridegrees,
    reduction_table,
    solve_invariants,
)
from .multidegree import (
    AdmissibleType,
    Multidegree,
    admissible_types,
    multidegree_admissible,
    projective_degrees,
    vanishing_threshold,
)
from .filters import (
    Filter,
    SectionInvariants,
    adjunction_case_system,
    castelnuovo_bound,
    cremona_degree_filters,
    lebarz_nu_bound,
    lebarz_quadrisecant_count,
    livorni_sommese_filters,
    log_general_filters,
)
from .pipeline import (
    CandidateTuple,
    ClassificationReport,
    PipelineSpec,
    StageReport,
    builtin_pipeline,
    enumerate_candidates,
    run_pipeline,
)
from .classification_table import ROWS, verify_classification_table

__version__ = "0.1.0"
