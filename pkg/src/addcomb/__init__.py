"""Sumset arithmetic, covering certificates, and rectification on finite abelian groups.

The library follows one discipline throughout: every structural claim (an
inclusion, a size bound, an isomorphism) is returned together with a
certificate object whose defining properties were re-verified by exhaustive
membership checks, never assumed from the construction.
"""

from .bounds import (
    BoundReport,
    PipelineReport,
    bound_calculator,
    theorem1_pipeline,
    threshold_chain,
)
from .covering import (
    CoveringCertificate,
    GrowthBoundReport,
    JBoundReport,
    PluenneckeWitness,
    covering_certificate,
    greedy_translates,
    growth_bound_check,
    growth_table,
    is_k_covering,
    j_bound_report,
    j_count,
    j_count_table,
    pluennecke_witness,
    verify_incm,
)
from .fourier import (
    ConvolutionCounts,
    LargeCoeffCertificate,
    LargeCoeffParams,
    MomentChainReport,
    SpectrumReport,
    certified_large_coefficient,
    character_sum,
    convolution_counts,
    eta_largecoeff,
    eta_largecoeff2,
    moment_lower_bound_check,
    spectrum,
)
from .groups import (
    BudgetError,
    CyclicGroup,
    Element,
    GroupMismatchError,
    GSet,
    IntegerWindow,
    TorsionGroup,
    difference_ratio,
    difference_set,
    dilate,
    doubling_ratio,
    is_subset,
    iterated_sum,
    min_growth_ratio,
    negate,
    sumset,
    translate,
)
from .instances import (
    canonical_affine_form,
    exhaustive_sets,
    parse_elements,
    parse_group,
    parse_shape,
    progression,
    random_sets,
    subspace_coset,
    union_progressions,
)
from .primes import is_prime, smallest_prime_in
from .rectify import (
    DiameterWitness,
    GapCoverResult,
    IsoCheckResult,
    LevWindow,
    RectificationWitness,
    RectifyOutcome,
    SpectralDiameterResult,
    diam_from_spectrum,
    diameter,
    freiman_iso_check,
    gap_cover,
    lev_interval,
    minimal_integer_model,
    rectify,
)
from .serialize import (
    dump_instances,
    dumps,
    gset_from_obj,
    gset_to_obj,
    load_instances,
    round_sig,
    to_jsonable,
)
from .suite import CHECK_NAMES, CheckTally, SuiteConfig, SuiteReport, run_suite
from .torsion import SubgroupCosetCertificate, subgroup_generated, torsion_cover

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetError",
    "CHECK_NAMES",
    "CheckTally",
    "ConvolutionCounts",
    "CoveringCertificate",
    "CyclicGroup",
    "DiameterWitness",
    "Element",
    "GSet",
    "GapCoverResult",
    "GroupMismatchError",
    "GrowthBoundReport",
    "IntegerWindow",
    "IsoCheckResult",
    "JBoundReport",
    "LargeCoeffCertificate",
    "LargeCoeffParams",
    "LevWindow",
    "MomentChainReport",
    "PipelineReport",
    "PluenneckeWitness",
    "RectificationWitness",
    "RectifyOutcome",
    "SpectralDiameterResult",
    "SpectrumReport",
    "SubgroupCosetCertificate",
    "SuiteConfig",
    "SuiteReport",
    "TorsionGroup",
    "bound_calculator",
    "canonical_affine_form",
    "certified_large_coefficient",
    "character_sum",
    "convolution_counts",
    "covering_certificate",
    "diam_from_spectrum",
    "diameter",
    "difference_ratio",
    "difference_set",
    "dilate",
    "doubling_ratio",
    "dump_instances",
    "dumps",
    "eta_largecoeff",
    "eta_largecoeff2",
    "exhaustive_sets",
    "freiman_iso_check",
    "gap_cover",
    "greedy_translates",
    "growth_bound_check",
    "growth_table",
    "gset_from_obj",
    "gset_to_obj",
    "is_k_covering",
    "is_prime",
    "is_subset",
    "iterated_sum",
    "j_bound_report",
    "j_count",
    "j_count_table",
    "lev_interval",
    "load_instances",
    "min_growth_ratio",
    "minimal_integer_model",
    "moment_lower_bound_check",
    "negate",
    "parse_elements",
    "parse_group",
    "parse_shape",
    "pluennecke_witness",
    "progression",
    "random_sets",
    "rectify",
    "round_sig",
    "run_suite",
    "smallest_prime_in",
    "spectrum",
    "subgroup_generated",
    "subspace_coset",
    "sumset",
    "to_jsonable",
    "theorem1_pipeline",
    "threshold_chain",
    "torsion_cover",
    "translate",
    "union_progressions",
    "verify_incm",
]
