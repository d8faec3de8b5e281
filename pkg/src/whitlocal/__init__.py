"""Exact local computations for Whittaker functions, zeta integrals and
weight factors, with machine-checked verification suites.

Everything is computed over the rationals: Laurent polynomials with
half-integer powers of the residue cardinality, truncated power series,
Schur polynomials, congruence indices and character sums.  No floating
point enters any identity check; floats appear only in explicitly
numeric oracles.
"""

from .exactalg import (
    DivisionByZero,
    InexactDivision,
    InexactSquareRoot,
    LaurentPoly,
    Monomial,
    NegativeUnderHalfExponent,
    NotExpandable,
    RESIDUE_CARDINALITY_VAR,
    RationalFunction,
    TruncatedSeries,
    UnboundVariable,
    VariableMismatch,
    geometric_series,
    qpow,
    series_equal,
    series_expand,
)
from .localrep import (
    ENUMERATION_LIMIT,
    EnumerationTooLarge,
    LocalFieldData,
    RankMismatch,
    UnramifiedRep,
    UnsupportedConductor,
    ZeroSatakeParameter,
    central_substitution,
    character_sum,
    character_sum_numeric,
    congruence_index,
    congruence_index_bruteforce,
    contragredient,
    hecke_eigenvalue,
)
from .reciprocity import (
    ParamPair,
    SymbolicMatrix,
    cusp_invariance_factorization,
    dual_params,
    swap_last_two,
    verify_involution_and_exponents,
    weyl_conjugation_identity,
)
from .report import (
    CheckResult,
    SuiteReport,
    merge_reports,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_check,
)
from .symfunc import (
    Partition,
    cauchy_check,
    cauchy_product_side,
    cauchy_schur_side,
    complete_homogeneous,
    homogeneous_list,
    partitions_of,
    partitions_up_to,
    schur,
    schur_bialternant_oracle,
)
from .whittaker import (
    TorusCocharacter,
    contragredient_value,
    delta_half,
    spherical_value,
    twist_constants,
    twisted_value,
)
from .zeta import (
    PaperComparison,
    SymbolCollision,
    WeightResult,
    ZetaResult,
    local_l_factor,
    local_zeta_unramified,
    verify_unramified_identity,
    weight_at_l,
    weight_at_q_structural,
    weight_unramified,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DivisionByZero",
    "ENUMERATION_LIMIT",
    "EnumerationTooLarge",
    "InexactDivision",
    "InexactSquareRoot",
    "LaurentPoly",
    "LocalFieldData",
    "Monomial",
    "NegativeUnderHalfExponent",
    "NotExpandable",
    "PaperComparison",
    "ParamPair",
    "Partition",
    "RESIDUE_CARDINALITY_VAR",
    "RankMismatch",
    "RationalFunction",
    "SuiteReport",
    "SymbolCollision",
    "SymbolicMatrix",
    "TorusCocharacter",
    "TruncatedSeries",
    "UnboundVariable",
    "UnramifiedRep",
    "UnsupportedConductor",
    "VariableMismatch",
    "WeightResult",
    "ZeroSatakeParameter",
    "ZetaResult",
    "cauchy_check",
    "cauchy_product_side",
    "cauchy_schur_side",
    "central_substitution",
    "character_sum",
    "character_sum_numeric",
    "complete_homogeneous",
    "congruence_index",
    "congruence_index_bruteforce",
    "contragredient",
    "contragredient_value",
    "cusp_invariance_factorization",
    "delta_half",
    "dual_params",
    "geometric_series",
    "hecke_eigenvalue",
    "homogeneous_list",
    "local_l_factor",
    "local_zeta_unramified",
    "merge_reports",
    "partitions_of",
    "partitions_up_to",
    "qpow",
    "report_to_csv",
    "report_to_json",
    "report_to_text",
    "run_check",
    "schur",
    "schur_bialternant_oracle",
    "series_equal",
    "series_expand",
    "spherical_value",
    "swap_last_two",
    "twist_constants",
    "twisted_value",
    "verify_involution_and_exponents",
    "verify_unramified_identity",
    "weight_at_l",
    "weight_at_q_structural",
    "weight_unramified",
    "weyl_conjugation_identity",
]
