"""Exact toolkit for the defining-set codes C_D over F_p and their complete weight enumerators."""

from .codes import (
    CompleteWeightEnumerator,
    DefiningSet,
    WeightDistribution,
    build_defining_set,
    code_params,
    codeword_weight,
    cwe_bruteforce,
    griesmer_classify,
    n_rho,
    pless_checks,
    trace_profile,
    weight_distribution,
)
from .cyclotomic import CycInt, zeta_pow
from .field import CodeSpec, FieldCtx, FieldElement, ParameterError, make_field
from .theorem import (
    VerificationReport,
    phi_breakdown,
    predicted_cwe,
    predicted_length,
    predicted_n_rho,
    predicted_weight_distribution,
    verify,
)

__version__ = "0.1.0"
