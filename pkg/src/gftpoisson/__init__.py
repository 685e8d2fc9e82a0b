"""Verification toolkit for Poisson-weighted power series membership in
starlike and convex function classes on the unit disk.

Closed-form membership predicates are paired with independent truncated
series summation and with direct sampling of the defining inequalities, so
every claim can be checked by two routes.
"""

from .criteria import (BOUNDARY_TOL, ClassParams, MembershipReport, RParams,
                       SumWhich, Verdict, classify, dixit_pal_bound, lemma_sum,
                       weight_C, weight_S, worst_case_R_coeffs)
from .disk import (ConditionId, GridReport, GridSpec, c_condition_value,
                   eval_deriv, eval_series, grid_check, r_condition_value,
                   s_condition_value)
from .errors import (DomainError, InvalidTolerance, MissingRParams,
                     TruncationNotReached)
from .serialize import dumps_canonical
from .series import (CoefficientSeq, PoissonParams, SignConvention, SumKind,
                     TruncationPolicy, WeightGrowth, apply_operator_I,
                     choose_truncation, coeffs_F, coeffs_G, partial_shifted_sum,
                     poisson_coeff, shifted_exp_sum)
from .suite import run_suite
from .theorems import (PredicateId, crosscheck, evaluate,
                       evaluate_with_crosscheck, t1_lhs, t2_lhs, t4_lhs, t5_lhs,
                       t6_lhs)
from .thresholds import Outcome, ThresholdResult, solve_m_star

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_TOL", "ClassParams", "CoefficientSeq", "ConditionId",
    "DomainError", "GridReport", "GridSpec", "InvalidTolerance",
    "MembershipReport", "MissingRParams", "Outcome", "PoissonParams",
    "PredicateId", "RParams", "SignConvention", "SumKind", "SumWhich",
    "ThresholdResult", "TruncationNotReached", "TruncationPolicy", "Verdict",
    "WeightGrowth", "apply_operator_I", "c_condition_value",
    "choose_truncation", "classify", "coeffs_F", "coeffs_G", "crosscheck",
    "dixit_pal_bound", "dumps_canonical", "eval_deriv", "eval_series",
    "evaluate", "evaluate_with_crosscheck", "grid_check", "lemma_sum",
    "partial_shifted_sum", "poisson_coeff", "r_condition_value", "run_suite",
    "s_condition_value", "shifted_exp_sum", "solve_m_star", "t1_lhs", "t2_lhs",
    "t4_lhs", "t5_lhs", "t6_lhs", "weight_C", "weight_S",
    "worst_case_R_coeffs",
]
