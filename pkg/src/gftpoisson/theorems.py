"""Closed-form membership predicates and their independent series cross-checks.

Each predicate compares a closed-form left-hand side against 2k.  The
cross-check recomputes the same quantity by truncated weighted summation of
the underlying coefficients and reports the absolute difference.  To keep the
comparison stable for large m, both routes are compared on the scale of the
weighted coefficient sum itself (the closed form is mapped onto that scale by
exact algebra), never through a factor of e^m.
"""

from __future__ import annotations

import enum
import math

from .criteria import (ClassParams, MembershipReport, RParams, SumWhich,
                       classify, lemma_sum, worst_case_R_coeffs)
from .errors import MissingRParams
from .series import (PoissonParams, TruncationPolicy, WeightGrowth,
                     apply_operator_I, choose_truncation, coeffs_F, coeffs_G)

# math.exp overflows just past 709; beyond this every predicate fails anyway
_EXP_GUARD = 700.0


class PredicateId(enum.Enum):
    T1_F_in_S = "T1_F_in_S"
    T2_F_in_C = "T2_F_in_C"
    T3_G_in_C = "T3_G_in_C"
    T4_G_in_S = "T4_G_in_S"
    T5_I_in_S = "T5_I_in_S"
    T6_I_in_C = "T6_I_in_C"
    C1_F_in_Sk = "C1_F_in_Sk"
    C2_F_in_Ck = "C2_F_in_Ck"
    C3_I_in_Sk = "C3_I_in_Sk"
    C4_I_in_Ck = "C4_I_in_Ck"
    C5_G_in_Ck = "C5_G_in_Ck"
    C6_G_in_Sk = "C6_G_in_Sk"


NEEDS_R = frozenset({PredicateId.T5_I_in_S, PredicateId.T6_I_in_C,
                     PredicateId.C3_I_in_Sk, PredicateId.C4_I_in_Ck})

COROLLARIES = frozenset({PredicateId.C1_F_in_Sk, PredicateId.C2_F_in_Ck,
                         PredicateId.C3_I_in_Sk, PredicateId.C4_I_in_Ck,
                         PredicateId.C5_G_in_Ck, PredicateId.C6_G_in_Sk})


def _p_factor(c: ClassParams) -> float:
    return (1 - c.lam) + c.k * (1 + c.lam)


def _q_factor(c: ClassParams) -> float:
    return 1 + 2 * c.k + c.k * c.lam - c.lam


def _g_tail_ratio(m: float) -> float:
    """(1 - e^{-m} - m e^{-m}) / m, with the removable singularity at m=0."""
    if m < 1e-8:
        return 0.5 * m
    return (-math.expm1(-m) - m * math.exp(-m)) / m


# ---- closed-form left-hand sides ----

def t1_lhs(p: PoissonParams, c: ClassParams) -> float:
    if p.m > _EXP_GUARD:
        return math.inf
    return _p_factor(c) * p.m * math.exp(p.m)


def t2_lhs(p: PoissonParams, c: ClassParams) -> float:
    if p.m > _EXP_GUARD:
        return math.inf
    me = p.m * math.exp(p.m)
    return _p_factor(c) * p.m * me + 2 * _q_factor(c) * me


def t4_lhs(p: PoissonParams, c: ClassParams) -> float:
    return (_p_factor(c) * (-math.expm1(-p.m))
            + (1 - c.lam) * (c.k - 1) * _g_tail_ratio(p.m))


def t5_lhs(p: PoissonParams, c: ClassParams, r: RParams) -> float:
    # same bracket as t4_lhs, so the scale identity is exact by construction
    return r.scale * t4_lhs(p, c)


def t6_lhs(p: PoissonParams, c: ClassParams, r: RParams) -> float:
    return r.scale * (_p_factor(c) * p.m + 2 * c.k * (-math.expm1(-p.m)))


# ---- predicate evaluation ----

def _resolve(pid: PredicateId, c: ClassParams) -> ClassParams:
    """Corollary ids evaluate their parent at lambda = 0."""
    if pid in COROLLARIES:
        return ClassParams(c.k, 0.0)
    return c


def _closed_lhs(pid: PredicateId, p: PoissonParams, c: ClassParams,
                r: RParams | None) -> float:
    if pid in NEEDS_R and r is None:
        raise MissingRParams(f"{pid.value} requires (A, B, tau)")
    c = _resolve(pid, c)
    if pid in (PredicateId.T1_F_in_S, PredicateId.C1_F_in_Sk,
               PredicateId.T3_G_in_C, PredicateId.C5_G_in_Ck):
        return t1_lhs(p, c)
    if pid in (PredicateId.T2_F_in_C, PredicateId.C2_F_in_Ck):
        return t2_lhs(p, c)
    if pid in (PredicateId.T4_G_in_S, PredicateId.C6_G_in_Sk):
        return t4_lhs(p, c)
    if pid in (PredicateId.T5_I_in_S, PredicateId.C3_I_in_Sk):
        return t5_lhs(p, c, r)
    return t6_lhs(p, c, r)


def evaluate(pid: PredicateId, p: PoissonParams, c: ClassParams,
             r: RParams | None = None) -> MembershipReport:
    """Closed-form membership report for one predicate at one parameter point."""
    lhs = _closed_lhs(pid, p, c, r)
    rhs = 2 * _resolve(pid, c).k
    margin = rhs - lhs
    return MembershipReport(predicate=pid.value, verdict=classify(margin),
                            lhs=lhs, rhs=rhs, margin=margin)


# ---- independent cross-check ----

def _closed_sum_scale(pid: PredicateId, p: PoissonParams, c: ClassParams,
                      r: RParams | None) -> float:
    """The closed form mapped onto the weighted-sum scale by exact algebra."""
    m = p.m
    if pid in (PredicateId.T1_F_in_S, PredicateId.C1_F_in_Sk,
               PredicateId.T3_G_in_C, PredicateId.C5_G_in_Ck):
        return _p_factor(c) * m + 2 * c.k * (-math.expm1(-m))
    if pid in (PredicateId.T2_F_in_C, PredicateId.C2_F_in_Ck):
        return _p_factor(c) * m * m + 2 * _q_factor(c) * m + 2 * c.k * (-math.expm1(-m))
    if pid in (PredicateId.T4_G_in_S, PredicateId.C6_G_in_Sk):
        return t4_lhs(p, c)
    if pid in (PredicateId.T5_I_in_S, PredicateId.C3_I_in_Sk):
        return t5_lhs(p, c, r)
    return t6_lhs(p, c, r)


def _series_sum(pid: PredicateId, p: PoissonParams, c: ClassParams,
                r: RParams | None, policy: TruncationPolicy) -> tuple[float, int]:
    if pid in (PredicateId.T1_F_in_S, PredicateId.C1_F_in_Sk,
               PredicateId.T3_G_in_C, PredicateId.C5_G_in_Ck):
        f = coeffs_F(p, policy)
        return lemma_sum(f, c, SumWhich.S)[0], f.truncation_order
    if pid in (PredicateId.T2_F_in_C, PredicateId.C2_F_in_Ck):
        f = coeffs_F(p, policy)
        return lemma_sum(f, c, SumWhich.C)[0], f.truncation_order
    if pid in (PredicateId.T4_G_in_S, PredicateId.C6_G_in_Sk):
        g = coeffs_G(p, policy)
        return lemma_sum(g, c, SumWhich.S)[0], g.truncation_order
    if pid in (PredicateId.T5_I_in_S, PredicateId.C3_I_in_Sk):
        n_top = choose_truncation(p, policy, WeightGrowth.QUADRATIC)
        worst = worst_case_R_coeffs(r, n_top)
        img = apply_operator_I(worst, p).magnitudes()
        return lemma_sum(img, c, SumWhich.S)[0], img.truncation_order
    g = coeffs_G(p, policy).scaled(r.scale)
    return lemma_sum(g, c, SumWhich.C)[0], g.truncation_order


def _crosscheck_detail(pid: PredicateId, p: PoissonParams, c: ClassParams,
                       r: RParams | None,
                       policy: TruncationPolicy) -> tuple[float, int]:
    if pid in NEEDS_R and r is None:
        raise MissingRParams(f"{pid.value} requires (A, B, tau)")
    c = _resolve(pid, c)
    closed = _closed_sum_scale(pid, p, c, r)
    series, n_top = _series_sum(pid, p, c, r, policy)
    return abs(closed - series), n_top


def crosscheck(pid: PredicateId, p: PoissonParams, c: ClassParams,
               r: RParams | None = None,
               policy: TruncationPolicy = TruncationPolicy()) -> float:
    """|closed form - truncated weighted sum| on the weighted-sum scale."""
    return _crosscheck_detail(pid, p, c, r, policy)[0]


def evaluate_with_crosscheck(pid: PredicateId, p: PoissonParams, c: ClassParams,
                             r: RParams | None = None,
                             policy: TruncationPolicy = TruncationPolicy()
                             ) -> MembershipReport:
    """Membership report with the cross-check residual and order filled in."""
    base = evaluate(pid, p, c, r)
    residual, n_top = _crosscheck_detail(pid, p, c, r, policy)
    return MembershipReport(predicate=base.predicate, verdict=base.verdict,
                            lhs=base.lhs, rhs=base.rhs, margin=base.margin,
                            crosscheck_residual=residual, truncation_order=n_top)
