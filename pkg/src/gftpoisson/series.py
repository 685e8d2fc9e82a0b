"""Poisson-weighted coefficient sequences with certified truncation.

Builds the negative-tail series F(m,z) = z - sum_{n>=2} e^{-m} m^{n-1}/(n-1)! z^n,
its integral companion G(m,z) = z - sum e^{-m} m^{n-1}/n! z^n, and the termwise
(Hadamard) operator that multiplies a normalized series by the Poisson weights.
Also provides the closed-form shifted exponential sums that the weighted
coefficient sums collapse to, plus a truncation rule with a provable tail bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError, TruncationNotReached


class SignConvention(enum.Enum):
    NEGATIVE_TAIL = "negative"   # f(z) = z - sum b_n z^n, b_n >= 0
    GENERAL_TAIL = "general"     # f(z) = z + sum a_n z^n, a_n complex


class WeightGrowth(enum.Enum):
    CONSTANT = 0
    LINEAR = 1
    QUADRATIC = 2


class SumKind(enum.Enum):
    SHIFT1 = "Shift1"                      # sum_{n>=2} m^{n-1}/(n-1)! = e^m - 1
    SHIFT2 = "Shift2"                      # sum_{n>=2} m^{n-1}/(n-2)! = m e^m
    SHIFT3 = "Shift3"                      # sum_{n>=3} m^{n-1}/(n-3)! = m^2 e^m
    OVER_N_FACT = "OverNFact"              # sum_{n>=2} m^{n-1}/n! = (e^m-1-m)/m
    POW_N_OVER_N_FACT = "PowNOverNFact"    # sum_{n>=2} m^n/n! = e^m - 1 - m


@dataclass(frozen=True)
class PoissonParams:
    """Poisson parameter m > 0."""

    m: float

    def __post_init__(self) -> None:
        if not (isinstance(self.m, (int, float)) and math.isfinite(self.m) and self.m > 0):
            raise DomainError(f"m must be a finite positive real, got {self.m!r}")
        object.__setattr__(self, "m", float(self.m))


@dataclass(frozen=True)
class TruncationPolicy:
    """Target absolute tail error eps with floor and cap on the order N."""

    eps: float = 1e-12
    n_min: int = 2
    n_max: int = 10_000

    def __post_init__(self) -> None:
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise DomainError(f"eps must be finite and positive, got {self.eps!r}")
        if not (2 <= self.n_min <= self.n_max):
            raise DomainError(f"need 2 <= n_min <= n_max, got ({self.n_min}, {self.n_max})")


@dataclass(frozen=True)
class CoefficientSeq:
    """Truncated normalized series z -/+ sum_{n=2}^{N} coeff_n z^n.

    coefficients[i] is the coefficient of z^(i+2); tail_bound bounds
    sum_{n>N} |coeff_n| of the underlying infinite series.  The leading
    coefficient of z is implicitly 1.  m records the Poisson parameter the
    sequence was built from, if any.
    """

    convention: SignConvention
    coefficients: tuple
    tail_bound: float
    m: float | None = None

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if len(coeffs) < 1:
            raise DomainError("coefficient list must reach at least n=2")
        if self.convention is SignConvention.NEGATIVE_TAIL:
            vals = []
            for b in coeffs:
                b = float(b)
                if not (b >= 0 and math.isfinite(b)):
                    raise DomainError(f"negative-tail coefficients must be >= 0, got {b!r}")
                vals.append(b)
            coeffs = tuple(vals)
        else:
            coeffs = tuple(complex(a) for a in coeffs)
        object.__setattr__(self, "coefficients", coeffs)
        if not (isinstance(self.tail_bound, (int, float)) and self.tail_bound >= 0
                and math.isfinite(self.tail_bound)):
            raise DomainError(f"tail_bound must be finite and >= 0, got {self.tail_bound!r}")
        object.__setattr__(self, "tail_bound", float(self.tail_bound))

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) + 1

    def scaled(self, factor: float) -> "CoefficientSeq":
        """Multiply every tail coefficient (and the tail bound) by factor >= 0."""
        if factor < 0:
            raise DomainError("scale factor must be >= 0")
        return CoefficientSeq(self.convention,
                              tuple(c * factor for c in self.coefficients),
                              self.tail_bound * factor, self.m)

    def magnitudes(self) -> "CoefficientSeq":
        """Negative-tail sequence of coefficient magnitudes |coeff_n|."""
        return CoefficientSeq(SignConvention.NEGATIVE_TAIL,
                              tuple(abs(c) for c in self.coefficients),
                              self.tail_bound, self.m)

    def to_json_dict(self) -> dict:
        if self.convention is SignConvention.NEGATIVE_TAIL:
            coeffs = list(self.coefficients)
        else:
            coeffs = [[c.real, c.imag] for c in self.coefficients]
        return {"convention": self.convention.value, "m": self.m,
                "N": self.truncation_order, "coefficients": coeffs,
                "tail_bound": self.tail_bound}


# ---- Poisson coefficients ----

def poisson_coeff(p: PoissonParams, n: int) -> float:
    """e^{-m} m^{n-1}/(n-1)! via the stable multiplicative recurrence."""
    if n < 2:
        raise DomainError(f"coefficient index starts at n=2, got {n}")
    c = p.m * math.exp(-p.m)
    for i in range(3, n + 1):
        c *= p.m / (i - 1)
    return c


def choose_truncation(p: PoissonParams, policy: TruncationPolicy,
                      weight_growth: WeightGrowth = WeightGrowth.QUADRATIC) -> int:
    """Smallest order N with a certified weighted tail below eps.

    N is at least max(n_min, 2 ceil(m) + 10); past that floor the weighted
    term ratio n^g c_n stays below 0.59 for g <= 2, so the true tail is under
    2 * N^g * c_N once that quantity is below eps (safeguard factor 2).
    """
    g = weight_growth.value
    floor = max(policy.n_min, 2 * math.ceil(p.m) + 10)
    if floor > policy.n_max:
        raise TruncationNotReached(
            f"order floor {floor} exceeds cap n_max={policy.n_max}")
    c = p.m * math.exp(-p.m)
    for n in range(3, floor + 1):
        c *= p.m / (n - 1)
    n = floor
    while True:
        if 2.0 * (n ** g) * c < policy.eps:
            return n
        if n >= policy.n_max:
            raise TruncationNotReached(
                f"tail bound {policy.eps} not reached by n_max={policy.n_max}")
        n += 1
        c *= p.m / (n - 1)


def coeffs_F(p: PoissonParams, policy: TruncationPolicy = TruncationPolicy()) -> CoefficientSeq:
    """Negative-tail coefficients b_n = e^{-m} m^{n-1}/(n-1)! of F(m,z)."""
    n_top = choose_truncation(p, policy, WeightGrowth.QUADRATIC)
    out = []
    c = p.m * math.exp(-p.m)
    for n in range(2, n_top + 1):
        out.append(c)
        c *= p.m / n
    # c now holds the first omitted term; ratio < 1/2 past the floor
    return CoefficientSeq(SignConvention.NEGATIVE_TAIL, tuple(out), 2.0 * c, p.m)


def coeffs_G(p: PoissonParams, policy: TruncationPolicy = TruncationPolicy()) -> CoefficientSeq:
    """Negative-tail coefficients b_n = e^{-m} m^{n-1}/n! of the integral companion G."""
    n_top = choose_truncation(p, policy, WeightGrowth.QUADRATIC)
    out = []
    c = p.m * math.exp(-p.m)
    for n in range(2, n_top + 1):
        out.append(c / n)
        c *= p.m / n
    return CoefficientSeq(SignConvention.NEGATIVE_TAIL, tuple(out), 2.0 * c / (n_top + 1), p.m)


def _pmf_max_beyond(p: PoissonParams, j0: int) -> float:
    """max over j >= j0 of the Poisson pmf e^{-m} m^j / j!."""
    j = j0 if j0 >= p.m else math.floor(p.m)
    return math.exp(-p.m + j * math.log(p.m) - math.lgamma(j + 1))


def apply_operator_I(f: CoefficientSeq, p: PoissonParams) -> CoefficientSeq:
    """Termwise product with the Poisson weights: coeff_n -> e^{-m} m^{n-1}/(n-1)! coeff_n."""
    out = []
    c = p.m * math.exp(-p.m)
    for n in range(2, f.truncation_order + 1):
        out.append(c * f.coefficients[n - 2])
        c *= p.m / n
    # every weight is a probability mass, so the tail shrinks by at least the
    # largest mass beyond the truncation order
    tail = f.tail_bound * _pmf_max_beyond(p, f.truncation_order)
    return CoefficientSeq(f.convention, tuple(out), tail, p.m)


# ---- shifted exponential sums ----

def shifted_exp_sum(p: PoissonParams, kind: SumKind) -> float:
    """Closed form of the given shifted exponential series."""
    m = p.m
    if kind is SumKind.SHIFT1:
        return math.expm1(m)
    if kind is SumKind.SHIFT2:
        return m * math.exp(m)
    if kind is SumKind.SHIFT3:
        return m * m * math.exp(m)
    if kind is SumKind.OVER_N_FACT:
        return (math.expm1(m) - m) / m
    if kind is SumKind.POW_N_OVER_N_FACT:
        return math.expm1(m) - m
    raise DomainError(f"unknown sum kind {kind!r}")


_FIRST_INDEX = {SumKind.SHIFT1: 2, SumKind.SHIFT2: 2, SumKind.SHIFT3: 3,
                SumKind.OVER_N_FACT: 2, SumKind.POW_N_OVER_N_FACT: 2}


def partial_shifted_sum(p: PoissonParams, kind: SumKind, upto: int) -> float:
    """Direct term-by-term summation to index n=upto (independent of the closed form)."""
    m = p.m
    start = _FIRST_INDEX[kind]
    if upto < start:
        return 0.0
    if kind is SumKind.SHIFT1:
        t, ratio = m, lambda n: m / (n - 1)
    elif kind is SumKind.SHIFT2:
        t, ratio = m, lambda n: m / (n - 2)
    elif kind is SumKind.SHIFT3:
        t, ratio = m * m, lambda n: m / (n - 3)
    elif kind is SumKind.OVER_N_FACT:
        t, ratio = m / 2.0, lambda n: m / n
    else:
        t, ratio = m * m / 2.0, lambda n: m / n
    terms = []
    for n in range(start, upto + 1):
        if n > start:
            t *= ratio(n)
        terms.append(t)
    return math.fsum(terms)
