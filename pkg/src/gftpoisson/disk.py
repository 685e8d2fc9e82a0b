"""Evaluation of truncated series on the unit disk and sampling of the
defining inequalities.

The S-condition value at z is |w-1|/|w+1| with w = z f'(z) / ((1-lam) f(z)
+ lam z f'(z)); membership in S(k,lambda) requires it to stay below k on the
open disk.  The C-condition applies the same quotient to z f'(z), and the
R-condition is |f'-1| / |(A-B) tau - B (f'-1)| against threshold 1.  Grid
sampling reports the maximum, its location, and the count of violations.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .criteria import ClassParams, RParams
from .errors import DomainError
from .series import CoefficientSeq, SignConvention

DEFAULT_RADII = (0.25, 0.5, 0.75, 0.9)
DEFAULT_POINTS = 256
DEFAULT_FLOOR = 1e-12


class ConditionId(enum.Enum):
    S_COND = "S_cond"
    C_COND = "C_cond"
    R_COND = "R_cond"


@dataclass(frozen=True)
class GridSpec:
    radii: tuple = DEFAULT_RADII
    points_per_circle: int = DEFAULT_POINTS
    denominator_floor: float = DEFAULT_FLOOR

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not (0 < r < 1) for r in radii):
            raise DomainError(f"radii must lie in (0,1), got {self.radii!r}")
        if self.points_per_circle < 8:
            raise DomainError(f"need at least 8 points per circle, got {self.points_per_circle}")
        if not (self.denominator_floor > 0):
            raise DomainError("denominator_floor must be positive")
        object.__setattr__(self, "radii", radii)


@dataclass(frozen=True)
class GridReport:
    condition: ConditionId
    max_value: float
    argmax_z: complex
    violations: int
    skipped: int

    def to_json_dict(self) -> dict:
        return {"condition": self.condition.value, "max": self.max_value,
                "argmax": [self.argmax_z.real, self.argmax_z.imag],
                "violations": self.violations, "skipped": self.skipped}


# ---- series evaluation ----

def _require_in_disk(z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"evaluation point must satisfy |z| < 1, got |z|={abs(z)!r}")
    return z


def eval_series(f: CoefficientSeq, z: complex) -> complex:
    """f(z) by Horner evaluation of the truncated tail."""
    z = _require_in_disk(z)
    acc = 0j
    for coeff in reversed(f.coefficients):
        acc = acc * z + coeff
    tail = acc * z * z
    return z - tail if f.convention is SignConvention.NEGATIVE_TAIL else z + tail


def eval_deriv(f: CoefficientSeq, z: complex) -> complex:
    """f'(z) by Horner evaluation."""
    z = _require_in_disk(z)
    acc = 0j
    top = f.truncation_order
    for i, coeff in enumerate(reversed(f.coefficients)):
        acc = acc * z + (top - i) * coeff
    tail = acc * z
    return 1 - tail if f.convention is SignConvention.NEGATIVE_TAIL else 1 + tail


def _zfprime(f: CoefficientSeq) -> CoefficientSeq:
    """Coefficient map of g = z f': coefficient n becomes n * coeff_n."""
    coeffs = tuple(n * f.coefficients[n - 2] for n in range(2, f.truncation_order + 1))
    # linear-growth estimate for the transformed tail
    return CoefficientSeq(f.convention, coeffs,
                          (f.truncation_order + 1) * f.tail_bound, f.m)


# ---- condition values ----

def s_condition_value(f: CoefficientSeq, z: complex, c: ClassParams,
                      denominator_floor: float = DEFAULT_FLOOR) -> tuple[float, bool]:
    """(|w-1|/|w+1|, valid) at z; valid=False marks a near-singular denominator."""
    z = _require_in_disk(z)
    if z == 0:
        return 0.0, True   # w -> 1 by normalization
    num = z * eval_deriv(f, z)
    den = (1 - c.lam) * eval_series(f, z) + c.lam * num
    if abs(den) < denominator_floor:
        return 0.0, False
    w = num / den
    wp1 = w + 1
    if abs(wp1) < denominator_floor:
        return 0.0, False
    return abs(w - 1) / abs(wp1), True


def c_condition_value(f: CoefficientSeq, z: complex, c: ClassParams,
                      denominator_floor: float = DEFAULT_FLOOR) -> tuple[float, bool]:
    """S-condition value of z f'(z)."""
    return s_condition_value(_zfprime(f), z, c, denominator_floor)


def r_condition_value(f: CoefficientSeq, z: complex, r: RParams,
                      denominator_floor: float = DEFAULT_FLOOR) -> tuple[float, bool]:
    """|f'-1| / |(A-B) tau - B (f'-1)| at z, against threshold 1."""
    z = _require_in_disk(z)
    d = eval_deriv(f, z) - 1
    den = (r.A - r.B) * r.tau - r.B * d
    if abs(den) < denominator_floor:
        return 0.0, False
    return abs(d) / abs(den), True


# ---- grid sampling ----

def grid_check(f: CoefficientSeq, condition: ConditionId, params,
               grid: GridSpec = GridSpec()) -> GridReport:
    """Evaluate the condition over all grid points.

    The maximum is taken over valid points with a deterministic tie-break
    (first radius, then first angle); a point counts as a violation when its
    value reaches the class threshold (k for S/C, 1 for R).
    """
    if condition is ConditionId.R_COND:
        if not isinstance(params, RParams):
            raise DomainError("R condition requires RParams")
        threshold = 1.0
        value_at = lambda z: r_condition_value(f, z, params, grid.denominator_floor)
    else:
        if not isinstance(params, ClassParams):
            raise DomainError("S/C conditions require ClassParams")
        threshold = params.k
        cond = s_condition_value if condition is ConditionId.S_COND else c_condition_value
        value_at = lambda z: cond(f, z, params, grid.denominator_floor)

    max_value = -math.inf
    argmax = 0j
    violations = 0
    skipped = 0
    step = 2 * math.pi / grid.points_per_circle
    for radius in grid.radii:
        for j in range(grid.points_per_circle):
            z = cmath.rect(radius, j * step)
            value, valid = value_at(z)
            if not valid:
                skipped += 1
                continue
            if value > max_value:
                max_value = value
                argmax = z
            if value >= threshold:
                violations += 1
    if max_value == -math.inf:
        max_value = 0.0   # every point skipped
    return GridReport(condition=condition, max_value=max_value, argmax_z=argmax,
                      violations=violations, skipped=skipped)
