"""Multiplicity bounds as denominator-cleared integer comparisons.

Every bound compares a factorial multiple of the multiplicity against
an integer polynomial in the extreme shifts, so verdicts are exact; the
cleared denominator (2, 6, or 12) is recorded on the verdict.  Covered
are the Herzog-Huneke-Srinivasan conjecture bounds prod(m_i)/p! <= e
<= prod(M_i)/p!, the sharper codimension-2 and Gorenstein
codimension-3 bounds that refine them, a conditional entrywise upper
bound for codimension 2, and Srinivasan's quasi-pure Gorenstein bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import cm2 as cm2mod
from .betti import ShiftSummary
from .errors import CharacterizationViolated, InternalMismatch


@dataclass(frozen=True)
class BoundVerdict:
    """One cleared inequality: ``lhs relation rhs`` with both sides integer.

    ``lhs`` is the cleared multiple of the multiplicity, ``rhs`` the
    bound expression, and ``factor`` the denominator that was cleared.
    """

    name: str
    lhs: int
    relation: str  # ">=" or "<="
    rhs: int
    factor: int

    def __post_init__(self) -> None:
        if self.relation not in (">=", "<="):
            raise ValueError(f"relation must be >= or <=, got {self.relation!r}")

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs if self.relation == ">=" else self.lhs <= self.rhs

    @property
    def sharp(self) -> bool:
        return self.lhs == self.rhs

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "factor": self.factor,
            "holds": self.holds,
            "sharp": self.sharp,
        }

    def text(self) -> str:
        return (
            f"{self.name}: {self.factor}*e = {self.lhs} {self.relation} {self.rhs}"
            f"  holds={str(self.holds).lower()} sharp={str(self.sharp).lower()}"
        )


class SharpnessVerdict(NamedTuple):
    lower_sharp: bool
    upper_sharp: bool
    pure: bool


class Prop24Verdict(NamedTuple):
    """Hypothesis flags, the subdiagonal margin a_1 - 2d + 1, and the bound."""

    hyp_i: bool
    hyp_ii: bool
    hyp_ii_margin: int | None
    verdict: BoundVerdict

    @property
    def bound_holds(self) -> bool:
        return self.verdict.holds


def hhs_bounds(shifts: ShiftSummary, codim: int, e: int) -> tuple[BoundVerdict, BoundVerdict]:
    """Conjectured bounds prod(m_i) <= p! e <= prod(M_i), cleared by p!."""
    p = len(shifts.m)
    if codim != p:
        raise ValueError(f"need codim = number of steps, got {codim} vs {p}")
    fact = math.factorial(p)
    lower = BoundVerdict("hhs_lower", fact * e, ">=", math.prod(shifts.m), fact)
    upper = BoundVerdict("hhs_upper", fact * e, "<=", math.prod(shifts.M), fact)
    return lower, upper


def cm2_bounds(m1: int, m2: int, M1: int, M2: int, e: int) -> tuple[BoundVerdict, BoundVerdict]:
    """Sharper codimension-2 bounds, cleared by 2.

    2e >= m1 m2 + (M2 - M1)(M2 - m2 + M1 - m1) and
    2e <= M1 M2 - (m2 - m1)(M2 - m2 + M1 - m1).
    """
    spread = (M2 - m2) + (M1 - m1)
    lower = BoundVerdict("cm2_lower", 2 * e, ">=", m1 * m2 + (M2 - M1) * spread, 2)
    upper = BoundVerdict("cm2_upper", 2 * e, "<=", M1 * M2 - (m2 - m1) * spread, 2)
    return lower, upper


def gor3_bounds(
    m1: int, m2: int, m3: int, M1: int, M2: int, M3: int, e: int
) -> tuple[BoundVerdict, BoundVerdict]:
    """Sharper Gorenstein codimension-3 bounds, cleared by 6 and 12.

    6e >= m1 m2 m3 + (M3 - M2)^2 (M2 - m2 + M1 - m1) and
    12e <= 2 M1 M2 M3 - M3 (M2 - m2 + M1 - m1).  Each is also computed
    in the equivalent form obtained from self-duality
    (M1 = m3 - m2, M2 = m3 - m1, M3 = m3) and the two forms must agree.
    """
    if (M1, M2, M3) != (m3 - m2, m3 - m1, m3):
        raise ValueError(
            f"shifts are not self-dual: M = {(M1, M2, M3)}, m = {(m1, m2, m3)}"
        )
    spread = (M2 - m2) + (M1 - m1)
    lower_rhs = m1 * m2 * m3 + (M3 - M2) ** 2 * spread
    lower_alt = m1 * m2 * m3 + 2 * m1 * m1 * (m3 - m1 - m2)
    if lower_rhs != lower_alt:
        raise InternalMismatch(f"lower-bound forms disagree: {lower_rhs} != {lower_alt}")
    upper_rhs = 2 * M1 * M2 * M3 - M3 * spread
    upper_alt = 2 * (M1 * M2 * M3 - M3 * (M1 + M2 - M3))
    if upper_rhs != upper_alt:
        raise InternalMismatch(f"upper-bound forms disagree: {upper_rhs} != {upper_alt}")
    lower = BoundVerdict("gor3_lower", 6 * e, ">=", lower_rhs, 6)
    upper = BoundVerdict("gor3_upper", 12 * e, "<=", upper_rhs, 12)
    return lower, upper


def prop24_bound(A: cm2mod.DegreeMatrixCM2, e: int) -> Prop24Verdict:
    """Conditional entrywise upper bound 2e <= M1 M2 - 2(M1-m1) - 2(M2-m2).

    Sufficient hypotheses tracked alongside the verdict: (i) every
    degree-matrix entry is >= 2, or (ii) t >= 2 and the margin
    a_1 - 2 d + 1 is nonnegative, where d is the (1,2) entry of the
    full matrix (the entry b_1).  Reading d as the subdiagonal (2,1)
    entry instead is refuted by the matrices with a = b = (k, 1),
    k >= 2, whose multiplicity k^2 + k + 1 exceeds the bound while
    that margin stays nonnegative.  The bound is reported, never
    asserted: a violation under a satisfied hypothesis is a
    first-class finding.
    """
    grid = cm2mod.full_matrix(A)
    hyp_i = all(entry >= 2 for row in grid for entry in row)
    if A.t >= 2:
        margin: int | None = A.a[0] - 2 * grid[0][1] + 1
        hyp_ii = margin >= 0
    else:
        margin = None
        hyp_ii = False
    s = cm2mod.shifts(A)
    rhs = s.M1 * s.M2 - 2 * (s.M1 - s.m1) - 2 * (s.M2 - s.m2)
    verdict = BoundVerdict("prop24_upper", 2 * e, "<=", rhs, 2)
    return Prop24Verdict(hyp_i=hyp_i, hyp_ii=hyp_ii, hyp_ii_margin=margin, verdict=verdict)


def srinivasan_bounds(
    shifts: ShiftSummary, e: int
) -> tuple[BoundVerdict, BoundVerdict, bool]:
    """Srinivasan's Gorenstein bounds m1 M2 M3 <= 6e <= M1 m2 m3.

    Both are only claimed under quasi-purity, which is flagged on the
    result; the lower bound fails already for the complete intersection
    of type (2, 2, 5), and whether the upper bound holds for every
    Gorenstein codimension-3 ideal is the open question the hunt
    searches.
    """
    if len(shifts.m) != 3:
        raise ValueError("these bounds apply to codimension-3 shift data")
    m, M = shifts.m, shifts.M
    lower = BoundVerdict("srinivasan_lower", 6 * e, ">=", m[0] * M[1] * M[2], 6)
    upper = BoundVerdict("srinivasan_upper", 6 * e, "<=", M[0] * m[1] * m[2], 6)
    quasi_pure = all(m[i] >= M[i - 1] for i in range(1, 3))
    return lower, upper, quasi_pure


def sharpness(shifts: ShiftSummary, codim: int, e: int) -> SharpnessVerdict:
    """Sharpness flags for the conjectured bounds, checked against purity.

    Either bound is attained exactly when the resolution is pure, and
    then both are; three disagreeing flags raise
    CharacterizationViolated, which no Cohen-Macaulay codimension-2 or
    Gorenstein codimension-3 quotient can trigger.
    """
    p = len(shifts.m)
    if codim != p:
        raise ValueError(f"need codim = number of steps, got {codim} vs {p}")
    fact = math.factorial(p)
    lower_sharp = fact * e == math.prod(shifts.m)
    upper_sharp = fact * e == math.prod(shifts.M)
    pure = shifts.m == shifts.M
    if not (lower_sharp == upper_sharp == pure):
        raise CharacterizationViolated(
            f"sharpness/purity flags disagree: lower={lower_sharp}, "
            f"upper={upper_sharp}, pure={pure} for shifts {shifts}, e={e}"
        )
    return SharpnessVerdict(lower_sharp=lower_sharp, upper_sharp=upper_sharp, pure=pure)
