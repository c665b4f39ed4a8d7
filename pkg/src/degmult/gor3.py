"""Codimension-3 Gorenstein degree matrices.

A codimension-3 Gorenstein ideal with 2t+1 generators has a skew
Buchsbaum-Eisenbud presentation matrix whose degree matrix, suitably
ordered, is symmetric about the anti-diagonal.  It is determined by the
t x (t+1) block A of a codimension-2 matrix together with the center
entry d >= a_1.  The numerics of the quotient follow without ever
writing down Pfaffians: the extreme shifts, the self-dual Betti table
built from the resolution of the block ideal J, the multiplicity as an
explicit polynomial in the entry degrees, a cross-check through the
liaison formula e = (m1 + M2 - 4) e(R/J) - (2g - 2), and the
basic-double-link extension recursion.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import betti, cm2
from .errors import CenterTooSmall, InternalMismatch, NotMonotone


@dataclass(frozen=True)
class DegreeMatrixGor3:
    """Codimension-2 block ``base`` plus center entry ``d``."""

    base: cm2.DegreeMatrixCM2
    d: int

    def __post_init__(self) -> None:
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise ValueError(f"d must be an integer, got {self.d!r}")
        if self.d < self.base.a[0]:
            raise CenterTooSmall(f"d = {self.d} < a_1 = {self.base.a[0]}")

    @property
    def t(self) -> int:
        return self.base.t

    def to_json_dict(self) -> dict:
        return {
            "type": "gor3",
            "a": list(self.base.a),
            "b": list(self.base.b),
            "d": self.d,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> DegreeMatrixGor3:
        return validate(obj["a"], obj["b"], obj["d"])


class ShiftsGor3(NamedTuple):
    m1: int
    m2: int
    m3: int
    M1: int
    M2: int
    M3: int


class DeltasGor3(NamedTuple):
    """Shift increments caused by growing the block by one row and column."""

    m1: int
    m2: int
    m3: int
    M1: int
    M2: int
    M3: int


def validate(a: Sequence[int], b: Sequence[int], d: int) -> DegreeMatrixGor3:
    """Validate the block as a codimension-2 matrix and require d >= a_1."""
    return DegreeMatrixGor3(cm2.validate(a, b), d)


def shifts(G: DegreeMatrixGor3) -> ShiftsGor3:
    """Extreme shifts; the maxima follow from self-duality of the resolution.

    m1 = sum(a), m2 = m1 + b_t, m3 = d + 2 sum(b), and M_i = m3 - m_{3-i}
    for i = 1, 2, while M3 = m3.  The equal gaps
    M2 - m2 = M1 - m1 = m3 - m1 - m2 are verified.
    """
    m1 = sum(G.base.a)
    m2 = m1 + G.base.b[-1]
    m3 = G.d + 2 * sum(G.base.b)
    s = ShiftsGor3(m1=m1, m2=m2, m3=m3, M1=m3 - m2, M2=m3 - m1, M3=m3)
    if not (s.M2 - s.m2 == s.M1 - s.m1 == s.m3 - s.m1 - s.m2):
        raise InternalMismatch(f"self-duality gap identity fails: {s}")
    return s


def multiplicity_pfaffian(G: DegreeMatrixGor3) -> int:
    """Multiplicity from the entry degrees of the skew presentation matrix.

    e(R/I) = sum_{j=1}^t b_j (a_1+..+a_j) (d + sum_{i<j} (2 b_i - a_i)
    + b_j - a_j), exactly.
    """
    total = 0
    prefix_a = 0
    acc = G.d  # d + sum_{i<j} (2 b_i - a_i)
    for aj, bj in zip(G.base.a, G.base.b):
        prefix_a += aj
        total += bj * prefix_a * (acc + bj - aj)
        acc += 2 * bj - aj
    return total


def betti_table(G: DegreeMatrixGor3) -> betti.BettiTable:
    """Self-dual three-step table built from the block ideal's resolution.

    Step-1 shifts are the generator degrees of the block ideal J
    together with m3 minus its syzygy degrees; step 2 mirrors step 1
    through m3; step 3 is the single shift m3.
    """
    gens = cm2.generator_degrees(G.base)
    syz = cm2.syzygy_degrees(G.base)
    m3 = G.d + 2 * sum(G.base.b)
    alpha = list(gens) + [m3 - s for s in syz]
    entries = [(1, x, 1) for x in alpha]
    entries += [(2, m3 - x, 1) for x in alpha]
    entries.append((3, m3, 1))
    return betti.BettiTable.from_entries(codim=3, entries=entries)


def _linkage_value(G: DegreeMatrixGor3) -> int:
    """(m1 + M2 - 4) e(R/J) - (2g - 2) for the block curve J, no cross-check."""
    table_j = cm2.betti_table(G.base)
    e_j = betti.multiplicity(table_j)
    g = betti.genus_dim2(table_j)
    s = shifts(G)
    return (s.m1 + s.M2 - 4) * e_j - (2 * g - 2)


def linkage_check(G: DegreeMatrixGor3) -> int:
    """Multiplicity through the liaison formula, asserted against the
    degree-entry formula."""
    value = _linkage_value(G)
    pfaff = multiplicity_pfaffian(G)
    if value != pfaff:
        raise InternalMismatch(
            f"linkage route gives {value}, degree-entry formula gives {pfaff}"
        )
    return value


def extend(G: DegreeMatrixGor3, a: int, b: int) -> tuple[DegreeMatrixGor3, DeltasGor3, int]:
    """Grow the block by (a, b), keeping d, and track every invariant.

    Checks the six shift deltas, the multiplicity recursion
    e' = e + b (m1 + a) (M2 + b - a), and the induced genus recursion
    2g' = 2g + b (m1 + a) (m1 + a + b - 4) + 2 b e(R/J) for the block
    curves.
    """
    c = G.base.b[-1]
    if b < a:
        raise NotMonotone(f"appended pair needs b >= a, got a={a}, b={b}")
    if c < a:
        raise NotMonotone(f"appended a = {a} exceeds trailing b_t = {c}")
    G2 = DegreeMatrixGor3(cm2.DegreeMatrixCM2(G.base.a + (a,), G.base.b + (b,)), G.d)
    s, s2 = shifts(G), shifts(G2)
    deltas = DeltasGor3(
        m1=a,
        m2=a + b - c,
        m3=2 * b,
        M1=b + c - a,
        M2=2 * b - a,
        M3=2 * b,
    )
    if tuple(x + dx for x, dx in zip(s, deltas)) != tuple(s2):
        raise InternalMismatch(f"shift deltas fail: {s} + {deltas} != {s2}")
    e2 = multiplicity_pfaffian(G) + b * (s.m1 + a) * (s.M2 + b - a)
    if e2 != multiplicity_pfaffian(G2):
        raise InternalMismatch(
            f"multiplicity recursion fails: {e2} != {multiplicity_pfaffian(G2)}"
        )
    table_j = cm2.betti_table(G.base)
    table_j2 = cm2.betti_table(G2.base)
    g, g2 = betti.genus_dim2(table_j), betti.genus_dim2(table_j2)
    e_j = betti.multiplicity(table_j)
    if 2 * g2 != 2 * g + b * (s.m1 + a) * (s.m1 + a + b - 4) + 2 * b * e_j:
        raise InternalMismatch(
            f"genus recursion fails for {G.to_json_dict()} + ({a}, {b})"
        )
    return G2, deltas, e2
