"""Graded Betti tables and the Hilbert-series route to multiplicity.

A Betti table records the shifts and ranks of a minimal graded free
resolution of a graded quotient R/I.  Its alternating sum is the
K-polynomial, the numerator of the Hilbert series; dividing by
(1-s)^c, where c is the codimension, and evaluating the quotient at
s=1 yields the multiplicity.  Everything here is exact arithmetic on
unbounded integers: no derivatives, no floats, no factorial overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, NamedTuple

from .errors import (
    DivisibilityError,
    DivisionError,
    InternalMismatch,
    NotPure,
)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of R/I for homological steps 1..p.

    ``steps[i]`` holds the step-(i+1) entries as (shift, rank) pairs
    with strictly increasing shifts.  Step 0 (the free module R itself,
    one rank-1 generator in degree 0) is implicit and never stored.
    ``codim`` is the declared codimension c <= p.
    """

    codim: int
    steps: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("a Betti table needs at least one step")
        if not 1 <= self.codim <= len(self.steps):
            raise ValueError(
                f"codim must lie in 1..{len(self.steps)}, got {self.codim}"
            )
        for step in self.steps:
            if not step:
                raise ValueError("every step must carry at least one entry")
            prev = 0
            for shift, rank in step:
                if shift < 1:
                    raise ValueError(f"shifts must be >= 1, got {shift}")
                if rank < 1:
                    raise ValueError(f"ranks must be >= 1, got {rank}")
                if shift <= prev and prev:
                    raise ValueError("shifts within a step must strictly increase")
                prev = shift

    @classmethod
    def from_entries(
        cls, codim: int, entries: Iterable[tuple[int, int, int]]
    ) -> BettiTable:
        """Build a table from (step, shift, rank) triples, aggregating ranks.

        Steps must cover 1..p without gaps; multiple entries on one
        (step, shift) key are summed.
        """
        by_step: dict[int, dict[int, int]] = {}
        for step, shift, rank in entries:
            if step < 1:
                raise ValueError(f"steps are 1-based, got {step}")
            by_step.setdefault(step, {})
            by_step[step][shift] = by_step[step].get(shift, 0) + rank
        if not by_step:
            raise ValueError("no entries given")
        p = max(by_step)
        if sorted(by_step) != list(range(1, p + 1)):
            raise ValueError("every step 1..p must carry at least one entry")
        steps = tuple(
            tuple(sorted(by_step[i].items())) for i in range(1, p + 1)
        )
        return cls(codim=codim, steps=steps)

    @property
    def projective_dimension(self) -> int:
        return len(self.steps)

    def max_shift(self) -> int:
        return max(shift for step in self.steps for shift, _ in step)

    def to_json_dict(self) -> dict:
        return {
            "codim": self.codim,
            "steps": [[[shift, rank] for shift, rank in step] for step in self.steps],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> BettiTable:
        entries = [
            (i + 1, int(shift), int(rank))
            for i, step in enumerate(obj["steps"])
            for shift, rank in step
        ]
        return cls.from_entries(int(obj["codim"]), entries)


@dataclass(frozen=True)
class KPolynomial:
    """Integer polynomial sum_i coeffs[i] * s^i, trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficient sequence must not end in zero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                term = ("" if mag == 1 else f"{mag}*") + ("s" if i == 1 else f"s^{i}")
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out.replace("- ", "-", 1)


class ShiftSummary(NamedTuple):
    """Minimal and maximal shifts (m_1..m_p, M_1..M_p) of a table."""

    m: tuple[int, ...]
    M: tuple[int, ...]


class Purity(NamedTuple):
    pure: bool
    quasi_pure: bool


def k_polynomial(table: BettiTable) -> KPolynomial:
    """Alternating sum sum_i (-1)^i sum_j beta_{i,j} s^j, step 0 included.

    The step-0 term contributes the constant 1, so for the quotient by
    the full degree-one ideal (one step, shift 1, rank 1) this is 1 - s.
    """
    coeffs = [0] * (table.max_shift() + 1)
    coeffs[0] = 1
    for i, step in enumerate(table.steps):
        sign = -1 if i % 2 == 0 else 1  # step i+1 carries (-1)^(i+1)
        for shift, rank in step:
            coeffs[shift] += sign * rank
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return KPolynomial(tuple(coeffs))


def _divide_once(coeffs: list[int]) -> list[int]:
    """Exact quotient of the coefficient list by (1 - s).

    The partial sums of the coefficients are the quotient; the final
    partial sum equals the value at s=1 and must vanish for exactness.
    """
    partial = list(accumulate(coeffs))
    if not partial or partial[-1] != 0:
        raise DivisionError(
            "K-polynomial is not divisible by (1-s) to the declared codimension"
        )
    return partial[:-1]


def _hilbert_quotient(table: BettiTable) -> list[int]:
    """Coefficients of Q(s) = K(s) / (1-s)^codim, exactly."""
    coeffs = list(k_polynomial(table).coeffs)
    for _ in range(table.codim):
        coeffs = _divide_once(coeffs)
    return coeffs


def multiplicity(table: BettiTable) -> int:
    """Multiplicity e(R/I) read off the resolution as Q(1), K = (1-s)^c Q.

    Raises DivisionError when (1-s)^c does not divide K exactly, which
    flags a table/codimension pair no Cohen-Macaulay quotient can have.
    """
    return sum(_hilbert_quotient(table))


def genus_dim2(table: BettiTable) -> int:
    """Arithmetic genus of the dimension-2 graded quotient (a curve).

    With Q = sum q_i s^i as in :func:`multiplicity`, the Hilbert
    polynomial of the dimension-2 quotient is e*t + 1 - g, which gives
    g = 1 + sum_i q_i (i - 1).
    """
    q = _hilbert_quotient(table)
    return 1 + sum(c * (i - 1) for i, c in enumerate(q))


def shift_summary(table: BettiTable) -> ShiftSummary:
    """Per-step minimal and maximal shifts."""
    return ShiftSummary(
        m=tuple(step[0][0] for step in table.steps),
        M=tuple(step[-1][0] for step in table.steps),
    )


def purity(table: BettiTable) -> Purity:
    """Purity (m_i = M_i at every step) and quasi-purity (m_i >= M_{i-1})."""
    s = shift_summary(table)
    pure = s.m == s.M
    quasi = all(s.m[i] >= s.M[i - 1] for i in range(1, len(s.m)))
    return Purity(pure=pure, quasi_pure=quasi)


def huneke_miller(table: BettiTable) -> int:
    """Multiplicity of a pure Cohen-Macaulay table as (prod d_i) / p!.

    Requires codim = p and m_i = M_i throughout; verifies that p!
    divides the product and that the result agrees with the
    Hilbert-series route.
    """
    s = shift_summary(table)
    if s.m != s.M:
        raise NotPure(f"table is not pure: m={s.m}, M={s.M}")
    p = table.projective_dimension
    if table.codim != p:
        raise ValueError(
            f"pure-resolution formula needs codim = projective dimension, "
            f"got codim={table.codim}, p={p}"
        )
    prod = math.prod(s.m)
    fact = math.factorial(p)
    if prod % fact:
        raise DivisibilityError(
            f"{p}! does not divide prod(d_i) = {prod}; no such pure table exists"
        )
    e = prod // fact
    e_series = multiplicity(table)
    if e != e_series:
        raise InternalMismatch(
            f"pure-shift formula gives {e} but the Hilbert series gives {e_series}"
        )
    return e
