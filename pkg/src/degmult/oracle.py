"""Brute-force colength oracle for monomial ideals in two variables.

A monomial ideal in K[x, y] is described by its staircase: the minimal
generators x^p y^q, recorded as exponent pairs.  For an Artinian ideal
(one containing pure powers of both variables) the colength, the number
of standard monomials below the staircase, equals the multiplicity of
the quotient.  This count is the independent ground truth against which
the resolution-based multiplicity routes are checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotArtinian


@dataclass(frozen=True)
class MonomialStaircase:
    """Minimal generators of an Artinian monomial ideal in x and y.

    Canonical form: sorted with x-exponents strictly increasing and
    y-exponents strictly decreasing, first generator a pure y-power,
    last a pure x-power.  Build via :func:`minimalize`.
    """

    gens: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise ValueError("a staircase needs at least one generator")
        for p, q in self.gens:
            if p < 0 or q < 0:
                raise ValueError(f"exponents must be >= 0, got ({p}, {q})")
        for (p1, q1), (p2, q2) in zip(self.gens, self.gens[1:]):
            if not (p1 < p2 and q1 > q2):
                raise ValueError("generators must be minimal and sorted")
        if self.gens[0][0] != 0 or self.gens[-1][1] != 0:
            raise NotArtinian(
                "staircase must contain a pure power of x and of y"
            )

    def to_json_dict(self) -> dict:
        return {"type": "monomial2", "gens": [[p, q] for p, q in self.gens]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> MonomialStaircase:
        return minimalize([(int(p), int(q)) for p, q in obj["gens"]])


def minimalize(gens: Iterable[tuple[int, int]]) -> MonomialStaircase:
    """Drop generators divisible by another one and sort canonically.

    x^p1 y^q1 divides x^p2 y^q2 exactly when p1 <= p2 and q1 <= q2, so
    the survivors are the minimal points of the dominance order.
    """
    pts = sorted({(int(p), int(q)) for p, q in gens})
    if not pts:
        raise ValueError("no generators given")
    keep = [
        g
        for g in pts
        if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in pts)
    ]
    return MonomialStaircase(tuple(sorted(keep)))


def colength(s: MonomialStaircase) -> int:
    """Number of monomials outside the ideal, by summing staircase rows.

    Between consecutive y-levels q_k <= y < q_{k-1} the monomials
    outside the ideal are exactly those with x-exponent < p_k, so the
    count is sum_k p_k (q_{k-1} - q_k); no individual lattice points
    are enumerated.  (x^5, x^4 y, x^2 y^3, y^5) gives 17.
    """
    total = 0
    for (_, q_prev), (p, q) in zip(s.gens, s.gens[1:]):
        total += p * (q_prev - q)
    return total


def transpose(s: MonomialStaircase) -> MonomialStaircase:
    """The staircase with the roles of x and y swapped."""
    return MonomialStaircase(tuple(sorted((q, p) for p, q in s.gens)))
