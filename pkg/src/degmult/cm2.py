"""Codimension-2 Cohen-Macaulay degree matrices.

By the Hilbert-Burch theorem a codimension-2 Cohen-Macaulay ideal is
the ideal of maximal minors of a t x (t+1) matrix.  Ordering the degree
matrix so that entries increase from bottom to top and left to right,
it is completely determined by its main diagonal a_1..a_t and its
superdiagonal b_1..b_t, and validity reduces to a_i >= 1, b_i >= a_i
and b_i >= a_{i+1}.  From these 2t integers everything else follows:
generator and syzygy degrees, extreme shifts, the u/v multiplicity
formula, the Betti table, a witness monomial ideal with the same degree
matrix, and the basic-double-link extension that appends a row and a
column.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import betti, oracle
from .errors import InternalMismatch, InvalidDiagonal, NotMonotone


@dataclass(frozen=True)
class DegreeMatrixCM2:
    """Diagonal ``a`` and superdiagonal ``b`` of a valid degree matrix."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b) or not self.a:
            raise ValueError("a and b must have equal length t >= 1")
        for i, ai in enumerate(self.a):
            if ai < 1:
                raise InvalidDiagonal(f"a_{i + 1} = {ai} < 1")
        for i, bi in enumerate(self.b):
            if bi < self.a[i]:
                raise NotMonotone(f"b_{i + 1} = {bi} < a_{i + 1} = {self.a[i]}")
            if i + 1 < len(self.a) and bi < self.a[i + 1]:
                raise NotMonotone(
                    f"b_{i + 1} = {bi} < a_{i + 2} = {self.a[i + 1]}"
                )

    @property
    def t(self) -> int:
        return len(self.a)

    def to_json_dict(self) -> dict:
        return {"type": "cm2", "a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> DegreeMatrixCM2:
        return validate(obj["a"], obj["b"])


class ShiftsCM2(NamedTuple):
    m1: int
    m2: int
    M1: int
    M2: int


class DeltasCM2(NamedTuple):
    """Shift increments caused by appending one row and column."""

    m1: int
    m2: int
    M1: int
    M2: int


class UVData(NamedTuple):
    """Successive differences of sorted generator (e) and syzygy (f) degrees.

    u_i = f_i - e_i and v_i = f_i - e_{i+1} for i = 1..m-1, where m is
    the number of generators.  They satisfy u_i >= v_i >= 0 and
    u_{i+1} >= v_i, and determine the extreme degrees through
    e_1 = sum(v), e_m = sum(u), f_1 = sum(v) + u_1,
    f_{m-1} = sum(u) + v_{m-1}.
    """

    m: int
    e: tuple[int, ...]
    f: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]


def validate(a: Sequence[int], b: Sequence[int]) -> DegreeMatrixCM2:
    """Check a_i >= 1, b_i >= a_i, b_i >= a_{i+1} and build the matrix."""
    return DegreeMatrixCM2(_as_int_tuple(a, "a"), _as_int_tuple(b, "b"))


def _as_int_tuple(xs: Sequence[int], name: str) -> tuple[int, ...]:
    out = []
    for x in xs:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"{name} entries must be integers, got {x!r}")
        out.append(x)
    return tuple(out)


def generator_degrees(A: DegreeMatrixCM2) -> tuple[int, ...]:
    """Degrees a_1+..+a_j + b_{j+1}+..+b_t of the maximal minors, j = 0..t."""
    acc = sum(A.b)
    degs = [acc]
    for aj, bj in zip(A.a, A.b):
        acc += aj - bj
        degs.append(acc)
    return tuple(degs)


def syzygy_degrees(A: DegreeMatrixCM2) -> tuple[int, ...]:
    """Degrees a_1+..+a_j + b_j+..+b_t of the syzygies, j = 1..t."""
    acc = A.a[0] + sum(A.b)
    degs = [acc]
    for j in range(1, len(A.a)):
        acc += A.a[j] - A.b[j - 1]
        degs.append(acc)
    return tuple(degs)


def shifts(A: DegreeMatrixCM2) -> ShiftsCM2:
    """Extreme resolution shifts: m1 = sum(a), M1 = sum(b), m2 = m1 + b_t,
    M2 = a_1 + sum(b)."""
    m1 = sum(A.a)
    M1 = sum(A.b)
    return ShiftsCM2(m1=m1, m2=m1 + A.b[-1], M1=M1, M2=A.a[0] + M1)


def full_matrix(A: DegreeMatrixCM2) -> list[list[int]]:
    """Reconstruct the t x (t+1) grid of entry degrees f_i - e_j.

    Telescoping shows every row steps by b_j - a_j between columns j
    and j+1, and column 1 holds a_1+..+a_i - (b_1+..+b_{i-1}), so the
    whole grid follows from the diagonal and superdiagonal; entries
    increase along rows and decrease down columns by validity.
    """
    t = A.t
    diffs = [bj - aj for aj, bj in zip(A.a, A.b)]
    grid = []
    first = 0
    for i in range(t):
        first += A.a[i] - (A.b[i - 1] if i else 0)
        row = [first]
        for j in range(t):
            row.append(row[-1] + diffs[j])
        grid.append(row)
    return grid


@lru_cache(maxsize=1 << 17)
def uv_data(A: DegreeMatrixCM2) -> UVData:
    """Sorted degree lists and their u/v differences, cross-checked.

    The degree-matrix convention orders degrees decreasingly; sorting
    ascending reconciles it with the resolution convention.  The four
    extreme-degree identities are verified on the result.  Cached:
    sweeps revisit the same matrix from several checks.
    """
    e = tuple(sorted(generator_degrees(A)))
    f = tuple(sorted(syzygy_degrees(A)))
    m = len(e)
    u: list[int] = []
    v: list[int] = []
    for i in range(m - 1):
        fi = f[i]
        ui = fi - e[i]
        vi = fi - e[i + 1]
        if not ui >= vi >= 0:
            raise InternalMismatch(f"u_i >= v_i >= 0 fails at i={i + 1}: e={e}, f={f}")
        if i and ui < v[i - 1]:
            raise InternalMismatch(f"u_(i+1) >= v_i fails at i={i}: e={e}, f={f}")
        u.append(ui)
        v.append(vi)
    checks = (
        (e[0], sum(v)),
        (e[-1], sum(u)),
        (f[0], sum(v) + u[0]),
        (f[-1], sum(u) + v[-1]),
    )
    for got, expect in checks:
        if got != expect:
            raise InternalMismatch(f"extreme-degree identity fails: {checks}")
    return UVData(m=m, e=e, f=f, u=tuple(u), v=tuple(v))


def multiplicity_uv(A: DegreeMatrixCM2) -> int:
    """Multiplicity via both u/v expressions, which must agree.

    e(R/I) = sum_i u_i (v_i + .. + v_{m-1}) = sum_i v_i (u_1 + .. + u_i).
    """
    uv = uv_data(A)
    tail = 0
    first = 0
    for ui, vi in zip(reversed(uv.u), reversed(uv.v)):
        tail += vi
        first += ui * tail
    head = 0
    second = 0
    for ui, vi in zip(uv.u, uv.v):
        head += ui
        second += vi * head
    if first != second:
        raise InternalMismatch(
            f"u/v multiplicity expressions disagree: {first} != {second}"
        )
    return first


def hs_identities(A: DegreeMatrixCM2) -> bool:
    """Whether both Herzog-Srinivasan summation identities hold.

    In the v's: sum_{i=2}^{m-1} (v_{i-1}+v_i)(v_i+..+v_{m-1})
                 = (v_1+..+v_{m-1})(v_2+..+v_{m-1}),
    and the mirror identity in the u's.  Both are theorems; a False
    return is a reportable anomaly.
    """
    uv = uv_data(A)
    u, v, m = uv.u, uv.v, uv.m
    lhs_v = sum((v[i - 1] + v[i]) * sum(v[i:]) for i in range(1, m - 1))
    rhs_v = sum(v) * sum(v[1:])
    lhs_u = sum((u[i] + u[i + 1]) * sum(u[: i + 1]) for i in range(m - 2))
    rhs_u = sum(u) * sum(u[: m - 2])
    return lhs_v == rhs_v and lhs_u == rhs_u


def betti_table(A: DegreeMatrixCM2) -> betti.BettiTable:
    """Two-step Betti table: generator degrees, then syzygy degrees."""
    entries = [(1, d, 1) for d in generator_degrees(A)]
    entries += [(2, d, 1) for d in syzygy_degrees(A)]
    return betti.BettiTable.from_entries(codim=2, entries=entries)


def witness_monomial_ideal(A: DegreeMatrixCM2) -> oracle.MonomialStaircase:
    """A monomial ideal whose degree matrix is exactly A.

    Generators x^(a_1+..+a_j) y^(b_{j+1}+..+b_t) for j = 0..t; the
    exponents are strictly monotone, so the generating set is minimal
    and contains pure powers of both variables.
    """
    gens = [(sum(A.a[:j]), sum(A.b[j:])) for j in range(A.t + 1)]
    return oracle.minimalize(gens)


def extend(A: DegreeMatrixCM2, a: int, b: int) -> tuple[DegreeMatrixCM2, DeltasCM2, int]:
    """Append a row and column (basic double link) and track the effect.

    Requires b >= a and b_t >= a so the extension stays valid.  The
    shifts move by (a, a+b-c, b, b) with c = b_t, and the multiplicity
    grows by (m1 + a) * b; both facts are verified against direct
    recomputation on the extended matrix.
    """
    c = A.b[-1]
    if b < a:
        raise NotMonotone(f"appended pair needs b >= a, got a={a}, b={b}")
    if c < a:
        raise NotMonotone(f"appended a = {a} exceeds trailing b_t = {c}")
    A2 = DegreeMatrixCM2(A.a + (a,), A.b + (b,))
    s, s2 = shifts(A), shifts(A2)
    deltas = DeltasCM2(m1=a, m2=a + b - c, M1=b, M2=b)
    if (s.m1 + deltas.m1, s.m2 + deltas.m2, s.M1 + deltas.M1, s.M2 + deltas.M2) != (
        s2.m1,
        s2.m2,
        s2.M1,
        s2.M2,
    ):
        raise InternalMismatch(f"shift deltas fail: {s} + {deltas} != {s2}")
    e2 = multiplicity_uv(A) + (s.m1 + a) * b
    if e2 != multiplicity_uv(A2):
        raise InternalMismatch(
            f"multiplicity recursion fails: {e2} != {multiplicity_uv(A2)}"
        )
    return A2, deltas, e2
