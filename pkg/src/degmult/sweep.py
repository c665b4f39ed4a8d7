"""Exhaustive enumeration of degree matrices with full invariant checking.

Every valid matrix in a bounded range is visited exactly once, in
lexicographic order, and every enabled identity, bound, and recursion
is verified on it.  Violations are collected as data, never raised, so
a report always comes back; a nonempty anomaly list means either an
implementation bug (all the checked identities are theorems) or, for
the hunted open questions, a genuine discovery.  Reports are
deterministic: byte-identical across runs and across worker counts,
which is why wall-clock runtime is kept off the serialized forms.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool
from typing import Iterator, TextIO

from . import betti, bounds, cm2, gor3, oracle
from .betti import ShiftSummary
from .errors import (
    CharacterizationViolated,
    DivisibilityError,
    DivisionError,
    InternalMismatch,
    NotPure,
    UnknownTarget,
)

CM2_CHECKS = (
    "multiplicity_agreement",
    "hs_identities",
    "uv_facts",
    "cm2_bounds",
    "hhs_bounds",
    "sharpness_purity",
    "huneke_miller",
    "extension",
    "shift_agreement",
    "prop24",
)

GOR3_CHECKS = (
    "multiplicity_agreement",
    "self_duality",
    "gor3_bounds",
    "hhs_bounds",
    "sharpness_purity",
    "huneke_miller",
    "extension",
    "shift_agreement",
)

HUNT_TARGETS = {
    "srinivasan_upper_gor3": "gor3",
    "prop24_bound": "cm2",
}

SWEEP_CSV_COLUMNS = (
    "family", "t", "a", "b", "d",
    "m1", "m2", "m3", "M1", "M2", "M3", "e",
    "pure", "quasi_pure",
    "hhs_lower_holds", "hhs_lower_sharp", "hhs_upper_holds", "hhs_upper_sharp",
    "cm2_lower_holds", "cm2_lower_sharp", "cm2_upper_holds", "cm2_upper_sharp",
    "gor3_lower_holds", "gor3_lower_sharp", "gor3_upper_holds", "gor3_upper_sharp",
    "prop24_hyp_i", "prop24_hyp_ii", "prop24_holds",
    "srinivasan_lower_holds", "srinivasan_upper_holds",
)

HUNT_CSV_COLUMNS = (
    "target", "family", "t", "a", "b", "d",
    "m1", "m2", "m3", "M1", "M2", "M3", "e",
    "lhs", "rhs", "factor", "hyp_i", "hyp_ii",
)


@dataclass(frozen=True)
class SweepConfig:
    """Range, check subset, and parallelism for one sweep or hunt."""

    family: str
    t_max: int
    entry_max: int
    checks: tuple[str, ...] | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.family not in ("cm2", "gor3"):
            raise ValueError(f"family must be cm2 or gor3, got {self.family!r}")
        if self.t_max < 1:
            raise ValueError("t_max must be >= 1")
        if self.entry_max < 0:
            raise ValueError("entry_max must be >= 0")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        allowed = CM2_CHECKS if self.family == "cm2" else GOR3_CHECKS
        if self.checks is None:
            object.__setattr__(self, "checks", allowed)
        else:
            object.__setattr__(self, "checks", tuple(self.checks))
            unknown = set(self.checks) - set(allowed)
            if unknown:
                raise ValueError(f"unknown checks for {self.family}: {sorted(unknown)}")


@dataclass(frozen=True)
class Anomaly:
    """One failed check on one instance, with the two disagreeing sides."""

    instance: dict
    check: str
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance,
            "check": self.check,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class SweepReport:
    family: str
    t_max: int
    entry_max: int
    checks: tuple[str, ...]
    instances_checked: int
    anomalies: tuple[Anomaly, ...]
    sharp_cases: tuple[dict, ...]
    prop24_findings: tuple[dict, ...]
    runtime_seconds: float

    @property
    def ok(self) -> bool:
        return not self.anomalies

    def to_json_dict(self) -> dict:
        # runtime deliberately excluded: serialized reports must be
        # byte-identical across runs and parallelism levels.
        return {
            "family": self.family,
            "t_max": self.t_max,
            "entry_max": self.entry_max,
            "checks": list(self.checks),
            "instances_checked": self.instances_checked,
            "anomalies": [a.to_json_dict() for a in self.anomalies],
            "sharp_cases": list(self.sharp_cases),
            "prop24_findings": list(self.prop24_findings),
        }

    def summary_text(self) -> str:
        lines = [
            f"sweep {self.family}: t <= {self.t_max}, entries <= {self.entry_max}",
            f"instances checked: {self.instances_checked}",
            f"anomalies: {len(self.anomalies)}",
            f"sharp (pure) cases: {len(self.sharp_cases)}",
        ]
        if self.family == "cm2":
            lines.append(f"prop24 bound failures: {len(self.prop24_findings)}")
        for a in self.anomalies:
            lines.append(f"  ANOMALY {a.check} on {a.instance}: {a.lhs} vs {a.rhs}")
        lines.append(f"runtime: {self.runtime_seconds:.2f}s")
        return "\n".join(lines)


@dataclass(frozen=True)
class HuntReport:
    target: str
    family: str
    t_max: int
    entry_max: int
    require_hypotheses: bool
    instances_checked: int
    candidates: tuple[dict, ...]
    runtime_seconds: float

    @property
    def ok(self) -> bool:
        return not self.candidates

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "family": self.family,
            "t_max": self.t_max,
            "entry_max": self.entry_max,
            "require_hypotheses": self.require_hypotheses,
            "instances_checked": self.instances_checked,
            "candidates": list(self.candidates),
        }

    def summary_text(self) -> str:
        lines = [
            f"hunt {self.target}: t <= {self.t_max}, entries <= {self.entry_max}"
            + (" (hypothesis-satisfying instances only)" if self.require_hypotheses else ""),
            f"instances checked: {self.instances_checked}",
            f"candidates: {len(self.candidates)}",
        ]
        for c in self.candidates:
            lines.append(f"  CANDIDATE {c['instance']}: {c['lhs']} vs {c['rhs']}")
        lines.append(f"runtime: {self.runtime_seconds:.2f}s")
        return "\n".join(lines)


def enumerate_cm2(t_max: int, entry_max: int) -> Iterator[cm2.DegreeMatrixCM2]:
    """All valid matrices with t <= t_max, entries <= entry_max, (a, b)-lex order.

    The b-ranges start at max(a_i, a_{i+1}), so only valid matrices are
    ever formed; no generate-and-filter.
    """
    for t in range(1, t_max + 1):
        for a in product(range(1, entry_max + 1), repeat=t):
            lows = [
                max(a[i], a[i + 1]) if i + 1 < t else a[i] for i in range(t)
            ]
            for b in product(*(range(lo, entry_max + 1) for lo in lows)):
                yield cm2.DegreeMatrixCM2(a, b)


def enumerate_gor3(t_max: int, entry_max: int) -> Iterator[gor3.DegreeMatrixGor3]:
    """All valid symmetric matrices, (a, b, d)-lex order, with a_1 <= d <= entry_max."""
    for base in enumerate_cm2(t_max, entry_max):
        for d in range(base.a[0], entry_max + 1):
            yield gor3.DegreeMatrixGor3(base, d)


@dataclass(frozen=True)
class _InstanceResult:
    row: dict
    anomalies: tuple[Anomaly, ...]
    sharp: dict | None
    finding: dict | None


def _blank_row() -> dict:
    return {col: None for col in SWEEP_CSV_COLUMNS}


def _evaluate_cm2(A: cm2.DegreeMatrixCM2, entry_max: int, checks: tuple[str, ...]) -> _InstanceResult:
    inst = A.to_json_dict()
    anomalies: list[Anomaly] = []

    def note(check: str, lhs: object, rhs: object) -> None:
        anomalies.append(Anomaly(instance=inst, check=check, lhs=str(lhs), rhs=str(rhs)))

    s = cm2.shifts(A)
    e_uv = e_res = None
    try:
        e_uv = cm2.multiplicity_uv(A)
    except InternalMismatch as exc:
        note("multiplicity_agreement", "uv route", exc)
    table = cm2.betti_table(A)
    try:
        e_res = betti.multiplicity(table)
    except DivisionError as exc:
        note("multiplicity_agreement", "resolution route", exc)
    e_st = oracle.colength(cm2.witness_monomial_ideal(A))
    e = e_uv if e_uv is not None else (e_res if e_res is not None else e_st)

    if "multiplicity_agreement" in checks:
        if e_uv is not None and e_res is not None and e_uv != e_res:
            note("multiplicity_agreement", f"uv={e_uv}", f"resolution={e_res}")
        if e_uv is not None and e_uv != e_st:
            note("multiplicity_agreement", f"uv={e_uv}", f"staircase={e_st}")

    summary = betti.shift_summary(table)
    pur = betti.purity(table)

    if "shift_agreement" in checks:
        if summary.m != (s.m1, s.m2) or summary.M != (s.M1, s.M2):
            note("shift_agreement", s, summary)
        if not (s.m1 < s.m2 and s.M1 < s.M2):
            note("shift_agreement", "strictly increasing shifts", s)

    if "hs_identities" in checks:
        try:
            if not cm2.hs_identities(A):
                note("hs_identities", "identity sums", "disagree")
        except InternalMismatch as exc:
            note("hs_identities", "uv data", exc)

    if "uv_facts" in checks:
        try:
            cm2.uv_data(A)
        except InternalMismatch as exc:
            note("uv_facts", "extreme-degree identities", exc)

    lo2, up2 = bounds.cm2_bounds(s.m1, s.m2, s.M1, s.M2, e)
    if "cm2_bounds" in checks:
        for v in (lo2, up2):
            if not v.holds:
                note("cm2_bounds", f"{v.name}: {v.lhs}", v.rhs)
    loh, uph = bounds.hhs_bounds(summary, 2, e)
    if "hhs_bounds" in checks:
        for v in (loh, uph):
            if not v.holds:
                note("hhs_bounds", f"{v.name}: {v.lhs}", v.rhs)

    if "sharpness_purity" in checks:
        try:
            bounds.sharpness(summary, 2, e)
        except CharacterizationViolated as exc:
            note("sharpness_purity", "flags", exc)

    if "huneke_miller" in checks and pur.pure:
        try:
            hm = betti.huneke_miller(table)
            if hm != e:
                note("huneke_miller", hm, e)
        except (NotPure, DivisibilityError, InternalMismatch, ValueError) as exc:
            note("huneke_miller", "pure-shift formula", exc)

    if "extension" in checks and e_uv is not None:
        # Inlined form of cm2.extend's assertions, reusing the base
        # multiplicity across all appended (a, b) pairs.
        cap = A.b[-1]
        for b_new in range(1, entry_max + 1):
            for a_new in range(1, min(b_new, cap) + 1):
                A2 = cm2.DegreeMatrixCM2(A.a + (a_new,), A.b + (b_new,))
                s2 = cm2.shifts(A2)
                expected = (
                    s.m1 + a_new,
                    s.m2 + a_new + b_new - cap,
                    s.M1 + b_new,
                    s.M2 + b_new,
                )
                if tuple(s2) != expected:
                    note("extension", f"shift deltas for (a={a_new}, b={b_new}): {tuple(s2)}", expected)
                try:
                    e_direct = cm2.multiplicity_uv(A2)
                except InternalMismatch as exc:
                    note("extension", f"append (a={a_new}, b={b_new})", exc)
                    continue
                e_recursed = e_uv + (s.m1 + a_new) * b_new
                if e_direct != e_recursed:
                    note(
                        "extension",
                        f"recursion for (a={a_new}, b={b_new}): {e_recursed}",
                        e_direct,
                    )

    p24 = bounds.prop24_bound(A, e)
    finding = None
    if "prop24" in checks and not p24.bound_holds:
        finding = {
            "instance": inst,
            "hyp_i": p24.hyp_i,
            "hyp_ii": p24.hyp_ii,
            "hyp_ii_margin": p24.hyp_ii_margin,
            "lhs": p24.verdict.lhs,
            "rhs": p24.verdict.rhs,
        }

    row = _blank_row()
    row.update(
        family="cm2",
        t=A.t,
        a=" ".join(map(str, A.a)),
        b=" ".join(map(str, A.b)),
        m1=s.m1, m2=s.m2, M1=s.M1, M2=s.M2,
        e=e,
        pure=pur.pure,
        quasi_pure=pur.quasi_pure,
        hhs_lower_holds=loh.holds, hhs_lower_sharp=loh.sharp,
        hhs_upper_holds=uph.holds, hhs_upper_sharp=uph.sharp,
        cm2_lower_holds=lo2.holds, cm2_lower_sharp=lo2.sharp,
        cm2_upper_holds=up2.holds, cm2_upper_sharp=up2.sharp,
        prop24_hyp_i=p24.hyp_i, prop24_hyp_ii=p24.hyp_ii,
        prop24_holds=p24.bound_holds,
    )
    sharp = {"instance": inst, "e": e} if pur.pure else None
    return _InstanceResult(row=row, anomalies=tuple(anomalies), sharp=sharp, finding=finding)


def _evaluate_gor3(G: gor3.DegreeMatrixGor3, entry_max: int, checks: tuple[str, ...]) -> _InstanceResult:
    inst = G.to_json_dict()
    anomalies: list[Anomaly] = []

    def note(check: str, lhs: object, rhs: object) -> None:
        anomalies.append(Anomaly(instance=inst, check=check, lhs=str(lhs), rhs=str(rhs)))

    s = gor3.shifts(G)
    e_pf = gor3.multiplicity_pfaffian(G)
    table = gor3.betti_table(G)
    e_res = e_link = None
    try:
        e_res = betti.multiplicity(table)
    except DivisionError as exc:
        note("multiplicity_agreement", "resolution route", exc)
    try:
        e_link = gor3._linkage_value(G)
    except DivisionError as exc:
        note("multiplicity_agreement", "linkage route", exc)

    if "multiplicity_agreement" in checks:
        if e_res is not None and e_pf != e_res:
            note("multiplicity_agreement", f"pfaffian={e_pf}", f"resolution={e_res}")
        if e_link is not None and e_pf != e_link:
            note("multiplicity_agreement", f"pfaffian={e_pf}", f"linkage={e_link}")

    summary = betti.shift_summary(table)
    pur = betti.purity(table)

    if "shift_agreement" in checks:
        if summary.m != (s.m1, s.m2, s.m3) or summary.M != (s.M1, s.M2, s.M3):
            note("shift_agreement", s, summary)
        if not (s.m1 < s.m2 < s.m3 and s.M1 < s.M2 < s.M3):
            note("shift_agreement", "strictly increasing shifts", s)

    if "self_duality" in checks:
        step1, step2, step3 = table.steps
        mirrored = tuple(sorted((s.m3 - shift, rank) for shift, rank in step1))
        if mirrored != step2:
            note("self_duality", mirrored, step2)
        if step3 != ((s.m3, 1),):
            note("self_duality", step3, (s.m3, 1))
        if summary.M[0] != s.m3 - summary.m[1] or summary.M[1] != s.m3 - summary.m[0]:
            note("self_duality", summary, f"m3={s.m3}")
        if not all(0 < shift < s.m3 for shift, _ in step1):
            note("self_duality", "step-1 shifts inside (0, m3)", step1)

    try:
        lo3, up3 = bounds.gor3_bounds(s.m1, s.m2, s.m3, s.M1, s.M2, s.M3, e_pf)
        if "gor3_bounds" in checks:
            for v in (lo3, up3):
                if not v.holds:
                    note("gor3_bounds", f"{v.name}: {v.lhs}", v.rhs)
    except (ValueError, InternalMismatch) as exc:
        lo3 = up3 = None
        if "gor3_bounds" in checks:
            note("gor3_bounds", "bound forms", exc)
    loh, uph = bounds.hhs_bounds(summary, 3, e_pf)
    if "hhs_bounds" in checks:
        for v in (loh, uph):
            if not v.holds:
                note("hhs_bounds", f"{v.name}: {v.lhs}", v.rhs)

    if "sharpness_purity" in checks:
        try:
            bounds.sharpness(summary, 3, e_pf)
        except CharacterizationViolated as exc:
            note("sharpness_purity", "flags", exc)

    if "huneke_miller" in checks and pur.pure:
        try:
            hm = betti.huneke_miller(table)
            if hm != e_pf:
                note("huneke_miller", hm, e_pf)
        except (NotPure, DivisibilityError, InternalMismatch, ValueError) as exc:
            note("huneke_miller", "pure-shift formula", exc)

    if "extension" in checks:
        cap = G.base.b[-1]
        for b_new in range(1, entry_max + 1):
            for a_new in range(1, min(b_new, cap) + 1):
                try:
                    gor3.extend(G, a_new, b_new)
                except (InternalMismatch, DivisionError) as exc:
                    note("extension", f"append (a={a_new}, b={b_new})", exc)

    sl, su, _ = bounds.srinivasan_bounds(
        ShiftSummary(m=(s.m1, s.m2, s.m3), M=(s.M1, s.M2, s.M3)), e_pf
    )

    row = _blank_row()
    row.update(
        family="gor3",
        t=G.t,
        a=" ".join(map(str, G.base.a)),
        b=" ".join(map(str, G.base.b)),
        d=G.d,
        m1=s.m1, m2=s.m2, m3=s.m3, M1=s.M1, M2=s.M2, M3=s.M3,
        e=e_pf,
        pure=pur.pure,
        quasi_pure=pur.quasi_pure,
        hhs_lower_holds=loh.holds, hhs_lower_sharp=loh.sharp,
        hhs_upper_holds=uph.holds, hhs_upper_sharp=uph.sharp,
        gor3_lower_holds=None if lo3 is None else lo3.holds,
        gor3_lower_sharp=None if lo3 is None else lo3.sharp,
        gor3_upper_holds=None if up3 is None else up3.holds,
        gor3_upper_sharp=None if up3 is None else up3.sharp,
        srinivasan_lower_holds=sl.holds,
        srinivasan_upper_holds=su.holds,
    )
    sharp = {"instance": inst, "e": e_pf} if pur.pure else None
    return _InstanceResult(row=row, anomalies=tuple(anomalies), sharp=sharp, finding=None)


def _eval_chunk(args: tuple) -> list[_InstanceResult]:
    family, items, entry_max, checks = args
    evaluate = _evaluate_cm2 if family == "cm2" else _evaluate_gor3
    return [evaluate(item, entry_max, checks) for item in items]


def _split(items: list, pieces: int) -> list[list]:
    size = max(1, -(-len(items) // pieces))
    return [items[i: i + size] for i in range(0, len(items), size)]


def _results(config: SweepConfig) -> Iterator[_InstanceResult]:
    """Evaluate every instance in range, in enumeration order.

    With jobs > 1 the instance list is cut into contiguous chunks that
    are processed in parallel and merged back in order, so the stream
    is identical at every parallelism level.
    """
    enum = enumerate_cm2 if config.family == "cm2" else enumerate_gor3
    items = list(enum(config.t_max, config.entry_max))
    if config.jobs <= 1 or len(items) < 2 * config.jobs:
        for item in items:
            yield _eval_chunk((config.family, [item], config.entry_max, config.checks))[0]
        return
    chunks = _split(items, config.jobs * 4)
    args = [(config.family, chunk, config.entry_max, config.checks) for chunk in chunks]
    with Pool(config.jobs) as pool:
        for part in pool.map(_eval_chunk, args):
            yield from part


def verify_all(config: SweepConfig) -> SweepReport:
    """Run every enabled check on every instance in range."""
    start = time.perf_counter()
    n = 0
    anomalies: list[Anomaly] = []
    sharps: list[dict] = []
    findings: list[dict] = []
    for res in _results(config):
        n += 1
        anomalies.extend(res.anomalies)
        if res.sharp is not None:
            sharps.append(res.sharp)
        if res.finding is not None:
            findings.append(res.finding)
    return SweepReport(
        family=config.family,
        t_max=config.t_max,
        entry_max=config.entry_max,
        checks=config.checks,
        instances_checked=n,
        anomalies=tuple(anomalies),
        sharp_cases=tuple(sharps),
        prop24_findings=tuple(findings),
        runtime_seconds=time.perf_counter() - start,
    )


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_sweep_csv(config: SweepConfig, stream: TextIO) -> SweepReport:
    """Stream one CSV row per instance; the aggregate report comes back
    from the same pass so callers can derive an exit status."""
    start = time.perf_counter()
    stream.write(",".join(SWEEP_CSV_COLUMNS) + "\n")
    n = 0
    anomalies: list[Anomaly] = []
    sharps: list[dict] = []
    findings: list[dict] = []
    for res in _results(config):
        n += 1
        anomalies.extend(res.anomalies)
        if res.sharp is not None:
            sharps.append(res.sharp)
        if res.finding is not None:
            findings.append(res.finding)
        stream.write(",".join(_csv_cell(res.row[col]) for col in SWEEP_CSV_COLUMNS) + "\n")
    return SweepReport(
        family=config.family,
        t_max=config.t_max,
        entry_max=config.entry_max,
        checks=config.checks,
        instances_checked=n,
        anomalies=tuple(anomalies),
        sharp_cases=tuple(sharps),
        prop24_findings=tuple(findings),
        runtime_seconds=time.perf_counter() - start,
    )


def _hunt_srinivasan(G: gor3.DegreeMatrixGor3) -> dict | None:
    s = gor3.shifts(G)
    e = gor3.multiplicity_pfaffian(G)
    _, upper, _ = bounds.srinivasan_bounds(
        ShiftSummary(m=(s.m1, s.m2, s.m3), M=(s.M1, s.M2, s.M3)), e
    )
    if upper.holds:
        return None
    return {
        "instance": G.to_json_dict(),
        "m1": s.m1, "m2": s.m2, "m3": s.m3,
        "M1": s.M1, "M2": s.M2, "M3": s.M3,
        "e": e,
        "lhs": upper.lhs,
        "rhs": upper.rhs,
        "factor": upper.factor,
    }


def _hunt_prop24(A: cm2.DegreeMatrixCM2, require_hypotheses: bool) -> dict | None:
    e = cm2.multiplicity_uv(A)
    res = bounds.prop24_bound(A, e)
    if require_hypotheses and not (res.hyp_i or res.hyp_ii):
        return None
    if res.bound_holds:
        return None
    s = cm2.shifts(A)
    return {
        "instance": A.to_json_dict(),
        "m1": s.m1, "m2": s.m2, "M1": s.M1, "M2": s.M2,
        "e": e,
        "lhs": res.verdict.lhs,
        "rhs": res.verdict.rhs,
        "factor": res.verdict.factor,
        "hyp_i": res.hyp_i,
        "hyp_ii": res.hyp_ii,
        "hyp_ii_margin": res.hyp_ii_margin,
    }


def _hunt_chunk(args: tuple) -> list[dict]:
    target, items, require_hypotheses = args
    out = []
    for item in items:
        if target == "srinivasan_upper_gor3":
            cand = _hunt_srinivasan(item)
        else:
            cand = _hunt_prop24(item, require_hypotheses)
        if cand is not None:
            out.append(cand)
    return out


def hunt(target: str, config: SweepConfig, require_hypotheses: bool = False) -> HuntReport:
    """Search the range for violations of one named open question.

    An empty candidate list means no counterexample in range; a
    nonempty one is a discovery to be recorded, not an error of the
    tool.
    """
    if target not in HUNT_TARGETS:
        raise UnknownTarget(
            f"unknown target {target!r}; known: {sorted(HUNT_TARGETS)}"
        )
    family = HUNT_TARGETS[target]
    if config.family != family:
        raise ValueError(f"target {target} needs family {family}, got {config.family}")
    start = time.perf_counter()
    enum = enumerate_cm2 if family == "cm2" else enumerate_gor3
    items = list(enum(config.t_max, config.entry_max))
    candidates: list[dict] = []
    if config.jobs <= 1 or len(items) < 2 * config.jobs:
        candidates = _hunt_chunk((target, items, require_hypotheses))
    else:
        chunks = _split(items, config.jobs * 4)
        args = [(target, chunk, require_hypotheses) for chunk in chunks]
        with Pool(config.jobs) as pool:
            for part in pool.map(_hunt_chunk, args):
                candidates.extend(part)
    return HuntReport(
        target=target,
        family=family,
        t_max=config.t_max,
        entry_max=config.entry_max,
        require_hypotheses=require_hypotheses,
        instances_checked=len(items),
        candidates=tuple(candidates),
        runtime_seconds=time.perf_counter() - start,
    )


def hunt_csv(report: HuntReport) -> str:
    """Candidate list as CSV, one row per candidate, header always present."""
    lines = [",".join(HUNT_CSV_COLUMNS)]
    for c in report.candidates:
        inst = c["instance"]
        row = {
            "target": report.target,
            "family": report.family,
            "t": len(inst["a"]),
            "a": " ".join(map(str, inst["a"])),
            "b": " ".join(map(str, inst["b"])),
            "d": inst.get("d"),
            "m1": c.get("m1"), "m2": c.get("m2"), "m3": c.get("m3"),
            "M1": c.get("M1"), "M2": c.get("M2"), "M3": c.get("M3"),
            "e": c.get("e"),
            "lhs": c.get("lhs"), "rhs": c.get("rhs"), "factor": c.get("factor"),
            "hyp_i": c.get("hyp_i"), "hyp_ii": c.get("hyp_ii"),
        }
        lines.append(",".join(_csv_cell(row[col]) for col in HUNT_CSV_COLUMNS))
    return "\n".join(lines) + "\n"
