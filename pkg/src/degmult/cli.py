"""Command-line front end.

Verbs: validate, compute, sweep, hunt, oracle-check.  Matrices come in
as inline flags (--cm2 --a 2,2,1 --b 2,2,1) or as JSON documents; all
reports leave as text, JSON, or CSV.  Exit status 0 means success with
no anomalies, 1 means an anomaly or hunt hit, 2 means invalid input.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence

from . import betti, bounds, cm2, gor3, oracle, sweep
from .errors import (
    CenterTooSmall,
    CharacterizationViolated,
    DivisibilityError,
    DivisionError,
    InternalMismatch,
    InvalidDiagonal,
    NotArtinian,
    NotMonotone,
    NotPure,
    ParseError,
    UnknownTarget,
)

Input = object  # DegreeMatrixCM2 | DegreeMatrixGor3 | MonomialStaircase | BettiTable


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"{flag} expects comma-separated integers, got {text!r}") from exc


def _from_json_obj(obj: object) -> Input:
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    try:
        if "type" in obj:
            kind = obj["type"]
            if kind == "cm2":
                return cm2.validate(obj["a"], obj["b"])
            if kind == "gor3":
                return gor3.validate(obj["a"], obj["b"], obj["d"])
            if kind == "monomial2":
                return oracle.MonomialStaircase.from_json_dict(obj)
            raise ParseError(f"unknown input type {kind!r}")
        if "codim" in obj and "steps" in obj:
            return betti.BettiTable.from_json_dict(obj)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed input document: {exc}") from exc
    raise ParseError("input object needs a 'type' key or 'codim'/'steps' keys")


def _load_inputs(args: argparse.Namespace) -> list[Input]:
    inline = args.cm2 or args.gor3
    if inline and args.infile:
        raise ParseError("give either inline flags or --in FILE, not both")
    if inline:
        if args.cm2 and args.gor3:
            raise ParseError("choose one of --cm2 and --gor3")
        if args.a is None or args.b is None:
            raise ParseError("inline input needs --a and --b")
        a = _parse_int_list(args.a, "--a")
        b = _parse_int_list(args.b, "--b")
        if args.cm2:
            if args.d is not None:
                raise ParseError("--d only applies to --gor3")
            return [cm2.validate(a, b)]
        if args.d is None:
            raise ParseError("--gor3 needs --d")
        return [gor3.validate(a, b, args.d)]
    if args.infile:
        try:
            with open(args.infile) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ParseError(f"cannot read {args.infile}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {args.infile}: {exc}") from exc
        objs = doc if isinstance(doc, list) else [doc]
        if not objs:
            raise ParseError(f"{args.infile} holds an empty list")
        return [_from_json_obj(obj) for obj in objs]
    raise ParseError("no input: give --cm2/--gor3 with --a/--b[/--d] or --in FILE")


def _emit(text: str, args: argparse.Namespace) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_cm2(A: cm2.DegreeMatrixCM2) -> dict:
    s = cm2.shifts(A)
    e_uv = cm2.multiplicity_uv(A)
    table = cm2.betti_table(A)
    e_res = betti.multiplicity(table)
    e_st = oracle.colength(cm2.witness_monomial_ideal(A))
    summary = betti.shift_summary(table)
    pur = betti.purity(table)
    loh, uph = bounds.hhs_bounds(summary, 2, e_uv)
    lo2, up2 = bounds.cm2_bounds(s.m1, s.m2, s.M1, s.M2, e_uv)
    p24 = bounds.prop24_bound(A, e_uv)
    sharp = bounds.sharpness(summary, 2, e_uv)
    return {
        "instance": A.to_json_dict(),
        "shifts": {"m1": s.m1, "m2": s.m2, "M1": s.M1, "M2": s.M2},
        "pure": pur.pure,
        "quasi_pure": pur.quasi_pure,
        "multiplicity": {
            "value": e_uv,
            "uv": e_uv,
            "resolution": e_res,
            "staircase": e_st,
            "agree": e_uv == e_res == e_st,
        },
        "bounds": [v.to_json_dict() for v in (loh, uph, lo2, up2, p24.verdict)],
        "prop24": {
            "hyp_i": p24.hyp_i,
            "hyp_ii": p24.hyp_ii,
            "hyp_ii_margin": p24.hyp_ii_margin,
        },
        "sharpness": {
            "lower_sharp": sharp.lower_sharp,
            "upper_sharp": sharp.upper_sharp,
            "pure": sharp.pure,
        },
    }


def _compute_gor3(G: gor3.DegreeMatrixGor3) -> dict:
    s = gor3.shifts(G)
    e_pf = gor3.multiplicity_pfaffian(G)
    table = gor3.betti_table(G)
    e_res = betti.multiplicity(table)
    e_link = gor3.linkage_check(G)
    summary = betti.shift_summary(table)
    pur = betti.purity(table)
    loh, uph = bounds.hhs_bounds(summary, 3, e_pf)
    lo3, up3 = bounds.gor3_bounds(s.m1, s.m2, s.m3, s.M1, s.M2, s.M3, e_pf)
    sl, su, quasi = bounds.srinivasan_bounds(summary, e_pf)
    sharp = bounds.sharpness(summary, 3, e_pf)
    return {
        "instance": G.to_json_dict(),
        "shifts": {
            "m1": s.m1, "m2": s.m2, "m3": s.m3,
            "M1": s.M1, "M2": s.M2, "M3": s.M3,
        },
        "pure": pur.pure,
        "quasi_pure": pur.quasi_pure,
        "multiplicity": {
            "value": e_pf,
            "pfaffian": e_pf,
            "resolution": e_res,
            "linkage": e_link,
            "agree": e_pf == e_res == e_link,
        },
        "bounds": [v.to_json_dict() for v in (loh, uph, lo3, up3, sl, su)],
        "srinivasan_quasi_pure": quasi,
        "sharpness": {
            "lower_sharp": sharp.lower_sharp,
            "upper_sharp": sharp.upper_sharp,
            "pure": sharp.pure,
        },
    }


def _compute_betti(table: betti.BettiTable) -> dict:
    summary = betti.shift_summary(table)
    pur = betti.purity(table)
    e = betti.multiplicity(table)
    result = {
        "instance": table.to_json_dict(),
        "projective_dimension": table.projective_dimension,
        "codim": table.codim,
        "k_polynomial": str(betti.k_polynomial(table)),
        "k_coeffs": list(betti.k_polynomial(table).coeffs),
        "shifts": {"m": list(summary.m), "M": list(summary.M)},
        "pure": pur.pure,
        "quasi_pure": pur.quasi_pure,
        "multiplicity": e,
        "genus_dim2": betti.genus_dim2(table),
    }
    if table.codim == table.projective_dimension:
        lo, up = bounds.hhs_bounds(summary, table.codim, e)
        result["bounds"] = [lo.to_json_dict(), up.to_json_dict()]
        if pur.pure:
            result["huneke_miller"] = betti.huneke_miller(table)
    return result


def _compute_staircase(s: oracle.MonomialStaircase) -> dict:
    return {"instance": s.to_json_dict(), "colength": oracle.colength(s)}


def _compute_result(item: Input) -> dict:
    if isinstance(item, cm2.DegreeMatrixCM2):
        return _compute_cm2(item)
    if isinstance(item, gor3.DegreeMatrixGor3):
        return _compute_gor3(item)
    if isinstance(item, betti.BettiTable):
        return _compute_betti(item)
    if isinstance(item, oracle.MonomialStaircase):
        return _compute_staircase(item)
    raise ParseError(f"cannot compute on {type(item).__name__}")


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _render_compute_text(result: dict) -> str:
    inst = result["instance"]
    lines: list[str] = []
    if "colength" in result:
        gens = " ".join(f"({p},{q})" for p, q in inst["gens"])
        lines.append("family: monomial2")
        lines.append(f"minimal generators: {gens}")
        lines.append(f"colength: {result['colength']}")
        return "\n".join(lines)
    if "k_polynomial" in result:
        lines.append("family: betti")
        lines.append(f"projective dimension: {result['projective_dimension']}")
        lines.append(f"codim: {result['codim']}")
        lines.append(f"k_polynomial: {result['k_polynomial']}")
        lines.append("m: " + " ".join(map(str, result["shifts"]["m"])))
        lines.append("M: " + " ".join(map(str, result["shifts"]["M"])))
        lines.append(
            f"pure: {_flag(result['pure'])}  quasi_pure: {_flag(result['quasi_pure'])}"
        )
        lines.append(f"multiplicity: {result['multiplicity']}")
        lines.append(f"genus_dim2: {result['genus_dim2']}")
        if "huneke_miller" in result:
            lines.append(f"huneke_miller: {result['huneke_miller']}")
        for v in result.get("bounds", []):
            lines.append(
                f"  {v['name']}: {v['factor']}*e = {v['lhs']} {v['relation']} {v['rhs']}"
                f"  holds={_flag(v['holds'])} sharp={_flag(v['sharp'])}"
            )
        return "\n".join(lines)
    family = inst["type"]
    lines.append(f"family: {family}")
    lines.append(f"t: {len(inst['a'])}")
    lines.append("a: " + " ".join(map(str, inst["a"])))
    lines.append("b: " + " ".join(map(str, inst["b"])))
    if family == "gor3":
        lines.append(f"d: {inst['d']}")
    sh = result["shifts"]
    if family == "cm2":
        lines.append(f"m1: {sh['m1']}  m2: {sh['m2']}")
        lines.append(f"M1: {sh['M1']}  M2: {sh['M2']}")
    else:
        lines.append(f"m1: {sh['m1']}  m2: {sh['m2']}  m3: {sh['m3']}")
        lines.append(f"M1: {sh['M1']}  M2: {sh['M2']}  M3: {sh['M3']}")
    lines.append(f"pure: {_flag(result['pure'])}  quasi_pure: {_flag(result['quasi_pure'])}")
    mult = result["multiplicity"]
    lines.append(f"multiplicity: {mult['value']}")
    for route in ("uv", "pfaffian", "resolution", "staircase", "linkage"):
        if route in mult:
            lines.append(f"  {route}: {mult[route]}")
    lines.append(f"  agree: {'yes' if mult['agree'] else 'NO'}")
    lines.append("bounds:")
    for v in result["bounds"]:
        lines.append(
            f"  {v['name']}: {v['factor']}*e = {v['lhs']} {v['relation']} {v['rhs']}"
            f"  holds={_flag(v['holds'])} sharp={_flag(v['sharp'])}"
        )
    if "prop24" in result:
        p24 = result["prop24"]
        margin = p24["hyp_ii_margin"]
        margin_txt = "n/a" if margin is None else str(margin)
        lines.append(
            f"prop24 hypotheses: hyp_i={_flag(p24['hyp_i'])} "
            f"hyp_ii={_flag(p24['hyp_ii'])} (margin a1-2d+1 = {margin_txt})"
        )
    if "srinivasan_quasi_pure" in result:
        lines.append(f"srinivasan quasi_pure: {_flag(result['srinivasan_quasi_pure'])}")
    sharp = result["sharpness"]
    lines.append(
        f"sharpness: lower={_flag(sharp['lower_sharp'])} "
        f"upper={_flag(sharp['upper_sharp'])} pure={_flag(sharp['pure'])}"
    )
    return "\n".join(lines)


def _cmd_compute(args: argparse.Namespace) -> int:
    items = _load_inputs(args)
    results = [_compute_result(item) for item in items]
    if args.format == "json":
        _emit(_json_text(results if len(results) > 1 else results[0]), args)
    else:
        _emit("\n\n".join(_render_compute_text(r) for r in results), args)
    disagree = any(
        "multiplicity" in r
        and isinstance(r["multiplicity"], dict)
        and not r["multiplicity"]["agree"]
        for r in results
    )
    return 1 if disagree else 0


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def _validate_text(item: Input) -> str:
    if isinstance(item, cm2.DegreeMatrixCM2):
        return f"valid cm2: a={','.join(map(str, item.a))} b={','.join(map(str, item.b))}"
    if isinstance(item, gor3.DegreeMatrixGor3):
        return (
            f"valid gor3: a={','.join(map(str, item.base.a))} "
            f"b={','.join(map(str, item.base.b))} d={item.d}"
        )
    if isinstance(item, oracle.MonomialStaircase):
        return f"valid monomial2: {len(item.gens)} minimal generators"
    if isinstance(item, betti.BettiTable):
        return (
            f"valid betti table: p={item.projective_dimension} codim={item.codim}"
        )
    raise ParseError(f"cannot validate {type(item).__name__}")


def _to_json_dict(item: Input) -> dict:
    return item.to_json_dict()  # type: ignore[attr-defined]


def _cmd_validate(args: argparse.Namespace) -> int:
    items = _load_inputs(args)
    if args.format == "json":
        docs = [_to_json_dict(item) for item in items]
        _emit(_json_text(docs if len(docs) > 1 else docs[0]), args)
    else:
        _emit("\n".join(_validate_text(item) for item in items), args)
    return 0


# ---------------------------------------------------------------------------
# oracle-check
# ---------------------------------------------------------------------------

def _routes(item: Input) -> dict:
    if isinstance(item, cm2.DegreeMatrixCM2):
        routes = {
            "uv": cm2.multiplicity_uv(item),
            "resolution": betti.multiplicity(cm2.betti_table(item)),
            "staircase": oracle.colength(cm2.witness_monomial_ideal(item)),
        }
    elif isinstance(item, gor3.DegreeMatrixGor3):
        routes = {
            "pfaffian": gor3.multiplicity_pfaffian(item),
            "resolution": betti.multiplicity(gor3.betti_table(item)),
            "linkage": gor3._linkage_value(item),
        }
    else:
        raise ParseError("oracle-check needs cm2 or gor3 matrices")
    values = list(routes.values())
    return {
        "instance": _to_json_dict(item),
        "routes": routes,
        "agree": all(v == values[0] for v in values),
    }


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    items = _load_inputs(args)
    reports = [_routes(item) for item in items]
    if args.format == "json":
        _emit(_json_text(reports if len(reports) > 1 else reports[0]), args)
    else:
        lines = []
        for rep in reports:
            inst = rep["instance"]
            head = f"{inst['type']} a={','.join(map(str, inst['a']))} b={','.join(map(str, inst['b']))}"
            if inst["type"] == "gor3":
                head += f" d={inst['d']}"
            routes = " ".join(f"{k}={v}" for k, v in rep["routes"].items())
            lines.append(f"{head}: {routes} agree={'yes' if rep['agree'] else 'NO'}")
        _emit("\n".join(lines), args)
    return 0 if all(rep["agree"] for rep in reports) else 1


# ---------------------------------------------------------------------------
# sweep / hunt
# ---------------------------------------------------------------------------

def _sweep_family(args: argparse.Namespace) -> str:
    if args.cm2 and args.gor3:
        raise ParseError("choose one of --cm2 and --gor3")
    if args.cm2:
        return "cm2"
    if args.gor3:
        return "gor3"
    raise ParseError("sweep needs --cm2 or --gor3")


def _cmd_sweep(args: argparse.Namespace) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else None
    try:
        config = sweep.SweepConfig(
            family=_sweep_family(args),
            t_max=args.t_max,
            entry_max=args.entry_max,
            checks=checks,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if args.format == "csv":
        buf = io.StringIO()
        report = sweep.write_sweep_csv(config, buf)
        _emit(buf.getvalue(), args)
    else:
        report = sweep.verify_all(config)
        if args.format == "json":
            _emit(_json_text(report.to_json_dict()), args)
        else:
            _emit(report.summary_text(), args)
    return 0 if report.ok else 1


def _cmd_hunt(args: argparse.Namespace) -> int:
    family = sweep.HUNT_TARGETS.get(args.target)
    if family is None:
        raise UnknownTarget(
            f"unknown target {args.target!r}; known: {sorted(sweep.HUNT_TARGETS)}"
        )
    try:
        config = sweep.SweepConfig(
            family=family,
            t_max=args.t_max,
            entry_max=args.entry_max,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    report = sweep.hunt(args.target, config, require_hypotheses=args.require_hypotheses)
    if args.format == "csv":
        _emit(sweep.hunt_csv(report), args)
    elif args.format == "json":
        _emit(_json_text(report.to_json_dict()), args)
    else:
        _emit(report.summary_text(), args)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_matrix_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--cm2", action="store_true", help="codimension-2 matrix from --a/--b")
    sp.add_argument("--gor3", action="store_true", help="codimension-3 matrix from --a/--b/--d")
    sp.add_argument("--a", help="comma-separated diagonal entries a_1..a_t")
    sp.add_argument("--b", help="comma-separated superdiagonal entries b_1..b_t")
    sp.add_argument("--d", type=int, help="center entry (gor3 only)")
    sp.add_argument("--in", dest="infile", metavar="FILE",
                    help="JSON file holding one input object or a list of them")


def _add_output_flags(sp: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    sp.add_argument("--format", choices=formats, default="text")
    sp.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degmult",
        description=(
            "Exact multiplicities, bounds, sweeps, and counterexample hunts "
            "for codimension-2 Cohen-Macaulay and codimension-3 Gorenstein "
            "degree matrices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check inputs and print their canonical form")
    _add_matrix_flags(sp)
    _add_output_flags(sp, ("text", "json"))
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("compute", help="shifts, multiplicities, and all bound verdicts")
    _add_matrix_flags(sp)
    _add_output_flags(sp, ("text", "json"))
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("oracle-check", help="compare all multiplicity routes per matrix")
    _add_matrix_flags(sp)
    _add_output_flags(sp, ("text", "json"))
    sp.set_defaults(func=_cmd_oracle_check)

    sp = sub.add_parser("sweep", help="verify every invariant over a bounded range")
    sp.add_argument("--cm2", action="store_true")
    sp.add_argument("--gor3", action="store_true")
    sp.add_argument("--t-max", type=int, required=True)
    sp.add_argument("--entry-max", type=int, required=True)
    sp.add_argument("--checks", help="comma-separated subset of check names")
    sp.add_argument("--jobs", type=int, default=1)
    _add_output_flags(sp, ("text", "json", "csv"))
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("hunt", help="search a range for counterexamples to one target")
    sp.add_argument("--target", required=True)
    sp.add_argument("--t-max", type=int, required=True)
    sp.add_argument("--entry-max", type=int, required=True)
    sp.add_argument("--require-hypotheses", action="store_true",
                    help="only consider instances satisfying the target's hypotheses")
    sp.add_argument("--jobs", type=int, default=1)
    _add_output_flags(sp, ("text", "json", "csv"))
    sp.set_defaults(func=_cmd_hunt)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, InvalidDiagonal, NotMonotone, CenterTooSmall,
            NotArtinian, DivisionError, DivisibilityError, NotPure,
            UnknownTarget, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalMismatch, CharacterizationViolated) as exc:
        print(f"anomaly: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
