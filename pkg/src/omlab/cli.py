"""Command-line surface: evaluate, invert, compute norms, check relations,
and verify the inclusion theorems against declarative JSON inputs.

Reports are deterministic: identical configuration (flags, seed, input
documents) yields byte-identical CSV and JSON files. CSV numerics carry 17
significant digits so they round-trip to the exact float. Exit status: 0 on
success/pass, 1 on verification failure (a relation that does not hold or a
theorem check that fails), 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import documents as docs
from . import growth as gr
from . import young as yf
from .errors import DocumentError, DomainError, HypothesisError, OmlabError, UnsupportedGeometryError
from .inclusion import (
    acceptance_fixtures,
    contrapositive_fixture,
    make_fixture,
    morrey_power_crosscheck,
    verify_necessity,
    verify_sufficiency,
)
from .norms import char_norm_closed, global_norm, _local_quantity
from .rootfind import DEFAULT_RTOL

ENV_DEFAULT_GRID = "OMLAB_DEFAULT_GRID"


@dataclass(frozen=True)
class RunConfig:
    """Echoed verbatim into every JSON summary; fully determines the output."""

    command: str
    inputs: dict = field(default_factory=dict)
    radii: tuple[float, ...] | None = None
    seed: int = 0
    tol: float = DEFAULT_RTOL
    out: str | None = None
    format: str = "both"
    override: bool = False


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, sort_keys=True, indent=2)
        handle.write("\n")


def _echo(config: RunConfig) -> dict:
    # the report destination is not part of the report content, so two runs
    # into different directories stay byte-identical
    payload = asdict(config)
    payload.pop("out")
    return payload


def _emit(config: RunConfig, header, rows, summary):
    payload = {"config": _echo(config), "summary": summary}
    if config.out:
        base = Path(config.out)
        base.parent.mkdir(parents=True, exist_ok=True)
        if config.format in ("both", "csv"):
            _write_csv(base.with_suffix(base.suffix + ".csv"), header, rows)
        if config.format in ("both", "json"):
            _write_json(base.with_suffix(base.suffix + ".json"), payload)


def _parse_floats(text, what):
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise DocumentError(f"{what}: expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise DocumentError(f"{what}: empty list")
    return values


def _resolve_radii(args):
    if getattr(args, "radii", None):
        return _parse_floats(args.radii, "--radii")
    env = os.environ.get(ENV_DEFAULT_GRID)
    if env:
        return _parse_floats(env, ENV_DEFAULT_GRID)
    return None  # library defaults


def _config(args, command, inputs, radii=None):
    return RunConfig(
        command=command,
        inputs=inputs,
        radii=radii,
        seed=getattr(args, "seed", 0),
        tol=getattr(args, "tol", DEFAULT_RTOL),
        out=getattr(args, "out", None),
        format=getattr(args, "format", "both"),
        override=getattr(args, "override_hypotheses", False),
    )


def _cmd_eval(args) -> int:
    points = _parse_floats(args.t, "--t")
    if args.young:
        fn = docs.parse_young(docs.load_json(args.young))
        label = fn.describe()
        inputs = {"young": args.young}
    else:
        fn = docs.parse_growth(docs.load_json(args.growth))
        label = fn.describe()
        inputs = {"growth": args.growth}
    rows = [(label, t, fn(t)) for t in points]
    config = _config(args, "eval", dict(inputs, t=list(points)))
    _emit(config, ["kind", "t", "value"], rows, {"values": [r[2] for r in rows]})
    for _, t, value in rows:
        print(f"{label}({_fmt(t)}) = {_fmt(value)}")
    return 0


def _cmd_inverse(args) -> int:
    points = _parse_floats(args.s, "--s")
    fn = docs.parse_young(docs.load_json(args.young))
    rows = [(fn.describe(), s, fn.inverse(s)) for s in points]
    config = _config(args, "inverse", {"young": args.young, "s": list(points)})
    _emit(config, ["kind", "s", "value"], rows, {"values": [r[2] for r in rows]})
    for label, s, value in rows:
        print(f"{label}^(-1)({_fmt(s)}) = {_fmt(value)}")
    return 0


def _cmd_norm(args) -> int:
    spec = docs.parse_space(docs.load_json(args.space), override=args.override_hypotheses)
    f = docs.parse_function(docs.load_json(args.function))
    radii = _resolve_radii(args)
    result = global_norm(f, spec, radii, rtol=args.tol)
    function_id = Path(args.function).stem
    rows = []
    for r in result.radii:
        local = _local_quantity(f, spec, r, "auto", args.tol)
        rows.append((function_id, spec.variant, r, local, r == result.attained_at))
    config = _config(args, "norm", {"space": args.space, "function": args.function}, result.radii)
    summary = {
        "value": result.value,
        "exact": result.exact,
        "attained_at": result.attained_at,
        "variant": spec.variant,
    }
    _emit(config, ["function_id", "variant", "radius", "local_value", "global_flag"], rows, summary)
    print(f"norm[{spec.variant}] = {_fmt(result.value)} exact={_fmt(result.exact)}")
    return 0


def _cmd_char_norm(args) -> int:
    spec = docs.parse_space(docs.load_json(args.space), override=args.override_hypotheses)
    points = _parse_floats(args.r0, "--r0")
    rows = [(spec.variant, r0, char_norm_closed(spec, r0)) for r0 in points]
    config = _config(args, "char-norm", {"space": args.space, "r0": list(points)})
    _emit(config, ["variant", "r0", "value"], rows, {"values": [r[2] for r in rows]})
    for variant, r0, value in rows:
        print(f"char-norm[{variant}](r0={_fmt(r0)}) = {_fmt(value)}")
    return 0


def _cmd_check_relation(args) -> int:
    t_grid = _parse_floats(args.t_grid, "--t-grid") if args.t_grid else None
    c_grid = _parse_floats(args.c_grid, "--c-grid") if args.c_grid else None
    rows = []
    if args.kind == "young":
        lhs = docs.parse_young(docs.load_json(args.lhs), "lhs")
        rhs = docs.parse_young(docs.load_json(args.rhs), "rhs")
        reports = [("forward", yf.check_prec(lhs, rhs, t_grid, c_grid))]
    else:
        lhs = docs.parse_growth(docs.load_json(args.lhs), "lhs")
        rhs = docs.parse_growth(docs.load_json(args.rhs), "rhs")
        reports = [("forward", gr.check_preceq(lhs, rhs, t_grid, c_grid))]
        if args.kind == "growth-approx":
            reports.append(("reverse", gr.check_preceq(rhs, lhs, t_grid, c_grid)))
    holds = all(rep.holds for _, rep in reports)
    for direction, rep in reports:
        lo, hi = rep.searched_c_range
        rows.append((args.kind, direction, rep.holds, rep.witness_c, rep.counterexample_t, lo, hi))
    config = _config(args, "check-relation", {"kind": args.kind, "lhs": args.lhs, "rhs": args.rhs})
    summary = {
        "holds": holds,
        "reports": [
            {
                "direction": direction,
                "holds": rep.holds,
                "witness_c": rep.witness_c,
                "counterexample_t": rep.counterexample_t,
            }
            for direction, rep in reports
        ],
    }
    _emit(
        config,
        ["kind", "direction", "holds", "witness_c", "counterexample_t", "c_lo", "c_hi"],
        rows,
        summary,
    )
    for direction, rep in reports:
        if rep.holds:
            print(f"{args.kind} {direction}: holds witness_C={_fmt(rep.witness_c)}")
        else:
            print(f"{args.kind} {direction}: fails counterexample_t={_fmt(rep.counterexample_t)}")
    return 0 if holds else 1


_VERIFY_HEADER = ["sample_id", "lhs", "rhs", "ratio", "bound", "pass"]


def _report_rows(report):
    return [
        (
            row.sample_id,
            row.lhs,
            row.rhs,
            row.ratio,
            report.proof_constant,
            row.lhs <= report.proof_constant * row.rhs * (1.0 + 1e-9),
        )
        for row in report.rows
    ]


def _report_summary(report):
    return {
        "theorem": report.theorem_id,
        "direction": report.direction,
        "passed": report.passed,
        "measured_constant": report.measured_constant,
        "proof_constant": report.proof_constant,
        "samples": len(report.rows),
    }


def _cmd_verify_fixture(args) -> int:
    raw = docs.parse_fixture_doc(
        docs.load_json(args.fixture),
        Path(args.fixture).parent,
        override=args.override_hypotheses,
    )
    theorem = args.theorem or raw["theorem"]
    radii = _resolve_radii(args) or raw["radii"]
    seed = args.seed if args.seed is not None else raw["seed"]
    fixture = make_fixture(
        theorem,
        raw["space1"],
        raw["space2"],
        samples=raw["samples"],
        radii=radii,
        seed=seed,
        num_random=raw["num_random"],
        override=raw["override"] or args.override_hypotheses,
    )
    reports = []
    if args.direction in ("sufficiency", "both"):
        reports.append(verify_sufficiency(fixture, rtol=args.tol))
    if args.direction in ("necessity", "both"):
        assumed = args.assumed_c
        if assumed is None:
            assumed = reports[0].measured_constant if reports else 1.0
        if assumed <= 0:
            assumed = 1.0
        reports.append(verify_necessity(fixture, assumed, rtol=args.tol))
    rows = []
    for report in reports:
        rows.extend(_report_rows(report))
    config = _config(args, "verify", {"theorem": theorem, "fixture": args.fixture}, fixture.radii)
    summary = {"reports": [_report_summary(r) for r in reports]}
    _emit(config, _VERIFY_HEADER, rows, summary)
    ok = all(report.passed for report in reports)
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{report.direction} {report.theorem_id}: {status} "
            f"measured={_fmt(report.measured_constant)} bound={_fmt(report.proof_constant)}"
        )
    return 0 if ok else 1


def _cmd_verify_suite(args) -> int:
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    seed = args.seed if args.seed is not None else 0
    entries = []
    expectations = []  # (name, expected_to_pass, report)
    for name, fixture in acceptance_fixtures(seed=seed).items():
        suff = verify_sufficiency(fixture, rtol=args.tol)
        nec = verify_necessity(fixture, suff.measured_constant, rtol=args.tol)
        expectations.append((f"{name}.sufficiency", True, suff))
        expectations.append((f"{name}.necessity", True, nec))
        if out_dir:
            _write_csv(out_dir / f"{name}.sufficiency.csv", _VERIFY_HEADER, _report_rows(suff))
            _write_csv(out_dir / f"{name}.necessity.csv", _VERIFY_HEADER, _report_rows(nec))
        entries.append(
            {"fixture": name, "sufficiency": _report_summary(suff), "necessity": _report_summary(nec)}
        )
    contra = verify_necessity(contrapositive_fixture(seed=seed), 1.0, rtol=args.tol)
    expectations.append(("contrapositive.necessity", False, contra))
    if out_dir:
        _write_csv(out_dir / "contrapositive.necessity.csv", _VERIFY_HEADER, _report_rows(contra))
    entries.append({"fixture": "contrapositive", "necessity": _report_summary(contra)})
    morrey = morrey_power_crosscheck(
        1, 2, gr.power_capped(0.5), gr.power(0.5), seed=seed, rtol=args.tol
    )
    expectations.append(("morrey-power.crosscheck", True, morrey))
    if out_dir:
        _write_csv(out_dir / "morrey-power.crosscheck.csv", _VERIFY_HEADER, _report_rows(morrey))
    entries.append({"fixture": "morrey-power", "crosscheck": _report_summary(morrey)})

    ok = all(report.passed == expected for _, expected, report in expectations)
    summary = {"fixtures": entries, "all_expected_outcomes": ok}
    config = _config(args, "verify-suite", {"suite": True})
    if out_dir:
        _write_json(out_dir / "summary.json", {"config": _echo(config), "summary": summary})
    for name, expected, report in expectations:
        status = "PASS" if report.passed else "FAIL"
        tag = "" if report.passed == expected else " (UNEXPECTED)"
        print(f"{name}: {status}{tag} measured={_fmt(report.measured_constant)}")
    print(f"suite: {'OK' if ok else 'NOT OK'}")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    if args.suite:
        return _cmd_verify_suite(args)
    if not args.fixture:
        raise DocumentError("verify needs --fixture PATH or --suite")
    return _cmd_verify_fixture(args)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="omlab",
        description="Orlicz-Morrey norm computations and inclusion verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, radii=True):
        p.add_argument("--out", help="report path prefix (.csv/.json appended)")
        p.add_argument("--format", choices=["csv", "json", "both"], default="both")
        p.add_argument("--tol", type=float, default=DEFAULT_RTOL, help="solver relative tolerance")
        p.add_argument("--override-hypotheses", action="store_true")
        if radii:
            p.add_argument("--radii", help="comma-separated radius grid")

    p_eval = sub.add_parser("eval", help="evaluate a Young or growth function")
    group = p_eval.add_mutually_exclusive_group(required=True)
    group.add_argument("--young")
    group.add_argument("--growth")
    p_eval.add_argument("--t", required=True, help="comma-separated arguments")
    common(p_eval, radii=False)

    p_inv = sub.add_parser("inverse", help="generalized inverse of a Young function")
    p_inv.add_argument("--young", required=True)
    p_inv.add_argument("--s", required=True, help="comma-separated arguments")
    common(p_inv, radii=False)

    p_norm = sub.add_parser("norm", help="global norm of a simple radial function")
    p_norm.add_argument("--space", required=True)
    p_norm.add_argument("--function", required=True)
    common(p_norm)

    p_char = sub.add_parser("char-norm", help="closed-form ball-indicator norm")
    p_char.add_argument("--space", required=True)
    p_char.add_argument("--r0", required=True, help="comma-separated indicator radii")
    common(p_char, radii=False)

    p_rel = sub.add_parser("check-relation", help="grid-certified order check")
    p_rel.add_argument("--kind", choices=["young", "growth", "growth-approx"], required=True)
    p_rel.add_argument("--lhs", required=True)
    p_rel.add_argument("--rhs", required=True)
    p_rel.add_argument("--t-grid", help="comma-separated t grid override")
    p_rel.add_argument("--c-grid", help="comma-separated C grid override")
    common(p_rel, radii=False)

    p_ver = sub.add_parser("verify", help="run an inclusion-theorem fixture or the built-in suite")
    p_ver.add_argument("--theorem")
    p_ver.add_argument("--fixture")
    p_ver.add_argument("--suite", action="store_true")
    p_ver.add_argument("--direction", choices=["sufficiency", "necessity", "both"], default="both")
    p_ver.add_argument("--assumed-c", type=float, default=None)
    p_ver.add_argument("--seed", type=int, default=None)
    common(p_ver)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "seed"):
        args.seed = 0
    handlers = {
        "eval": _cmd_eval,
        "inverse": _cmd_inverse,
        "norm": _cmd_norm,
        "char-norm": _cmd_char_norm,
        "check-relation": _cmd_check_relation,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (DocumentError, DomainError, HypothesisError, UnsupportedGeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OmlabError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
