"""Declarative JSON documents for functions, spaces and fixtures.

Every function document carries a `kind` discriminator and composes
(`sum`, `arg-scale`, `scale` reference nested documents). Fixture documents
may reference space and sample documents by path, resolved relative to the
fixture file. Parse errors raise DocumentError with a field path, which the
CLI maps to exit status 2.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from . import growth as gr
from . import young as yf
from .errors import DocumentError
from .geometry import SimpleRadialFunction
from .norms import SpaceSpec, VARIANTS

__all__ = [
    "load_json",
    "parse_young",
    "parse_growth",
    "parse_function",
    "parse_space",
    "parse_fixture_doc",
    "young_to_doc",
    "growth_to_doc",
    "function_to_doc",
    "space_to_doc",
]


def load_json(path):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{p}: cannot read ({exc})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{p}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None


def _require_mapping(doc, where):
    if not isinstance(doc, dict):
        raise DocumentError(f"{where}: expected an object, got {type(doc).__name__}")
    return doc


def _number(doc, key, where):
    if key not in doc:
        raise DocumentError(f"{where}.{key}: missing")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise DocumentError(f"{where}.{key}: expected a finite number, got {value!r}")
    return float(value)


def _integer(doc, key, where, default=None):
    if key not in doc:
        if default is not None:
            return default
        raise DocumentError(f"{where}.{key}: missing")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}.{key}: expected an integer, got {value!r}")
    return value


def _number_list(doc, key, where):
    if key not in doc:
        raise DocumentError(f"{where}.{key}: missing")
    value = doc[key]
    if not isinstance(value, list) or not value:
        raise DocumentError(f"{where}.{key}: expected a nonempty array")
    out = []
    for i, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, (int, float)) or not math.isfinite(item):
            raise DocumentError(f"{where}.{key}[{i}]: expected a finite number, got {item!r}")
        out.append(float(item))
    return out


def _kind(doc, where, allowed):
    kind = _require_mapping(doc, where).get("kind")
    if kind not in allowed:
        raise DocumentError(f"{where}.kind: expected one of {sorted(allowed)}, got {kind!r}")
    return kind


def parse_young(doc, where="young") -> yf.YoungFunction:
    kind = _kind(doc, where, {"power", "power-log", "exp-minus-one", "ramp", "sum", "arg-scale"})
    try:
        if kind == "power":
            return yf.power(_number(doc, "p", where))
        if kind == "power-log":
            return yf.power_log(_number(doc, "p", where))
        if kind == "exp-minus-one":
            return yf.exp_minus_one()
        if kind == "ramp":
            return yf.ramp(_number(doc, "t0", where))
        if kind == "sum":
            terms = doc.get("terms")
            if not isinstance(terms, list) or len(terms) < 2:
                raise DocumentError(f"{where}.terms: expected an array of at least two documents")
            return yf.sum_of(
                *(parse_young(t, f"{where}.terms[{i}]") for i, t in enumerate(terms))
            )
        inner = doc.get("inner")
        if inner is None:
            raise DocumentError(f"{where}.inner: missing")
        return yf.arg_scale(_number(doc, "c", where), parse_young(inner, f"{where}.inner"))
    except DocumentError:
        raise
    except Exception as exc:  # family parameter out of range etc.
        raise DocumentError(f"{where}: {exc}") from None


def parse_growth(doc, where="growth") -> gr.GrowthFunction:
    kind = _kind(
        doc, where, {"power", "power-capped", "power-log", "constant", "scale", "inv-power"}
    )
    try:
        if kind in ("power", "power-capped", "power-log", "inv-power"):
            ctor = {
                "power": gr.power,
                "power-capped": gr.power_capped,
                "power-log": gr.power_log,
                "inv-power": gr.inv_power,
            }[kind]
            return ctor(_number(doc, "a", where))
        if kind == "constant":
            return gr.constant(_number(doc, "c", where))
        inner = doc.get("inner")
        if inner is None:
            raise DocumentError(f"{where}.inner: missing")
        return gr.scale(_number(doc, "k", where), parse_growth(inner, f"{where}.inner"))
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_function(doc, where="function") -> SimpleRadialFunction:
    _require_mapping(doc, where)
    center = _number_list(doc, "center", where)
    breakpoints = _number_list(doc, "breakpoints", where)
    values = _number_list(doc, "values", where)
    try:
        return SimpleRadialFunction(tuple(center), tuple(breakpoints), tuple(values))
    except Exception as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_space(doc, where="space", override=False) -> SpaceSpec:
    _require_mapping(doc, where)
    variant = doc.get("variant")
    if variant not in VARIANTS:
        raise DocumentError(f"{where}.variant: expected one of {list(VARIANTS)}, got {variant!r}")
    dimension = _integer(doc, "dimension", where)
    young = parse_young(doc.get("young"), f"{where}.young")
    growth = parse_growth(doc.get("growth"), f"{where}.growth")
    flag = bool(doc.get("override", False)) or override
    try:
        return SpaceSpec(variant, young, growth, dimension, override=flag)
    except DocumentError:
        raise
    except Exception as exc:
        raise DocumentError(f"{where}: {exc}") from None


def _resolve(entry, base_dir, where, parser, inline_parser=None):
    if isinstance(entry, str):
        path = Path(entry)
        if not path.is_absolute():
            path = Path(base_dir) / path
        return parser(load_json(path), where)
    if inline_parser is not None:
        return inline_parser(entry, where)
    return parser(entry, where)


def parse_fixture_doc(doc, base_dir, where="fixture", override=False):
    """Extract the raw pieces of a fixture document.

    Returns a dict with theorem, spaces, optional samples/radii, seed and
    num_random; fixture assembly (hypothesis checks) happens in
    `inclusion.make_fixture`.
    """
    _require_mapping(doc, where)
    theorem = doc.get("theorem")
    if not isinstance(theorem, str):
        raise DocumentError(f"{where}.theorem: missing or not a string")
    if "space1" not in doc or "space2" not in doc:
        raise DocumentError(f"{where}: needs space1 and space2")
    space_override = bool(doc.get("override", False)) or override

    def space_parser(obj, w):
        return parse_space(obj, w, override=space_override)

    space1 = _resolve(doc["space1"], base_dir, f"{where}.space1", space_parser)
    space2 = _resolve(doc["space2"], base_dir, f"{where}.space2", space_parser)
    samples = None
    if "samples" in doc:
        entries = doc["samples"]
        if not isinstance(entries, list) or not entries:
            raise DocumentError(f"{where}.samples: expected a nonempty array")
        samples = tuple(
            _resolve(entry, base_dir, f"{where}.samples[{i}]", parse_function)
            for i, entry in enumerate(entries)
        )
    radii = _number_list(doc, "radii", where) if "radii" in doc else None
    return {
        "theorem": theorem,
        "space1": space1,
        "space2": space2,
        "samples": samples,
        "radii": radii,
        "seed": _integer(doc, "seed", where, default=0),
        "num_random": _integer(doc, "num_random_samples", where, default=20),
        "override": space_override,
    }


def young_to_doc(phi: yf.YoungFunction) -> dict:
    if phi.kind in ("power", "power-log"):
        return {"kind": phi.kind, "p": phi.p}
    if phi.kind == "exp-minus-one":
        return {"kind": phi.kind}
    if phi.kind == "ramp":
        return {"kind": phi.kind, "t0": phi.t0}
    if phi.kind == "sum":
        return {"kind": "sum", "terms": [young_to_doc(part) for part in phi.parts]}
    return {"kind": "arg-scale", "c": phi.c, "inner": young_to_doc(phi.parts[0])}


def growth_to_doc(phi: gr.GrowthFunction) -> dict:
    if phi.kind == "constant":
        return {"kind": "constant", "c": phi.c}
    if phi.kind == "scale":
        return {"kind": "scale", "k": phi.k, "inner": growth_to_doc(phi.inner)}
    return {"kind": phi.kind, "a": phi.a}


def function_to_doc(f: SimpleRadialFunction) -> dict:
    return {
        "center": list(f.center),
        "breakpoints": list(f.breakpoints),
        "values": list(f.values),
    }


def space_to_doc(spec: SpaceSpec) -> dict:
    return {
        "variant": spec.variant,
        "dimension": spec.dimension,
        "young": young_to_doc(spec.young),
        "growth": growth_to_doc(spec.growth),
    }
