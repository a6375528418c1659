"""Command-line front end.

Representations are described by a small JSON document (see ``DESCRIPTOR_SCHEMA``);
every subcommand reads one from a path or standard input, except ``wpline`` and
``qcheck`` which take no descriptor.

Exit codes: 0 success, 1 q-series identity failure, 2 invalid input,
3 a requested quantity is undetermined (unless ``--allow-partial``).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

import jsonschema

from .bundles import (
    Cert,
    InconsistentOverride,
    IntegralityFailure,
    IntRange,
    NegativeMultiplicity,
    NonIntegralMultiplicity,
    RepData,
    Status,
    YUndetermined,
    classify,
    dims,
    generator_weights,
    hilbert,
    min_weight_bound,
    resolve_x,
    resolve_y,
    splitting,
    subgroup_generators,
)
from .exact import CycMatrix, Cyclotomic, parse_rational
from .exponents import (
    DEFAULT_ORDER_CAP,
    NotQuasiUnipotentWithinCap,
    SpectrumMismatch,
    TSpectrum,
    t_spectrum,
)
from .qseries import run_identity_suite
from .rep import (
    DEFAULT_IMAGE_CAP,
    MalformedCycles,
    RelationViolation,
    Repn,
    character,
    direct_sum,
    dual,
    from_permutations,
    tensor_char,
)
from .wpline import WeightedLine, euler_line, h0, h1

EXIT_OK = 0
EXIT_QCHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_UNDETERMINED = 3

_RATIONAL = {"type": "string", "pattern": r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$"}
_ENTRY = {
    "oneOf": [
        _RATIONAL,
        {"type": "integer"},
        {
            "type": "object",
            "properties": {"coeffs": {"type": "array", "items": {"oneOf": [_RATIONAL, {"type": "integer"}]}}},
            "required": ["coeffs"],
            "additionalProperties": False,
        },
    ]
}
_MATRIX = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": _ENTRY}}
_CYCLES = {
    "type": "array",
    "items": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
}
_SPECTRUM = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "rotation": _RATIONAL,
            "block": {"type": "integer", "minimum": 1},
            "parity": {"enum": ["+", "-", "−"]},
            "mult": {"type": "integer", "minimum": 1},
        },
        "required": ["rotation", "block", "parity", "mult"],
        "additionalProperties": False,
    },
}
_ASSERT = {
    "type": "object",
    "properties": {k: {"type": "boolean"} for k in ("positive", "good", "unitarizable")},
    "additionalProperties": False,
}
_COMMON = {"T_spectrum": _SPECTRUM, "assert": _ASSERT}


def _variant(name: str, props: dict, required: list) -> dict:
    return {
        "if": {"properties": {"type": {"const": name}}, "required": ["type"]},
        "then": {
            "properties": {"type": {"const": name}, **props, **_COMMON},
            "required": ["type", *required],
            "additionalProperties": False,
        },
    }


DESCRIPTOR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$ref": "#/$defs/rep",
    "$defs": {
        "rep": {
            "type": "object",
            "properties": {
                "type": {
                    "enum": ["matrices", "character", "permutation", "direct_sum", "tensor_character", "dual"]
                }
            },
            "required": ["type"],
            "allOf": [
                _variant(
                    "matrices",
                    {"cyclotomic_order": {"type": "integer", "minimum": 1}, "S": _MATRIX, "T": _MATRIX},
                    ["cyclotomic_order", "S", "T"],
                ),
                _variant("character", {"a": {"type": "integer", "minimum": 0, "maximum": 11}}, ["a"]),
                _variant(
                    "permutation",
                    {
                        "degree": {"type": "integer", "minimum": 1},
                        "S": _CYCLES,
                        "T": _CYCLES,
                        "subtract_trivial": {"type": "boolean"},
                    },
                    ["degree", "S", "T"],
                ),
                _variant(
                    "direct_sum",
                    {"parts": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/rep"}}},
                    ["parts"],
                ),
                _variant(
                    "tensor_character", {"a": {"type": "integer"}, "of": {"$ref": "#/$defs/rep"}}, ["a", "of"]
                ),
                _variant("dual", {"of": {"$ref": "#/$defs/rep"}}, ["of"]),
            ],
        }
    },
}


class DescriptorError(ValueError):
    """Invalid descriptor; ``pointer`` locates the offending value."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validate_descriptor(doc) -> None:
    validator = jsonschema.Draft202012Validator(DESCRIPTOR_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise DescriptorError(_pointer(err.absolute_path), err.message)


def descriptor_hash(doc) -> str:
    canon = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# building representations


def _entry(value, order: int, where: str) -> Cyclotomic:
    try:
        if isinstance(value, dict):
            return Cyclotomic.from_powers(order, [parse_rational(c) for c in value["coeffs"]])
        return Cyclotomic.rational(parse_rational(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise DescriptorError(where, str(exc)) from None


def _matrix(rows, order: int, where: str) -> CycMatrix:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DescriptorError(where, "matrix must be square")
    return CycMatrix([[_entry(v, order, f"{where}/{i}/{j}") for j, v in enumerate(r)] for i, r in enumerate(rows)])


def _spectrum(items, where: str) -> TSpectrum:
    out = []
    for i, it in enumerate(items):
        try:
            rot = parse_rational(it["rotation"])
        except (ValueError, ZeroDivisionError) as exc:
            raise DescriptorError(f"{where}/{i}/rotation", str(exc)) from None
        out.append((rot, it["block"], 1 if it["parity"] == "+" else -1, it["mult"]))
    return TSpectrum.from_items(out)


def _build(doc, where: str, cap: int) -> tuple[Repn, TSpectrum | None]:
    if where and "assert" in doc:
        raise DescriptorError(f"{where}/assert", "assertions are only allowed on the top-level descriptor")
    kind = doc["type"]
    spec = None
    try:
        if kind == "matrices":
            N = doc["cyclotomic_order"]
            S = _matrix(doc["S"], N, f"{where}/S")
            T = _matrix(doc["T"], N, f"{where}/T")
            if S.rows != T.rows:
                raise DescriptorError(where, "S and T have different sizes")
            rep = Repn(S, T, label="matrices")
        elif kind == "character":
            rep = character(doc["a"])
        elif kind == "permutation":
            rep = from_permutations(doc["degree"], doc["S"], doc["T"], doc.get("subtract_trivial", False))
        elif kind == "direct_sum":
            built = [_build(p, f"{where}/parts/{i}", cap) for i, p in enumerate(doc["parts"])]
            rep = direct_sum(*(r for r, _ in built))
            if any(s is not None for _, s in built):
                spec = built[0][1] or t_spectrum(built[0][0], cap)
                for r, s in built[1:]:
                    spec = spec + (s or t_spectrum(r, cap))
        elif kind == "tensor_character":
            inner, s = _build(doc["of"], f"{where}/of", cap)
            rep = tensor_char(inner, doc["a"])
            spec = None if s is None else s.twist(doc["a"])
        else:
            inner, s = _build(doc["of"], f"{where}/of", cap)
            rep = dual(inner)
            spec = None if s is None else s.dual()
    except RelationViolation as exc:
        raise DescriptorError(where, f"relation violated: {exc.relation}") from None
    except (MalformedCycles, ArithmeticError) as exc:
        raise DescriptorError(where, str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(where, str(exc)) from None
    if "T_spectrum" in doc:
        try:
            spec = _spectrum(doc["T_spectrum"], f"{where}/T_spectrum")
        except SpectrumMismatch as exc:
            raise DescriptorError(f"{where}/T_spectrum", str(exc)) from None
    if spec is not None:
        try:
            rep = rep.with_spectrum(spec)
        except SpectrumMismatch as exc:
            raise DescriptorError(f"{where}/T_spectrum", str(exc)) from None
    return rep, spec


def _entry_json(x: Cyclotomic, order: int):
    if x.is_rational():
        return str(x.to_rational())
    return {"coeffs": [str(Fraction(c)) for c in x.embed(order).coeffs]}


def rep_to_descriptor(rep: Repn) -> dict:
    """A "matrices" descriptor for a non-virtual representation."""
    if rep.is_virtual:
        raise ValueError("virtual representations have no matrix descriptor")
    n = rep.order
    doc = {"type": "matrices", "cyclotomic_order": n}
    for name, M in (("S", rep.S), ("T", rep.T)):
        doc[name] = [[_entry_json(M[i, j], n) for j in range(M.cols)] for i in range(M.rows)]
    return doc


def caps_from_env() -> tuple[int, int]:
    """(finite-image cap, T-order cap), both overridden by VVMF_CAP."""
    raw = os.environ.get("VVMF_CAP")
    if not raw:
        return DEFAULT_IMAGE_CAP, DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DescriptorError("", f"VVMF_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DescriptorError("", "VVMF_CAP must be positive")
    return cap, cap


def load_descriptor(doc) -> tuple[Repn, RepData]:
    """Validate, build and classify a descriptor."""
    validate_descriptor(doc)
    image_cap, order_cap = caps_from_env()
    rep, _ = _build(doc, "", order_cap)
    flags = classify(rep, image_cap, doc.get("assert"))
    try:
        data = RepData.from_repn(rep, flags, order_cap)
    except NotQuasiUnipotentWithinCap as exc:
        raise DescriptorError("", f"{exc}; supply T_spectrum") from None
    except ArithmeticError as exc:
        raise DescriptorError("", str(exc)) from None
    return rep, data


# ---------------------------------------------------------------------------
# serialization


def jsonable(x):
    """Convert report values to JSON types; rationals become "p/q" strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Cyclotomic):
        if x.is_rational():
            return str(x.to_rational())
        return {"cyclotomic_order": x.order, "coeffs": [str(Fraction(c)) for c in x.coeffs]}
    if isinstance(x, IntRange):
        return x.lo if x.is_exact else {"lo": x.lo, "hi": x.hi}
    if isinstance(x, (Status, Cert)):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


def _spectrum_list(spec: TSpectrum) -> list:
    return [
        {"rotation": e.rotation, "block": e.block, "parity": "+" if e.parity > 0 else "-", "mult": e.mult}
        for e in spec.entries
    ]


def _exponent_report(choice) -> dict:
    return {
        "interval": str(choice.interval),
        "entries": [
            {"exponent": e.exponent, "block": e.block, "parity": "+" if e.parity > 0 else "-", "mult": e.mult}
            for e in choice.entries
        ],
        "TrL": choice.trL,
        "TrL_plus": choice.trL_plus,
        "TrL_minus": choice.trL_minus,
    }


def _dims_list(report) -> list:
    out = []
    for e in report.entries:
        row = {"k": e.k, "dim": e.dim, "status": e.status}
        if e.bounds is not None:
            row["bounds"] = e.bounds
        out.append(row)
    return out


_TABLE_ERRORS = (NegativeMultiplicity, NonIntegralMultiplicity, YUndetermined)


def analyze_report(data: RepData, digest: str, y_override=None) -> tuple[dict, bool]:
    """The full report and whether every quantity in it is determined."""
    m = data.mults
    par = m.parity()
    complete = True
    report = {
        "descriptor_sha256": digest,
        "dim": data.dim,
        "traces": {"S": [m.trace_S(j) for j in range(4)], "R": [m.trace_R(j) for j in range(6)]},
        "parity": {
            "d_plus": par.d_plus, "d_minus": par.d_minus,
            "trS_plus": par.s_plus, "trS_minus": par.s_minus,
            "trR_plus": par.r1_plus, "trR_minus": par.r1_minus,
            "trR2_plus": par.r2_plus, "trR2_minus": par.r2_minus,
        },
        "multiplicities": {"alpha": list(m.alpha), "beta": list(m.beta)},
        "T_spectrum": _spectrum_list(data.spectrum),
        "exponents": {"standard": _exponent_report(data.standard()), "cusp": _exponent_report(data.cusp())},
        "flags": data.flags.as_dict(),
        "invariants": {"fixed": data.iso(0)},
        "min_weight_bound": min_weight_bound(data),
    }
    for name, fn, args in (("x", resolve_x, (data,)), ("y", resolve_y, (data, y_override))):
        try:
            val = fn(*args)
            report[name] = val
            complete &= val.is_exact
        except _TABLE_ERRORS as exc:
            report[name] = {"error": str(exc)}
            complete = False
    try:
        gw = generator_weights(data, y_override)
        gens = {
            "multiplicity": {str(w): r for w, r in sorted(gw.multiplicity.items())},
            "weights": gw.weights,
            "roots": gw.roots,
            "status": (Status.UNDETERMINED if not gw.is_exact
                       else Status.CONDITIONAL if gw.conditional else Status.EXACT),
        }
        complete &= gw.is_exact
    except _TABLE_ERRORS as exc:
        gens = {"error": str(exc), "status": Status.UNDETERMINED}
        complete = False
    report["generators"] = gens
    md = dims(data, 0, 12, y_override=y_override)
    sd = dims(data, 0, 12, cusp=True, y_override=y_override)
    report["dims"] = {"modular": _dims_list(md), "cusp": _dims_list(sd)}
    complete &= md.complete and sd.complete
    return report, complete


# ---------------------------------------------------------------------------
# human-readable output


def _fmt(x) -> str:
    if isinstance(x, Cyclotomic) and not x.is_rational():
        return str(x)
    v = jsonable(x)
    if isinstance(v, dict) and set(v) == {"lo", "hi"}:
        return f"[{v['lo']}, {v['hi']}]"
    return str(v)


def _text_dims(report) -> str:
    lines = [f"{'k':>4}  {'dim':>6}  status"]
    for e in report.entries:
        dim = str(e.dim) if e.dim is not None else ("?" if e.bounds is None else _fmt(e.bounds))
        lines.append(f"{e.k:>4}  {dim:>6}  {e.status.value}")
    lines.append("dims: " + ",".join("?" if v is None else str(v) for v in report.values()))
    return "\n".join(lines)


def _text_analyze(rep: dict) -> str:
    out = [f"descriptor sha256: {rep['descriptor_sha256']}", f"dimension: {rep['dim']}"]
    out.append("S-multiplicities (i^s): " + " ".join(map(str, rep["multiplicities"]["alpha"])))
    out.append("R-multiplicities (xi^r): " + " ".join(map(str, rep["multiplicities"]["beta"])))
    p = rep["parity"]
    out.append(f"parity: d+ = {p['d_plus']}, d- = {p['d_minus']}")
    parts = []
    for e in rep["T_spectrum"]:
        block = "" if e["block"] == 1 else " (block %d)" % e["block"]
        mult = " x%d" % e["mult"] if e["mult"] > 1 else ""
        parts.append(f"{_fmt(e['rotation'])}{e['parity']}{block}{mult}")
    spec = ", ".join(parts)
    out.append(f"T-spectrum: {spec}")
    for name in ("standard", "cusp"):
        e = rep["exponents"][name]
        out.append(f"{name} exponents on {e['interval']}: Tr L = {_fmt(e['TrL'])}")
    out.append("flags: " + ", ".join(f"{k} {v}" for k, v in sorted(rep["flags"].items())))
    out.append(f"weight bound 12 Tr L/d + 1 - d = {_fmt(rep['min_weight_bound'])}")
    for name in ("x", "y"):
        v = rep[name]
        if isinstance(v, dict) and "error" in v:
            out.append(f"{name}: unavailable, {v['error']}")
        else:
            out.append(f"{name} = {_fmt(v)}")
    g = rep["generators"]
    if "error" in g:
        out.append(f"generators: unavailable, {g['error']}")
    elif g["weights"] is not None:
        out.append(f"generator weights: {list(g['weights'])} ({g['status'].value})")
        out.append(f"roots: {list(g['roots'])}")
    else:
        out.append("generator multiplicities: "
                   + ", ".join(f"{w}: {_fmt(r)}" for w, r in g["multiplicity"].items()) + " (Undetermined)")
    for name in ("modular", "cusp"):
        vals = ",".join("?" if e["dim"] is None else str(e["dim"]) for e in rep["dims"][name])
        out.append(f"{name} dims k=0..12: {vals}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# subcommands


def _read_doc(path: str | None):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DescriptorError("", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError("", f"not valid JSON: {exc}") from None


def _emit(args, obj, text: str) -> None:
    sys.stdout.write((dumps(obj) if args.json else text) + "\n")


def _undetermined(args, what: str) -> int:
    sys.stderr.write(f"Undetermined: {what}\n")
    return EXIT_OK if args.allow_partial else EXIT_UNDETERMINED


def cmd_validate(args, doc) -> int:
    rep, data = load_descriptor(doc)
    obj = {"valid": True, "dim": data.dim, "descriptor_sha256": descriptor_hash(doc), "flags": data.flags.as_dict()}
    _emit(args, obj, f"valid: dimension {data.dim}, sha256 {obj['descriptor_sha256']}")
    return EXIT_OK


def cmd_analyze(args, doc) -> int:
    _, data = load_descriptor(doc)
    report, complete = analyze_report(data, descriptor_hash(doc), args.assert_y)
    _emit(args, report, _text_analyze(report))
    return EXIT_OK if complete else _undetermined(args, "some quantities in the report")


def cmd_dims(args, doc) -> int:
    _, data = load_descriptor(doc)
    if args.to < args.frm:
        raise DescriptorError("", "--to must not be below --from")
    rep = dims(data, args.frm, args.to, cusp=args.cusp, y_override=args.assert_y)
    obj = {"descriptor_sha256": descriptor_hash(doc), "cusp": args.cusp, "dims": _dims_list(rep)}
    _emit(args, obj, _text_dims(rep))
    if not rep.complete:
        bad = [e.k for e in rep.entries if e.status is Status.UNDETERMINED]
        return _undetermined(args, f"dimensions at weights {bad}")
    return EXIT_OK


def _weights_or_undetermined(args, data):
    try:
        gw = generator_weights(data, args.assert_y)
    except _TABLE_ERRORS as exc:
        return None, str(exc)
    if not gw.is_exact:
        return gw, f"generator weights (y in {gw.y}, x in {gw.x})"
    return gw, None


def cmd_weights(args, doc) -> int:
    _, data = load_descriptor(doc)
    gw, problem = _weights_or_undetermined(args, data)
    if problem:
        obj = {"descriptor_sha256": descriptor_hash(doc), "status": Status.UNDETERMINED, "reason": problem}
        if gw is not None:
            obj["multiplicity"] = {str(w): r for w, r in sorted(gw.multiplicity.items())}
        _emit(args, obj, f"weights: Undetermined ({problem})")
        return _undetermined(args, problem)
    status = Status.CONDITIONAL if gw.conditional else Status.EXACT
    obj = {"descriptor_sha256": descriptor_hash(doc), "weights": gw.weights, "roots": gw.roots, "status": status}
    _emit(args, obj, f"weights {list(gw.weights)}\nroots {list(gw.roots)}\nstatus {status.value}")
    return EXIT_OK


def cmd_hilbert(args, doc) -> int:
    _, data = load_descriptor(doc)
    if args.order < 1:
        raise DescriptorError("", "--order must be positive")
    try:
        num, series = hilbert(data, args.order, args.assert_y)
    except _TABLE_ERRORS as exc:
        return _undetermined(args, str(exc))
    num_text = " + ".join(f"{c}X^{w}" if c > 1 else f"X^{w}" for w, c in sorted(num.items()))
    obj = {"descriptor_sha256": descriptor_hash(doc), "numerator": {str(w): c for w, c in sorted(num.items())},
           "denominator": "(1-X^4)(1-X^6)", "series": series}
    _emit(args, obj, f"({num_text}) / ((1-X^4)(1-X^6))\nseries: " + ",".join(map(str, series)))
    return EXIT_OK


def cmd_splitting(args, doc) -> int:
    _, data = load_descriptor(doc)
    try:
        split = splitting(data, args.weight, args.assert_y)
    except _TABLE_ERRORS as exc:
        return _undetermined(args, str(exc))
    obj = {"descriptor_sha256": descriptor_hash(doc), "weight": args.weight, "summands": split.summands}
    _emit(args, obj, str(split))
    return EXIT_OK


def cmd_subgroup(args, doc) -> int:
    validate_descriptor(doc)
    if doc["type"] != "permutation" or doc.get("subtract_trivial", False):
        raise DescriptorError("/type", "subgroup needs a permutation descriptor of the full coset action")
    image_cap, order_cap = caps_from_env()
    rep, _ = _build(doc, "", order_cap)
    try:
        ws = subgroup_generators(rep)
    except _TABLE_ERRORS as exc:
        return _undetermined(args, str(exc))
    obj = {"descriptor_sha256": descriptor_hash(doc), "index": rep.dim, "weights": ws}
    _emit(args, obj, f"index {rep.dim}\nweights {list(ws)}")
    return EXIT_OK


def cmd_wpline(args) -> int:
    try:
        W = WeightedLine(args.n1, args.n2)
    except ValueError as exc:
        raise DescriptorError("", str(exc)) from None
    fn = {"h0": h0, "h1": h1, "euler": euler_line}[args.what]
    val = fn(W, args.k)
    _emit(args, {"n1": args.n1, "n2": args.n2, "k": args.k, args.what: val}, str(val))
    return EXIT_OK


def cmd_qcheck(args) -> int:
    results = run_identity_suite(args.order)
    lines = []
    for name, bad in results:
        lines.append(f"PASS {name}" if bad is None else f"FAIL {name} (first mismatch at index {bad})")
    obj = {"order": args.order, "results": [{"identity": n, "first_failure": b} for n, b in results]}
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK if all(b is None for _, b in results) else EXIT_QCHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--allow-partial", action="store_true",
                        help="exit 0 even when some quantity is undetermined")
    desc = argparse.ArgumentParser(add_help=False, parents=[common])
    desc.add_argument("descriptor", nargs="?", help="descriptor file (default: standard input)")
    desc.add_argument("--assert-y", type=int, default=None, metavar="Y",
                      help="assert dim S_1 of the dual representation; checked against the derived range")

    p = argparse.ArgumentParser(prog="vvmf", description="Vector valued modular forms for SL2(Z).")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[desc], help="check a descriptor")
    sub.add_parser("analyze", parents=[desc], help="full report")
    d = sub.add_parser("dims", parents=[desc], help="dimension table")
    d.add_argument("--from", dest="frm", type=int, required=True)
    d.add_argument("--to", type=int, required=True)
    d.add_argument("--cusp", action="store_true")
    sub.add_parser("weights", parents=[desc], help="free generator weights")
    h = sub.add_parser("hilbert", parents=[desc], help="Hilbert series")
    h.add_argument("--order", type=int, required=True)
    s = sub.add_parser("splitting", parents=[desc], help="splitting type of the weight-k bundle")
    s.add_argument("--weight", type=int, required=True)
    sub.add_parser("subgroup", parents=[desc], help="generator weights from a coset permutation action")
    w = sub.add_parser("wpline", parents=[common], help="line bundle cohomology on P(n1, n2)")
    w.add_argument("what", choices=["h0", "h1", "euler"])
    w.add_argument("--n1", type=int, required=True)
    w.add_argument("--n2", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    q = sub.add_parser("qcheck", parents=[common], help="q-expansion identity suite")
    q.add_argument("--order", type=int, default=200)
    return p


_COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "dims": cmd_dims,
    "weights": cmd_weights,
    "hilbert": cmd_hilbert,
    "splitting": cmd_splitting,
    "subgroup": cmd_subgroup,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "wpline":
            return cmd_wpline(args)
        if args.command == "qcheck":
            return cmd_qcheck(args)
        doc = _read_doc(args.descriptor)
        return _COMMANDS[args.command](args, doc)
    except DescriptorError as exc:
        sys.stderr.write(f"invalid input at {exc.pointer or '/'}: {exc.message}\n")
        return EXIT_INVALID
    except InconsistentOverride as exc:
        sys.stderr.write(f"invalid assertion: {exc}\n")
        return EXIT_INVALID
    except IntegralityFailure as exc:
        sys.stderr.write(f"internal consistency check failed: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
