"""Command-line front end.

Every verb reads its structured input as UTF-8 JSON (``--json`` inline or
``--input`` file), validates it, and writes a report to stdout.  Exit codes:
0 success, 1 computation-level failure, 2 input error.
"""

import argparse
import json
import logging
import sys

import jsonschema

from . import divisor_calculus as dc
from . import elliptic_counting as ec
from . import good_arrays as ga
from . import hilbert_series as hs
from . import multiplicity_bound as mb

log = logging.getLogger("ncblowup")

EXT_NAT = {"anyOf": [{"type": "integer", "minimum": 0}, {"const": "inf"}]}

GOOD_ARRAY_SCHEMA = {
    "type": "object",
    "required": ["base", "lo"],
    "properties": {
        "base": {"type": "integer", "minimum": 0},
        "lo": {"type": "integer"},
        "values": {"type": "array", "items": EXT_NAT},
        "inf_from": {"type": "integer"},
    },
    "additionalProperties": False,
}

FACTORS_SCHEMA = {
    "type": "object",
    "required": ["a", "b"],
    "properties": {"a": GOOD_ARRAY_SCHEMA, "b": GOOD_ARRAY_SCHEMA},
    "additionalProperties": False,
}

DIVISOR_SCHEMA = {
    "type": "object",
    "required": ["orbits"],
    "properties": {
        "orbits": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "propertyNames": {"pattern": "^-?[0-9]+$"},
                "additionalProperties": {"type": "integer"},
            },
        }
    },
    "additionalProperties": False,
}

PARTITION_SCHEMA = {"type": "array", "items": {"type": "integer", "minimum": 1}}

_coords = {"type": "array", "items": {"type": "integer"}}
CONFIG_SCHEMA = {
    "type": "object",
    "required": ["rank", "tau"],
    "properties": {
        "rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "tau": _coords,
        "points": {"type": "array", "items": _coords, "maxItems": 8},
        "sigma_points": {"type": "array", "items": _coords, "maxItems": 8},
    },
    "additionalProperties": False,
}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["numerator"],
    "properties": {
        "numerator": {"type": "array", "items": {"type": "integer"}},
        "denominator": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "additionalProperties": False,
}


class InputError(Exception):
    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer


class ComputationFailed(Exception):
    def __init__(self, report):
        super().__init__("computation-level failure")
        self.report = report


def _pointer(path):
    return "/" + "/".join(str(p).replace("~", "~0").replace("/", "~1") for p in path) if path else ""


def load_document(args, schema):
    if args.json is not None and args.input is not None:
        raise InputError("give either --json or --input, not both")
    if args.json is None and args.input is None:
        raise InputError("missing input: use --json or --input")
    try:
        if args.input is not None:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.loads(args.json)
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from exc
    errors = sorted(
        jsonschema.Draft202012Validator(schema).iter_errors(doc),
        key=lambda e: list(e.absolute_path),
    )
    if errors:
        err = errors[0]
        raise InputError(err.message, _pointer(err.absolute_path))
    return doc


def parse_orbit_size(text):
    if text in ("inf", "oo", "infinity"):
        return ga.INF
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"orbit size must be a positive integer or 'inf': {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("orbit size must be positive")
    return n


def int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _n_json(n):
    return "inf" if n == ga.INF else n


def _multiset_json(c):
    return {str(k): v for k, v in sorted(c.items())}


def _good_array(doc):
    try:
        return ga.GoodArray.from_json(doc)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- garray ------------------------------------------------------------------

def cmd_garray(args):
    if args.verb == "colength":
        if args.p < 0:
            raise InputError("p must be a natural number", "")
        return {"p": args.p, "n": _n_json(args.n), "colength": ga.length_colength(args.p, args.n)}
    if args.verb == "factors":
        doc = load_document(args, FACTORS_SCHEMA)
        a, b = _good_array(doc["a"]), _good_array(doc["b"])
        try:
            f = ga.quotient_factors(a, b, args.n)
        except ValueError as exc:
            raise InputError(f"{type(exc).__name__}: {exc}") from exc
        return {"n": _n_json(args.n), "factors": _multiset_json(f), "length": ga.length(f)}
    a = _good_array(load_document(args, GOOD_ARRAY_SCHEMA))
    if args.verb == "top":
        t = ga.top(a, args.n)
        return {"array": a.to_json(), "n": _n_json(args.n), "top": _multiset_json(t), "jumps": a.jumps()}
    if args.verb == "radical":
        return {"array": a.to_json(), "radical": _array_json(ga.radical(a))}
    if args.verb == "mul":
        c = ga.mul_maximal(a, args.l, args.n)
        return {"array": a.to_json(), "l": args.l, "n": _n_json(args.n), "product": _array_json(c)}
    raise AssertionError(args.verb)


def _array_json(a):
    out = a.to_json()
    out["values"] = ["inf" if v == ga.INF else v for v in out["values"]]
    return out


# -- divisor -----------------------------------------------------------------

def cmd_divisor(args):
    if args.verb == "strict":
        if args.json is None and args.input is None:
            raise InputError("missing partition: use --json '[3,1]'")
        t = load_document(args, PARTITION_SCHEMA)
        try:
            t = dc.check_partition(t)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        s = dc.strict_transform_T(t)
        return {
            "partition": list(t),
            "conjugate": list(dc.conjugate(t)),
            "loewy_length": dc.loewy_length(t),
            "strict_transform": list(s),
            "strict_conjugate": list(dc.conjugate(s)),
            "pushforward_loewy_bound": dc.pushforward_l_bound(dc.loewy_length(s)),
            "row_vector": dc.row_vector(t),
        }
    d = dc.Divisor.from_json(load_document(args, DIVISOR_SCHEMA))
    if args.verb == "normalize":
        try:
            nd, moves = dc.normalize(d, args.orbit)
        except ValueError as exc:
            raise InputError(f"{type(exc).__name__}: {exc}") from exc
        return {
            "divisor": nd.to_json(),
            "degree": nd.degree(),
            "moves": [
                {"kind": m.kind, "orbit": m.source.orbit, "from": m.source.offset, "to": m.target.offset}
                for m in moves
            ],
        }
    if args.verb == "transform":
        orbit, _, off = args.at.rpartition(":")
        try:
            q = dc.OrbitPoint(orbit, int(off))
        except ValueError:
            raise InputError(f"--at must look like ORBIT:OFFSET, got {args.at!r}")
        nd = dc.div_after_simple_quotient(d, q)
        return {"divisor": nd.to_json(), "degree": nd.degree()}
    raise AssertionError(args.verb)


# -- cert --------------------------------------------------------------------

def cmd_cert(args):
    if args.verb == "check":
        if args.r is None or args.a is None or args.e is None or args.f is None:
            raise InputError("cert check needs --e, --f, --r and --a")
        try:
            ok = mb.check_inequality(args.e, args.f, args.r, args.a)
        except mb.HypothesisViolated as exc:
            raise ComputationFailed({"error": "HypothesisViolated", "message": str(exc)}) from exc
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        lhs = args.e * args.f
        rhs = sum(x * y for x, y in zip(args.r, args.a))
        return {"e": args.e, "f": args.f, "r": args.r, "a": args.a, "ef": lhs, "sum_r_a": rhs, "holds": ok}
    if args.verb == "witness":
        if args.r is None or args.e is None:
            raise InputError("cert witness needs --e and --r")
        try:
            prof = mb.Profile(args.e, tuple(args.r))
            bound = mb.geometric_e_bound(prof.m)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        w = mb.find_witness(prof)
        return {
            "profile": prof.to_json(),
            "witness": w.to_json() if w else None,
            "e_bound": bound,
        }
    if args.verb == "enumerate":
        if not 1 <= args.m_max <= 8:
            raise InputError("--m-max must lie in 1..8")
        verdicts = mb.survey(args.m_max)
        chosen = verdicts if args.all else [v for v in verdicts if v.survives]
        return [v.to_json() for v in chosen]
    raise AssertionError(args.verb)


# -- count -------------------------------------------------------------------

def _curve(doc):
    try:
        return ec.CurveModel.from_json(doc)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_count(args):
    model = _curve(load_document(args, CONFIG_SCHEMA))
    if args.verb == "gp-check":
        pts = model.sigma_points if model.sigma_points is not None else model.points
        rep = ec.general_position(list(pts))
        out = rep.to_json()
        out["checked"] = "sigma_points" if model.sigma_points is not None else "points"
        if not rep.ok:
            raise ComputationFailed(out)
        return out
    pts = list(model.points)
    out = {}
    if getattr(args, "require_gp", False):
        if model.sigma_points is None:
            raise InputError("--require-gp needs sigma_points", "/sigma_points")
        rep = ec.general_position(list(model.sigma_points))
        out["general_position"] = rep.to_json()
        if not rep.ok:
            raise ComputationFailed(out)
    prof = ec.orbit_profile(pts, model.tau)
    if args.verb == "run":
        if len(pts) > 6:
            raise InputError("count run handles at most 6 points", "/points")
        ab = ec.count_A_B(prof.z, prof.reps, model.tau)
        out.update(
            n=len(pts),
            z=list(prof.z),
            O=prof.occupied,
            A=len(ab.A),
            B=len(ab.B),
            sets=ab.to_json(),
            count=ec.count_exceptional_simples(pts, model.tau),
        )
        return out
    if args.verb == "k0-chain":
        if len(pts) > 6:
            raise InputError("count k0-chain handles at most 6 points", "/points")
        rank, steps = ec.k0_chain(pts, model.tau)
        direct = ec.count_exceptional_simples(pts, model.tau)
        out.update(steps=steps, chain_rank=rank, direct_count=direct, equal=rank == direct)
        if rank != direct:
            raise ComputationFailed(out)
        return out
    raise AssertionError(args.verb)


# -- hseries -----------------------------------------------------------------

def cmd_hseries(args):
    if args.verb == "audit":
        rep = hs.cubic_surface_audit(args.degree)
        if not rep["ok"]:
            raise ComputationFailed(rep)
        return rep
    if args.verb == "expand":
        h = hs.RationalSeries.from_json(load_document(args, SERIES_SCHEMA))
        return {"series": h.to_json(), "coefficients": h.coefficients(args.degree)}
    raise AssertionError(args.verb)


# -- plumbing ----------------------------------------------------------------

def _add_input(p):
    p.add_argument("--json", help="inline JSON input")
    p.add_argument("--input", help="path to a UTF-8 JSON input file")


def build_parser():
    parser = argparse.ArgumentParser(prog="ncblowup", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="group", required=True)

    g = sub.add_parser("garray", help="good-array ideal calculus").add_subparsers(dest="verb", required=True)
    for verb in ("top", "radical", "mul", "factors"):
        p = g.add_parser(verb)
        _add_input(p)
        if verb != "radical":
            p.add_argument("--n", type=parse_orbit_size, default=ga.INF)
        if verb == "mul":
            p.add_argument("--l", type=int, required=True)
    p = g.add_parser("colength")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=parse_orbit_size, default=ga.INF)

    d = sub.add_parser("divisor", help="divisors and partition invariants").add_subparsers(dest="verb", required=True)
    p = d.add_parser("normalize")
    _add_input(p)
    p.add_argument("--orbit", required=True)
    p = d.add_parser("transform")
    _add_input(p)
    p.add_argument("--at", required=True, help="ORBIT:OFFSET of the simple quotient")
    p = d.add_parser("strict")
    _add_input(p)

    c = sub.add_parser("cert", help="multiplicity inequality certifier").add_subparsers(dest="verb", required=True)
    for verb in ("check", "witness"):
        p = c.add_parser(verb)
        p.add_argument("--e", type=int)
        p.add_argument("--r", type=int_list)
        if verb == "check":
            p.add_argument("--f", type=int)
            p.add_argument("--a", type=int_list)
    p = c.add_parser("enumerate")
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--all", action="store_true", help="report every candidate, not only survivors")

    k = sub.add_parser("count", help="exceptional simple objects").add_subparsers(dest="verb", required=True)
    for verb in ("run", "gp-check", "k0-chain"):
        p = k.add_parser(verb)
        _add_input(p)
        if verb != "gp-check":
            p.add_argument("--require-gp", action="store_true")

    h = sub.add_parser("hseries", help="Hilbert series").add_subparsers(dest="verb", required=True)
    p = h.add_parser("expand")
    _add_input(p)
    p.add_argument("--degree", type=int, default=10)
    p = h.add_parser("audit")
    p.add_argument("--preset", choices=("cubic-surface",), default="cubic-surface")
    p.add_argument("--degree", type=int, default=3)
    return parser


HANDLERS = {
    "garray": cmd_garray,
    "divisor": cmd_divisor,
    "cert": cmd_cert,
    "count": cmd_count,
    "hseries": cmd_hseries,
}


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)
    return _text(report)


def _nested(v):
    return isinstance(v, (dict, list)) and any(
        isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)
    )


def _text(obj, indent=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if _nested(v):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(obj, list):
        for x in obj:
            if isinstance(x, (dict, list)):
                lines.append(f"{indent}-")
                lines.append(_text(x, indent + "  "))
            else:
                lines.append(f"{indent}- {json.dumps(x)}")
    else:
        lines.append(f"{indent}{obj}")
    return "\n".join(lines)


def dispatch(argv=None, stdout=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        report = HANDLERS[args.group](args)
        code = 0
    except InputError as exc:
        report = {"error": "input", "message": str(exc), "pointer": exc.pointer}
        code = 2
    except ComputationFailed as exc:
        report = exc.report
        code = 1
    if code == 0 and args.format == "text" and args.group == "garray" and args.verb == "colength":
        print(report["colength"], file=stdout)
    else:
        print(render(report, args.format), file=stdout)
    return code


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
