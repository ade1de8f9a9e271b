"""Command-line front end.

Jobs are JSON documents::

    {
      "format_version": 1,
      "command": "solve",
      "spec": {"n": 2, "alpha": ["1", "0", "0"], "beta": ["0", "-2"], "tau": ["-4"]},
      "m_max": 4
    }

Scalars are integers or ``"p/q"`` strings; floats are rejected.  An element
of Q(sqrt(d)) is written ``{"a": "p/q", "b": "p/q"}`` together with a
top-level ``"radicand": d``.  Entries that depend on the unknown ``t`` are
written ``{"poly": [c0, c1, ...]}`` (ascending powers) and must be listed in
``"unknown"``, e.g. ``["alpha[2]", "tau[0]"]``.  Optional keys: ``m`` or
``m_max``, ``s`` (leading exponent) and, for the demo command, ``demo``.

Reports are JSON as well.  Exact values use the same scalar encoding, with
``"d"`` repeated inside quadratic-extension values; keys named ``approx``
hold decimal approximations only.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import fixtures
from .conditions import (ParamOdeSpec, check_roots, invsqrt_nonexistence, parametric_conditions)
from .errors import (AllValuesAdmissible, DegenerateFamily, DegenerateSystem, DomainError,
                     InvalidExponent, InvalidSpec, JobError, NoRealIndicialRoot, PolysolveError,
                     UnsupportedEquation)
from .exact_core import Poly, QuadExt, format_poly, make, radicand, scalar, split
from .ode_model import OdeSpec, classify_origin, indicial_roots, theorem_case
from .recurrence_engine import (PolySolutionCandidate, candidate, find_polynomial_solutions,
                                necessary_condition_residual)
from .scheffe import (hypergeometric_params, indicial_roots_scheffe, scheffe_from_spec,
                      series_coefficients, termination_degree, two_term_recurrence)
from .verifier import verify_candidate

FORMAT_VERSION = 1
COMMANDS = ("classify", "solve", "conditions", "scan", "scheffe", "demo")
DEMOS = ("heun", "dirac", "invsqrt", "cauchy_euler", "hermite")
DEFAULT_M_MAX = 4

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2


@dataclass(frozen=True)
class JobConfig:
    command: str
    spec: OdeSpec | ParamOdeSpec | None = None
    m: int | None = None
    m_max: int | None = None
    s: object = None
    unknown: tuple = ()
    demo: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise JobError(f"command: expected one of {', '.join(COMMANDS)}, got {self.command!r}")
        if self.m is not None and self.m_max is not None:
            raise JobError("m and m_max are mutually exclusive")
        if self.command == "demo":
            if self.demo not in DEMOS:
                raise JobError(f"demo: expected one of {', '.join(DEMOS)}, got {self.demo!r}")
        elif self.spec is None:
            raise JobError("spec: required for this command")

    @property
    def parametric(self):
        return isinstance(self.spec, ParamOdeSpec)


# -- parsing ------------------------------------------------------------------

class _Float(str):
    """Marker for a JSON number with a fraction or exponent."""


def _reject_constant(name):
    raise JobError(f"unsupported JSON constant {name}")


def _parse_rational(value, path):
    if isinstance(value, bool):
        raise JobError(f"{path}: expected a rational, got {value!r}")
    if isinstance(value, _Float):
        raise JobError(f"{path}: floating-point literal {value} is not exact; write it as \"p/q\"")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE_ "):
            raise JobError(f"{path}: {value!r} is not a rational of the form \"p/q\"")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise JobError(f"{path}: {value!r} is not a rational of the form \"p/q\"") from exc
    raise JobError(f"{path}: expected a rational, got {type(value).__name__}")


def _parse_scalar(value, path, d):
    if isinstance(value, dict):
        extra = set(value) - {"a", "b", "d"}
        if extra or "a" not in value or "b" not in value:
            raise JobError(f"{path}: quadratic-extension values need exactly the keys a, b (and optional d)")
        a = _parse_rational(value["a"], f"{path}.a")
        b = _parse_rational(value["b"], f"{path}.b")
        if "d" in value:
            dd = _parse_rational(value["d"], f"{path}.d")
            if d is None:
                d = dd
            elif dd != d:
                raise JobError(f"{path}.d: {dd} differs from the top-level radicand {d}")
        if b and d is None:
            raise JobError(f"{path}: a sqrt term needs a top-level \"radicand\"")
        try:
            return make(a, b, d or 0)
        except DomainError as exc:
            raise JobError(f"{path}: {exc}") from exc
    return _parse_rational(value, path)


def _parse_entry(value, path, d, listed):
    if isinstance(value, dict) and "poly" in value:
        if not listed:
            raise JobError(f"{path}: polynomial entry is not declared in \"unknown\"")
        if set(value) != {"poly"} or not isinstance(value["poly"], list):
            raise JobError(f"{path}: expected {{\"poly\": [c0, c1, ...]}}")
        return Poly([_parse_scalar(c, f"{path}.poly[{k}]", d) for k, c in enumerate(value["poly"])])
    if listed:
        raise JobError(f"{path}: declared unknown, so it must be written {{\"poly\": [...]}}")
    return _parse_scalar(value, path, d)


def _parse_int(value, path, minimum=0):
    if isinstance(value, bool) or not isinstance(value, int) or isinstance(value, _Float):
        raise JobError(f"{path}: expected an integer, got {value!r}")
    if value < minimum:
        raise JobError(f"{path}: must be >= {minimum}")
    return value


def _parse_spec(doc, d, unknown):
    if not isinstance(doc, dict):
        raise JobError("spec: expected an object")
    extra = set(doc) - {"n", "alpha", "beta", "tau"}
    if extra:
        raise JobError(f"spec: unknown keys {sorted(extra)}")
    if "n" not in doc:
        raise JobError("spec.n: missing")
    n = _parse_int(doc["n"], "spec.n", 2)
    arrays = {}
    for name, want in (("alpha", n + 1), ("beta", n), ("tau", n - 1)):
        seq = doc.get(name)
        if not isinstance(seq, list):
            raise JobError(f"spec.{name}: expected an array")
        if len(seq) != want:
            raise JobError(f"spec.{name}: length {len(seq)}, expected {want} for n={n}")
        arrays[name] = [_parse_entry(v, f"spec.{name}[{k}]", d, f"{name}[{k}]" in unknown)
                        for k, v in enumerate(seq)]
    for entry in unknown:
        name, _, rest = entry.partition("[")
        if name not in arrays or not rest.endswith("]") or not rest[:-1].isdigit() \
                or int(rest[:-1]) >= len(arrays[name]):
            raise JobError(f"unknown: {entry!r} does not name a coefficient entry")
    cls = ParamOdeSpec if unknown else OdeSpec
    try:
        return cls(n, arrays["alpha"], arrays["beta"], arrays["tau"])
    except (InvalidSpec, DomainError) as exc:
        raise JobError(f"spec: {exc}") from exc


def parse_job(data):
    """Parse a job document (bytes or str) into a :class:`JobConfig`."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data, parse_float=_Float, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise JobError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise JobError("job: expected a JSON object")
    extra = set(doc) - {"format_version", "command", "spec", "radicand", "unknown",
                        "m", "m_max", "s", "demo"}
    if extra:
        raise JobError(f"job: unknown keys {sorted(extra)}")
    if doc.get("format_version") != FORMAT_VERSION:
        raise JobError(f"format_version: expected {FORMAT_VERSION}, got {doc.get('format_version')!r}")
    command = doc.get("command")
    if not isinstance(command, str):
        raise JobError("command: missing or not a string")
    d = _parse_rational(doc["radicand"], "radicand") if "radicand" in doc else None
    unknown = doc.get("unknown", [])
    if not isinstance(unknown, list) or not all(isinstance(u, str) for u in unknown):
        raise JobError("unknown: expected an array of entry names like \"alpha[2]\"")
    if len(set(unknown)) != len(unknown):
        raise JobError("unknown: duplicate entries")
    spec = _parse_spec(doc["spec"], d, set(unknown)) if "spec" in doc else None
    m = _parse_int(doc["m"], "m") if "m" in doc else None
    m_max = _parse_int(doc["m_max"], "m_max") if "m_max" in doc else None
    s = _parse_scalar(doc["s"], "s", d) if "s" in doc else None
    demo = doc.get("demo")
    if demo is not None and not isinstance(demo, str):
        raise JobError("demo: expected a string")
    return JobConfig(command, spec, m, m_max, s, tuple(sorted(unknown)), demo)


# -- emitting -----------------------------------------------------------------

def _enc(x, with_d=True):
    """Exact JSON encoding of a scalar."""
    x = scalar(x)
    if isinstance(x, QuadExt):
        a, b, d = split(x)
        out = {"a": str(a), "b": str(b)}
        if with_d:
            out["d"] = str(d)
            out["approx"] = float(x)
        return out
    return str(x)


def _enc_poly(p, var="t", with_d=True):
    if with_d:
        return {"coeffs": [_enc(c) for c in p.coeffs], "text": format_poly(p, var)}
    return {"poly": [_enc(c, False) for c in p.coeffs]}


def _spec_radicand(spec):
    vals = list(spec.alpha + spec.beta + spec.tau)
    if isinstance(spec, ParamOdeSpec):
        vals = [c for p in vals for c in p.coeffs]
    ds = {radicand(v) for v in vals} - {0}
    return ds.pop() if ds else None


def emit_job(config):
    """Serialize a :class:`JobConfig`; ``parse_job`` inverts it."""
    doc = {"format_version": FORMAT_VERSION, "command": config.command}
    d = None
    if config.spec is not None:
        spec = config.spec
        d = _spec_radicand(spec)
        body = {"n": spec.n}
        for name in ("alpha", "beta", "tau"):
            vals = []
            for k, v in enumerate(getattr(spec, name)):
                if f"{name}[{k}]" in config.unknown:
                    vals.append(_enc_poly(v, with_d=False))
                else:
                    vals.append(_enc(v[0] if isinstance(v, Poly) else v, False))
            body[name] = vals
        doc["spec"] = body
    if config.s is not None:
        d = d or radicand(config.s) or None
        doc["s"] = _enc(config.s, False)
    if d is not None:
        doc["radicand"] = str(d)
    if config.unknown:
        doc["unknown"] = list(config.unknown)
    for key in ("m", "m_max", "demo"):
        if getattr(config, key) is not None:
            doc[key] = getattr(config, key)
    return json.dumps(doc, indent=2) + "\n"


def render(report):
    return json.dumps(report, indent=2) + "\n"


# -- commands -----------------------------------------------------------------

def _spec_report(spec):
    if isinstance(spec, ParamOdeSpec):
        return {"n": spec.n, **{name: [_enc_poly(p) for p in getattr(spec, name)]
                                for name in ("alpha", "beta", "tau")}}
    return {"n": spec.n, "alpha": [_enc(v) for v in spec.alpha],
            "beta": [_enc(v) for v in spec.beta], "tau": [_enc(v) for v in spec.tau]}


def _candidate_report(spec, cand):
    out = {"s": _enc(cand.s), "m": cand.m}
    if cand.error is not None:
        out["error"] = cand.error
        out["is_solution"] = False
        return out
    verified = verify_candidate(spec, cand)
    out.update({
        "coeffs": [_enc(c) for c in cand.coeffs],
        "sufficient_residuals": [_enc(r) for r in cand.sufficient_residuals],
        "necessary_residual": _enc(cand.necessary_residual),
        "is_solution": cand.is_solution,
        "verified": verified,
    })
    if cand.note:
        out["note"] = cand.note
    return out


def _solve_report(spec, m_max, m=None):
    if m is not None:
        cands = []
        for s in indicial_roots(spec).roots:
            try:
                cands.append(candidate(spec, m, s))
            except DegenerateSystem as exc:
                cands.append(PolySolutionCandidate(s=s, m=m, coeffs=None, error=str(exc)))
    else:
        cands = find_polynomial_solutions(spec, m_max)
    rows = [_candidate_report(spec, c) for c in cands]
    sols = [r for r in rows if r["is_solution"]]
    return {"candidates": rows, "solutions": sols,
            "verdict": "polynomial solutions found" if sols else "no polynomial solution"}


def _classify(config):
    spec = config.spec
    case = spec.theorem_case() if config.parametric else theorem_case(spec)
    out = {"command": "classify", "theorem_case": case.name}
    if not config.parametric:
        out["origin"] = classify_origin(spec).name
    if not case.supported:
        out["explanation"] = ("the origin is an irregular singular point: alpha_0 = alpha_1 = 0 "
                              "and alpha_2 = 0 or beta_0 != 0")
        return out, EXIT_UNSUPPORTED
    if not config.parametric:
        try:
            out["indicial_roots"] = [_enc(r) for r in indicial_roots(spec).roots]
        except NoRealIndicialRoot as exc:
            out["indicial_roots"] = []
            out["note"] = str(exc)
    return out, EXIT_OK


def _m_range(config):
    if config.m is not None:
        return [config.m]
    return list(range((config.m_max if config.m_max is not None else DEFAULT_M_MAX) + 1))


def _root_report(root):
    if root.exact is not None:
        return {"exact": str(root.exact)}
    return {"interval": [str(root.lo), str(root.hi)], "approx": root.approx}


def _conditions_at(pspec, m, s):
    out = {"m": m, "s": _enc(s)}
    try:
        system = parametric_conditions(pspec, m, s)
    except DegenerateFamily as exc:
        out["error"] = str(exc)
        return out
    out["conditions"] = [{"label": lab, "poly": _enc_poly(p)} for lab, p in system.polys()]
    try:
        checks = check_roots(system)
    except AllValuesAdmissible as exc:
        out["note"] = str(exc)
        return out
    out["roots"] = [{"t": _root_report(rc.root), "vanishing": [lab for lab, ok in rc.holds if ok],
                     "common": rc.common} for rc in checks]
    common = []
    for rc in checks:
        if not rc.common:
            continue
        entry = {"t": _root_report(rc.root)}
        if rc.root.exact is not None:
            spec = pspec.instantiate(rc.root.exact)
            try:
                cand = candidate(spec, m, s)
                entry["solution"] = _candidate_report(spec, cand)
            except (DegenerateSystem, InvalidExponent) as exc:
                entry["error"] = str(exc)
        common.append(entry)
    out["common_roots"] = common
    return out


def _conditions(config):
    s = config.s if config.s is not None else Fraction(0)
    if config.parametric:
        rows = [_conditions_at(config.spec, m, s) for m in _m_range(config)]
        return {"command": config.command, "unknown": list(config.unknown), "results": rows}, EXIT_OK
    spec = config.spec
    rows = []
    for m in _m_range(config):
        row = {"m": m, "s": _enc(s), "necessary_residual": _enc(necessary_condition_residual(spec, m, s))}
        try:
            row.update(_candidate_report(spec, candidate(spec, m, s)))
        except DegenerateSystem as exc:
            row["error"] = str(exc)
        rows.append(row)
    return {"command": config.command, "results": rows}, EXIT_OK


def _solve(config):
    if config.parametric:
        raise JobError("solve needs concrete coefficients; use conditions or scan for unknowns")
    m_max = config.m_max if config.m_max is not None else DEFAULT_M_MAX
    out = {"command": "solve", "spec": _spec_report(config.spec)}
    try:
        out["roots"] = [_enc(r) for r in indicial_roots(config.spec).roots]
    except NoRealIndicialRoot as exc:
        out.update({"roots": [], "note": str(exc), "verdict": "no polynomial solution"})
        return out, EXIT_OK
    out.update(_solve_report(config.spec, m_max, config.m))
    return out, EXIT_OK


def _scan(config):
    if not config.parametric:
        out, code = _solve(config)
        return {**out, "command": "scan"}, code
    s = config.s if config.s is not None else Fraction(0)
    rows = []
    for m in _m_range(config):
        res = _conditions_at(config.spec, m, s)
        rows.append({"m": m, "common_roots": res.get("common_roots", []),
                     **({"error": res["error"]} if "error" in res else {}),
                     **({"note": res["note"]} if "note" in res else {})})
    return {"command": "scan", "unknown": list(config.unknown), "results": rows}, EXIT_OK


def _scheffe(config):
    if config.parametric:
        raise JobError("scheffe needs concrete coefficients")
    form = scheffe_from_spec(config.spec)
    out = {"command": "scheffe"}
    if form is None:
        out["scheffe"] = False
        return out, EXIT_OK
    out.update({"scheffe": True, "m": form.m_shift, "h": form.h,
                "q": [[_enc(c) for c in pair] for pair in form.q]})
    try:
        roots = indicial_roots_scheffe(form)
    except (NoRealIndicialRoot, ValueError) as exc:
        out["note"] = str(exc)
        return out, EXIT_OK
    series = []
    for lam in roots:
        rec = two_term_recurrence(form, lam)
        entry = {"lambda": _enc(lam), "N": _enc_poly(rec.N, "k"), "D": _enc_poly(rec.D, "k")}
        rep = hypergeometric_params(form, lam)
        entry["hypergeometric"] = {
            "order": list(rep.order),
            "upper": None if rep.upper_params is None else [_enc(a) for a in rep.upper_params],
            "upper_poly": _enc_poly(rep.upper_poly, "k"),
            "lower": [_enc(b) for b in rep.lower_params],
            "argument": f"{rep.argument_scale} * r^{rep.power_h}",
        }
        term = termination_degree(rec)
        if term is not None:
            entry["polynomial_degree"] = _enc(lam + term - rec.h)
        try:
            entry["series"] = [_enc(c) for c in series_coefficients(rec, 6 * form.h)]
        except PolysolveError as exc:
            entry["series_error"] = str(exc)
        series.append(entry)
    out["exponents"] = series
    return out, EXIT_OK


# -- demos --------------------------------------------------------------------

def _demo_simple(name, spec, config, default_m_max):
    m_max = config.m_max if config.m_max is not None else default_m_max
    out = {"command": "demo", "demo": name, "spec": _spec_report(spec),
           "roots": [_enc(r) for r in indicial_roots(spec).roots]}
    out.update(_solve_report(spec, m_max, config.m))
    return out


def _demo_invsqrt(config):
    l = Fraction(0)
    m = config.m if config.m is not None else 1
    p = fixtures.InvSqrtParams.on_nc_branch(l, m)
    spec = fixtures.build_invsqrt(p)
    nc = necessary_condition_residual(spec, m)
    delta = invsqrt_nonexistence(l, m)
    cand = candidate(spec, m)
    out = {"command": "demo", "demo": "invsqrt", "l": _enc(l), "m": m, "lambda": _enc(p.lam),
           "spec": _spec_report(spec),
           "necessary_condition": {"residual": _enc(nc), "satisfied": not nc},
           "tridiagonal_determinant": _enc(delta),
           "candidate": _candidate_report(spec, cand)}
    out["verdict"] = "polynomial solution" if cand.is_solution else "no polynomial solution"
    return out


def _demo_dirac(config):
    params = fixtures.DIRAC_COMMON_ROOT
    pspec = fixtures.build_dirac_parametric(**params)
    m = config.m if config.m is not None else 0
    res = _conditions_at(pspec, m, Fraction(0))
    # E = -M is an artefact of clearing the denominator E + M
    excluded = {"exact": str(-Fraction(params["M"]))}
    for key in ("roots", "common_roots"):
        if key in res:
            res[key] = [r for r in res[key] if r["t"] != excluded]
    return {"command": "demo", "demo": "dirac", "unknown": "E",
            "parameters": {k: _enc(v) for k, v in params.items()}, **res}


def _demo(config):
    name = config.demo
    if name == "heun":
        return _demo_simple(name, fixtures.heun_example_spec(), config, 3), EXIT_OK
    if name == "hermite":
        return _demo_simple(name, fixtures.hermite_spec(2), config, DEFAULT_M_MAX), EXIT_OK
    if name == "cauchy_euler":
        return _demo_simple(name, fixtures.cauchy_euler_spec(), config, DEFAULT_M_MAX), EXIT_OK
    if name == "invsqrt":
        return _demo_invsqrt(config), EXIT_OK
    return _demo_dirac(config), EXIT_OK


_DISPATCH = {"classify": _classify, "solve": _solve, "conditions": _conditions,
             "scan": _scan, "scheffe": _scheffe, "demo": _demo}


def run(config):
    """Execute a job; return ``(report_text, exit_code)``."""
    try:
        report, code = _DISPATCH[config.command](config)
    except UnsupportedEquation as exc:
        report, code = {"command": config.command, "error": str(exc)}, EXIT_UNSUPPORTED
    except (JobError, InvalidSpec, InvalidExponent, DomainError) as exc:
        report, code = {"command": config.command, "error": str(exc)}, EXIT_INPUT
    report = {"format_version": FORMAT_VERSION, **report}
    return render(report), code


def _build_parser():
    parser = argparse.ArgumentParser(prog="polysolve",
                                     description="Exact polynomial solutions of linear second-order ODEs.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--job", metavar="FILE", help="job document (default: standard input)")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--m", type=int, help="single polynomial degree")
    group.add_argument("--m-max", type=int, dest="m_max", help="largest degree to scan")
    parser.add_argument("--demo", choices=DEMOS, help="built-in fixture for the demo command")
    parser.add_argument("--out", metavar="FILE", help="report destination (default: standard output)")
    return parser


def _load_config(args, stdin):
    if args.command == "demo" and args.job is None:
        return JobConfig("demo", m=args.m, m_max=args.m_max, demo=args.demo)
    if args.job is not None:
        with open(args.job, "rb") as fh:
            data = fh.read()
    else:
        data = stdin.read()
    cfg = parse_job(data)
    if cfg.command != args.command:
        raise JobError(f"command: job says {cfg.command!r} but {args.command!r} was requested")
    m, m_max = cfg.m, cfg.m_max
    if args.m is not None:
        m, m_max = args.m, None
    elif args.m_max is not None:
        m, m_max = None, args.m_max
    return JobConfig(cfg.command, cfg.spec, m, m_max, cfg.s, cfg.unknown, args.demo or cfg.demo)


def main(argv=None, stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout
    args = _build_parser().parse_args(argv)
    for key in ("m", "m_max"):
        if getattr(args, key) is not None and getattr(args, key) < 0:
            print(f"polysolve: --{key.replace('_', '-')} must be >= 0", file=sys.stderr)
            return EXIT_INPUT
    try:
        config = _load_config(args, stdin)
    except (JobError, OSError) as exc:
        print(f"polysolve: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text, code = run(config)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code:
        report = json.loads(text)
        print(f"polysolve: {report.get('explanation') or report.get('error')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
