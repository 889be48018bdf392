"""Command-line front end: ``lfunc <command> <scenario.json> [options]``."""

import argparse
import os
import sys
import time
from fractions import Fraction

from . import report as R
from .coeffalg import CenterElement, IntegerRing
from .cohom import (
    PerfectComplexEndo,
    charfrac,
    complex_semisimple_at_zero,
    fiber_complex,
    verify_special_value_theorem,
    weil_etale_zero_dim,
)
from .errors import LFuncError, ResourceLimitError, ScenarioError
from .ffgeom.cache import PointCountCache
from .ffgeom.variety import DEFAULT_BUDGET
from .lseries import euler_product, reconstruct, special_value
from .scenario import load, parse_matrix, zero_dim_phi
from .sheaves import Constant, twist_evaluation_point

DEFAULT_BUDGET_DIM = 64
EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


def _options(args, sc):
    if args.precision is not None:
        sc.precision = args.precision
    if args.guard is not None:
        sc.guard = args.guard
    if args.twists is not None:
        try:
            tw = [int(t) for t in args.twists.split(",") if t.strip()]
        except ValueError:
            raise ScenarioError(f"cannot read twists {args.twists!r}") from None
        if any(t > 0 for t in tw):
            raise ScenarioError(f"twists must be <= 0, got {tw}")
        sc.twists = tw
    return sc


def _cache(args):
    path = args.cache or os.environ.get("LFUNC_CACHE")
    return PointCountCache(path) if path else None


def _inputs(sc, args):
    return {
        "scenario": sc.raw,
        "precision": sc.precision,
        "guard": sc.guard,
        "twists": sc.twists,
        "budget": {"points": args.budget_points, "dim": args.budget_dim},
    }


def _lside(sc, args):
    series = euler_product(
        sc.system, sc.variety, sc.spec, sc.precision, budget=args.budget_points, cache=_cache(args)
    )
    funcs, used = reconstruct(series, sc.bounds, sc.guard)
    return series, funcs, used


def _lside_report(out, series, funcs, used):
    out["series"] = [R.series(s) for s in series]
    out["functions"] = [R.rational_function(f) for f in funcs]
    out["bounds"] = [list(b) for b in used]


def _complex(sc, args):
    coh = sc.cohomology
    if coh is None:
        if sc.degree is None:
            raise ScenarioError("no cohomology block and the variety is not zero-dimensional")
        coh = {"kind": "zero_dim"}
    kind = coh.get("kind")
    if kind == "zero_dim":
        if sc.degree is None:
            raise ScenarioError("cohomology 'zero_dim' needs a spec_extension variety")
        phi = parse_matrix(coh["Phi"]) if "Phi" in coh else zero_dim_phi(sc)
        C = weil_etale_zero_dim(sc.degree, phi, 0, sc.q, sc.spec).complex
    elif kind == "explicit":
        try:
            C = PerfectComplexEndo(
                coh["ranks"],
                {k: parse_matrix(v) for k, v in coh.get("differentials", {}).items()},
                {k: parse_matrix(v) for k, v in coh.get("theta", {}).items()},
                sc.spec,
            )
        except KeyError as exc:
            raise ScenarioError(f"cohomology: missing key {exc}") from None
    else:
        raise ScenarioError(f"cohomology: unknown kind {kind!r}")
    biggest = max(r * sc.spec.dim for r in C.ranks.values())
    if biggest > args.budget_dim:
        raise ResourceLimitError(f"complex needs {biggest}x{biggest} matrices; --budget-dim is {args.budget_dim}")
    return C


def _chi_override(sc):
    coh = sc.cohomology or {}
    if "chi" not in coh:
        return None
    c = coh["chi"]
    if isinstance(c, list):
        return CenterElement(Fraction(str(x)) for x in c)
    return Fraction(str(c))


def cmd_zeta(sc, args):
    if not isinstance(sc.spec, IntegerRing) or not isinstance(sc.system, Constant):
        raise ScenarioError("zeta needs order Z and a constant system")
    return cmd_lfunction(sc, args, "zeta")


def cmd_lfunction(sc, args, name="lfunction"):
    out = {"command": name}
    series, funcs, used = _lside(sc, args)
    _lside_report(out, series, funcs, used)
    out["special_values"] = [
        R.special_values(special_value(funcs, twist_evaluation_point(n, sc.q)), n) for n in sc.twists
    ]
    return out, EXIT_OK


def cmd_specialvalue(sc, args):
    if not args.at:
        raise ScenarioError("specialvalue needs --at a/b")
    try:
        x = Fraction(args.at)
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"cannot read the point {args.at!r}") from None
    out = {"command": "specialvalue"}
    series, funcs, used = _lside(sc, args)
    _lside_report(out, series, funcs, used)
    out["special_values"] = [R.special_values(special_value(funcs, x))]
    return out, EXIT_OK


def cmd_charfrac(sc, args):
    C = _complex(sc, args)
    xis = charfrac(C)
    out = {"command": "charfrac", "complex": C.describe(), "charfrac": [R.rational_function(f) for f in xis]}
    out["special_values"] = [
        R.special_values(special_value(xis, twist_evaluation_point(n, sc.q)), n) for n in sc.twists
    ]
    return out, EXIT_OK


def cmd_verify(sc, args):
    out = {"command": "verify"}
    series, funcs, used = _lside(sc, args)
    _lside_report(out, series, funcs, used)
    C = _complex(sc, args)
    chi = _chi_override(sc)
    verdicts, ok = [], True
    for n in sc.twists:
        x = twist_evaluation_point(n, sc.q)
        lres = special_value(funcs, x)
        dec = complex_semisimple_at_zero(C, x)
        if not dec.ok:
            verdicts.append({"twist": n, "x": R.value(x), "passed": False, "reason": f"not semisimple at 0: {dec.failing}"})
            ok = False
            continue
        F = fiber_complex(C, x)
        v = verify_special_value_theorem(lres, F, dec, sc.spec, x, chi=chi)
        verdicts.append(R.verdict(v, n))
        ok = ok and v.passed
    out["verdicts"] = verdicts
    out["passed"] = ok
    return out, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "zeta": cmd_zeta,
    "lfunction": cmd_lfunction,
    "charfrac": cmd_charfrac,
    "specialvalue": cmd_specialvalue,
    "verify": cmd_verify,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="lfunc", description="Equivariant L-functions over finite fields.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("scenario", help="scenario file (JSON, schema lfunc.scenario/1)")
    ap.add_argument("--at", help="evaluation point a/b for specialvalue")
    ap.add_argument("--precision", type=int)
    ap.add_argument("--guard", type=int)
    ap.add_argument("--twists", help="comma-separated twists n <= 0")
    ap.add_argument("--cache", help="point-count cache file (default: $LFUNC_CACHE)")
    ap.add_argument("--budget-points", type=int, default=DEFAULT_BUDGET)
    ap.add_argument("--budget-dim", type=int, default=DEFAULT_BUDGET_DIM)
    ap.add_argument("--format", choices=["human", "machine"], default="human")
    return ap


def run(argv=None):
    """Returns ``(report, exit_status)``; errors become a report with ``error``."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        sc = _options(args, load(args.scenario))
        out, status = COMMANDS[args.command](sc, args)
        out["inputs"] = _inputs(sc, args)
    except (LFuncError, OSError) as exc:
        out = {"command": args.command, "error": f"{type(exc).__name__}: {exc}"}
        status = EXIT_ERROR
    out["schema"] = R.REPORT_SCHEMA
    out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return out, status, args


def main(argv=None):
    out, status, args = run(argv)
    if args.format == "machine":
        sys.stdout.write(R.dumps(out))
    elif "error" in out:
        sys.stderr.write(f"lfunc: {out['error']}\n")
    else:
        sys.stdout.write(R.render_human(out))
    return status


if __name__ == "__main__":
    sys.exit(main())
