"""Reports: a JSON-shaped machine object plus a human-readable rendering."""

import json
from fractions import Fraction

from .exactalg import poly as P
from .exactalg.numberfield import NFElement

REPORT_SCHEMA = "lfunc.report/1"


def value(x):
    """Exact values as JSON: rationals as strings, field elements with their modulus."""
    if isinstance(x, NFElement):
        if x.field.degree == 1:
            return str(x.coeffs[0])
        return {
            "coeffs": [str(Fraction(c)) for c in x.coeffs],
            "modulus": [str(Fraction(c)) for c in x.field.defining_polynomial],
        }
    if isinstance(x, bool) or x is None:
        return x
    return str(Fraction(x))


def polynomial(p):
    return [value(c) for c in p]


def rational_function(f):
    return {
        "numerator": polynomial(f.numerator),
        "denominator": polynomial(f.denominator),
        "text": f"({P.to_string(f.numerator)}) / ({P.to_string(f.denominator)})",
    }


def series(s):
    return {"precision": s.precision, "coefficients": polynomial(list(s.coefficients))}


def special_values(report, twist=None):
    out = {
        "x": value(report.x),
        "orders": list(report.orders),
        "values": [value(v) for v in report.values],
    }
    if twist is not None:
        out["twist"] = twist
    return out


def verdict(v, twist=None):
    out = {
        "x": value(v.x),
        "passed": v.passed,
        "order_ok": v.order_ok,
        "orders": list(v.orders),
        "expected_orders": [value(o) for o in v.expected_orders],
        "value_ok": v.value_ok,
        "product": [value(c) for c in v.product],
        "identity_ok": v.identity_ok,
        "xi_star": [value(c) for c in v.xi_star],
        "predicted_xi_star": [value(c) for c in v.predicted_xi_star],
        "charfrac_matches": v.charfrac_matches,
    }
    if v.zlevel_ok is not None:
        out["zlevel_ok"] = v.zlevel_ok
        out["zlevel_product"] = value(v.zlevel_product)
    if v.caveat:
        out["caveat"] = v.caveat
    if twist is not None:
        out["twist"] = twist
    return out


def dumps(report):
    """Deterministic serialization (sorted keys, fixed indentation)."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def without_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def _fmt(x):
    if isinstance(x, dict):
        return f"[{', '.join(x['coeffs'])}] mod [{', '.join(x['modulus'])}]"
    return str(x)


def render_human(report):
    lines = [f"lfunc {report['command']}"]
    if "functions" in report:
        for i, f in enumerate(report["functions"]):
            lines.append(f"  component {i}: {f['text']}")
    if "charfrac" in report:
        for i, f in enumerate(report["charfrac"]):
            lines.append(f"  xi component {i}: {f['text']}")
    for sv in report.get("special_values", []):
        tw = f"n = {sv['twist']}, " if "twist" in sv else ""
        vals = ", ".join(_fmt(v) for v in sv["values"])
        lines.append(f"  {tw}t = {sv['x']}: orders {sv['orders']}, values ({vals})")
    for v in report.get("verdicts", []):
        status = "PASS" if v["passed"] else "FAIL"
        detail = "" if v["passed"] else f" (order {v['order_ok']}, value {v['value_ok']}, identity {v['identity_ok']})"
        reason = f" {v['reason']}" if "reason" in v else ""
        lines.append(f"  verify n = {v.get('twist')}: {status}{detail}{reason}")
        if v.get("caveat"):
            lines.append(f"    note: {v['caveat']}")
    if "timing" in report:
        lines.append(f"  time: {report['timing']['seconds']:.3f} s")
    return "\n".join(lines) + "\n"
