"""Scenario files: JSON objects tagged with the schema ``lfunc.scenario/1``.

Example::

    {
      "schema": "lfunc.scenario/1",
      "field": {"p": 5},
      "order": {"order": "ZG", "cycle_type": [2]},
      "variety": {"kind": "kummer_base"},
      "system": {"kind": "kummer", "m": 2, "num": "x^3 - x"},
      "precision": 7,
      "bounds": [[3, 1], [2, 0]],
      "twists": [0, -1]
    }

Varieties: ``affine``/``projective`` (``n``, optional ``equations``,
``exclude``, ``variables``), ``spec_extension`` (``d``), ``kummer_base``.
Systems: ``constant`` (``rank``), ``kummer`` (``m``, ``num``, ``den``),
``zerodim_cover`` (``e``), ``monodromy`` (``rank``, ``table``, ``default``).
The optional ``cohomology`` block is ``{"kind": "zero_dim"}`` (optionally with
``Phi``) or ``{"kind": "explicit", "ranks": ..., "differentials": ...,
"theta": ...}``; ``chi`` forces the Euler characteristic (negative controls).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffalg import AbelianGroupRing, IntegerRing, order_from_json
from .errors import LFuncError, ScenarioError
from .ffgeom import get_field
from .ffgeom.variety import Variety, affine_space, projective_space, spec_extension
from .sheaves import Constant, CoverPushforward, KummerCover, MonodromyAssignment, ZeroDimCover

SCHEMA = "lfunc.scenario/1"
DEFAULT_PRECISION = 8


@dataclass
class Scenario:
    raw: dict
    base: object
    spec: object
    variety: Variety
    system: object
    precision: int = DEFAULT_PRECISION
    twists: list = field(default_factory=lambda: [0])
    bounds: object = "auto"
    guard: int = 3
    cohomology: dict = None
    degree: int = None

    @property
    def q(self):
        return self.base.order


def _require(obj, key, where):
    if key not in obj:
        raise ScenarioError(f"{where}: missing key {key!r}")
    return obj[key]


def _entry(x):
    if isinstance(x, list):
        return tuple(Fraction(str(c)) for c in x)
    if isinstance(x, str):
        return Fraction(x)
    return x


def parse_matrix(m):
    return [[_entry(x) for x in row] for row in m]


def _variety(obj, base, system_obj):
    kind = obj.get("kind", "affine")
    if kind in ("affine", "projective"):
        n = int(_require(obj, "n", "variety"))
        eqs = obj.get("equations", [])
        excl = obj.get("exclude")
        if not eqs and excl is None:
            return (affine_space if kind == "affine" else projective_space)(base, n), None
        return Variety(base, kind, n, eqs, excl, obj.get("variables")), None
    if kind == "spec_extension":
        d = int(_require(obj, "d", "variety"))
        if d < 1:
            raise ScenarioError("variety: d must be positive")
        return spec_extension(base, d), d
    if kind == "kummer_base":
        if system_obj.get("kind") != "kummer":
            raise ScenarioError("variety 'kummer_base' needs a kummer system")
        return None, None
    raise ScenarioError(f"variety: unknown kind {kind!r}")


def _system(obj, spec, base, degree):
    kind = obj.get("kind", "constant")
    twist = 0
    if kind == "constant":
        return Constant(spec, int(obj.get("rank", 1)))
    if kind == "kummer":
        m = int(_require(obj, "m", "system"))
        cover = KummerCover(base, m, str(_require(obj, "num", "system")), str(obj.get("den", "1")), obj.get("variable", "x"))
        if spec != cover.group:
            raise ScenarioError(f"system: a degree-{m} Kummer cover needs order ZG with cycle_type [{m}]")
        return CoverPushforward(cover, twist)
    if kind == "zerodim_cover":
        e = int(_require(obj, "e", "system"))
        if degree is None:
            raise ScenarioError("system: zerodim_cover needs a spec_extension variety")
        cover = ZeroDimCover(degree, e)
        if spec != cover.group:
            raise ScenarioError(f"system: a Z/{e} cover needs order ZG with cycle_type [{e}]")
        return CoverPushforward(cover, twist)
    if kind == "monodromy":
        rank = int(obj.get("rank", 1))
        table = {k: parse_matrix(v) for k, v in obj.get("table", {}).items()}
        default = parse_matrix(obj["default"]) if "default" in obj else None
        return MonodromyAssignment(spec, rank, table, default, twist, bool(obj.get("strict", False)))
    raise ScenarioError(f"system: unknown kind {kind!r}")


def _bounds(b):
    if b in (None, "auto"):
        return "auto"
    if isinstance(b, list):
        out = []
        for x in b:
            if x == "auto":
                out.append("auto")
            elif isinstance(x, list) and len(x) == 2:
                out.append((int(x[0]), int(x[1])))
            else:
                raise ScenarioError(f"bounds: cannot read {x!r}")
        if len(out) == 2 and all(isinstance(v, int) for v in b):
            return (int(b[0]), int(b[1]))
        return out
    raise ScenarioError(f"bounds: cannot read {b!r}")


def _twists(ts):
    out = [int(t) for t in ts]
    if any(t > 0 for t in out):
        raise ScenarioError(f"twists must be <= 0, got {out}")
    return out


def scenario_from_dict(obj):
    if not isinstance(obj, dict):
        raise ScenarioError("a scenario must be a JSON object")
    schema = obj.get("schema")
    if schema != SCHEMA:
        raise ScenarioError(f"unsupported schema {schema!r}; expected {SCHEMA!r}")
    fobj = _require(obj, "field", "scenario")
    try:
        base = get_field(int(_require(fobj, "p", "field")), int(fobj.get("k", 1)))
        spec = order_from_json(obj.get("order", {"order": "Z"}))
        sys_obj = obj.get("system", {"kind": "constant"})
        variety, degree = _variety(_require(obj, "variety", "scenario"), base, sys_obj)
        system = _system(sys_obj, spec, base, degree)
        if variety is None:
            variety = system.cover.base_variety()
        if system.spec != spec:
            raise ScenarioError("the system's order does not match the order spec")
        precision = int(obj.get("precision", DEFAULT_PRECISION))
        if precision < 1:
            raise ScenarioError("precision must be positive")
        return Scenario(
            obj, base, spec, variety, system, precision,
            _twists(obj.get("twists", [0])), _bounds(obj.get("bounds", "auto")),
            int(obj.get("guard", 3)), obj.get("cohomology"), degree,
        )
    except ScenarioError:
        raise
    except (LFuncError, ValueError, TypeError, KeyError) as exc:
        raise ScenarioError(str(exc)) from None


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(exc.msg, exc.lineno, exc.colno) from None
    return scenario_from_dict(obj)


def load(path):
    with open(path) as fh:
        return loads(fh.read())


def zero_dim_phi(sc):
    """The Frobenius matrix of the stalk for Spec F_{q^d} scenarios."""
    sys = sc.system
    if isinstance(sys, Constant):
        if isinstance(sc.spec, IntegerRing):
            return [[int(i == j) for j in range(sys.rank)] for i in range(sys.rank)]
        one, zero = sc.spec.one(), sc.spec.zero()
        return [[one if i == j else zero for j in range(sys.rank)] for i in range(sys.rank)]
    if isinstance(sys, CoverPushforward) and isinstance(sys.cover, ZeroDimCover):
        assert isinstance(sc.spec, AbelianGroupRing)
        return [[sc.spec.group_element(sc.degree % sys.cover.e)]]
    raise ScenarioError("cannot derive the Frobenius of the stalk for this system")
