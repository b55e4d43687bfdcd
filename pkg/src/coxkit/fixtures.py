"""JSON fixture input: diagrams, exact rational matrices, bialgebra and Hopf
structure constants, and witness bundles.  Exactness survives serialization:
rationals are strings, q-scalars are maps from rational q-exponents to
rational coefficients.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .diagrams import Diagram
from .hopf import HopfAlgebra, group_algebra, sweedler_algebra
from .liebialg import LieBialgebra
from .scalars import QScalar
from .sparse import SparseMatrix


class FixtureError(ValueError):
    pass


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise FixtureError(f"bad rational {s!r}") from exc
    raise FixtureError(f"rationals must be strings or integers, got {type(s).__name__}")


def parse_rational_matrix(rows) -> list[list[Fraction]]:
    if not isinstance(rows, list) or not rows:
        raise FixtureError("matrix must be a non-empty list of rows")
    out = [[parse_rational(x) for x in row] for row in rows]
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise FixtureError("ragged matrix")
    return out


def rational_matrix_to_json(m: list[list[Fraction]]):
    return [[str(x) for x in row] for row in m]


def parse_qscalar(obj, m: int) -> QScalar:
    """{"exponent": "coefficient"} with rational q-exponents on the 1/m lattice."""
    if isinstance(obj, (str, int)):
        return QScalar.from_rational(parse_rational(obj), m)
    if not isinstance(obj, dict):
        raise FixtureError("q-scalar must be a map exponent -> coefficient")
    out = QScalar.zero(m)
    for exp, coeff in sorted(obj.items()):
        out = out + QScalar.q_power(parse_rational(exp), m, parse_rational(coeff))
    return out


def qscalar_to_json(x: QScalar):
    return {str(e): str(c) for e, c in sorted(x.as_q_exponent_map().items())}


def load_fixture(payload: dict):
    if not isinstance(payload, dict) or "kind" not in payload:
        raise FixtureError("fixture must be an object with a 'kind' tag")
    kind = payload["kind"]
    if kind == "diagram":
        return parse_diagram(payload)
    if kind == "matrix":
        return parse_rational_matrix(payload.get("rows"))
    if kind == "bialgebra":
        return parse_bialgebra(payload)
    if kind == "hopf":
        return parse_hopf(payload)
    raise FixtureError(f"unknown fixture kind {kind!r}")


def load_fixture_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureError(f"cannot read fixture {path}: {exc}") from exc
    return load_fixture(payload)


def parse_diagram(payload: dict) -> Diagram:
    try:
        n = int(payload["vertices"])
        edges = [(int(i), int(j)) for i, j in payload.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"bad diagram fixture: {exc}") from exc
    return Diagram(n, edges)


def parse_bialgebra(payload: dict) -> LieBialgebra:
    try:
        dim = int(payload["dim"])
        bracket = {}
        for key, vec in payload.get("bracket", {}).items():
            i, j = (int(x) for x in key.split(","))
            bracket[i, j] = {int(k): parse_rational(v) for k, v in vec.items()}
        cobracket = {}
        for key, entry in payload.get("cobracket", {}).items():
            k = int(key)
            cobracket[k] = {
                tuple(int(x) for x in pair.split(",")): parse_rational(v)
                for pair, v in entry.items()
            }
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"bad bialgebra fixture: {exc}") from exc
    return LieBialgebra(dim, bracket, cobracket, payload.get("names"))


def parse_hopf(payload: dict) -> HopfAlgebra:
    try:
        dim = int(payload["dim"])
        mult = [[{} for _ in range(dim)] for _ in range(dim)]
        for key, vec in payload["mult"].items():
            i, j = (int(x) for x in key.split(","))
            mult[i][j] = {int(k): parse_rational(v) for k, v in vec.items()}
        comult = [dict() for _ in range(dim)]
        for key, entry in payload["comult"].items():
            k = int(key)
            comult[k] = {
                tuple(int(x) for x in pair.split(",")): parse_rational(v)
                for pair, v in entry.items()
            }
        unit = {int(k): parse_rational(v) for k, v in payload["unit"].items()}
        counit = [parse_rational(x) for x in payload["counit"]]
        antip = SparseMatrix.from_rows(parse_rational_matrix(payload["antipode"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"bad hopf fixture: {exc}") from exc
    return HopfAlgebra(dim, mult, comult, unit, counit, antip, payload.get("names"))


# -- named fixtures -------------------------------------------------------------

DIAGRAM_FIXTURES = {
    "a1": {"kind": "diagram", "vertices": 1, "edges": []},
    "a2": {"kind": "diagram", "vertices": 2, "edges": [[0, 1]]},
    "a3": {"kind": "diagram", "vertices": 3, "edges": [[0, 1], [1, 2]]},
    "a4": {"kind": "diagram", "vertices": 4, "edges": [[0, 1], [1, 2], [2, 3]]},
    "d4": {"kind": "diagram", "vertices": 4, "edges": [[0, 1], [1, 2], [1, 3]]},
    "a1xa1": {"kind": "diagram", "vertices": 2, "edges": []},
}

MATRIX_FIXTURES = {
    "cartan-a2": {"kind": "matrix", "rows": [["2", "-1"], ["-1", "2"]]},
    "cartan-b2": {"kind": "matrix", "rows": [["2", "-1"], ["-2", "2"]]},
    "cartan-c2": {"kind": "matrix", "rows": [["2", "-2"], ["-1", "2"]]},
    "cartan-g2": {"kind": "matrix", "rows": [["2", "-1"], ["-3", "2"]]},
    "zero-3": {"kind": "matrix", "rows": [["0"] * 3] * 3},
    "counterexample-1": {
        "kind": "matrix",
        "rows": [["2", "-1", "0"], ["-1", "0", "-1"], ["0", "-1", "2"]],
    },
    "counterexample-2": {
        "kind": "matrix",
        "rows": [
            ["2", "-1", "0", "0"],
            ["-1", "2", "-2", "0"],
            ["0", "-2", "2", "-1"],
            ["0", "0", "-1", "2"],
        ],
    },
    "counterexample-3": {
        "kind": "matrix",
        "rows": [
            ["2", "-2", "0", "0"],
            ["-2", "2", "-1", "0"],
            ["0", "-1", "2", "-1"],
            ["0", "0", "-1", "2"],
        ],
    },
}

# finite and affine generalized Cartan matrices of size at most 4
GCM_CATALOG_FINITE = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "B4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "C4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "G2": [[2, -1], [-3, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
}

GCM_CATALOG_AFFINE = {
    "A1~": [[2, -2], [-2, 2]],
    "A2~": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "A3~": [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]],
    "C2~": [[2, -1, 0], [-2, 2, -2], [0, -1, 2]],
    "G2~": [[2, -1, 0], [-1, 2, -1], [0, -3, 2]],
    "B3~": [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -2, 2]],
    "C3~": [[2, -1, 0, 0], [-2, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]],
    "A2(2)": [[2, -4], [-1, 2]],
    "A4(2)": [[2, -1, 0], [-2, 2, -1], [0, -2, 2]],
    "D3(2)": [[2, -2, 0], [-1, 2, -1], [0, -2, 2]],
    "D4(3)": [[2, -1, 0], [-1, 2, -3], [0, -1, 2]],
}

BIALGEBRA_FIXTURES = {
    "sl2-borel": {
        "kind": "bialgebra",
        "dim": 2,
        "names": ["h", "e"],
        "bracket": {"0,1": {"1": "2"}, "1,0": {"1": "-2"}},
        "cobracket": {"1": {"0,1": "1", "1,0": "-1"}},
    },
    "abelian-2": {"kind": "bialgebra", "dim": 2, "bracket": {}, "cobracket": {}},
}


def named_fixture(name: str):
    for table in (DIAGRAM_FIXTURES, MATRIX_FIXTURES, BIALGEBRA_FIXTURES):
        if name in table:
            return load_fixture(table[name])
    if name == "hopf-z2":
        return group_algebra(2)
    if name == "hopf-sweedler4":
        return sweedler_algebra()
    raise FixtureError(f"unknown named fixture {name!r}")


def fixture_names() -> list[str]:
    names = (
        list(DIAGRAM_FIXTURES)
        + list(MATRIX_FIXTURES)
        + list(BIALGEBRA_FIXTURES)
        + ["hopf-z2", "hopf-sweedler4"]
    )
    return sorted(names)
