"""JSON input/output for coalgebras and Hopf algebras.

Format::

    {"name": ..., "field": {"cyclotomic_order": m}, "dim": n,
     "basis_names": [...], "comul": [[i, j, k, coeff], ...],
     "counit": [coeff, ...],
     "mul": [[i, j, k, coeff], ...], "unit": [coeff, ...],
     "antipode": [[i, j, coeff], ...]}

A coeff is a list of phi(m) rational strings in the power basis of zeta_m.
``mul``, ``unit`` and ``antipode`` are optional as a group; with them the
file describes a Hopf algebra.  ``antipode`` entry [i, j, c] means that e_j
occurs in S(e_i) with coefficient c.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coalgebra import Coalgebra
from .errors import MalformedInputError
from .field import DEFAULT_MAX_CYCLOTOMIC, FieldSpec, elem_from_json, elem_to_json
from .hopf import HopfAlgebra

HOPF_KEYS = ("mul", "unit", "antipode")


def _index(value, n: int, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < n:
        raise MalformedInputError(f"{what} index {value!r} out of range 0..{n - 1}")
    return value


def from_dict(data: dict, max_cyclotomic: int = DEFAULT_MAX_CYCLOTOMIC) -> Coalgebra:
    try:
        m = data["field"]["cyclotomic_order"]
        if not isinstance(m, int) or m < 1:
            raise MalformedInputError(f"cyclotomic_order must be a positive integer, got {m!r}")
        field = FieldSpec(m, max_cyclotomic)
        n = data["dim"]
        names = data.get("basis_names") or [f"e{i}" for i in range(n)]
        if len(names) != n:
            raise MalformedInputError("basis_names length differs from dim")

        def coeff(c):
            try:
                return elem_from_json(field, c)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise MalformedInputError(f"bad coefficient {c!r}: {exc}") from exc

        comul = []
        for entry in data["comul"]:
            i, j, k, c = entry
            comul.append((_index(i, n, "comul"), _index(j, n, "comul"), _index(k, n, "comul"), coeff(c)))
        counit = [coeff(c) for c in data["counit"]]
        if len(counit) != n:
            raise MalformedInputError("counit length differs from dim")
        name = data.get("name", "unnamed")
        present = [k for k in HOPF_KEYS if k in data]
        if not present:
            return Coalgebra.from_quadruples(name, field, names, comul, counit)
        if len(present) != len(HOPF_KEYS):
            raise MalformedInputError(f"Hopf structure needs all of {HOPF_KEYS}, got {present}")
        mul = []
        for entry in data["mul"]:
            i, j, k, c = entry
            mul.append((_index(i, n, "mul"), _index(j, n, "mul"), _index(k, n, "mul"), coeff(c)))
        unit = [coeff(c) for c in data["unit"]]
        if len(unit) != n:
            raise MalformedInputError("unit length differs from dim")
        antipode = [dict() for _ in range(n)]
        for entry in data["antipode"]:
            i, j, c = entry
            i, j = _index(i, n, "antipode"), _index(j, n, "antipode")
            antipode[i][j] = antipode[i].get(j, field.zero) + coeff(c)
        return make_hopf(name, field, names, comul, counit, mul, unit,
                         [sorted(a.items()) for a in antipode])
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"malformed input: {exc!r}") from exc


def make_hopf(name, field, names, comul_quads, counit, mul, unit, antipode) -> HopfAlgebra:
    n = len(names)
    acc = [dict() for _ in range(n)]
    for i, j, k, c in comul_quads:
        acc[i][(j, k)] = acc[i].get((j, k), field.zero) + c
    comul = [tuple((j, k, c) for (j, k), c in sorted(d.items()) if c) for d in acc]
    return HopfAlgebra(name, field, names, comul, counit, mul=mul, unit=unit, antipode=antipode)


def load(path: str | Path, max_cyclotomic: int = DEFAULT_MAX_CYCLOTOMIC) -> Coalgebra:
    try:
        text = Path(path).read_text()
        data = json.loads(text)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedInputError("top-level JSON value must be an object")
    return from_dict(data, max_cyclotomic)


def to_dict(c: Coalgebra) -> dict:
    data = {
        "name": c.name,
        "field": {"cyclotomic_order": c.field.cyclotomic_order},
        "dim": c.dim,
        "basis_names": list(c.basis_names),
        "comul": [[i, j, k, elem_to_json(x)] for i, j, k, x in sorted(c.quadruples(), key=lambda q: q[:3])],
        "counit": [elem_to_json(x) for x in c.counit],
    }
    if isinstance(c, HopfAlgebra):
        data["mul"] = [[i, j, k, elem_to_json(x)] for i, j, k, x in c.mul_quadruples()]
        data["unit"] = [elem_to_json(x) for x in c.unit]
        data["antipode"] = [[i, j, elem_to_json(x)] for i, terms in enumerate(c.antipode)
                            for j, x in terms]
    return data


def dumps(c: Coalgebra) -> str:
    return canonical_json(to_dict(c))


def dump(c: Coalgebra, path: str | Path) -> None:
    Path(path).write_text(dumps(c))


def canonical_json(data) -> str:
    """Sorted keys, one list element per line at the top two levels, compact below."""

    def compact(v):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))

    def render(v, depth):
        pad = "  " * depth
        inner = "  " * (depth + 1)
        if isinstance(v, dict) and depth < 2:
            if not v:
                return "{}"
            items = [f'{inner}{json.dumps(k)}: {render(v[k], depth + 1)}' for k in sorted(v)]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(v, list) and depth < 2 and v and isinstance(v[0], (list, dict)):
            items = [inner + compact(x) for x in v]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        return compact(v)

    return render(data, 0) + "\n"
