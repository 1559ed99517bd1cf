"""JSON file formats: Cayley tables, Rees specifications and decompositions.

Parsing is strict: unknown or duplicate keys, wrong kinds, booleans posing as
integers and ragged matrices all raise FormatError naming the field.  Writing
uses a fixed key order and one matrix row per line so output bytes are a
function of the value alone.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import Element, FiniteSemigroup
from .errors import SemigroupError
from .rees import ReesDecomposition, ReesMatrixSemigroup
from .structure import MaximalSubgroup, certify_group


class FormatError(SemigroupError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


# ---------------------------------------------------------------- writing

def _format(value, depth: int = 0) -> str:
    pad = "  " * (depth + 1)
    if isinstance(value, dict):
        items = [f"{pad}{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
        rows = [pad + json.dumps(r, separators=(", ", ": ")) for r in value]
        return "[\n" + ",\n".join(rows) + "\n" + "  " * depth + "]"
    return json.dumps(value, separators=(", ", ": "), ensure_ascii=False)


def dumps(obj: dict) -> str:
    return _format(obj) + "\n"


def write_json(path, obj: dict) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def semigroup_to_dict(S: FiniteSemigroup) -> dict:
    out = {"kind": "cayley", "order": S.order}
    if S.names is not None:
        out["names"] = list(S.names)
    out["table"] = S.table.tolist()
    return out


def rees_spec_to_dict(R: ReesMatrixSemigroup) -> dict:
    return {
        "kind": "rees",
        "group": semigroup_to_dict(R.group.table),
        "x_size": R.x_size,
        "y_size": R.y_size,
        "sigma": R.sigma.tolist(),
    }


def decomposition_to_dict(D: ReesDecomposition) -> dict:
    return {
        "kind": "decomposition",
        "e": D.e.index,
        "X_e": list(D.x_e),
        "Y_e": list(D.y_e),
        "carrier": list(D.subgroup.carrier),
        "group": semigroup_to_dict(D.subgroup.local_table),
        "sigma": D.sigma.tolist(),
        "forward_map": D.forward.tolist(),
    }


# ---------------------------------------------------------------- reading

def _reject_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise FormatError(k, "duplicate key")
        out[k] = v
    return out


def loads(text: str, where: str = "input") -> dict:
    try:
        obj = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(where, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise FormatError(where, "top level must be a JSON object")
    return obj


def read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(str(path), f"cannot read file: {exc}") from None
    return loads(text, str(path))


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _int(obj: dict, key: str, field: str, minimum: int | None = None) -> int:
    v = obj[key]
    if not _is_int(v):
        raise FormatError(field, f"expected an integer, got {json.dumps(v)}")
    if minimum is not None and v < minimum:
        raise FormatError(field, f"must be >= {minimum}, got {v}")
    return v


def _int_list(v, field: str) -> list[int]:
    if not isinstance(v, list):
        raise FormatError(field, "expected a list of integers")
    for i, x in enumerate(v):
        if not _is_int(x):
            raise FormatError(f"{field}[{i}]", f"expected an integer, got {json.dumps(x)}")
    return v


def _matrix(v, rows: int, cols: int, field: str) -> list[list[int]]:
    if not isinstance(v, list) or len(v) != rows:
        got = len(v) if isinstance(v, list) else type(v).__name__
        raise FormatError(field, f"expected {rows} rows, got {got}")
    for r, row in enumerate(v):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise FormatError(f"{field}[{r}]", f"expected {cols} entries, got {got}")
        for c, x in enumerate(row):
            if not _is_int(x):
                raise FormatError(f"{field}[{r}][{c}]", f"expected an integer, got {json.dumps(x)}")
    return v


def _check_keys(obj: dict, kind: str, required: tuple, optional: tuple, prefix: str) -> None:
    for k in obj:
        if k not in required and k not in optional:
            raise FormatError(prefix + k, "unknown field")
    for k in required:
        if k not in obj:
            raise FormatError(prefix + k, "missing required field")
    if obj["kind"] != kind:
        raise FormatError(prefix + "kind", f"expected {json.dumps(kind)}, got {json.dumps(obj['kind'])}")


def parse_semigroup(obj, prefix: str = "") -> FiniteSemigroup:
    """SemigroupFile -> unverified FiniteSemigroup; entries are range-checked here."""
    if not isinstance(obj, dict):
        raise FormatError(prefix.rstrip(".") or "input", "expected a JSON object")
    _check_keys(obj, "cayley", ("kind", "order", "table"), ("names",), prefix)
    n = _int(obj, "order", prefix + "order", minimum=1)
    table = _matrix(obj["table"], n, n, prefix + "table")
    for r, row in enumerate(table):
        for c, x in enumerate(row):
            if not 0 <= x < n:
                raise FormatError(f"{prefix}table[{r}][{c}]",
                                  f"entry {x} out of range [0, {n}) at row {r}, column {c}")
    names = obj.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
            raise FormatError(prefix + "names", f"expected a list of {n} strings")
    return FiniteSemigroup(table, names)


def parse_rees_spec(obj) -> ReesMatrixSemigroup:
    _check_keys(obj, "rees", ("kind", "group", "x_size", "y_size", "sigma"), (), "")
    group_s = parse_semigroup(obj["group"], "group.")
    try:
        group = certify_group(group_s)
    except SemigroupError as exc:
        raise FormatError("group", str(exc)) from None
    nx = _int(obj, "x_size", "x_size", minimum=1)
    ny = _int(obj, "y_size", "y_size", minimum=1)
    sigma = _matrix(obj["sigma"], ny, nx, "sigma")
    for r, row in enumerate(sigma):
        for c, x in enumerate(row):
            if not 0 <= x < group.order:
                raise FormatError(f"sigma[{r}][{c}]",
                                  f"entry {x} is not a group element index [0, {group.order})")
    return ReesMatrixSemigroup(group, nx, ny, np.array(sigma, dtype=np.int64))


def parse_decomposition(obj, source: FiniteSemigroup) -> ReesDecomposition:
    """Rebuild a decomposition of ``source`` from its file without certifying it.

    Only the shapes needed to run the checks are enforced here; whether the
    maps actually form an isomorphism is for verify_decomposition to decide.
    """
    keys = ("kind", "e", "X_e", "Y_e", "carrier", "group", "sigma", "forward_map")
    _check_keys(obj, "decomposition", keys, (), "")
    n = source.order
    e = _int(obj, "e", "e", minimum=0)
    if e >= n:
        raise FormatError("e", f"element {e} out of range [0, {n})")
    x_e = _int_list(obj["X_e"], "X_e")
    y_e = _int_list(obj["Y_e"], "Y_e")
    carrier = _int_list(obj["carrier"], "carrier")
    for field, values in (("X_e", x_e), ("Y_e", y_e), ("carrier", carrier)):
        if not values:
            raise FormatError(field, "must be non-empty")
        for i, v in enumerate(values):
            if not 0 <= v < n:
                raise FormatError(f"{field}[{i}]", f"element {v} out of range [0, {n})")
    group_s = parse_semigroup(obj["group"], "group.")
    try:
        group = certify_group(group_s)
    except SemigroupError as exc:
        raise FormatError("group", str(exc)) from None
    if len(carrier) != group.order:
        raise FormatError("carrier", f"expected {group.order} elements to match group.order")
    if len(set(carrier)) != len(carrier):
        raise FormatError("carrier", "elements must be distinct")
    if e not in carrier:
        raise FormatError("e", f"element {e} is not in carrier")
    sigma = np.array(_matrix(obj["sigma"], len(y_e), len(x_e), "sigma"), dtype=np.int64)
    if sigma.size and (sigma.min() < 0 or sigma.max() >= group.order):
        raise FormatError("sigma", f"entries must index the group [0, {group.order})")
    forward = np.array(_int_list(obj["forward_map"], "forward_map"), dtype=np.int64)

    backward = np.full(n, -1, dtype=np.int64)
    for i, s in enumerate(forward.tolist()):
        if 0 <= s < n:
            backward[s] = i
    inverse = tuple(carrier[int(group.inverse[i])] for i in range(group.order))
    subgroup = MaximalSubgroup(source, Element(source, e), tuple(carrier), inverse, group.table)
    return ReesDecomposition(source, Element(source, e), tuple(x_e), tuple(y_e),
                             subgroup, sigma, forward, backward)
