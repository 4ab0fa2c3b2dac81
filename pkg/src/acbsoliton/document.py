"""JSON manifold documents.

A document looks like::

    {
      "name": "f5dim3",
      "dim": 3,
      "params": ["p"],
      "brackets": [{"i": 0, "j": 1, "coefficients": {"1": "p"}},
                   {"i": 0, "j": 2, "coefficients": {"2": "p"}}],
      "metric": [["1", "0", "0"], ["1", "0"], ["-1"]],
      "phi": [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]],
      "xi": ["1", "0", "0"]
    }

``metric`` is either the full matrix or its upper triangle (row ``i`` holds
columns ``i..dim-1``). ``phi[i][j]`` is the ``e_i`` component of
``phi(e_j)``. ``eta`` is optional and defaults to ``g(., xi)``. Entries are
integers or strings in the polynomial expression grammar; omitted brackets
are zero and ``[e_j, e_i]`` is filled in by antisymmetry when only
``[e_i, e_j]`` is given.
"""

from __future__ import annotations

import json
import re

from .errors import DocumentError, StructuralError
from .lie import Manifold, build_manifold, validate_lie_algebra, validate_structure
from .scalars import ExpressionError, Scalar, parse_expression

__all__ = ["load_document", "parse_manifold", "serialize_manifold", "dump_document"]

_NAME = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


def _expr(value, params, where):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"expected an integer or expression string, got {value!r}", where)
    try:
        return parse_expression(value if isinstance(value, str) else value, params)
    except ExpressionError as exc:
        raise DocumentError(str(exc), where) from None


def _index(value, dim, where):
    if isinstance(value, str) and value.isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < dim:
        raise DocumentError(f"index {value!r} outside [0, {dim})", where)
    return value


def load_document(data) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be a JSON object")
    return doc


def _matrix(rows, dim, params, where, allow_upper=False):
    if not isinstance(rows, list) or len(rows) != dim:
        raise DocumentError(f"expected {dim} rows", where)
    upper = allow_upper and all(isinstance(r, list) and len(r) == dim - i for i, r in enumerate(rows))
    if upper and dim > 1:
        out = [[None] * dim for _ in range(dim)]
        for i, row in enumerate(rows):
            for off, v in enumerate(row):
                j = i + off
                out[i][j] = out[j][i] = _expr(v, params, f"{where}[{i}][{off}]")
        return out
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"row must have {dim} entries", f"{where}[{i}]")
        out.append([_expr(v, params, f"{where}[{i}][{j}]") for j, v in enumerate(row)])
    return out


def parse_manifold(data, validate=True) -> Manifold:
    """Build a Manifold from a JSON document (str, bytes or already-loaded dict).

    With ``validate`` the Lie algebra and structure checks run and any
    violation raises DocumentError listing the offending components.
    """
    doc = data if isinstance(data, dict) else load_document(data)
    for key in ("dim", "metric", "phi", "xi"):
        if key not in doc:
            raise DocumentError("missing required field", key)
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1 or dim % 2 == 0:
        raise DocumentError(f"must be an odd positive integer, got {dim!r}", "dim")
    params = doc.get("params", [])
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise DocumentError("must be a list of names", "params")
    for p in params:
        if not _NAME.fullmatch(p):
            raise DocumentError(f"invalid parameter name {p!r}", "params")
    if len(set(params)) != len(params):
        raise DocumentError("duplicate parameter names", "params")
    params = tuple(params)

    brackets = {}
    raw = doc.get("brackets", [])
    if not isinstance(raw, list):
        raise DocumentError("must be a list", "brackets")
    for n, entry in enumerate(raw):
        where = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise DocumentError("must be an object", where)
        i = _index(entry.get("i"), dim, f"{where}.i")
        j = _index(entry.get("j"), dim, f"{where}.j")
        coeffs = entry.get("coefficients", {})
        if not isinstance(coeffs, dict):
            raise DocumentError("must map target index to expression", f"{where}.coefficients")
        if (i, j) in brackets:
            raise DocumentError(f"bracket [{i},{j}] given twice", where)
        brackets[(i, j)] = {
            _index(k, dim, f"{where}.coefficients.{k}"): _expr(v, params, f"{where}.coefficients.{k}")
            for k, v in coeffs.items()
        }

    metric = _matrix(doc["metric"], dim, params, "metric", allow_upper=True)
    phi = _matrix(doc["phi"], dim, params, "phi")
    xi = doc["xi"]
    if not isinstance(xi, list) or len(xi) != dim:
        raise DocumentError(f"expected {dim} entries", "xi")
    xi = [_expr(v, params, f"xi[{k}]") for k, v in enumerate(xi)]
    eta = doc.get("eta")
    if eta is not None:
        if not isinstance(eta, list) or len(eta) != dim:
            raise DocumentError(f"expected {dim} entries", "eta")
        eta = [_expr(v, params, f"eta[{k}]") for k, v in enumerate(eta)]
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("must be a string", "name")
    try:
        m = build_manifold(dim, params, brackets, metric, phi, xi, eta, name=name)
    except StructuralError as exc:
        raise DocumentError(str(exc)) from None
    if validate:
        ensure_valid(m)
    return m


def ensure_valid(m: Manifold):
    lie = validate_lie_algebra(m.algebra)
    if not lie.ok:
        raise DocumentError("Lie algebra invalid: " + "; ".join(str(v) for v in lie), "brackets")
    try:
        st = validate_structure(m)
    except StructuralError as exc:
        raise DocumentError(str(exc), "metric") from None
    if not st.ok:
        raise DocumentError("structure invalid: " + "; ".join(str(v) for v in st))


def _s(x: Scalar):
    return str(x)


def serialize_manifold(m: Manifold) -> dict:
    d = m.dim
    brackets = []
    for i in range(d):
        for j in range(i + 1, d):
            coeffs = {str(k): _s(m.c[i, j, k]) for k in range(d) if not m.c[i, j, k].is_zero()}
            if coeffs:
                brackets.append({"i": i, "j": j, "coefficients": coeffs})
    return {
        "name": m.name,
        "dim": d,
        "params": list(m.params),
        "brackets": brackets,
        "metric": [[_s(m.g[i, j]) for j in range(d)] for i in range(d)],
        "phi": [[_s(m.phi[i, j]) for j in range(d)] for i in range(d)],
        "xi": [_s(x) for x in m.xi],
        "eta": [_s(x) for x in m.eta],
    }


def dump_document(m: Manifold) -> str:
    return json.dumps(serialize_manifold(m), indent=2) + "\n"
