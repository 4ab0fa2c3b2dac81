"""Pipeline orchestration and deterministic text/JSON reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import analysis as an
from .checks import FAIL, Check
from .curvature import (
    compute_pack,
    connection_checks,
    fundamental_tensor_checks,
    lee_form_checks,
    riemann_checks,
)
from .errors import EvaluationError, StructuralError
from .lie import AcbStructure, LieAlgebra, Manifold, validate_lie_algebra, validate_structure
from .linalg import inertia
from .scalars import Scalar, as_fraction

SCHEMA = 1
SECTIONS = ("validation", "tensors", "classification", "fits", "theorems")


@dataclass
class Report:
    header: dict
    sections: dict = field(default_factory=dict)

    def checks(self, names=SECTIONS):
        theorems = self.sections.get("theorems", {}) if "theorems" in names else {}
        for group in theorems.values():
            for c in group["checks"]:
                yield c

    def failures(self, names=SECTIONS):
        out = [c for c in self.checks(names) if c["status"] == FAIL]
        if "validation" in names and "validation" in self.sections:
            if not self.sections["validation"]["ok"]:
                out.append({"name": "validation", "status": FAIL})
        return out

    def as_dict(self, names=SECTIONS):
        out = {"schema": SCHEMA, "manifold": self.header}
        for key in SECTIONS:
            if key in names and key in self.sections:
                out[key] = self.sections[key]
        return out

    def to_json(self, names=SECTIONS):
        return json.dumps(self.as_dict(names), indent=2) + "\n"

    def to_text(self, names=SECTIONS):
        return render_text(self.as_dict(names))


def _s(x):
    return str(x)


def _sparse(tensor):
    return {",".join(map(str, idx)): _s(v) for idx, v in tensor.nonzero()}


def _vector(values):
    return [_s(v) for v in values]


def _checks(checks):
    return [c.as_dict() for c in checks]


def _group(checks):
    if len(checks) == 1 and checks[0].status == "skip":
        return {"status": "skipped", "reason": checks[0].detail, "checks": []}
    return {"status": "run", "checks": _checks(checks)}


def _outcome(outcome, names):
    out = {"status": outcome.status}
    if outcome.status == "unique":
        out.update({k: _s(v) for k, v in zip(names, outcome.values)})
    elif outcome.status == "inconsistent":
        out["witness"] = list(outcome.witness)
        out["residual"] = _s(outcome.residual)
    else:
        out["free_directions"] = [
            {k: _s(v) for k, v in zip(names, vec)} for vec in outcome.null_space
        ]
    return out


def signature(m: Manifold, matrix=None):
    if matrix is None:
        matrix = m.g
    vals = [[matrix[i, j].to_fraction() for j in range(m.dim)] for i in range(m.dim)]
    return inertia(vals)


def _validation(m):
    lie = validate_lie_algebra(m.algebra)
    try:
        st = validate_structure(m)
        st_list = [str(v) for v in st]
        st_ok = st.ok
    except StructuralError as exc:
        st_list, st_ok = [str(exc)], False
    out = {
        "ok": lie.ok and st_ok,
        "lie_algebra": [str(v) for v in lie],
        "structure": st_list,
    }
    if not m.params:
        pos, neg, zero = signature(m)
        want = (m.n + 1, m.n, 0)
        out["signature"] = {"g": [pos, neg], "expected": [m.n + 1, m.n],
                            "ok": (pos, neg, zero) == want}
        out["ok"] = out["ok"] and out["signature"]["ok"]
    else:
        out["signature"] = {"note": "signature is only checked at numeric parameter points"}
    return out


def run_pipeline(m: Manifold) -> Report:
    """Compute every tensor, classification, fit and verifier for ``m``."""
    header = {"name": m.name, "dim": m.dim, "n": m.n, "params": list(m.params)}
    if m.assignment:
        header["assignment"] = {k: str(v) for k, v in m.assignment.items()}
    report = Report(header)
    report.sections["validation"] = _validation(m)
    if not report.sections["validation"]["ok"]:
        return report

    pack = compute_pack(m)
    div = pack.divergences
    report.sections["tensors"] = {
        "connection": _sparse(pack.connection.gamma),
        "riemann": _sparse(pack.riemann),
        "ricci": _sparse(pack.ricci),
        "scalar_curvature": _s(pack.tau),
        "nabla_xi": _sparse(pack.nabla_xi),
        "lie_xi_g": _sparse(pack.lie_xi_g),
        "F": _sparse(pack.F),
        "theta": _vector(pack.theta),
        "theta_star": _vector(pack.theta_star),
        "omega": _vector(pack.omega),
        "g_tilde": _sparse(pack.g_tilde),
        "nabla_ricci": _sparse(pack.nabla_ricci),
        "divergences": {
            "div_rho_xi": _s(div.div_rho_xi),
            "div_star_rho_xi": _s(div.div_star_rho_xi),
            "div_xi": _s(div.div_xi),
        },
    }

    cosym = an.is_cosymplectic(pack.F)
    sasaki, _ = an.is_sasaki_like(m, pack)
    torse = an.detect_torse_forming_xi(m, pack)
    tf = {"present": torse.present}
    if torse.present:
        tf["f"] = _s(torse.f)
        tf["parallel"] = torse.parallel
    else:
        tf["witness"] = list(torse.witness)
    f5 = an.check_f5_condition(m, pack, torse.f) if torse.present else None
    notes = []
    if torse.present and not torse.parallel:
        notes.append("torse-forming xi with f != 0: only the F5 defining condition "
                     "is evaluated, basic-class exclusivity is not decided")
    report.sections["classification"] = {
        "cosymplectic": cosym,
        "sasaki_like": sasaki,
        "torse_forming": tf,
        "f5_condition": f5,
        "notes": notes,
    }

    einstein = an.fit_einstein_like(m, pack.ricci, pack.g_tilde)
    soliton = an.fit_ricci_like_soliton(m, pack.lie_xi_g, pack.ricci, pack.g_tilde)
    fits = {
        "einstein_like": dict(_outcome(einstein.outcome, ("a", "b", "c")), label=einstein.label),
        "ricci_like_soliton": dict(_outcome(soliton.outcome, ("lambda", "mu", "nu")),
                                   label=soliton.label),
    }
    if soliton.ok:
        kind = soliton.kind()
        fits["ricci_like_soliton"]["kind"] = kind if kind else "undetermined (symbolic lambda)"
    if einstein.ok and soliton.ok:
        notes.append("F10/F11 membership is not decided: their component conditions "
                     "are not part of this engine")
    report.sections["fits"] = fits

    theorems = {
        "connection": _group(connection_checks(m, pack.connection)),
        "curvature_symmetries": _group(riemann_checks(pack.riemann)),
        "fundamental_tensor": _group(fundamental_tensor_checks(m, pack.F, pack.nabla_xi)),
        "lee_forms": _group(lee_form_checks(m, pack.theta, pack.theta_star, pack.omega)),
    }
    if sasaki:
        theorems["sasaki_identities"] = _group(an.sasaki_identity_checks(m, pack))
    else:
        theorems["sasaki_identities"] = _group([Check("sasaki_identities", "skip",
                                                      "precondition: manifold is not Sasaki-like")])
    theorems["einstein_like"] = _group(an.verify_einstein_like_properties(m, einstein, pack))
    theorems["sasaki_einstein_like"] = _group(an.verify_sasaki_einstein_like(m, einstein, pack))
    theorems["soliton_scalar_curvature"] = _group([an.scalar_curvature_trace_check(m, soliton)])
    theorems["soliton_geodesic"] = _group(an.verify_soliton_geodesic_props(m, soliton, einstein, pack))
    chk, cases = an.verify_theorem_sasaki(m, einstein, soliton, pack)
    theorems["theorem_sasaki"] = dict(_group(chk), cases=cases)
    chk, cases = an.verify_theorem_torse(m, einstein, soliton, torse, pack)
    theorems["theorem_torse"] = dict(_group(chk), cases=cases)
    report.sections["theorems"] = theorems
    return report


def substitute_manifold(m: Manifold, assignment) -> Manifold:
    """Instantiate every parameter; the result has an empty parameter set."""
    assignment = {k: as_fraction(v) for k, v in assignment.items()}
    unknown = sorted(set(assignment) - set(m.params))
    if unknown:
        raise EvaluationError(f"unknown parameters {unknown}; known: {list(m.params)}")
    missing = [p for p in m.params if p not in assignment]
    if missing:
        raise EvaluationError(f"no value given for parameters {missing}")

    def sub(x):
        return Scalar.const(x.substitute(assignment), ())

    def arr(a):
        out = np.empty(a.shape, dtype=object)
        for idx in np.ndindex(a.shape):
            out[idx] = sub(a[idx])
        return out

    alg = LieAlgebra(m.dim, (), arr(m.c))
    st = AcbStructure(arr(m.phi), tuple(sub(x) for x in m.xi),
                      tuple(sub(x) for x in m.eta), arr(m.g))
    merged = dict(m.assignment)
    merged.update(assignment)
    return Manifold(alg, st, m.name, merged)


def substitute_and_rerun(m: Manifold, assignment) -> Report:
    """Numeric report; raises StructuralError when g does not have signature (n+1, n)."""
    num = substitute_manifold(m, assignment)
    pos, neg, zero = signature(num)
    if (pos, neg, zero) != (num.n + 1, num.n, 0):
        raise StructuralError(
            f"metric has signature ({pos},{neg}) with {zero} null directions at "
            f"{num.assignment}; expected ({num.n + 1},{num.n})"
        )
    return run_pipeline(num)


# -- text rendering ---------------------------------------------------------------

def _render_value(lines, key, value, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            lines.append(f"{pad}{key}: (none)")
            return
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _render_value(lines, k, v, indent + 1)
    elif isinstance(value, list):
        if value and all(isinstance(v, dict) and "status" in v and "name" in v for v in value):
            lines.append(f"{pad}{key}:")
            for c in value:
                extra = f"  ({c['detail']})" if c.get("detail") else ""
                lines.append(f"{pad}  {c['status'].upper():4} {c['name']}{extra}")
        elif not value:
            lines.append(f"{pad}{key}: []")
        elif all(isinstance(v, str) and " " in v for v in value):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  - {v}" for v in value)
        else:
            lines.append(f"{pad}{key}: [" + ", ".join(str(v) for v in value) + "]")
    elif value is None:
        lines.append(f"{pad}{key}: n/a")
    elif isinstance(value, bool):
        lines.append(f"{pad}{key}: {'yes' if value else 'no'}")
    else:
        lines.append(f"{pad}{key}: {value}")


def render_text(doc: dict) -> str:
    h = doc["manifold"]
    params = ", ".join(h["params"]) or "none"
    lines = [f"schema {doc['schema']}",
             f"manifold {h['name'] or '(unnamed)'}: dim {h['dim']}, n {h['n']}, params {params}"]
    if "assignment" in h:
        lines.append("assignment: " + ", ".join(f"{k}={v}" for k, v in h["assignment"].items()))
    for key in SECTIONS:
        if key not in doc:
            continue
        lines.append("")
        lines.append(f"[{key}]")
        for k, v in doc[key].items():
            _render_value(lines, k, v, 1)
    return "\n".join(lines) + "\n"
