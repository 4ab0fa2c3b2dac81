"""Lie algebras of left-invariant fields and almost contact B-metric structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .errors import StructuralError
from .scalars import Scalar, parse_expression
from .tensor import Tensor


@dataclass(frozen=True)
class Violation:
    relation: str
    index: tuple
    detail: str = ""

    def __str__(self):
        idx = ",".join(str(i) for i in self.index)
        return f"{self.relation}[{idx}]" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def relations(self):
        return sorted({v.relation for v in self.violations})

    def __iter__(self):
        return iter(self.violations)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``c[i, j, k]``: coefficient of ``e_k`` in ``[e_i, e_j]``."""

    dim: int
    params: tuple
    c: np.ndarray

    def bracket(self, u, v):
        d = self.dim
        out = [Scalar.zero(self.params)] * d
        for i in range(d):
            if u[i].is_zero():
                continue
            for j in range(d):
                if v[j].is_zero():
                    continue
                w = u[i] * v[j]
                for k in range(d):
                    if not self.c[i, j, k].is_zero():
                        out[k] = out[k] + w * self.c[i, j, k]
        return out


@dataclass(frozen=True, eq=False)
class AcbStructure:
    """``phi[i, j]`` is the ``e_i`` component of ``phi(e_j)``; ``g`` is symmetric."""

    phi: np.ndarray
    xi: tuple
    eta: tuple
    g: np.ndarray


@dataclass(frozen=True, eq=False)
class Manifold:
    algebra: LieAlgebra
    structure: AcbStructure
    name: str = ""
    assignment: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def n(self):
        return (self.dim - 1) // 2

    @property
    def params(self):
        return self.algebra.params

    @property
    def g(self):
        return self.structure.g

    @property
    def phi(self):
        return self.structure.phi

    @property
    def xi(self):
        return self.structure.xi

    @property
    def eta(self):
        return self.structure.eta

    @property
    def c(self):
        return self.algebra.c

    @cached_property
    def g_inv(self):
        rows = linalg.inverse([[self.g[i, j] for j in range(self.dim)] for i in range(self.dim)])
        return np.array(rows, dtype=object)

    def zero(self):
        return Scalar.zero(self.params)

    def one(self):
        return Scalar.one(self.params)

    def basis(self, i):
        z, o = self.zero(), self.one()
        return [o if k == i else z for k in range(self.dim)]

    def apply_phi(self, v):
        d = self.dim
        return [sum((self.phi[i, j] * v[j] for j in range(d) if not v[j].is_zero()), self.zero())
                for i in range(d)]

    def metric(self, u, v):
        total = self.zero()
        for i in range(self.dim):
            if u[i].is_zero():
                continue
            for j in range(self.dim):
                if v[j].is_zero() or self.g[i, j].is_zero():
                    continue
                total = total + u[i] * self.g[i, j] * v[j]
        return total

    def eta_of(self, v):
        return sum((self.eta[i] * v[i] for i in range(self.dim)), self.zero())

    def horizontal_basis(self):
        """Projections ``-phi^2 e_i`` onto ker(eta) that are nonzero."""
        out = []
        for i in range(self.dim):
            v = [-x for x in self.apply_phi(self.apply_phi(self.basis(i)))]
            if any(not x.is_zero() for x in v):
                out.append((i, v))
        return out

    def g_tensor(self):
        return Tensor(self.g, (0, 2))


def _to_scalar(value, params):
    if isinstance(value, Scalar):
        if value.params != tuple(params):
            raise StructuralError(f"parameter-set mismatch for {value}")
        return value
    return parse_expression(value if isinstance(value, str) else value, params)


def build_manifold(dim, params, brackets, metric, phi, xi, eta=None, name=""):
    """Assemble a Manifold from plain data.

    ``brackets`` maps ``(i, j)`` to ``{k: coefficient}``; missing reversed
    pairs are filled by antisymmetry. ``phi`` is given as a matrix with
    ``phi[i][j]`` the ``e_i`` component of ``phi(e_j)``. Entries may be
    Scalars, ints, Fractions or expression strings. ``eta`` defaults to
    ``g(., xi)``.
    """
    params = tuple(params)
    if dim < 1 or dim % 2 == 0:
        raise StructuralError(f"dimension must be odd and positive, got {dim}")
    zero = Scalar.zero(params)
    c = np.empty((dim, dim, dim), dtype=object)
    c[...] = zero
    given = set()
    for (i, j), coeffs in brackets.items():
        for k, v in coeffs.items():
            c[i, j, k] = _to_scalar(v, params)
        given.add((i, j))
    for (i, j) in given:
        if (j, i) not in given and i != j:
            for k in range(dim):
                c[j, i, k] = -c[i, j, k]
    g = np.empty((dim, dim), dtype=object)
    ph = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            g[i, j] = _to_scalar(metric[i][j], params)
            ph[i, j] = _to_scalar(phi[i][j], params)
    xi_v = tuple(_to_scalar(x, params) for x in xi)
    if eta is None:
        eta_v = tuple(sum((g[i, j] * xi_v[j] for j in range(dim)), zero) for i in range(dim))
    else:
        eta_v = tuple(_to_scalar(x, params) for x in eta)
    for arr, label in ((xi_v, "xi"), (eta_v, "eta")):
        if len(arr) != dim:
            raise StructuralError(f"{label} has length {len(arr)}, expected {dim}")
    return Manifold(LieAlgebra(dim, params, c), AcbStructure(ph, xi_v, eta_v, g), name)


def validate_lie_algebra(alg: LieAlgebra) -> ValidationReport:
    """Antisymmetry and componentwise Jacobi identity of the structure constants."""
    d = alg.dim
    c = alg.c
    if c.shape != (d, d, d):
        raise StructuralError(f"structure constants have shape {c.shape}, expected {(d, d, d)}")
    out = []
    for i in range(d):
        for j in range(i, d):
            for k in range(d):
                if c[i, j, k] != -c[j, i, k]:
                    out.append(Violation("antisymmetry", (i, j, k), f"c={c[i, j, k]}"))
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                for l in range(d):
                    s = Scalar.zero(alg.params)
                    for a, b, x in ((j, k, i), (k, i, j), (i, j, k)):
                        # [e_x, [e_a, e_b]] component l
                        for m in range(d):
                            if not c[a, b, m].is_zero() and not c[x, m, l].is_zero():
                                s = s + c[a, b, m] * c[x, m, l]
                    if not s.is_zero():
                        out.append(Violation("jacobi", (i, j, k, l), f"cyclic sum={s}"))
    return ValidationReport(tuple(out))


def validate_structure(m: Manifold) -> ValidationReport:
    """The five defining relations, symmetry of g and eta = g(., xi)."""
    d = m.dim
    st = m.structure
    if st.phi.shape != (d, d) or st.g.shape != (d, d):
        raise StructuralError("phi and g must be square of the algebra's dimension")
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            if st.g[i, j] != st.g[j, i]:
                out.append(Violation("g_symmetric", (i, j)))
    if linalg.determinant([[st.g[i, j] for j in range(d)] for i in range(d)]).is_zero():
        raise StructuralError("metric g is singular over the Scalar field")
    phi_xi = m.apply_phi(list(st.xi))
    for k in range(d):
        if not phi_xi[k].is_zero():
            out.append(Violation("phi_xi", (k,), f"(phi xi)^{k}={phi_xi[k]}"))
    for j in range(d):
        col = m.apply_phi(m.apply_phi(m.basis(j)))
        for i in range(d):
            want = st.xi[i] * st.eta[j] - (1 if i == j else 0)
            if col[i] != want:
                out.append(Violation("phi_squared", (i, j), f"got {col[i]}, want {want}"))
    for j in range(d):
        v = m.eta_of(m.apply_phi(m.basis(j)))
        if not v.is_zero():
            out.append(Violation("eta_phi", (j,), f"eta(phi e_{j})={v}"))
    ex = m.eta_of(list(st.xi))
    if ex != 1:
        out.append(Violation("eta_xi", (), f"eta(xi)={ex}"))
    phis = [m.apply_phi(m.basis(i)) for i in range(d)]
    for i in range(d):
        for j in range(i, d):
            lhs = m.metric(phis[i], phis[j])
            rhs = -st.g[i, j] + st.eta[i] * st.eta[j]
            if lhs != rhs:
                out.append(Violation("b_metric", (i, j), f"g(phi e_i, phi e_j)={lhs}, want {rhs}"))
    for i in range(d):
        gx = m.metric(m.basis(i), list(st.xi))
        if gx != st.eta[i]:
            out.append(Violation("eta_dual", (i,), f"g(e_{i}, xi)={gx}, eta_{i}={st.eta[i]}"))
    return ValidationReport(tuple(out))


def associated_metric(m: Manifold) -> Tensor:
    """``gt(x, y) = g(x, phi y) + eta(x) eta(y)``."""
    d = m.dim
    phis = [m.apply_phi(m.basis(j)) for j in range(d)]
    return Tensor.build(
        d, (0, 2), lambda i, j: m.metric(m.basis(i), phis[j]) + m.eta[i] * m.eta[j]
    )


def g_tilde_inverse(m: Manifold) -> Tensor:
    """Closed form ``gt^{ij} = -phi^i_k g^{kj} + xi^i xi^j``."""
    d = m.dim
    gi = m.g_inv

    def comp(i, j):
        s = m.xi[i] * m.xi[j]
        for k in range(d):
            if not m.phi[i, k].is_zero() and not gi[k, j].is_zero():
                s = s - m.phi[i, k] * gi[k, j]
        return s

    return Tensor.build(d, (2, 0), comp)
