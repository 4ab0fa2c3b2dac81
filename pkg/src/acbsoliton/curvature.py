"""Levi-Civita connection and the tensors derived from it.

Conventions (fixed so that the published example components reproduce):

* ``R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z`` and
  ``R(x, y, z, w) = g(R(x, y) z, w)``;
* ``rho(y, z) = g^{il} R(e_i, y, z, e_l)`` and ``tau = g^{ij} rho_ij``;
* ``k(x, y) = R(x, y, y, x) / (g(x,x) g(y,y) - g(x,y)^2)``.

All fields are left-invariant, so their frame components are constant and
covariant derivatives reduce to sums over the connection coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import Check, compare
from .errors import DomainError
from .lie import Manifold, associated_metric, g_tilde_inverse
from .scalars import Scalar
from .tensor import Tensor


@dataclass(frozen=True)
class Connection:
    """``gamma[i, j, k]`` is the ``e_k`` component of ``nabla_{e_i} e_j``."""

    gamma: Tensor

    def covariant(self, i, j):
        return [self.gamma[i, j, k] for k in range(self.gamma.dim)]

    def nabla(self, u, v):
        """``nabla_u v`` for constant-component vectors u, v."""
        d = self.gamma.dim
        out = [u[0] * 0] * d
        for i in range(d):
            if u[i].is_zero():
                continue
            for j in range(d):
                if v[j].is_zero():
                    continue
                w = u[i] * v[j]
                for k in range(d):
                    if not self.gamma[i, j, k].is_zero():
                        out[k] = out[k] + w * self.gamma[i, j, k]
        return out


def _sum(terms, zero):
    total = zero
    for t in terms:
        total = total + t
    return total


def levi_civita(m: Manifold) -> Connection:
    """Koszul formula for left-invariant fields.

    ``2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y)``.
    """
    d = m.dim
    c, g, gi = m.c, m.g, m.g_inv
    zero = m.zero()
    # cg[a, b, l] = g([e_a, e_b], e_l)
    cg = {}
    for a, b, l in itertools.product(range(d), repeat=3):
        cg[a, b, l] = _sum((c[a, b, q] * g[q, l] for q in range(d)
                            if not c[a, b, q].is_zero() and not g[q, l].is_zero()), zero)
    half = Scalar.const(Fraction(1, 2), m.params)
    low = {}
    for i, j, l in itertools.product(range(d), repeat=3):
        low[i, j, l] = (cg[i, j, l] - cg[j, l, i] + cg[l, i, j]) * half

    def comp(i, j, k):
        return _sum((gi[k, l] * low[i, j, l] for l in range(d)
                     if not gi[k, l].is_zero() and not low[i, j, l].is_zero()), zero)

    return Connection(Tensor.build(d, (1, 2), comp))


def curvature_operator(m: Manifold, conn: Connection) -> Tensor:
    """``op[i, j, k, l]``: ``e_l`` component of ``R(e_i, e_j) e_k``."""
    d = m.dim
    G, c = conn.gamma, m.c
    zero = m.zero()

    def comp(i, j, k, l):
        total = zero
        for q in range(d):
            if not G[j, k, q].is_zero() and not G[i, q, l].is_zero():
                total = total + G[j, k, q] * G[i, q, l]
            if not G[i, k, q].is_zero() and not G[j, q, l].is_zero():
                total = total - G[i, k, q] * G[j, q, l]
            if not c[i, j, q].is_zero() and not G[q, k, l].is_zero():
                total = total - c[i, j, q] * G[q, k, l]
        return total

    # R(x, y) = -R(y, x), so only i < j is expanded
    data = np.empty((d,) * 4, dtype=object)
    for i, j, k, l in itertools.product(range(d), repeat=4):
        if i < j:
            data[i, j, k, l] = comp(i, j, k, l)
        elif i == j:
            data[i, j, k, l] = zero
    for i, j, k, l in itertools.product(range(d), repeat=4):
        if i > j:
            data[i, j, k, l] = -data[j, i, k, l]
    return Tensor(data, (1, 3))


def riemann(m: Manifold, conn: Connection, op: Tensor | None = None) -> Tensor:
    """Fully covariant curvature ``R[i, j, k, l] = R(e_i, e_j, e_k, e_l)``."""
    if op is None:
        op = curvature_operator(m, conn)
    d, g = m.dim, m.g
    zero = m.zero()
    return Tensor.build(
        d,
        (0, 4),
        lambda i, j, k, l: _sum((op[i, j, k, q] * g[q, l] for q in range(d)
                                 if not op[i, j, k, q].is_zero() and not g[q, l].is_zero()), zero),
    )


def ricci(m: Manifold, R: Tensor) -> Tensor:
    d, gi = m.dim, m.g_inv
    zero = m.zero()
    pairs = [(i, l) for i in range(d) for l in range(d) if not gi[i, l].is_zero()]
    return Tensor.build(
        d, (0, 2), lambda j, k: _sum((gi[i, l] * R[i, j, k, l] for i, l in pairs), zero)
    )


def scalar_curvature(m: Manifold, rho: Tensor) -> Scalar:
    return trace(m.g_inv, rho, m.zero())


def trace(inv, form, zero):
    d = form.dim
    return _sum((inv[i, j] * form[i, j] for i in range(d) for j in range(d)
                 if not inv[i, j].is_zero()), zero)


def sectional_curvature(m: Manifold, R: Tensor, x, y) -> Scalar:
    """Sectional curvature of span{x, y}; x, y are basis indices or vectors."""
    u = m.basis(x) if isinstance(x, int) else list(x)
    v = m.basis(y) if isinstance(y, int) else list(y)
    denom = m.metric(u, u) * m.metric(v, v) - m.metric(u, v) ** 2
    if denom.is_zero():
        raise DomainError(f"plane spanned by {x} and {y} is degenerate")
    return R(u, v, v, u) / denom


def nabla_xi(m: Manifold, conn: Connection) -> Tensor:
    """``N[i, k]``: ``e_k`` component of ``nabla_{e_i} xi``."""
    d, G, xi = m.dim, conn.gamma, m.xi
    zero = m.zero()
    return Tensor.build(
        d, (1, 1),
        lambda i, k: _sum((xi[j] * G[i, j, k] for j in range(d)
                           if not xi[j].is_zero() and not G[i, j, k].is_zero()), zero),
    )


def lie_derivative_g_xi(m: Manifold, conn: Connection, nxi: Tensor | None = None) -> Tensor:
    """``(L_xi g)(x, y) = g(nabla_x xi, y) + g(x, nabla_y xi)``."""
    if nxi is None:
        nxi = nabla_xi(m, conn)
    d, g = m.dim, m.g
    zero = m.zero()

    def low(i, j):
        return _sum((nxi[i, k] * g[k, j] for k in range(d)
                     if not nxi[i, k].is_zero() and not g[k, j].is_zero()), zero)

    return Tensor.build(d, (0, 2), lambda i, j: low(i, j) + low(j, i))


def nabla_phi(m: Manifold, conn: Connection) -> Tensor:
    """``D[i, j, k]``: ``e_k`` component of ``(nabla_{e_i} phi) e_j``."""
    d, G, phi = m.dim, conn.gamma, m.phi
    zero = m.zero()

    def comp(i, j, k):
        total = zero
        for q in range(d):
            if not phi[q, j].is_zero() and not G[i, q, k].is_zero():
                total = total + phi[q, j] * G[i, q, k]
            if not G[i, j, q].is_zero() and not phi[k, q].is_zero():
                total = total - G[i, j, q] * phi[k, q]
        return total

    return Tensor.build(d, (1, 2), comp)


def fundamental_tensor(m: Manifold, conn: Connection, dphi: Tensor | None = None) -> Tensor:
    """``F(x, y, z) = g((nabla_x phi) y, z)``."""
    if dphi is None:
        dphi = nabla_phi(m, conn)
    d, g = m.dim, m.g
    zero = m.zero()
    return Tensor.build(
        d, (0, 3),
        lambda i, j, l: _sum((dphi[i, j, k] * g[k, l] for k in range(d)
                              if not dphi[i, j, k].is_zero() and not g[k, l].is_zero()), zero),
    )


def lee_forms(m: Manifold, F: Tensor):
    """``(theta, theta_star, omega)`` as component lists."""
    d, gi, phi, xi = m.dim, m.g_inv, m.phi, m.xi
    zero = m.zero()
    theta, theta_star, omega = [], [], []
    for z in range(d):
        theta.append(_sum((gi[i, j] * F[i, j, z] for i in range(d) for j in range(d)
                           if not gi[i, j].is_zero()), zero))
        theta_star.append(_sum((gi[i, j] * phi[q, j] * F[i, q, z]
                                for i in range(d) for j in range(d) for q in range(d)
                                if not gi[i, j].is_zero() and not phi[q, j].is_zero()), zero))
        omega.append(_sum((xi[i] * xi[j] * F[i, j, z] for i in range(d) for j in range(d)
                           if not xi[i].is_zero() and not xi[j].is_zero()), zero))
    return theta, theta_star, omega


def nabla_ricci(m: Manifold, conn: Connection, rho: Tensor) -> Tensor:
    """``NR[i, j, k] = (nabla_{e_i} rho)(e_j, e_k)`` for constant components."""
    d, G = m.dim, conn.gamma
    zero = m.zero()

    def comp(i, j, k):
        total = zero
        for q in range(d):
            if not G[i, j, q].is_zero() and not rho[q, k].is_zero():
                total = total - G[i, j, q] * rho[q, k]
            if not G[i, k, q].is_zero() and not rho[j, q].is_zero():
                total = total - G[i, k, q] * rho[j, q]
        return total

    return Tensor.build(d, (0, 3), comp)


@dataclass(frozen=True)
class Divergences:
    div_rho_xi: Scalar
    div_star_rho_xi: Scalar
    div_xi: Scalar


def divergences(m: Manifold, nxi: Tensor, nrho: Tensor, gt_inv: Tensor | None = None) -> Divergences:
    """``(Div rho)(xi)``, ``(Div* rho)(xi)`` (trace with the associated metric) and ``Div xi``."""
    if gt_inv is None:
        gt_inv = g_tilde_inverse(m)
    d, gi, xi = m.dim, m.g_inv, m.xi
    zero = m.zero()

    def div(inv):
        return _sum((inv[i, j] * nrho[i, j, z] * xi[z]
                     for i in range(d) for j in range(d) for z in range(d)
                     if not inv[i, j].is_zero() and not xi[z].is_zero()), zero)

    return Divergences(div(gi), div(gt_inv), _sum((nxi[i, i] for i in range(d)), zero))


@dataclass(frozen=True, eq=False)
class CurvaturePack:
    connection: Connection
    curvature_op: Tensor
    riemann: Tensor
    ricci: Tensor
    tau: Scalar
    nabla_xi: Tensor
    lie_xi_g: Tensor
    nabla_phi: Tensor
    F: Tensor
    theta: list
    theta_star: list
    omega: list
    g_tilde: Tensor
    g_tilde_inv: Tensor
    nabla_ricci: Tensor
    divergences: Divergences


def compute_pack(m: Manifold) -> CurvaturePack:
    conn = levi_civita(m)
    op = curvature_operator(m, conn)
    R = riemann(m, conn, op)
    rho = ricci(m, R)
    nxi = nabla_xi(m, conn)
    dphi = nabla_phi(m, conn)
    F = fundamental_tensor(m, conn, dphi)
    theta, theta_star, omega = lee_forms(m, F)
    gt_inv = g_tilde_inverse(m)
    nrho = nabla_ricci(m, conn, rho)
    return CurvaturePack(
        connection=conn,
        curvature_op=op,
        riemann=R,
        ricci=rho,
        tau=scalar_curvature(m, rho),
        nabla_xi=nxi,
        lie_xi_g=lie_derivative_g_xi(m, conn, nxi),
        nabla_phi=dphi,
        F=F,
        theta=theta,
        theta_star=theta_star,
        omega=omega,
        g_tilde=associated_metric(m),
        g_tilde_inv=gt_inv,
        nabla_ricci=nrho,
        divergences=divergences(m, nxi, nrho, gt_inv),
    )


# -- structural identities --------------------------------------------------------

def connection_checks(m: Manifold, conn: Connection):
    d, G, c, g = m.dim, conn.gamma, m.c, m.g
    idx = list(itertools.product(range(d), repeat=3))
    torsion = compare(
        "torsion_free",
        [((i, j, k), G[i, j, k] - G[j, i, k], c[i, j, k]) for i, j, k in idx],
    )

    def low(i, j, k):
        return _sum((G[i, j, q] * g[q, k] for q in range(d)), m.zero())

    metric = compare(
        "metric_compatible",
        [((i, j, k), low(i, j, k) + low(i, k, j), m.zero()) for i, j, k in idx],
    )
    return [torsion, metric]


def riemann_checks(R: Tensor):
    d = R.dim
    zero = R[(0, 0, 0, 0)] * 0
    idx = list(itertools.product(range(d), repeat=4))
    return [
        compare("antisymmetric_first_pair", [((i, j, k, l), R[i, j, k, l], -R[j, i, k, l])
                                             for i, j, k, l in idx]),
        compare("antisymmetric_second_pair", [((i, j, k, l), R[i, j, k, l], -R[i, j, l, k])
                                              for i, j, k, l in idx]),
        compare("pair_symmetry", [((i, j, k, l), R[i, j, k, l], R[k, l, i, j])
                                  for i, j, k, l in idx]),
        compare("first_bianchi",
                [((i, j, k, l), R[i, j, k, l] + R[j, k, i, l] + R[k, i, j, l], zero)
                 for i, j, k, l in idx]),
    ]


def fundamental_tensor_checks(m: Manifold, F: Tensor, nxi: Tensor):
    """The identities every ``F`` satisfies, including ``F(x, phi y, xi) = g(nabla_x xi, y)``."""
    d = m.dim
    E = [m.basis(i) for i in range(d)]
    P = [m.apply_phi(E[i]) for i in range(d)]
    xi = list(m.xi)
    idx = list(itertools.product(range(d), repeat=3))
    sym = compare("F_symmetric", [((i, j, k), F[i, j, k], F[i, k, j]) for i, j, k in idx])

    def decomposed(i, j, k):
        return (F(E[i], P[j], P[k]) + m.eta[j] * F(E[i], xi, E[k])
                + m.eta[k] * F(E[i], E[j], xi))

    dec = compare("F_phi_decomposition",
                  [((i, j, k), F[i, j, k], decomposed(i, j, k)) for i, j, k in idx])
    nx = [[nxi[i, k] for k in range(d)] for i in range(d)]
    xi_rel = compare(
        "F_xi_nabla_xi",
        [((i, j), F(E[i], P[j], xi), m.metric(nx[i], E[j])) for i in range(d) for j in range(d)],
    )
    return [sym, dec, xi_rel]


def lee_form_checks(m: Manifold, theta, theta_star, omega):
    d = m.dim
    omega_xi = _sum((omega[i] * m.xi[i] for i in range(d)), m.zero())
    out = [Check("omega_xi_zero", "pass" if omega_xi.is_zero() else "fail",
                 "" if omega_xi.is_zero() else f"omega(xi)={omega_xi}")]

    def form(w, v):
        return _sum((w[i] * v[i] for i in range(d)), m.zero())

    # expanding the F decomposition gives theta* o phi = -theta o phi^2 - omega;
    # the omega term vanishes only when nabla_xi xi = 0
    pairs = []
    for i in range(d):
        pe = m.apply_phi(m.basis(i))
        ppe = m.apply_phi(pe)
        pairs.append(((i,), form(theta_star, pe), -form(theta, ppe) - omega[i]))
    out.append(compare("theta_star_phi", pairs))
    return out


def theta_star_phi_literal(m: Manifold, theta, theta_star):
    """``theta* o phi == -theta o phi^2`` without the omega term."""
    d = m.dim
    pairs = []
    for i in range(d):
        pe = m.apply_phi(m.basis(i))
        ppe = m.apply_phi(pe)
        pairs.append(((i,), _sum((theta_star[k] * pe[k] for k in range(d)), m.zero()),
                      -_sum((theta[k] * ppe[k] for k in range(d)), m.zero())))
    return compare("theta_star_phi_without_omega", pairs)
