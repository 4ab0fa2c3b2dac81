"""Structural predicates, constant fitting, and theorem verifiers.

Every fit is an exact Gauss-Jordan solve over the Scalar field on all
``(2n+1)^2`` components. Relations that involve a square root are checked in
squared form, since Scalars carry no radicals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import checks as ck
from .checks import Check
from .curvature import CurvaturePack, sectional_curvature, trace
from .errors import DomainError
from .lie import Manifold
from .linalg import SolveOutcome, solve_linear
from .scalars import Scalar
from .tensor import Tensor

__all__ = [
    "EinsteinLikeFit",
    "EtaRicciBranches",
    "SolitonFit",
    "TorseForming",
    "check_f5_condition",
    "detect_torse_forming_xi",
    "eta_ricci_from_tau",
    "fit_einstein_like",
    "fit_ricci_like_soliton",
    "is_cosymplectic",
    "is_sasaki_like",
    "sasaki_identity_checks",
    "verify_einstein_like_properties",
    "verify_sasaki_einstein_like",
    "verify_soliton_geodesic_props",
    "verify_theorem_sasaki",
    "verify_theorem_torse",
]


# -- predicates ----------------------------------------------------------------

def is_cosymplectic(F: Tensor) -> bool:
    return F.is_zero()


def is_sasaki_like(m: Manifold, pack: CurvaturePack):
    """Compare ``(nabla_x phi) y`` with ``-g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi``.

    Returns ``(flag, residual)`` where ``residual[i, j, k]`` is the ``e_k``
    component of the difference at ``x = e_i``, ``y = e_j``.
    """
    d, g, xi, eta = m.dim, m.g, m.xi, m.eta
    D = pack.nabla_phi

    def rhs(i, j, k):
        v = (2 * eta[i] * eta[j] - g[i, j]) * xi[k]
        if k == i:
            v = v - eta[j]
        return v

    residual = Tensor.build(d, (1, 2), lambda i, j, k: D[i, j, k] - rhs(i, j, k))
    return residual.is_zero(), residual


@dataclass(frozen=True)
class TorseForming:
    present: bool
    f: Scalar | None = None
    witness: tuple | None = None

    @property
    def parallel(self):
        return self.present and self.f.is_zero()


def detect_torse_forming_xi(m: Manifold, pack: CurvaturePack) -> TorseForming:
    """Solve ``nabla_x xi = -f phi^2 x`` for a single Scalar f."""
    d = m.dim
    rows, rhs, labels = [], [], []
    for i in range(d):
        phi2 = m.apply_phi(m.apply_phi(m.basis(i)))
        for k in range(d):
            rows.append([-phi2[k]])
            rhs.append(pack.nabla_xi[i, k])
            labels.append((i, k))
    out = solve_linear(rows, rhs, labels)
    if out.status == "unique":
        return TorseForming(True, out.values[0])
    return TorseForming(False, witness=out.witness)


def check_f5_condition(m: Manifold, pack: CurvaturePack, f: Scalar) -> bool:
    """``(nabla_x phi) y == -f (g(x, phi y) xi + eta(y) phi x)`` on all basis pairs."""
    return f5_residual(m, pack, f) is None


def f5_residual(m, pack, f):
    d = m.dim
    D = pack.nabla_phi
    for i, j in itertools.product(range(d), repeat=2):
        ei, ej = m.basis(i), m.basis(j)
        gxpy = m.metric(ei, m.apply_phi(ej))
        px = m.apply_phi(ei)
        for k in range(d):
            want = -f * (gxpy * m.xi[k] + m.eta[j] * px[k])
            if D[i, j, k] != want:
                return (i, j, k)
    return None


# -- fits ------------------------------------------------------------------------

def _components(m):
    return list(itertools.product(range(m.dim), repeat=2))


def _basis_rows(m, g_tilde):
    return [[m.g[i, j], g_tilde[i, j], m.eta[i] * m.eta[j]] for i, j in _components(m)]


@dataclass(frozen=True)
class EinsteinLikeFit:
    outcome: SolveOutcome
    tau: Scalar | None = None
    tau_from_constants: Scalar | None = None

    @property
    def ok(self):
        return self.outcome.ok

    @property
    def constants(self):
        return self.outcome.values if self.ok else None

    @property
    def label(self):
        if not self.ok:
            return None
        _, b, c = self.outcome.values
        if b.is_zero() and c.is_zero():
            return "Einstein"
        if b.is_zero():
            return "eta-Einstein"
        return "Einstein-like"


def fit_einstein_like(m: Manifold, ricci: Tensor, g_tilde: Tensor) -> EinsteinLikeFit:
    """Solve ``rho = a g + b gt + c eta(x)eta(y)`` for constants ``(a, b, c)``."""
    comps = _components(m)
    out = solve_linear(_basis_rows(m, g_tilde), [ricci[i, j] for i, j in comps], comps)
    tau = trace(m.g_inv, ricci, m.zero())
    if not out.ok:
        return EinsteinLikeFit(out, tau)
    a, b, c = out.values
    return EinsteinLikeFit(out, tau, (2 * m.n + 1) * a + b + c)


@dataclass(frozen=True)
class SolitonFit:
    outcome: SolveOutcome
    tau: Scalar | None = None
    tau_from_constants: Scalar | None = None

    @property
    def ok(self):
        return self.outcome.ok

    @property
    def constants(self):
        return self.outcome.values if self.ok else None

    @property
    def label(self):
        if not self.ok:
            return None
        _, mu, nu = self.outcome.values
        if mu.is_zero() and nu.is_zero():
            return "Ricci soliton"
        if mu.is_zero():
            return "eta-Ricci soliton"
        return "Ricci-like soliton"

    def kind(self):
        """shrinking / steady / expanding; only defined for a numeric lambda."""
        if not self.ok:
            return None
        lam = self.outcome.values[0]
        if not lam.is_constant():
            return None
        v = lam.to_fraction()
        return "shrinking" if v < 0 else "steady" if v == 0 else "expanding"


def fit_ricci_like_soliton(m: Manifold, lie_xi_g: Tensor, ricci: Tensor, g_tilde: Tensor) -> SolitonFit:
    """Solve ``1/2 L_xi g + rho + lam g + mu gt + nu eta(x)eta(y) = 0``."""
    comps = _components(m)
    rhs = [-(lie_xi_g[i, j] / 2 + ricci[i, j]) for i, j in comps]
    out = solve_linear(_basis_rows(m, g_tilde), rhs, comps)
    tau = trace(m.g_inv, ricci, m.zero())
    if not out.ok:
        return SolitonFit(out, tau)
    lam, mu, nu = out.values
    div_xi = trace(m.g_inv, lie_xi_g, m.zero()) / 2
    return SolitonFit(out, tau, -div_xi - (2 * m.n + 1) * lam - mu - nu)


# -- verifiers ---------------------------------------------------------------------

def sasaki_identity_checks(m: Manifold, pack: CurvaturePack):
    """Identities valid on every Sasaki-like manifold."""
    d, n = m.dim, m.n
    E = [m.basis(i) for i in range(d)]
    P = [m.apply_phi(e) for e in E]
    xi = list(m.xi)
    R, op, rho = pack.riemann, pack.curvature_op, pack.ricci
    conn = pack.connection
    zero = m.zero()
    nx = [[pack.nabla_xi[i, k] for k in range(d)] for i in range(d)]

    def Rvec(u, v, w):
        out = [zero] * d
        for l in range(d):
            out[l] = op(u, v, w, E[l])
        return out

    def vec_eq(name, items):
        return ck.compare(name, [(idx, a[k], b[k]) for idx, a, b in items for k in range(d)])

    def lin(*terms):
        out = [zero] * d
        for coef, v in terms:
            out = [o + coef * x for o, x in zip(out, v)]
        return out

    def nabla_eta(u, v):
        # (nabla_u eta)(v) = g(nabla_u xi, v)
        return m.metric(conn.nabla(u, xi), v)

    out = [
        vec_eq("nabla_xi_eq_minus_phi", [((i,), nx[i], [-x for x in P[i]]) for i in range(d)]),
        ck.compare("nabla_eta", [((i, j), nabla_eta(E[i], E[j]), -m.metric(E[i], P[j]))
                                 for i in range(d) for j in range(d)]),
        vec_eq("R_xy_xi", [((i, j), Rvec(E[i], E[j], xi), lin((m.eta[j], E[i]), (-m.eta[i], E[j])))
                           for i in range(d) for j in range(d)]),
        vec_eq("R_xi_y_xi", [((j,), Rvec(xi, E[j], xi), m.apply_phi(P[j])) for j in range(d)]),
        ck.compare("rho_x_xi", [((i,), rho(E[i], xi), 2 * n * m.eta[i]) for i in range(d)]),
        ck.equal("rho_xi_xi", rho(xi, xi), Scalar.const(2 * n, m.params)),
        vec_eq("R_xi_y_z", [((j, k), Rvec(xi, E[j], E[k]), lin((m.g[j, k], xi), (-m.eta[k], E[j])))
                            for j in range(d) for k in range(d)]),
        ck.compare("eta_R_xyz", [((i, j, k), m.eta_of(Rvec(E[i], E[j], E[k])),
                                  m.eta[i] * m.g[j, k] - m.eta[j] * m.g[i, k])
                                 for i, j, k in itertools.product(range(d), repeat=3)]),
        vec_eq("nabla_xi_xi", [((), conn.nabla(xi, xi), [zero] * d)]),
        ck.compare("nabla_xi_phi", [((j, k), sum((xi[i] * pack.nabla_phi[i, j, k] for i in range(d)), zero), zero)
                                    for j in range(d) for k in range(d)]),
        ck.compare("nabla_xi_eta", [((j,), nabla_eta(xi, E[j]), zero) for j in range(d)]),
        ck.compare("d_eta", [((i, j), nabla_eta(E[i], E[j]) - nabla_eta(E[j], E[i]), zero)
                             for i in range(d) for j in range(d)]),
        vec_eq("R_phix_phiy_xi", [((i, j), Rvec(P[i], P[j], xi), [zero] * d)
                                  for i in range(d) for j in range(d)]),
        ck.compare("rho_phix_xi", [((i,), rho(P[i], xi), zero) for i in range(d)]),
    ]
    ks = []
    for i, h in m.horizontal_basis():
        ks.append(((i,), sectional_curvature(m, R, h, xi), Scalar.one(m.params)))
    out.append(ck.compare("xi_section_curvature", ks))
    return out


def verify_einstein_like_properties(m: Manifold, fit: EinsteinLikeFit, pack: CurvaturePack):
    """Consequences of the Einstein-like form of rho, including its covariant derivative."""
    if not fit.ok:
        return [ck.skip("einstein_like_properties", "precondition: no Einstein-like fit")]
    a, b, c = fit.outcome.values
    s = a + b + c
    d = m.dim
    E = [m.basis(i) for i in range(d)]
    P = [m.apply_phi(e) for e in E]
    xi = list(m.xi)
    rho, nrho = pack.ricci, pack.nabla_ricci
    F = pack.F
    nx = [[pack.nabla_xi[i, k] for k in range(d)] for i in range(d)]
    idx2 = list(itertools.product(range(d), repeat=2))
    out = [
        ck.equal("tau_from_constants", fit.tau, fit.tau_from_constants),
        ck.compare("rho_phi_phi", [((i, j), rho(P[i], P[j]), -rho[i, j] + s * m.eta[i] * m.eta[j])
                                   for i, j in idx2]),
        ck.compare("rho_phi_symmetric", [((i, j), rho(P[i], E[j]), rho(E[i], P[j])) for i, j in idx2]),
        ck.compare("rho_phix_xi", [((i,), rho(P[i], xi), m.zero()) for i in range(d)]),
        ck.compare("rho_x_xi", [((i,), rho(E[i], xi), s * m.eta[i]) for i in range(d)]),
        ck.equal("rho_xi_xi", rho(xi, xi), s),
    ]

    def roel2(i, j, k):
        return b * F[i, j, k] + (b + c) * (m.metric(nx[i], E[j]) * m.eta[k]
                                           + m.metric(nx[i], E[k]) * m.eta[j])

    out.append(ck.compare("nabla_rho_formula",
                          [((i, j, k), nrho[i, j, k], roel2(i, j, k))
                           for i, j, k in itertools.product(range(d), repeat=3)]))
    return out


def _biconditional(name, left, right, detail):
    ok = bool(left) == bool(right)
    return Check(name, ck.PASS if ok else ck.FAIL, detail)


def _eta_parallel_and_xi_parallel(m, pack, prefix=""):
    d = m.dim
    nrho = pack.nabla_ricci
    hor = [h for _, h in m.horizontal_basis()]
    xi = list(m.xi)
    E = [m.basis(i) for i in range(d)]
    zero = m.zero()
    eta_par = ck.compare(prefix + "rho_eta_parallel",
                         [((a, b, c), nrho(hor[a], hor[b], hor[c]), zero)
                          for a, b, c in itertools.product(range(len(hor)), repeat=3)])
    xi_par = ck.compare(prefix + "rho_parallel_along_xi",
                        [((j, k), nrho(xi, E[j], E[k]), zero)
                         for j, k in itertools.product(range(d), repeat=2)])
    return [eta_par, xi_par]


def verify_sasaki_einstein_like(m: Manifold, fit: EinsteinLikeFit, pack: CurvaturePack, n=None):
    """Relations for manifolds that are both Sasaki-like and Einstein-like."""
    n = m.n if n is None else n
    sasaki, _ = is_sasaki_like(m, pack)
    if not sasaki or not fit.ok:
        why = "manifold is not Sasaki-like" if not sasaki else "no Einstein-like fit"
        return [ck.skip("sasaki_einstein_like", f"precondition: {why}")]
    a, b, c = fit.outcome.values
    d = m.dim
    E = [m.basis(i) for i in range(d)]
    P = [m.apply_phi(e) for e in E]
    nrho = pack.nabla_ricci
    div = pack.divergences
    two_n = Scalar.const(2 * n, m.params)

    def roelsl(i, j, k):
        g_, eta = m.metric, m.eta
        return (-(b + c) * (g_(E[i], P[j]) * eta[k] + g_(E[i], P[k]) * eta[j])
                + b * (g_(P[i], P[j]) * eta[k] + g_(P[i], P[k]) * eta[j]))

    ricci_symmetric = nrho.is_zero()
    out = [
        ck.equal("abc_sum_2n", a + b + c, two_n),
        ck.equal("tau_2n_a_plus_1", fit.tau, two_n * (a + 1)),
        ck.compare("nabla_rho_sasaki_formula", [((i, j, k), nrho[i, j, k], roelsl(i, j, k))
                                                for i, j, k in itertools.product(range(d), repeat=3)]),
        ck.equal("a_from_div_star", two_n + div.div_star_rho_xi / two_n, a),
        ck.equal("b_from_div", -div.div_rho_xi / two_n, b),
        ck.equal("c_from_divs", (div.div_rho_xi - div.div_star_rho_xi) / two_n, c),
        *_eta_parallel_and_xi_parallel(m, pack),
        _biconditional("scalar_flat_iff_a_minus_1", fit.tau.is_zero(), (a + 1).is_zero(),
                       f"tau={fit.tau}, a={a}"),
        _biconditional("ricci_symmetric_iff_einstein", ricci_symmetric,
                       b.is_zero() and c.is_zero(),
                       f"nabla rho {'=' if ricci_symmetric else '!='} 0, b={b}, c={c}"),
        _biconditional("eta_einstein_iff_div_rho_xi_zero", b.is_zero(), div.div_rho_xi.is_zero(),
                       f"b={b}, (Div rho)(xi)={div.div_rho_xi}"),
        _biconditional("einstein_iff_both_divs_zero", b.is_zero() and c.is_zero(),
                       div.div_rho_xi.is_zero() and div.div_star_rho_xi.is_zero(),
                       f"(Div rho)(xi)={div.div_rho_xi}, (Div* rho)(xi)={div.div_star_rho_xi}"),
    ]
    if b.is_zero() and c.is_zero():
        out.append(ck.equal("einstein_tau", fit.tau, Scalar.const(2 * n * (2 * n + 1), m.params)))
    return out


def verify_soliton_geodesic_props(m: Manifold, soliton: SolitonFit, einstein: EinsteinLikeFit,
                                  pack: CurvaturePack):
    """Consequences of being Einstein-like and a Ricci-like soliton at once."""
    if not (soliton.ok and einstein.ok):
        return [ck.skip("soliton_geodesic", "precondition: both fits must succeed")]
    a, b, c = einstein.outcome.values
    lam, mu, nu = soliton.outcome.values
    d = m.dim
    xi = list(m.xi)
    zero = m.zero()
    conn = pack.connection
    nxx = conn.nabla(xi, xi)
    D, F, nrho = pack.nabla_phi, pack.F, pack.nabla_ricci
    dphi_xi_xi = [sum((xi[i] * xi[j] * D[i, j, k] for i in range(d) for j in range(d)), zero)
                  for k in range(d)]
    E = [m.basis(i) for i in range(d)]
    return [
        ck.equal("constants_sum_zero", a + b + c + lam + mu + nu, zero),
        ck.compare("xi_geodesic", [((k,), nxx[k], zero) for k in range(d)]),
        ck.compare("nabla_xi_phi_xi", [((k,), dphi_xi_xi[k], zero) for k in range(d)]),
        ck.compare("nabla_xi_eta", [((j,), m.metric(nxx, E[j]), zero) for j in range(d)]),
        ck.compare("omega_zero", [((k,), pack.omega[k], zero) for k in range(d)]),
        ck.compare("nabla_xi_rho", [((j, k), nrho(xi, E[j], E[k]), b * F(xi, E[j], E[k]))
                                    for j in range(d) for k in range(d)]),
    ]


def _most_specific(cases, implied_by):
    """Drop applicable cases that are implied by another applicable case."""
    return [c for c in cases if not any(o in cases for o in implied_by.get(c, ()))]


def verify_theorem_sasaki(m: Manifold, einstein: EinsteinLikeFit, soliton: SolitonFit,
                          pack: CurvaturePack, n=None):
    """Constant relations linking the two fits on a Sasaki-like manifold.

    Returns ``(checks, cases)`` where ``cases`` lists the special cases
    ``"i".."iv"`` that apply, most specific only.
    """
    n = m.n if n is None else n
    sasaki, _ = is_sasaki_like(m, pack)
    if not sasaki or not einstein.ok or not soliton.ok:
        why = ("manifold is not Sasaki-like" if not sasaki else "both fits must succeed")
        return [ck.skip("theorem_sasaki", f"precondition: {why}")], []
    a, b, c = einstein.outcome.values
    lam, mu, nu = soliton.outcome.values
    zero = m.zero()
    two_n = 2 * n
    d = m.dim
    gt = pack.g_tilde
    out = [
        ck.equal("a_plus_lambda", a + lam, zero),
        ck.equal("b_plus_mu_minus_1", b + mu - 1, zero),
        ck.equal("c_plus_nu_plus_1", c + nu + 1, zero),
        ck.equal("lambda_mu_nu_sum", lam + mu + nu, Scalar.const(-two_n, m.params)),
        ck.equal("abc_sum", a + b + c, Scalar.const(two_n, m.params)),
        ck.compare("rho_from_soliton_constants",
                   [((i, j), pack.ricci[i, j],
                     -lam * m.g[i, j] + (1 - mu) * gt[i, j] - (1 + nu) * m.eta[i] * m.eta[j])
                    for i, j in itertools.product(range(d), repeat=2)]),
    ]
    applicable = []
    if mu.is_zero():
        applicable.append("i")
        out.append(ck.compare("case_i_constants", [
            (("a",), a, -lam), (("b",), b, Scalar.one(m.params)), (("c",), c, lam + two_n - 1),
            (("nu",), nu, -two_n - lam)]))
    if mu.is_zero() and nu.is_zero():
        applicable.append("ii")
        out.append(ck.compare("case_ii_constants", [
            (("lambda",), lam, Scalar.const(-two_n, m.params)),
            (("abc",), (a, b, c), tuple(Scalar.const(v, m.params) for v in (two_n, 1, -1)))]))
    if b.is_zero():
        applicable.append("iii")
        out.append(ck.compare("case_iii_constants", [
            (("c",), c, two_n - a),
            (("soliton",), (lam, mu, nu), (-a, Scalar.one(m.params), a - two_n - 1))]))
    if b.is_zero() and c.is_zero():
        applicable.append("iv")
        out.append(ck.compare("case_iv_constants", [
            (("a",), a, Scalar.const(two_n, m.params)),
            (("soliton",), (lam, mu, nu),
             tuple(Scalar.const(v, m.params) for v in (-two_n, 1, -1)))]))
    cases = _most_specific(applicable, {"i": ("ii",), "iii": ("iv",)})
    return out, cases


def verify_theorem_torse(m: Manifold, einstein: EinsteinLikeFit, soliton: SolitonFit,
                         torse: TorseForming, pack: CurvaturePack, n=None):
    """Constant relations for a torse-forming Reeb field.

    Returns ``(checks, cases)`` like :func:`verify_theorem_sasaki`.
    """
    n = m.n if n is None else n
    if not torse.present or not einstein.ok or not soliton.ok:
        why = "xi is not torse-forming" if not torse.present else "both fits must succeed"
        return [ck.skip("theorem_torse", f"precondition: {why}")], []
    f = torse.f
    a, b, c = einstein.outcome.values
    lam, mu, nu = soliton.outcome.values
    zero = m.zero()
    d = m.dim
    E = [m.basis(i) for i in range(d)]
    xi = list(m.xi)
    f2 = f * f
    op, rho = pack.curvature_op, pack.ricci
    out = [
        ck.equal("a_plus_lambda_plus_f", a + lam + f, zero),
        ck.equal("b_plus_mu", b + mu, zero),
        ck.equal("c_plus_nu_minus_f", c + nu - f, zero),
        ck.equal("f_squared_from_abc", 2 * n * f2, -(a + b + c)),
        ck.equal("f_squared_from_soliton", 2 * n * f2, lam + mu + nu),
        ck.compare("R_xy_xi_torse",
                   [((i, j, l), op(E[i], E[j], xi, E[l]),
                     f2 * (m.eta[i] * (1 if l == j else 0) - m.eta[j] * (1 if l == i else 0)))
                    for i, j, l in itertools.product(range(d), repeat=3)]),
        ck.compare("rho_x_xi_torse", [((i,), rho(E[i], xi), -2 * n * f2 * m.eta[i])
                                      for i in range(d)]),
        ck.compare("xi_section_curvature", [((i,), sectional_curvature(m, pack.riemann, h, xi), -f2)
                                            for i, h in m.horizontal_basis()]),
    ]
    if check_f5_condition(m, pack, f) and not pack.F.is_zero():
        out.extend(_eta_parallel_and_xi_parallel(m, pack, prefix="f5_"))
        ricci_symmetric = pack.nabla_ricci.is_zero()
        out.append(_biconditional("f5_ricci_symmetric_iff_einstein", ricci_symmetric,
                                  b.is_zero() and c.is_zero(), f"b={b}, c={c}"))
        P = [m.apply_phi(e) for e in E]
        g_, eta = m.metric, m.eta

        def formula(i, j, k):
            return (a + lam) * ((b + c) * (g_(P[i], P[j]) * eta[k] + g_(P[i], P[k]) * eta[j])
                                + b * (g_(E[i], P[j]) * eta[k] + g_(E[i], P[k]) * eta[j]))

        out.append(ck.compare("f5_nabla_rho_formula",
                              [((i, j, k), pack.nabla_ricci[i, j, k], formula(i, j, k))
                               for i, j, k in itertools.product(range(d), repeat=3)]))
    else:
        out.append(ck.skip("f5_ricci_properties", "precondition: not in F5 minus F0"))
    applicable = []
    if b.is_zero() and mu.is_zero():
        applicable.append("i")
        out.append(ck.equal("case_i_sum", a + c + lam + nu, zero))
    if b.is_zero() and mu.is_zero() and nu.is_zero():
        applicable.append("ii")
        out.append(ck.compare("case_ii_constants", [(("a",), a, -lam - f), (("c",), c, f)]))
    if b.is_zero() and c.is_zero() and mu.is_zero():
        applicable.append("iii")
        out.append(ck.compare("case_iii_constants", [(("lambda",), lam, -a - f), (("nu",), nu, f)]))
    cases = _most_specific(applicable, {"i": ("ii", "iii")})
    return out, cases


def scalar_curvature_trace_check(m: Manifold, soliton: SolitonFit):
    """``tau = -Div xi - (2n+1) lam - mu - nu`` on a soliton solution."""
    if not soliton.ok:
        return ck.skip("tau_from_soliton", "precondition: no soliton fit")
    return ck.equal("tau_from_soliton", soliton.tau, soliton.tau_from_constants)


# -- Einstein manifolds with negative scalar curvature ------------------------------

@dataclass(frozen=True)
class EtaRicciBranches:
    """Both sign branches of the eta-Ricci soliton constants for given tau and n.

    When ``f_squared`` is a rational square, ``branches`` holds
    ``(epsilon, f, lam, nu)`` tuples; otherwise it is empty and
    ``lambda_offset`` gives ``lam = lambda_offset - f`` symbolically.
    """

    tau: Fraction
    n: int
    f_squared: Fraction
    lambda_offset: Fraction
    case: int
    branches: tuple = field(default_factory=tuple)

    @property
    def exact(self):
        return bool(self.branches)

    def pairs(self):
        return {(lam, nu) for _, _, lam, nu in self.branches}


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def eta_ricci_from_tau(tau, n: int) -> EtaRicciBranches:
    """Constants ``lam = -tau/(2n+1) - f``, ``nu = f`` with ``f^2 = -tau / (2n(2n+1))``."""
    tau = Fraction(tau)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if tau >= 0:
        raise DomainError(f"an Einstein manifold with torse-forming xi needs tau < 0, got {tau}")
    f2 = -tau / (2 * n * (2 * n + 1))
    offset = -tau / (2 * n + 1)
    threshold = -1 - Fraction(1, 2 * n)
    case = 1 if tau < threshold else 2 if tau == threshold else 3
    root = _rational_sqrt(f2)
    branches = ()
    if root is not None:
        branches = tuple((eps, eps * root, offset - eps * root, eps * root) for eps in (1, -1))
    return EtaRicciBranches(tau, n, f2, offset, case, branches)
