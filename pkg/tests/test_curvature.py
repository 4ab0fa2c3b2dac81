import pytest

from acbsoliton.checks import all_passed
from acbsoliton.curvature import (
    compute_pack,
    connection_checks,
    fundamental_tensor_checks,
    lee_form_checks,
    riemann_checks,
    sectional_curvature,
)
from acbsoliton.errors import DomainError
from acbsoliton.lie import build_manifold
from helpers import assert_sparse, sc
import oracles as O
from randomgen import random_manifold


def test_sasaki5_connection(sasaki):
    m, pack = sasaki
    assert_sparse(pack.connection.gamma, O.SASAKI5_CONNECTION, m)


def test_sasaki5_curvature(sasaki):
    m, pack = sasaki
    assert_sparse(pack.riemann, O.SASAKI5_RIEMANN, m)
    assert_sparse(pack.ricci, O.SASAKI5_RICCI, m)
    assert pack.tau == sc(4, m)


def test_sasaki5_lie_derivative_and_divergences(sasaki):
    m, pack = sasaki
    assert_sparse(pack.lie_xi_g, O.SASAKI5_LIE_XI_G, m)
    div = pack.divergences
    assert (div.div_rho_xi, div.div_star_rho_xi, div.div_xi) == (sc(0, m), sc(-16, m), sc(0, m))


def test_sasaki5_lee_forms_follow_definitions(sasaki):
    # theta(xi) = -2n under the trace definitions used here
    m, pack = sasaki
    assert pack.theta == [sc(-4, m)] + [sc(0, m)] * 4
    assert all(x.is_zero() for x in pack.omega)


def test_f5dim3_connection_and_F(f5):
    m, pack = f5
    assert_sparse(pack.connection.gamma, O.F5DIM3_CONNECTION, m)
    assert_sparse(pack.F, O.F5DIM3_F, m)
    assert pack.theta_star[0] == sc(O.F5DIM3_THETA_STAR_0, m)


def test_f5dim3_curvature(f5):
    m, pack = f5
    assert_sparse(pack.riemann, O.F5DIM3_RIEMANN, m)
    assert_sparse(pack.ricci, O.F5DIM3_RICCI, m)
    assert pack.tau == sc(O.F5DIM3_TAU, m)
    for (i, j), v in O.F5DIM3_SECTIONAL.items():
        assert sectional_curvature(m, pack.riemann, i, j) == sc(v, m)


def test_f5dim3_divergence_of_xi(f5):
    m, pack = f5
    assert_sparse(pack.lie_xi_g, O.F5DIM3_LIE_XI_G, m)
    assert pack.divergences.div_xi == sc("-2*p", m)
    assert pack.nabla_ricci.is_zero()


def test_flat3_everything_vanishes(flat):
    m, pack = flat
    for t in (pack.connection.gamma, pack.riemann, pack.ricci, pack.F, pack.nabla_ricci):
        assert t.is_zero()
    d = pack.divergences
    assert d.div_rho_xi.is_zero() and d.div_star_rho_xi.is_zero() and d.div_xi.is_zero()


def test_degenerate_plane_raises(f5):
    m, pack = f5
    with pytest.raises(DomainError):
        sectional_curvature(m, pack.riemann, [sc(0, m), sc(1, m), sc(1, m)], 0)
    with pytest.raises(DomainError):
        sectional_curvature(m, pack.riemann, 1, 1)


@pytest.mark.parametrize("seed", range(25))
def test_identities_on_random_structures(seed):
    m = random_manifold(seed)
    pack = compute_pack(m)
    assert all_passed(connection_checks(m, pack.connection))
    assert all_passed(riemann_checks(pack.riemann))
    assert all_passed(fundamental_tensor_checks(m, pack.F, pack.nabla_xi))
    assert all_passed(lee_form_checks(m, pack.theta, pack.theta_star, pack.omega))


def test_broken_riemann_is_caught(f5):
    m, pack = f5
    R = pack.riemann.map(lambda x: x)
    R.data[0, 1, 0, 1] = R.data[0, 1, 0, 1] + 1
    failed = [c.name for c in riemann_checks(R) if not c.passed]
    assert failed


def test_symbolic_pipeline_commutes_with_substitution(f5):
    from fractions import Fraction

    from acbsoliton.report import substitute_manifold

    m, pack = f5
    num = compute_pack(substitute_manifold(m, {"p": Fraction(3, 2)}))
    for idx, v in pack.riemann.nonzero():
        assert num.riemann[idx].to_fraction() == v.substitute({"p": Fraction(3, 2)})


def test_parameter_free_manifold():
    m = build_manifold(3, (), {(0, 1): {1: 2}, (0, 2): {2: 2}}, [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
                       [[0, 0, 0], [0, 0, -1], [0, 1, 0]], [1, 0, 0])
    assert compute_pack(m).tau == sc(-24, m)


def test_theta_star_without_omega_term_needs_omega_zero(sasaki, f5):
    from acbsoliton.curvature import theta_star_phi_literal

    for m, pack in (sasaki, f5):
        assert all(x.is_zero() for x in pack.omega)
        assert theta_star_phi_literal(m, pack.theta, pack.theta_star).passed
    m = random_manifold(1)
    pack = compute_pack(m)
    assert not all(x.is_zero() for x in pack.omega)
    assert not theta_star_phi_literal(m, pack.theta, pack.theta_star).passed
