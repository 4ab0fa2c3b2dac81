from fractions import Fraction

import pytest

from acbsoliton import analysis as an
from acbsoliton.curvature import compute_pack
from acbsoliton.errors import DomainError
from acbsoliton.report import substitute_manifold
from helpers import sc
import oracles as O
from randomgen import random_manifold


def fits(m, pack):
    e = an.fit_einstein_like(m, pack.ricci, pack.g_tilde)
    s = an.fit_ricci_like_soliton(m, pack.lie_xi_g, pack.ricci, pack.g_tilde)
    return e, s


def values(fit, m):
    return tuple(fit.outcome.values)


def test_sasaki5_predicates(sasaki):
    m, pack = sasaki
    assert not an.is_cosymplectic(pack.F)
    assert an.is_sasaki_like(m, pack)[0]
    torse = an.detect_torse_forming_xi(m, pack)
    assert not torse.present and torse.witness is not None


def test_sasaki5_fits(sasaki):
    m, pack = sasaki
    e, s = fits(m, pack)
    assert values(e, m) == tuple(sc(v, m) for v in O.SASAKI5_EINSTEIN)
    assert values(s, m) == tuple(sc(v, m) for v in O.SASAKI5_SOLITON)
    assert e.label == "eta-Einstein"
    assert s.label == "Ricci-like soliton"
    assert s.kind() == "steady"


def test_sasaki5_identity_suite(sasaki):
    m, pack = sasaki
    checks = an.sasaki_identity_checks(m, pack)
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]
    assert "xi_section_curvature" in {c.name for c in checks}


def test_sasaki5_theorem(sasaki):
    m, pack = sasaki
    e, s = fits(m, pack)
    checks, cases = an.verify_theorem_sasaki(m, e, s, pack)
    assert all(c.passed for c in checks)
    assert cases == ["iii"]
    torse = an.detect_torse_forming_xi(m, pack)
    skipped, _ = an.verify_theorem_torse(m, e, s, torse, pack)
    assert [c.status for c in skipped] == ["skip"]


def test_sasaki5_einstein_like_verifiers(sasaki):
    m, pack = sasaki
    e, s = fits(m, pack)
    assert all(c.passed for c in an.verify_einstein_like_properties(m, e, pack))
    assert all(c.passed for c in an.verify_sasaki_einstein_like(m, e, pack))
    assert an.scalar_curvature_trace_check(m, s).passed


def test_f5dim3_torse_forming(f5):
    m, pack = f5
    torse = an.detect_torse_forming_xi(m, pack)
    assert torse.present and torse.f == sc(O.F5DIM3_F_VALUE, m) and not torse.parallel
    assert an.check_f5_condition(m, pack, torse.f)
    assert not an.is_sasaki_like(m, pack)[0]


def test_f5dim3_fits_and_theorem(f5):
    m, pack = f5
    e, s = fits(m, pack)
    assert values(e, m) == tuple(sc(v, m) for v in O.F5DIM3_EINSTEIN)
    assert values(s, m) == tuple(sc(v, m) for v in O.F5DIM3_SOLITON)
    assert e.label == "Einstein" and s.label == "eta-Ricci soliton"
    assert s.kind() is None
    torse = an.detect_torse_forming_xi(m, pack)
    checks, cases = an.verify_theorem_torse(m, e, s, torse, pack)
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]
    names = {c.name for c in checks}
    assert {"f_squared_from_abc", "f5_ricci_symmetric_iff_einstein", "f5_nabla_rho_formula"} <= names
    assert cases == ["iii"]


def test_f5dim3_wrong_f_fails_condition(f5):
    m, pack = f5
    assert not an.check_f5_condition(m, pack, sc("p", m))
    assert an.f5_residual(m, pack, sc("p", m)) is not None


def test_flat3_is_parallel_control(flat):
    m, pack = flat
    assert an.is_cosymplectic(pack.F)
    torse = an.detect_torse_forming_xi(m, pack)
    assert torse.parallel
    e, s = fits(m, pack)
    assert values(e, m) == (sc(0, m),) * 3 and values(s, m) == (sc(0, m),) * 3
    assert e.label == "Einstein" and s.label == "Ricci soliton" and s.kind() == "steady"
    _, cases = an.verify_theorem_torse(m, e, s, torse, pack)
    assert cases == ["ii", "iii"]


@pytest.mark.parametrize("p, kind", [(1, "expanding"), (-1, "expanding"), (Fraction(-1, 4), "shrinking"), (Fraction(-1, 2), "steady")])
def test_f5dim3_soliton_kind(f5, p, kind):
    m, _ = f5
    num = substitute_manifold(m, {"p": p})
    _, s = fits(num, compute_pack(num))
    assert s.kind() == kind


@pytest.mark.parametrize("seed", range(30))
def test_sasaki_and_torse_exclusive(seed):
    m = random_manifold(seed)
    pack = compute_pack(m)
    torse = an.detect_torse_forming_xi(m, pack)
    assert not (an.is_sasaki_like(m, pack)[0] and torse.present)


@pytest.mark.parametrize("seed", range(30))
def test_fits_round_trip(seed):
    m = random_manifold(seed)
    pack = compute_pack(m)
    e, s = fits(m, pack)
    d = m.dim
    if e.ok:
        a, b, c = e.outcome.values
        for i in range(d):
            for j in range(d):
                assert pack.ricci[i, j] == a * m.g[i, j] + b * pack.g_tilde[i, j] + c * m.eta[i] * m.eta[j]
        assert e.tau == e.tau_from_constants
    if s.ok:
        lam, mu, nu = s.outcome.values
        for i in range(d):
            for j in range(d):
                r = (pack.lie_xi_g[i, j] / 2 + pack.ricci[i, j] + lam * m.g[i, j]
                     + mu * pack.g_tilde[i, j] + nu * m.eta[i] * m.eta[j])
                assert r.is_zero()
        assert an.scalar_curvature_trace_check(m, s).passed
    else:
        assert s.outcome.status in ("inconsistent", "underdetermined")


def test_inconsistent_fit_has_witness():
    statuses = set()
    for seed in range(40):
        m = random_manifold(seed)
        pack = compute_pack(m)
        e, _ = fits(m, pack)
        statuses.add(e.outcome.status)
        if e.outcome.status == "inconsistent":
            i, j = e.outcome.witness
            assert 0 <= i < 3 and 0 <= j < 3
    assert "inconsistent" in statuses


def test_eta_ricci_case_2():
    out = an.eta_ricci_from_tau(Fraction(-3, 2), 1)
    assert out.case == 2
    assert out.pairs() == O.ETA_RICCI_CASE2


def test_eta_ricci_matches_f5dim3_at_p_1(f5):
    out = an.eta_ricci_from_tau(-6, 1)
    assert out.case == 1
    branch = next(b for b in out.branches if b[0] == -1)
    m, _ = f5
    num = substitute_manifold(m, {"p": 1})
    _, s = fits(num, compute_pack(num))
    lam, _, nu = (v.to_fraction() for v in s.outcome.values)
    assert (branch[2], branch[3]) == (lam, nu) == (3, -1)


def test_eta_ricci_irrational_and_domain():
    out = an.eta_ricci_from_tau(-1, 1)
    assert not out.exact and out.f_squared == Fraction(1, 6) and out.case == 3
    with pytest.raises(DomainError):
        an.eta_ricci_from_tau(0, 1)
    with pytest.raises(DomainError):
        an.eta_ricci_from_tau(-1, 0)
