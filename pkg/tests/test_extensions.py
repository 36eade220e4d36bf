"""Flux reduction, boundary matrices, defect functions and the Weyl identity."""

import math

import numpy as np
import pytest

from conftest import random_hermitian
from src.errors import (
    BranchCutError,
    ConfigError,
    FluxRangeError,
    IntegerFluxError,
    NonHermitianError,
    NonPositiveError,
    ZeroArgumentError,
)
from src.extensions import (
    ChannelIndex,
    ExtensionParam,
    FluxAlpha,
    SpectralPoint,
    as_herm4,
    beta_from_theta,
    boundary_form,
    defect_g,
    defect_g_vn,
    defect_norm,
    defect_norm_numeric,
    defect_vn_norm_numeric,
    l_matrix,
    lambda_limit_pm,
    lambda_weyl,
    lambda_weyl_zero,
    reduce_flux,
    small_r_expansion,
    theta_from_beta,
    unit_charge,
    weyl_gram,
    weyl_gram_closed_form,
)
from src.specfun import bessel_k
from src.utils import radial_residual


def test_reduce_flux():
    alpha, winding = reduce_flux(2.3)
    assert alpha.alpha == pytest.approx(0.3, abs=1e-12)
    assert winding == 2
    alpha, winding = reduce_flux(-0.25)
    assert alpha.alpha == 0.75
    assert winding == -1
    with pytest.raises(IntegerFluxError):
        reduce_flux(3.0)


def test_flux_guard_band():
    with pytest.raises(FluxRangeError):
        FluxAlpha(1e-8)
    with pytest.raises(FluxRangeError):
        FluxAlpha(1.0 - 1e-8)
    np.testing.assert_array_equal(FluxAlpha(0.25).channel_orders(), [0.25, 0.75, 0.25, 0.75])


def test_channel_ordering():
    assert ChannelIndex("up", 0).flat == 0
    assert ChannelIndex("up", -1).flat == 1
    assert ChannelIndex("down", 0).flat == 2
    assert ChannelIndex("down", -1).flat == 3
    assert ChannelIndex.from_flat(3) == ChannelIndex("down", -1)
    np.testing.assert_array_equal(unit_charge(ChannelIndex("down", 0)), [0, 0, 1, 0])


def test_spectral_point_branch():
    assert SpectralPoint(-1.0).w == 1.0
    assert SpectralPoint(-4.0).w == pytest.approx(2.0)
    point = SpectralPoint(-1.0 + 2.0j)
    assert point.w.real > 0
    assert point.w ** 2 == pytest.approx(-point.z)
    assert point.conjugate().w == pytest.approx(point.w.conjugate())
    with pytest.raises(BranchCutError):
        SpectralPoint(2.0)


def test_l_matrix():
    np.testing.assert_allclose(l_matrix(0.5, 1.0), 0.5 * math.pi * np.eye(4), rtol=1e-14)
    np.testing.assert_allclose(l_matrix(0.25, 1.0), 2.2214415 * np.eye(4), rtol=1e-7)
    with pytest.raises(NonPositiveError):
        l_matrix(0.5, 0.0)


def test_lambda_reference_point():
    for alpha in (0.25, 0.5, 0.75):
        assert np.all(lambda_weyl(alpha, -1.0) == 0)
    np.testing.assert_allclose(lambda_weyl_zero(0.5), -0.5 * math.pi * np.eye(4))


def test_lambda_limits():
    plus = lambda_limit_pm(0.5, 1.0, "+")
    np.testing.assert_allclose(np.diag(plus), 0.5 * math.pi * (-1 - 1j) * np.ones(4), atol=1e-14)
    minus = lambda_limit_pm(0.3, 2.0, "-")
    np.testing.assert_allclose(minus, lambda_limit_pm(0.3, 2.0, "+").conj(), atol=1e-14)
    # not Hermitian
    assert not np.allclose(plus, plus.conj().T)
    with pytest.raises(ConfigError):
        lambda_limit_pm(0.5, 1.0, "0")


def test_lambda_limit_is_boundary_value():
    eps = 1e-9
    for side, sign in (("+", 1.0), ("-", -1.0)):
        approach = lambda_weyl(0.3, 2.0 + sign * 1j * eps)
        np.testing.assert_allclose(approach, lambda_limit_pm(0.3, 2.0, side), atol=1e-7)


def test_beta_theta_shift(rng):
    np.testing.assert_allclose(theta_from_beta(0.25, np.zeros((4, 4))), 2.2214415 * np.eye(4), rtol=1e-7)
    beta = random_hermitian(rng)
    np.testing.assert_allclose(beta_from_theta(0.4, theta_from_beta(0.4, beta)), beta, atol=1e-14)
    ext = ExtensionParam.from_beta(beta)
    np.testing.assert_allclose(ext.resolve(0.4).matrix, theta_from_beta(0.4, beta))


def test_herm4_validation():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(NonHermitianError):
        as_herm4(m)
    with pytest.raises(ConfigError):
        as_herm4(np.eye(3))
    with pytest.raises(ConfigError):
        ExtensionParam("friedrichs", np.eye(4))
    assert ExtensionParam.friedrichs().theta_matrix(0.5) is None


def test_boundary_form_is_real(rng):
    beta = random_hermitian(rng)
    q = rng.normal(size=4) + 1j * rng.normal(size=4)
    m = l_matrix(0.3, 1.5) + beta
    assert boundary_form(0.3, beta, 1.5, q) == pytest.approx(np.vdot(q, m @ q).real)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
@pytest.mark.parametrize("mode", [0, -1])
@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_defect_norm_quadrature(alpha, mode, lam):
    assert defect_norm_numeric(alpha, mode, lam) == pytest.approx(defect_norm(alpha, mode, lam), rel=1e-8)


def test_defect_norm_values():
    assert defect_norm(0.5, 0, 1.0) == pytest.approx(math.pi / 4, rel=1e-14)
    assert defect_norm(0.5, 0, 2.0) == pytest.approx(math.pi / 8, rel=1e-14)


def test_defect_g_value():
    assert defect_g(0.5, 0, 1.0, 1.0, 0.0) == pytest.approx(0.1839362, abs=1e-7)
    with pytest.raises(ZeroArgumentError):
        defect_g(0.5, 0, 1.0, 0.0, 0.0)
    with pytest.raises(ConfigError):
        defect_g(0.5, 1, 1.0, 1.0, 0.0)


def test_small_r_expansion():
    c_sing, c_reg = small_r_expansion(0.5, 0, 1.0)
    assert c_sing == pytest.approx(1.2533141, rel=1e-7)
    assert c_reg == pytest.approx(-1.2533141, rel=1e-7)
    # K_nu(r) against its two leading powers
    alpha, lam, r = 0.3, 1.0, 1e-4
    c_sing, c_reg = small_r_expansion(alpha, 0, lam)
    g = defect_g(alpha, 0, lam, r, 0.0) * math.sqrt(2 * math.pi)
    assert g.real == pytest.approx(c_sing * r ** -0.3 + c_reg * r ** 0.3, rel=1e-6)


def test_von_neumann_defect_normalised():
    assert abs(defect_g_vn(0.5, 0, "+", 1.0, 0.0)) > 0
    for alpha in (0.25, 0.5, 0.75):
        for mode in (0, -1):
            for side in ("+", "-"):
                assert defect_vn_norm_numeric(alpha, mode, side) == pytest.approx(1.0, abs=1e-6)


def test_von_neumann_prefactor():
    r = 1.3
    rotated = complex(np.exp(-0.25j * math.pi) * r)
    ratio = abs(defect_g_vn(0.5, 0, "+", r, 0.0)) * math.sqrt(2 * math.pi) / abs(bessel_k(0.5, rotated))
    assert ratio == pytest.approx(0.9488404, rel=1e-7)


@pytest.mark.parametrize("alpha", [0.3, 0.5])
@pytest.mark.parametrize("mode", [0, -1])
def test_defect_equation(alpha, mode):
    lam = 1.4

    def profile(r):
        return defect_g(alpha, mode, lam, r, 0.0) * math.sqrt(2 * math.pi)

    for r in np.linspace(0.5, 3.0, 6):
        assert abs(radial_residual(alpha, mode, profile, r, -lam ** 2)) < 1e-4


def test_weyl_identity(rng):
    for _ in range(10):
        alpha = rng.uniform(0.1, 0.9)
        z, w = (-rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(-1.0, 1.0)) for _ in range(2))
        lhs = lambda_weyl(alpha, z) - lambda_weyl(alpha, w)
        gram = weyl_gram(alpha, z, w)
        np.testing.assert_allclose(lhs, (w - z) * gram, atol=1e-6)
        np.testing.assert_allclose(gram, weyl_gram_closed_form(alpha, z, w), rtol=1e-6)
