"""Generalized eigenfunctions, amplitudes and the partial-wave S-matrix."""

import cmath
import math

import numpy as np
import pytest

from conftest import random_hermitian
from src.errors import ConfigError, ForwardDirectionError, InvalidRangeError, NonPositiveError
from src.extensions import ExtensionParam, unit_charge
from src.resolvent import single_layer
from src.scattering import (
    ChannelPhase,
    WaveVector,
    abel_amplitude,
    extension_amplitude,
    friedrichs_amplitude,
    friedrichs_cross_section,
    friedrichs_eigenfunction,
    friedrichs_partial_sum,
    partial_wave_cutoff,
    plane_wave,
    plane_wave_partial,
    s_matrix_angular,
    s_matrix_phases,
    single_layer_limit,
    single_layer_limit_hankel,
    tau_trace,
    tau_vector,
    theta_amplitude,
    theta_correction_matrix,
    theta_cross_section,
    theta_eigenfunction,
)
from src.specfun import gamma
from src.utils import pauli_residual

POINTS = [(0.3, 0.2), (1.0, 1.9), (2.4, 4.0), (3.0, 5.5)]


def test_wave_vector():
    kvec = WaveVector(2.0, 7.0)
    assert kvec.energy == 4.0
    assert kvec.omega == pytest.approx(7.0 - 2 * math.pi)
    assert kvec.direction("-") == pytest.approx(kvec.omega + math.pi)
    assert WaveVector.from_energy(2.25).k == 1.5
    with pytest.raises(NonPositiveError):
        WaveVector(0.0)
    with pytest.raises(NonPositiveError):
        WaveVector.from_energy(-1.0)


def test_partial_wave_cutoff():
    assert partial_wave_cutoff(0.0, 1e-10) == 1
    n = partial_wave_cutoff(20.0, 1e-10)
    assert n >= 20
    assert (10.0 ** n) / math.factorial(n) < 1e-10


def test_plane_wave_expansion():
    kvec = WaveVector(1.7, 0.8)
    for x in POINTS:
        np.testing.assert_allclose(plane_wave_partial("down", kvec, x), plane_wave("down", kvec, x), atol=1e-10)
    assert plane_wave("up", kvec, (1.0, 0.0))[1] == 0


def test_friedrichs_eigenfunction_origin():
    kvec = WaveVector(1.0, 0.3)
    np.testing.assert_array_equal(friedrichs_eigenfunction(0.4, "up", kvec, "+", (0.0, 0.0)), [0, 0])


def test_friedrichs_zero_flux_limit():
    kvec = WaveVector(1.2, 0.5)
    for x in POINTS:
        diff = friedrichs_eigenfunction(1e-5, "up", kvec, "+", x) - plane_wave("up", kvec, x)
        assert np.max(np.abs(diff)) <= 5e-5


def test_friedrichs_helmholtz():
    kvec = WaveVector(1.3, 0.4)
    for sign in ("+", "-"):

        def psi(r, theta, sign=sign):
            return friedrichs_eigenfunction(0.3, "up", kvec, sign, (r, theta), tol=1e-14)

        for r in np.linspace(0.5, 3.0, 4):
            assert np.max(np.abs(pauli_residual(0.3, psi, r, 1.1, kvec.energy))) < 1e-4


def test_sommerfeld_pairing():
    k, omega = 1.1, 0.6
    for r, theta in POINTS:
        reflected = friedrichs_eigenfunction(0.35, "up", WaveVector(k, omega + math.pi), "+", (r, 2 * omega - theta))
        direct = friedrichs_eigenfunction(0.35, "up", WaveVector(k, omega), "-", (r, theta))
        np.testing.assert_allclose(np.conj(reflected), direct, atol=1e-12)


def test_tau_trace():
    kvec = WaveVector(1.5, 0.7)
    assert tau_trace(0.3, "up", kvec, "+", 2) == 0
    np.testing.assert_array_equal(tau_vector(0.3, "down", kvec, "-")[:2], [0, 0])
    assert abs(tau_trace(0.3, "up", kvec, "+", 1)) == pytest.approx(1.5 ** 0.7 / math.sqrt(2 * math.pi), rel=1e-12)


@pytest.mark.parametrize("mode", [0, -1])
def test_tau_trace_is_leading_coefficient(mode):
    # near the flux line the channel behaves like tau (r/2)^nu / Gamma(nu + 1) e^{i l theta} / sqrt(2 pi)
    alpha, r, theta = 0.3, 1e-6, 0.9
    nu = abs(mode + alpha)
    kvec = WaveVector(1.4, 0.2)
    channel = 0 if mode == 0 else 1
    value = friedrichs_partial_sum(alpha, "up", kvec, "+", (r, theta), [mode])[0]
    expected = (
        tau_trace(alpha, "up", kvec, "+", channel) * (r / 2) ** nu / gamma(nu + 1)
        * np.exp(1j * mode * theta) / math.sqrt(2 * math.pi)
    )
    assert value == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize("side", ["+", "-"])
def test_single_layer_limit(side, rng):
    q = rng.normal(size=4) + 1j * rng.normal(size=4)
    for x in POINTS:
        k_form = single_layer_limit(0.3, 1.7, side, q, x)
        np.testing.assert_allclose(single_layer_limit_hankel(0.3, 1.7, side, q, x), k_form, rtol=1e-10)
        z = 1.7 + (1e-9j if side == "+" else -1e-9j)
        np.testing.assert_allclose(single_layer(0.3, z, q, x), k_form, atol=1e-6)
    with pytest.raises(NonPositiveError):
        single_layer_limit(0.3, 0.0, side, q, (1.0, 0.0))


def test_theta_correction_matrix(friedrichs, half_pi_theta):
    np.testing.assert_allclose(theta_correction_matrix(0.5, half_pi_theta, 1.0, "-"), 2j / math.pi * np.eye(4), atol=1e-14)
    np.testing.assert_allclose(theta_correction_matrix(0.5, half_pi_theta, 1.0, "+"), -2j / math.pi * np.eye(4), atol=1e-14)
    with pytest.raises(ConfigError):
        theta_correction_matrix(0.5, friedrichs, 1.0, "+")


def test_theta_eigenfunction_friedrichs(friedrichs):
    kvec = WaveVector(1.0, 0.2)
    x = (1.3, 0.4)
    np.testing.assert_array_equal(
        theta_eigenfunction(0.4, friedrichs, "up", kvec, "+", x),
        friedrichs_eigenfunction(0.4, "up", kvec, "+", x),
    )


def test_theta_eigenfunction_helmholtz(rng):
    ext = ExtensionParam.from_theta(random_hermitian(rng))
    kvec = WaveVector(0.9, 1.2)
    for sign in ("+", "-"):

        def psi(r, theta, sign=sign):
            return theta_eigenfunction(0.3, ext, "down", kvec, sign, (r, theta), tol=1e-14)

        for r in np.linspace(0.5, 3.0, 4):
            assert np.max(np.abs(pauli_residual(0.3, psi, r, 2.2, kvec.energy))) < 1e-4


def test_extension_amplitude_value(half_pi_theta, friedrichs):
    kvec = WaveVector(1.0, 0.0)
    value = extension_amplitude(0.5, half_pi_theta, kvec, "+", ("up", "up"), 0.0)
    assert value == pytest.approx(0.1795871 - 0.1795871j, abs=1e-7)
    assert extension_amplitude(0.5, half_pi_theta, kvec, "+", ("up", "down"), 0.0) == 0
    assert extension_amplitude(0.5, friedrichs, kvec, "+", ("up", "up"), 0.0) == 0
    with pytest.raises(ConfigError):
        extension_amplitude(0.5, half_pi_theta, kvec, "+", ("up",), 0.0)


@pytest.mark.parametrize("sign", ["+", "-"])
@pytest.mark.parametrize("spins", [("up", "up"), ("up", "down")])
def test_far_field_amplitude(sign, spins, rng):
    alpha = 0.3
    ext = ExtensionParam.from_theta(random_hermitian(rng))
    kvec = WaveVector(1.3, 0.7)
    theta_dir = 2.0
    slot = 0 if spins[1] == "up" else 1
    outgoing = 1.0 if sign == "+" else -1.0
    radii = np.array([50.0, 100.0, 200.0])
    scaled = []
    for r in radii:
        x = (r, theta_dir)
        diff = theta_eigenfunction(alpha, ext, spins[0], kvec, sign, x) - friedrichs_eigenfunction(alpha, spins[0], kvec, sign, x)
        scaled.append(diff[slot] * math.sqrt(r) * np.exp(outgoing * 1j * kvec.k * r))
    scaled = np.array(scaled)
    limit = complex(np.polyfit(1 / radii, scaled.real, 2)[-1], np.polyfit(1 / radii, scaled.imag, 2)[-1])
    assert limit == pytest.approx(extension_amplitude(alpha, ext, kvec, sign, spins, theta_dir), abs=1e-5)


def test_friedrichs_amplitude_relation(friedrichs):
    kvec = WaveVector(1.6, 0.4)
    for theta_dir in (1.0, 2.5, 4.0):
        f_minus = theta_amplitude(0.3, friedrichs, kvec, "-", ("up", "up"), theta_dir)
        expected = friedrichs_amplitude(0.3, kvec.energy, theta_dir - kvec.omega)
        assert 2 * math.pi * f_minus == pytest.approx(expected, rel=1e-12)
    assert theta_amplitude(0.3, friedrichs, kvec, "-", ("up", "down"), 1.0) == 0


def test_forward_direction(friedrichs):
    kvec = WaveVector(1.0, 0.4)
    with pytest.raises(ForwardDirectionError):
        theta_amplitude(0.3, friedrichs, kvec, "-", ("up", "up"), 0.4)
    with pytest.raises(ForwardDirectionError):
        friedrichs_amplitude(0.3, 1.0, 0.0)
    with pytest.raises(ForwardDirectionError):
        friedrichs_cross_section(0.3, 1.0, 2 * math.pi)
    # the extension summand alone is regular there
    value = theta_amplitude(0.3, ExtensionParam.krein(), kvec, "-", ("up", "up"), 0.4, include_friedrichs=False)
    assert np.isfinite(value)


def test_cross_sections(friedrichs):
    assert friedrichs_cross_section(0.5, 1.0, math.pi) == pytest.approx(1 / (2 * math.pi), rel=1e-14)
    kvec = WaveVector(1.2, 0.3)
    for theta_dir in (1.0, 3.0, 5.0):
        assert theta_cross_section(0.3, friedrichs, kvec, ("up", "up"), theta_dir) == pytest.approx(
            friedrichs_cross_section(0.3, kvec.energy, theta_dir - kvec.omega), rel=1e-12
        )
    assert theta_cross_section(0.3, friedrichs, kvec, ("up", "down"), 1.0) == 0


def test_abel_amplitude():
    estimate = abel_amplitude(0.3, 1.0, 0.5 * math.pi)
    assert abs(estimate - friedrichs_amplitude(0.3, 1.0, 0.5 * math.pi)) < 1e-4
    with pytest.raises(NonPositiveError):
        abel_amplitude(0.3, 1.0, 1.0, epsilons=(0.1, 0.0))


def test_s_matrix_phases():
    phases = s_matrix_phases(0.3, (-3, 3))
    assert [p.ell for p in phases] == list(range(-3, 4))
    for p in phases:
        expected = np.exp(-0.3j * math.pi) if p.ell >= 0 else np.exp(0.3j * math.pi)
        assert p.phase == pytest.approx(expected, abs=1e-14)
    with pytest.raises(InvalidRangeError):
        s_matrix_phases(0.3, (2, 1))
    with pytest.raises(ConfigError):
        ChannelPhase(0, 1.1)


def test_s_matrix_angular_unitary_on_band(rng):
    lo, hi, n = -5, 5, 32
    matrix = s_matrix_angular(0.3, (lo, hi), n)
    grid = 2 * math.pi * np.arange(n) / n
    coeffs = rng.normal(size=hi - lo + 1) + 1j * rng.normal(size=hi - lo + 1)
    v = sum(c * np.exp(1j * ell * grid) for c, ell in zip(coeffs, range(lo, hi + 1)))
    assert np.linalg.norm(matrix @ v) == pytest.approx(np.linalg.norm(v), rel=1e-12)
    with pytest.raises(ConfigError):
        s_matrix_angular(0.3, (lo, hi), 8)


def test_half_flux_values():
    f = friedrichs_amplitude(0.5, 1.0, math.pi)
    assert f == pytest.approx(-0.2820948 - 0.2820948j, abs=1e-7)
    assert abs(f) ** 2 == pytest.approx(1 / (2 * math.pi), rel=1e-12)
    assert tau_trace(0.5, "up", WaveVector(1.0, 0.0), "+", 0) == pytest.approx(0.2820948 + 0.2820948j, abs=1e-7)
    assert tau_trace(0.5, "up", WaveVector(4.0, 0.0), "+", 0) == pytest.approx(0.5641896 + 0.5641896j, abs=1e-7)
    limit = single_layer_limit(0.5, 1.0, "+", unit_charge(0), (1.0, 0.0))
    assert limit[0] == pytest.approx(0.2701512 + 0.4207355j, abs=1e-7)
    assert limit[0] == pytest.approx(cmath.exp(1j) / 2, rel=1e-12)
    assert limit[1] == 0


def test_half_flux_partial_sum():
    # l = 0 and l = -1 share the order 1/2: 2 e^{i pi/4} J_{1/2}(1) / (2 pi)
    value = friedrichs_partial_sum(0.5, "up", WaveVector(1.0, 0.0), "+", (1.0, 0.0), [0, -1])
    closed = 2 * cmath.exp(0.25j * math.pi) * math.sqrt(2 / math.pi) * math.sin(1.0) / (2 * math.pi)
    assert value[0] == pytest.approx(closed, rel=1e-12)
    assert value[0] == pytest.approx(0.1511174 + 0.1511174j, abs=1e-7)
    assert value[1] == 0


def test_single_layer_limit_hankel_random(rng):
    for _ in range(20):
        alpha = rng.uniform(0.05, 0.95)
        lam = rng.uniform(0.1, 10.0)
        side = "+" if rng.random() < 0.5 else "-"
        q = rng.normal(size=4) + 1j * rng.normal(size=4)
        x = (rng.uniform(0.1, 5.0), rng.uniform(0.0, 2 * math.pi))
        np.testing.assert_allclose(
            single_layer_limit_hankel(alpha, lam, side, q, x),
            single_layer_limit(alpha, lam, side, q, x),
            rtol=1e-9,
            atol=1e-12,
        )


def test_amplitude_matches_cross_section(rng):
    for _ in range(50):
        alpha = rng.uniform(0.01, 0.99)
        energy = rng.uniform(0.05, 20.0)
        omega = rng.uniform(0.01, 2 * math.pi - 0.01)
        f = friedrichs_amplitude(alpha, energy, omega)
        assert abs(f) ** 2 == pytest.approx(friedrichs_cross_section(alpha, energy, omega), rel=1e-10)


@pytest.mark.parametrize("omega", [0.3, 1.0, 2.2, math.pi])
def test_cross_section_reflection(omega):
    sigma = friedrichs_cross_section(0.3, 1.7, omega)
    assert friedrichs_cross_section(0.3, 1.7, 2 * math.pi - omega) == pytest.approx(sigma, rel=1e-12)
    f = friedrichs_amplitude(0.3, 1.7, omega)
    assert abs(friedrichs_amplitude(0.3, 1.7, 2 * math.pi - omega)) == pytest.approx(abs(f), rel=1e-12)


@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4])
def test_flux_conjugation(alpha):
    for omega in (0.5, 2.0, 4.0):
        assert friedrichs_amplitude(1 - alpha, 2.0, omega) == pytest.approx(friedrichs_amplitude(alpha, 2.0, omega), rel=1e-12)
        assert friedrichs_cross_section(1 - alpha, 2.0, omega) == pytest.approx(
            friedrichs_cross_section(alpha, 2.0, omega), rel=1e-12
        )


def test_amplitude_vanishes_with_flux():
    previous = abs(friedrichs_amplitude(1e-2, 1.0, 0.5 * math.pi))
    for alpha in (1e-3, 1e-4, 1e-5):
        value = abs(friedrichs_amplitude(alpha, 1.0, 0.5 * math.pi))
        # |f| is proportional to sin(pi alpha)
        assert value == pytest.approx(previous / 10, rel=1e-3)
        previous = value
    assert previous < 1e-4
