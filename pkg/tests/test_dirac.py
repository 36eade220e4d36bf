"""Dirac defect spinors, boundary traces, domain membership and the squared operator."""

import math

import numpy as np
import pytest

from src.errors import ConfigError, RegularPartError
from src.specfun import bessel_k
from src.symmetry import (
    TRACE_NAMES,
    DiracCharges,
    DiracSpinor,
    apply_dirac,
    dirac_defect_xi,
    dirac_membership,
    dirac_square_charges,
    dirac_traces,
    dirac_traces_numeric,
)

SQRT_2PI = math.sqrt(2 * math.pi)


def test_defect_xi_components():
    plus = dirac_defect_xi(0.3, "+", 1.2, 0.5)
    minus = dirac_defect_xi(0.3, "-", 1.2, 0.5)
    assert plus[0] == pytest.approx(bessel_k(0.7, 1.2) * np.exp(-0.5j))
    assert plus[1] == pytest.approx(bessel_k(0.3, 1.2))
    assert minus[0] == plus[0]
    assert minus[1] == -plus[1]
    with pytest.raises(ConfigError):
        dirac_defect_xi(0.3, "0", 1.0, 0.0)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("side", ["+", "-"])
def test_defect_xi_eigen_relation(alpha, side):
    sign = 1.0 if side == "+" else -1.0

    def xi(r, theta):
        return dirac_defect_xi(alpha, side, r, theta)

    for r in np.linspace(0.8, 3.0, 5):
        for theta in (0.0, 2.0):
            np.testing.assert_allclose(apply_dirac(alpha, xi, r, theta), sign * 1j * xi(r, theta), atol=1e-5)


def test_charges_round_trip():
    q = np.array([1.0, 2j, -0.5, 0.25 + 1j])
    charges = DiracCharges.from_charge4(q)
    assert charges.q_up_m1 == 2j
    np.testing.assert_array_equal(charges.as_array(), q)


def test_closed_form_traces():
    spinor = DiracSpinor.from_extension(1.0, 0.0)
    assert dirac_traces(0.5, spinor, "c_up_alpha-1") == pytest.approx(SQRT_2PI, rel=1e-12)
    assert dirac_traces(0.5, spinor, "c_down_-alpha") == 0
    assert dirac_traces(0.5, spinor, "c_up_-alpha") == 0
    flipped = DiracSpinor.from_extension(1.0, math.pi)
    assert dirac_traces(0.5, flipped, "c_up_alpha-1") == pytest.approx(0, abs=1e-15)
    assert dirac_traces(0.5, flipped, "c_down_-alpha") == pytest.approx(SQRT_2PI, rel=1e-12)


def test_trace_errors():
    spinor = DiracSpinor(a=1.0, regular=lambda r, theta: np.array([1.0, 0.0]), regular_vanishes=False)
    with pytest.raises(RegularPartError):
        dirac_traces(0.3, spinor, "c_up_alpha-1")
    with pytest.raises(RegularPartError):
        dirac_traces_numeric(0.3, spinor, "c_up_alpha-1")
    with pytest.raises(ConfigError):
        dirac_traces(0.3, DiracSpinor(a=1.0), "c_up")
    with pytest.raises(ConfigError):
        dirac_traces_numeric(0.3, DiracSpinor(a=1.0), "c_up_alpha-1", radii=(1e-3, 1e-4))


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("which", ["c_up_alpha-1", "c_down_-alpha"])
def test_numeric_leading_traces(alpha, which):
    spinor = DiracSpinor.from_extension(0.8 - 0.3j, 1.1)
    assert dirac_traces_numeric(alpha, spinor, which) == pytest.approx(dirac_traces(alpha, spinor, which), abs=1e-7)


def test_numeric_traces_ignore_vanishing_regular_part():
    spinor = DiracSpinor.from_extension(1.0, 0.4, regular=lambda r, theta: np.array([r * np.exp(-1j * theta), r ** 2]))
    value = dirac_traces_numeric(0.3, spinor, "c_up_alpha-1")
    assert value == pytest.approx(dirac_traces(0.3, spinor, "c_up_alpha-1"), abs=1e-6)


@pytest.mark.parametrize("gamma_angle", [0.0, 0.7, math.pi, 4.0])
def test_membership(gamma_angle):
    spinor = DiracSpinor.from_extension(1.3 + 0.2j, gamma_angle)
    assert dirac_membership(0.35, gamma_angle, spinor)
    assert not dirac_membership(0.35, gamma_angle + 0.5, spinor)


def test_membership_cot_relation():
    alpha, gamma_angle = 0.3, 1.2
    spinor = DiracSpinor.from_extension(1.0, gamma_angle)
    c_up = dirac_traces(alpha, spinor, "c_up_alpha-1")
    c_down = dirac_traces(alpha, spinor, "c_down_-alpha")
    ratio = 1j / math.tan(gamma_angle / 2) * 2 ** (1 - 2 * alpha) * math.gamma(1 - alpha) / math.gamma(alpha)
    assert c_up == pytest.approx(ratio * c_down, rel=1e-12)


def test_trace_names():
    assert TRACE_NAMES == ("c_up_-alpha", "c_up_alpha-1", "c_down_-alpha", "c_down_alpha-1")


@pytest.mark.parametrize("gamma_angle", [0.0, 0.5, 1.0, math.pi, 4.5])
def test_square_charges(gamma_angle):
    report = dirac_square_charges(0.3, gamma_angle)
    assert report.regularized_determinant == pytest.approx(4 * np.exp(1j * gamma_angle), abs=1e-12)
    assert report.kernel_dimension == 0
    assert report.only_trivial
    assert report.forced_zero == ("q_up0", "q_down_m1")
    if gamma_angle in (0.0, math.pi):
        assert report.determinant is None
    else:
        assert report.determinant == pytest.approx(2j / math.sin(gamma_angle), rel=1e-12)
