"""
Dirac Boundary Conditions
Defect spinors, boundary traces, gamma-domain membership and the squared-operator charge check
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from src.config.numerics_config import DIRAC_ANGULAR_POINTS, DIRAC_MEMBERSHIP_TOL, DIRAC_TRACE_RADII
from src.errors import ConfigError, RegularPartError
from src.extensions.family import check_side
from src.extensions.flux import as_charge4, as_flux
from src.specfun import bessel_k, gamma
from src.utils.finite_difference import DEFAULT_STEP, d_dr, d_dtheta

logger = logging.getLogger(__name__)

TRACE_UP_MINUS_ALPHA = "c_up_-alpha"
TRACE_UP_ALPHA_MINUS_1 = "c_up_alpha-1"
TRACE_DOWN_MINUS_ALPHA = "c_down_-alpha"
TRACE_DOWN_ALPHA_MINUS_1 = "c_down_alpha-1"
TRACE_NAMES = (
    TRACE_UP_MINUS_ALPHA,
    TRACE_UP_ALPHA_MINUS_1,
    TRACE_DOWN_MINUS_ALPHA,
    TRACE_DOWN_ALPHA_MINUS_1,
)


@dataclass(frozen=True)
class DiracCharges:
    """Pauli charges named by spin and mode, flat order up0, up-1, down0, down-1"""

    q_up0: complex = 0j
    q_up_m1: complex = 0j
    q_down0: complex = 0j
    q_down_m1: complex = 0j

    @classmethod
    def from_charge4(cls, q) -> "DiracCharges":
        q = as_charge4(q, "DiracCharges")
        return cls(*(complex(v) for v in q))

    def as_array(self) -> np.ndarray:
        return np.array([self.q_up0, self.q_up_m1, self.q_down0, self.q_down_m1], dtype=complex)


@dataclass(frozen=True)
class DiracSpinor:
    """
    psi = a xi_+ + b xi_- + regular part

    The regular part is a callable (r, theta) -> spinor; traces are defined
    only when it is flagged as vanishing at the origin.
    """

    a: complex = 0j
    b: complex = 0j
    regular: Optional[Callable[[float, float], np.ndarray]] = None
    regular_vanishes: bool = True

    @classmethod
    def from_extension(cls, mu: complex, gamma_angle: float, regular=None) -> "DiracSpinor":
        """mu (xi_+ + e^{i gamma} xi_-), the defect part of the gamma domain"""
        return cls(a=complex(mu), b=complex(mu) * np.exp(1j * gamma_angle), regular=regular)

    def evaluate(self, alpha, r: float, theta: float) -> np.ndarray:
        value = self.a * dirac_defect_xi(alpha, "+", r, theta) + self.b * dirac_defect_xi(alpha, "-", r, theta)
        if self.regular is not None:
            value = value + np.asarray(self.regular(r, theta), dtype=complex)
        return value


def dirac_defect_xi(alpha, side: str, r: float, theta: float) -> np.ndarray:
    """(K_{1-alpha}(r) e^{-i theta}, +/- K_alpha(r)), spanning ker(H_D* -/+ i)"""
    alpha = as_flux(alpha)
    check_side(side)
    sign = 1.0 if side == "+" else -1.0
    upper = bessel_k(1.0 - alpha.alpha, r) * np.exp(-1j * theta)
    lower = sign * bessel_k(alpha.alpha, r)
    return np.array([upper, lower], dtype=complex)


def _p_const(alpha) -> float:
    """2^{-alpha} Gamma(1 - alpha), the r^{alpha-1} coefficient of K_{1-alpha}"""
    return 2.0 ** (-alpha.alpha) * gamma(1.0 - alpha.alpha)


def _q_const(alpha) -> float:
    """2^{alpha-1} Gamma(alpha), the r^{-alpha} coefficient of K_alpha"""
    return 2.0 ** (alpha.alpha - 1.0) * gamma(alpha.alpha)


def _check_trace_name(which: str) -> str:
    if which not in TRACE_NAMES:
        raise ConfigError(f"unknown trace {which!r}, expected one of {TRACE_NAMES}", "dirac_traces")
    return which


def dirac_traces(alpha, spinor: DiracSpinor, which: str) -> complex:
    """
    Boundary value of a spinor in the gamma-domain description

    Args:
        alpha: Reduced flux
        spinor: Descriptor a xi_+ + b xi_- + regular part
        which: One of TRACE_NAMES

    Returns:
        The trace
    """
    alpha = as_flux(alpha)
    _check_trace_name(which)
    if not spinor.regular_vanishes:
        raise RegularPartError("regular part must vanish at the origin", "dirac_traces")
    if which == TRACE_UP_ALPHA_MINUS_1:
        return complex((spinor.a + spinor.b) * _p_const(alpha))
    if which == TRACE_DOWN_MINUS_ALPHA:
        return complex((spinor.a - spinor.b) * _q_const(alpha))
    return 0j


def _angular_mode(spinor: DiracSpinor, alpha, r: float, slot: int, mode: int, points: int) -> complex:
    thetas = 2.0 * math.pi * np.arange(points) / points
    values = np.array([spinor.evaluate(alpha, r, th)[slot] for th in thetas])
    return complex(np.mean(values * np.exp(-1j * mode * thetas)))


def dirac_traces_numeric(
    alpha,
    spinor: DiracSpinor,
    which: str,
    radii: Sequence[float] = DIRAC_TRACE_RADII,
    points: int = DIRAC_ANGULAR_POINTS
) -> complex:
    """
    Trace as an extrapolated small-r limit

    The angular mode carrying the trace is projected out at each radius and
    scaled by the inverse power; the result is fitted on {1, r^{2 nu}, r^2}
    for the leading traces and on {1, r^{-nu-e}, r^{nu-e}} otherwise, where
    nu is the channel order and e the trace exponent.

    Args:
        alpha: Reduced flux
        spinor: Descriptor
        which: One of TRACE_NAMES
        radii: Sample radii, at least three
        points: Angular quadrature points

    Returns:
        Extrapolated constant term
    """
    alpha = as_flux(alpha)
    _check_trace_name(which)
    if not spinor.regular_vanishes:
        raise RegularPartError("regular part must vanish at the origin", "dirac_traces_numeric")
    radii = np.asarray(radii, dtype=float)
    if radii.size < 3:
        raise ConfigError("need at least three radii to extrapolate", "dirac_traces_numeric")

    a = alpha.alpha
    if which in (TRACE_UP_MINUS_ALPHA, TRACE_UP_ALPHA_MINUS_1):
        slot, mode, nu = 0, -1, 1.0 - a
    else:
        slot, mode, nu = 1, 0, a
    exponent = {
        TRACE_UP_MINUS_ALPHA: -a,
        TRACE_UP_ALPHA_MINUS_1: a - 1.0,
        TRACE_DOWN_MINUS_ALPHA: -a,
        TRACE_DOWN_ALPHA_MINUS_1: a - 1.0,
    }[which]

    scaled = np.array([
        _angular_mode(spinor, alpha, r, slot, mode, points) * r ** (-exponent) for r in radii
    ])
    if math.isclose(exponent, -nu):
        powers = (0.0, 2.0 * nu, 2.0)
    else:
        powers = (0.0, -nu - exponent, nu - exponent)
    basis = np.stack([radii ** p for p in powers], axis=1)
    coeffs, *_ = np.linalg.lstsq(basis.astype(complex), scaled, rcond=None)
    logger.debug("dirac_traces_numeric: %s fit %s", which, coeffs)
    return complex(coeffs[0])


def dirac_membership(alpha, gamma_angle: float, spinor: DiracSpinor, tol: float = DIRAC_MEMBERSHIP_TOL) -> bool:
    """
    Whether the spinor lies in the domain of the extension with angle gamma

    The cot(gamma / 2) relation is checked in the pole-free form
    (1 - e^{i gamma}) Q c_up_{alpha-1} = (1 + e^{i gamma}) P c_down_{-alpha}.

    Args:
        alpha: Reduced flux
        gamma_angle: Extension angle in [0, 2 pi)
        spinor: Descriptor
        tol: Scaled tolerance

    Returns:
        True on membership
    """
    alpha = as_flux(alpha)
    traces = {name: dirac_traces(alpha, spinor, name) for name in TRACE_NAMES}
    c_up = traces[TRACE_UP_ALPHA_MINUS_1]
    c_down = traces[TRACE_DOWN_MINUS_ALPHA]
    scale = max(1.0, abs(c_up), abs(c_down))
    if abs(traces[TRACE_UP_MINUS_ALPHA]) > tol * scale or abs(traces[TRACE_DOWN_ALPHA_MINUS_1]) > tol * scale:
        return False
    e = np.exp(1j * gamma_angle)
    relation = (1.0 - e) * _q_const(alpha) * c_up - (1.0 + e) * _p_const(alpha) * c_down
    return bool(abs(relation) <= tol * scale * max(_p_const(alpha), _q_const(alpha)))


@dataclass(frozen=True, eq=False)
class DiracSquareReport:
    """Linear conditions on the Pauli charges of a spinor in the domain of (H_D^gamma)^2"""

    gamma: float
    forced_zero: Tuple[str, ...]
    system: np.ndarray
    relations: np.ndarray
    regularized_determinant: complex
    determinant: Optional[complex]
    kernel_dimension: int

    @property
    def only_trivial(self) -> bool:
        return self.kernel_dimension == 0


def dirac_square_charges(alpha, gamma_angle: float) -> DiracSquareReport:
    """
    Charges allowed for Pauli functions in the domain of (H_D^gamma)^2

    q_up0 and q_down-1 vanish outright. The pair (q_up-1, q_down0) obeys
    q_up-1 = i cot(gamma/2) q_down0 and q_up-1 = -i tan(gamma/2) q_down0,
    multiplied through by (1 -/+ e^{i gamma}) so that gamma = 0, pi stay
    regular. The determinant of that 2x2 system is 4 e^{i gamma}, so only
    q = 0 survives and the square is the Friedrichs extension.

    Args:
        alpha: Reduced flux
        gamma_angle: Extension angle

    Returns:
        DiracSquareReport
    """
    as_flux(alpha)
    e = np.exp(1j * gamma_angle)
    relations = np.array([[1.0 - e, -(1.0 + e)], [1.0 + e, -(1.0 - e)]], dtype=complex)
    system = np.zeros((4, 4), dtype=complex)
    system[0, 0] = 1.0
    system[1, 3] = 1.0
    system[2:, [1, 2]] = relations
    rank = np.linalg.matrix_rank(system, tol=1e-12)
    sin_g = math.sin(gamma_angle)
    determinant = None if abs(sin_g) < 1e-15 else 2j / sin_g
    report = DiracSquareReport(
        gamma=float(gamma_angle),
        forced_zero=("q_up0", "q_down_m1"),
        system=system,
        relations=relations,
        regularized_determinant=complex(np.linalg.det(relations)),
        determinant=determinant,
        kernel_dimension=4 - int(rank),
    )
    logger.debug("dirac_square_charges: gamma = %.6f, kernel dimension %d", gamma_angle, report.kernel_dimension)
    return report


def apply_dirac(alpha, psi: Callable[[float, float], np.ndarray], r: float, theta: float,
                h: float = DEFAULT_STEP) -> np.ndarray:
    """
    Dirac operator sigma.(p - A) in polar form by central differences

    upper = e^{-i theta} (-i d_r - (d_theta + i alpha) / r) psi_down
    lower = e^{+i theta} (-i d_r + (d_theta + i alpha) / r) psi_up

    Args:
        alpha: Reduced flux
        psi: Callable (r, theta) -> spinor
        r: Radius > h
        theta: Angle
        h: Step

    Returns:
        Spinor
    """
    alpha = as_flux(alpha)
    a = alpha.alpha
    value = np.asarray(psi(r, theta), dtype=complex)
    dr = d_dr(psi, r, theta, h)
    dth = d_dtheta(psi, r, theta, h)
    upper = np.exp(-1j * theta) * (-1j * dr[1] - (dth[1] + 1j * a * value[1]) / r)
    lower = np.exp(1j * theta) * (-1j * dr[0] + (dth[0] + 1j * a * value[0]) / r)
    return np.array([upper, lower])
