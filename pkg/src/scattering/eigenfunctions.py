"""
Generalized Eigenfunctions
Plane waves, Friedrichs and extension eigenfunctions, their traces and boundary single layers
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.special import gammaln

from src.config.numerics_config import DEFAULT_TOL, MAX_PARTIAL_WAVES
from src.errors import ConfigError, NonPositiveError, SingularMatrixError, TruncationError
from src.extensions.defect import SQRT_2PI
from src.extensions.family import (
    ExtensionParam,
    boundary_branch,
    check_side,
    lambda_limit_pm,
    opposite_side,
)
from src.extensions.flux import CHANNELS, ChannelIndex, as_flux, as_point, spin_slot
from src.resolvent.kernels import invert_boundary_matrix, single_layer_branch
from src.specfun import bessel_j_orders, hankel1

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WaveVector:
    """Incident wave vector k = (k, omega) with energy k^2"""

    k: float
    omega: float = 0.0
    energy: float = field(init=False)

    def __post_init__(self):
        k = float(self.k)
        if not (np.isfinite(k) and k > 0):
            raise NonPositiveError(f"wave number must be positive, got {k}", "WaveVector")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "omega", float(self.omega) % TWO_PI)
        object.__setattr__(self, "energy", k * k)

    @classmethod
    def from_energy(cls, energy: float, omega: float = 0.0) -> "WaveVector":
        if not energy > 0:
            raise NonPositiveError(f"energy must be positive, got {energy}", "WaveVector")
        return cls(math.sqrt(energy), omega)

    def direction(self, sign: str) -> float:
        """omega_+ = omega, omega_- = omega + pi"""
        check_side(sign)
        return self.omega if sign == "+" else self.omega + math.pi


def _spinor(spin: str, value: complex) -> np.ndarray:
    out = np.zeros(2, dtype=complex)
    out[spin_slot(spin)] = value
    return out


def partial_wave_cutoff(x: float, tol: float) -> int:
    """Smallest n >= x with (x/2)^n / n! < tol, a bound on J_nu(x) for nu >= n"""
    if x <= 0:
        return 1
    n = max(1, int(math.ceil(x)))
    log_tol = math.log(tol)
    while n * math.log(x / 2.0) - gammaln(n + 1.0) >= log_tol:
        n += 1
        if n > MAX_PARTIAL_WAVES:
            raise TruncationError(f"no partial-wave cutoff below {MAX_PARTIAL_WAVES} for kr = {x}", "partial_wave_cutoff")
    return n


def plane_wave(spin: str, kvec: WaveVector, x) -> np.ndarray:
    """(1/2 pi) e^{i k.x} in the given spin slot"""
    x = as_point(x)
    phase = kvec.k * x.r * math.cos(x.theta - kvec.omega)
    return _spinor(spin, np.exp(1j * phase) / TWO_PI)


def plane_wave_partial(spin: str, kvec: WaveVector, x, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Plane wave from its partial-wave expansion sum_l i^|l| J_|l|(kr) e^{il(theta - omega)}"""
    x = as_point(x)
    kr = kvec.k * x.r
    n = partial_wave_cutoff(kr, tol / 4.0)
    ells = np.arange(-n, n + 1)
    orders = np.abs(ells).astype(float)
    terms = np.exp(1j * ells * (x.theta - kvec.omega) + 0.5j * math.pi * orders) * bessel_j_orders(orders, kr)
    return _spinor(spin, np.sum(terms) / TWO_PI)


def friedrichs_partial_sum(alpha, spin: str, kvec: WaveVector, sign: str, x, modes: Iterable[int]) -> np.ndarray:
    """
    Selected partial waves of the Friedrichs eigenfunction

    Args:
        alpha: Reduced flux
        spin: Spin slot carrying the wave
        kvec: Incident wave vector
        sign: '+' or '-'
        x: Polar point
        modes: Angular momenta l to include

    Returns:
        Spinor (up, down)
    """
    alpha = as_flux(alpha)
    x = as_point(x)
    omega_s = kvec.direction(sign)
    pm = 1.0 if sign == "+" else -1.0
    ells = np.asarray(list(modes), dtype=float)
    orders = np.abs(ells + alpha.alpha)
    phases = np.exp(1j * ells * (x.theta - omega_s) + pm * 0.5j * math.pi * orders)
    return _spinor(spin, np.sum(phases * bessel_j_orders(orders, kvec.k * x.r)) / TWO_PI)


def friedrichs_eigenfunction(alpha, spin: str, kvec: WaveVector, sign: str, x, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Generalized eigenfunction of the Friedrichs extension

    The l-sum is truncated once the Bessel tail drops below tol.

    Args:
        alpha: Reduced flux
        spin: Spin slot
        kvec: Wave vector
        sign: '+' or '-'
        x: Polar point, r >= 0
        tol: Truncation tolerance

    Returns:
        Spinor (up, down)
    """
    x = as_point(x)
    n = partial_wave_cutoff(kvec.k * x.r, tol / 4.0)
    logger.debug("friedrichs_eigenfunction: l in [%d, %d] at kr = %.3g", -n - 1, n, kvec.k * x.r)
    return friedrichs_partial_sum(alpha, spin, kvec, sign, x, range(-n - 1, n + 1))


def _ik_power(k: float, nu: np.ndarray, sign: str) -> np.ndarray:
    """(+ik)^nu or (-ik)^nu on the principal branch"""
    pm = 1.0 if sign == "+" else -1.0
    return k ** nu * np.exp(pm * 0.5j * math.pi * nu)


def tau_trace(alpha, spin: str, kvec: WaveVector, sign: str, channel) -> complex:
    """Boundary trace of the Friedrichs eigenfunction in one channel"""
    alpha = as_flux(alpha)
    check_side(sign)
    spin_slot(spin)
    channel = channel if isinstance(channel, ChannelIndex) else ChannelIndex.from_flat(int(channel))
    if channel.spin != spin:
        return 0j
    nu = np.array(alpha.order(channel.mode))
    value = _ik_power(kvec.k, nu, sign) * np.exp(-1j * channel.mode * kvec.direction(sign)) / SQRT_2PI
    return complex(value)


def tau_vector(alpha, spin: str, kvec: WaveVector, sign: str) -> np.ndarray:
    """All four traces in flat order"""
    return np.array([tau_trace(alpha, spin, kvec, sign, ch) for ch in CHANNELS])


def _check_energy(lambda_energy: float, operation: str) -> float:
    lam = float(lambda_energy)
    if not (np.isfinite(lam) and lam > 0):
        raise NonPositiveError(f"{operation}: energy must be positive, got {lam}", operation)
    return lam


def single_layer_limit(alpha, lambda_energy: float, side: str, q, x) -> np.ndarray:
    """
    Boundary value G(lambda +/- i0) q

    Uses the defect functions at the rotated branch w = e^{-/+ i pi/2} sqrt(lambda).

    Args:
        alpha: Reduced flux
        lambda_energy: lambda > 0
        side: '+' or '-'
        q: Charges in flat order
        x: Polar point off the origin

    Returns:
        Spinor (up, down)
    """
    lam = _check_energy(lambda_energy, "single_layer_limit")
    return single_layer_branch(alpha, boundary_branch(lam, side), q, x)


def single_layer_limit_hankel(alpha, lambda_energy: float, side: str, q, x) -> np.ndarray:
    """Same boundary value through H^(1)_nu, the cross-check of single_layer_limit"""
    alpha = as_flux(alpha)
    lam = _check_energy(lambda_energy, "single_layer_limit_hankel")
    check_side(side)
    x = as_point(x)
    # validates q and r through the K form first
    single_layer_limit(alpha, lam, side, q, x)
    q = np.asarray(q, dtype=complex).reshape(-1)
    k = math.sqrt(lam)
    values = []
    for flat, ch in enumerate(CHANNELS):
        nu = alpha.order(ch.mode)
        h = hankel1(nu, k * x.r)
        if side == "+":
            radial = 0.5j * math.pi * lam ** (nu / 2.0) * h
        else:
            radial = -0.5j * math.pi * lam ** (nu / 2.0) * np.conj(h)
        values.append(q[flat] * radial * np.exp(1j * ch.mode * x.theta) / SQRT_2PI)
    return np.array([values[0] + values[1], values[2] + values[3]])


def theta_correction_matrix(alpha, ext: ExtensionParam, k: float, sign: str) -> np.ndarray:
    """
    [Lambda(k^2 -/+ i0) + Theta]^{-1}, the matrix acting on the traces

    The eigenfunction of sign + carries its correction on the '-' side and
    vice versa, so both terms obey the same radiation condition.

    Args:
        alpha: Reduced flux
        ext: Finite-Theta extension
        k: Wave number
        sign: Eigenfunction sign

    Returns:
        Complex 4x4 matrix
    """
    alpha = as_flux(alpha)
    theta = ext.theta_matrix(alpha)
    if theta is None:
        raise ConfigError("Friedrichs extension has no correction matrix", "theta_correction_matrix")
    side = opposite_side(check_side(sign))
    matrix = lambda_limit_pm(alpha, k * k, side) + theta
    return invert_boundary_matrix(matrix, "theta_eigenfunction", SingularMatrixError)


def theta_eigenfunction(
    alpha,
    ext: ExtensionParam,
    spin: str,
    kvec: WaveVector,
    sign: str,
    x,
    tol: float = DEFAULT_TOL
) -> np.ndarray:
    """
    Generalized eigenfunction of the extension with parameter Theta

    Args:
        alpha: Reduced flux
        ext: Extension descriptor
        spin: Spin slot of the incident wave
        kvec: Wave vector
        sign: '+' or '-'
        x: Polar point
        tol: Partial-wave tolerance of the Friedrichs part

    Returns:
        Spinor (up, down)
    """
    alpha = as_flux(alpha)
    base = friedrichs_eigenfunction(alpha, spin, kvec, sign, x, tol)
    if ext.is_friedrichs:
        return base
    charges = theta_correction_matrix(alpha, ext, kvec.k, sign) @ tau_vector(alpha, spin, kvec, sign)
    return base + single_layer_limit(alpha, kvec.energy, opposite_side(sign), charges, x)
