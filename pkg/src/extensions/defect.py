"""
Defect Functions
Solutions of (H + lambda^2) g = 0 away from the flux, their norms and small-r data
"""
import math
from typing import Tuple

import numpy as np
from scipy.integrate import quad

from src.config.numerics_config import QUAD_EPSABS, QUAD_EPSREL, QUAD_LIMIT
from src.errors import ConfigError, NonPositiveError, ZeroArgumentError
from src.extensions.family import check_side
from src.extensions.flux import MODES, as_flux
from src.specfun import bessel_k, gamma

SQRT_2PI = math.sqrt(2.0 * math.pi)


def _check_mode(mode: int) -> int:
    if mode not in MODES:
        raise ConfigError(f"mode must be 0 or -1, got {mode}", "defect")
    return mode


def _check_radius(r: float, operation: str) -> float:
    if r == 0:
        raise ZeroArgumentError(f"{operation}: singular at r = 0", operation)
    if r < 0:
        raise NonPositiveError(f"{operation}: radius must be positive, got {r}", operation)
    return float(r)


def defect_vector(alpha, w: complex, r: float, theta: float) -> np.ndarray:
    """
    Channel values w^nu K_nu(w r) e^{i l theta} / sqrt(2 pi) in flat order

    Args:
        alpha: Reduced flux
        w: Branch parameter with Re w >= 0, w != 0
        r: Radius > 0
        theta: Angle

    Returns:
        Complex array of length 4
    """
    alpha = as_flux(alpha)
    r = _check_radius(r, "defect_vector")
    w = complex(w)
    values = []
    for mode in (0, -1, 0, -1):
        nu = alpha.order(mode)
        values.append(w ** nu * bessel_k(nu, w * r) * np.exp(1j * mode * theta) / SQRT_2PI)
    return np.array(values)


def defect_g(alpha, mode: int, lam: float, r: float, theta: float) -> complex:
    """lambda^nu K_nu(lambda r) e^{i l theta} / sqrt(2 pi)"""
    alpha = as_flux(alpha)
    _check_mode(mode)
    if not lam > 0:
        raise NonPositiveError(f"lambda must be positive, got {lam}", "defect_g")
    r = _check_radius(r, "defect_g")
    nu = alpha.order(mode)
    return lam ** nu * bessel_k(nu, lam * r) * np.exp(1j * mode * theta) / SQRT_2PI


def defect_norm(alpha, mode: int, lam: float) -> float:
    """Squared L2 norm pi nu lambda^{2nu - 2} / (2 sin pi alpha)"""
    alpha = as_flux(alpha)
    _check_mode(mode)
    if not lam > 0:
        raise NonPositiveError(f"lambda must be positive, got {lam}", "defect_norm")
    nu = alpha.order(mode)
    return math.pi * nu * lam ** (2 * nu - 2) / (2.0 * alpha.sin_pi_alpha)


def defect_norm_numeric(alpha, mode: int, lam: float) -> float:
    """Quadrature of 2 pi int r |g|^2 dr"""
    alpha = as_flux(alpha)
    _check_mode(mode)
    nu = alpha.order(mode)

    def integrand(r):
        return r * (lam ** nu * bessel_k(nu, lam * r).real) ** 2

    split = 1.0 / lam
    head, _ = quad(integrand, 0.0, split, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    tail, _ = quad(integrand, split, 40.0 / lam, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    return head + tail


def small_r_expansion(alpha, mode: int, lam: float) -> Tuple[float, float]:
    """
    Leading coefficients of lambda^nu K_nu(lambda r) at r -> 0

    Returns:
        (c_singular, c_regular) multiplying r^{-nu} and r^{nu}
    """
    alpha = as_flux(alpha)
    _check_mode(mode)
    if not lam > 0:
        raise NonPositiveError(f"lambda must be positive, got {lam}", "small_r_expansion")
    nu = alpha.order(mode)
    c_singular = gamma(nu) / 2.0 ** (1.0 - nu)
    c_regular = gamma(-nu) * lam ** (2.0 * nu) / 2.0 ** (1.0 + nu)
    return c_singular, c_regular


def _vn_prefactor(nu: float, side: str) -> complex:
    sgn = -1.0 if side == "+" else 1.0
    return np.exp(sgn * 1j * math.pi * nu / 4.0) * math.sqrt(4.0 / math.pi * math.cos(math.pi * nu / 2.0))


def defect_g_vn(alpha, mode: int, side: str, r: float, theta: float) -> complex:
    """Normalised von Neumann defect function of ker(H* -/+ i)"""
    alpha = as_flux(alpha)
    _check_mode(mode)
    check_side(side)
    r = _check_radius(r, "defect_g_vn")
    nu = alpha.order(mode)
    rotation = np.exp((-1j if side == "+" else 1j) * math.pi / 4.0)
    return _vn_prefactor(nu, side) * bessel_k(nu, rotation * r) * np.exp(1j * mode * theta) / SQRT_2PI


def defect_vn_norm_numeric(alpha, mode: int, side: str) -> float:
    """Quadrature of the squared L2 norm of defect_g_vn"""
    alpha = as_flux(alpha)
    _check_mode(mode)
    check_side(side)
    nu = alpha.order(mode)
    scale = abs(_vn_prefactor(nu, side)) ** 2
    rotation = np.exp((-1j if side == "+" else 1j) * math.pi / 4.0)

    def integrand(r):
        return scale * r * abs(bessel_k(nu, rotation * r)) ** 2

    head, _ = quad(integrand, 0.0, 1.0, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    tail, _ = quad(integrand, 1.0, 40.0, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    return head + tail
