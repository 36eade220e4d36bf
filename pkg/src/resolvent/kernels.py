"""
Resolvent Kernels
Friedrichs kernel, single-layer potentials and the Krein correction
"""
import cmath
import logging
import math

import numpy as np
from scipy.integrate import quad

from src.config.numerics_config import (
    DEFAULT_TOL,
    KERNEL_DECAY_MARGIN,
    KERNEL_S_MAX,
    KERNEL_SERIES_MAX_RHO,
    MAX_PARTIAL_WAVES,
    PARTIAL_WAVE_BLOCK,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    SINGULAR_RCOND,
)
from src.errors import (
    CoincidencePointError,
    SpectralPointError,
    TruncationError,
    ZeroArgumentError,
)
from src.extensions.defect import defect_vector
from src.extensions.family import ExtensionParam, lambda_weyl
from src.extensions.flux import as_charge4, as_flux, as_point, as_spectral_point
from src.specfun import bessel_ik_product, bessel_k

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def invert_boundary_matrix(matrix: np.ndarray, operation: str, error_cls=SpectralPointError) -> np.ndarray:
    """
    Invert Lambda + Theta, refusing numerically singular matrices

    Args:
        matrix: 4x4 complex matrix
        operation: Name reported on failure

    Returns:
        The inverse
    """
    sv = np.linalg.svd(matrix, compute_uv=False)
    if sv[-1] <= SINGULAR_RCOND * max(1.0, sv[0]):
        raise error_cls(
            f"Lambda + Theta is singular (smallest singular value {sv[-1]:.3e})", operation
        )
    return np.linalg.inv(matrix)


def _off_origin(x, operation: str):
    x = as_point(x)
    if x.r == 0:
        raise ZeroArgumentError(f"{operation}: point at the flux line r = 0", operation)
    return x


def friedrichs_partial_wave(alpha, z, mode: int, r: float, r_prime: float) -> complex:
    """Single summand I_nu(w r<) K_nu(w r>) / (2 pi) of the Friedrichs kernel"""
    alpha = as_flux(alpha)
    w = as_spectral_point(z).w
    lo, hi = min(r, r_prime), max(r, r_prime)
    if lo <= 0:
        raise ZeroArgumentError("friedrichs_partial_wave: radius must be positive", "friedrichs_partial_wave")
    nu = np.array([alpha.order(mode)])
    return complex(bessel_ik_product(nu, w * lo, w * hi)[0]) / TWO_PI


def _friedrichs_sum(alpha, w: complex, r: float, r_prime: float, dtheta: float, tol: float) -> complex:
    lo, hi = min(r, r_prime), max(r, r_prime)
    rho = lo / hi
    a, b = w * lo, w * hi
    gap = min(alpha.nu0, alpha.nu1)
    total = 0j
    n = 0
    while True:
        block = np.arange(n, n + PARTIAL_WAVE_BLOCK)
        modes = np.concatenate([block, -block - 1])
        nu = np.abs(modes + alpha.alpha)
        total += np.sum(bessel_ik_product(nu, a, b) * np.exp(1j * modes * dtheta))
        n += PARTIAL_WAVE_BLOCK
        nu_next = n + gap
        if nu_next > abs(b):
            tail = rho ** nu_next / (nu_next * (1.0 - rho)) / TWO_PI
            if tail < tol:
                break
        if 2 * n >= MAX_PARTIAL_WAVES:
            raise TruncationError(
                f"kernel series not converged with {2 * n} partial waves (r/r' = {rho:.6f})",
                "friedrichs_kernel",
            )
    logger.debug("friedrichs kernel: %d partial waves, r/r' = %.4f", 2 * n, rho)
    return total / TWO_PI


def _cexpm1(x: float, y: float) -> complex:
    """exp(x + iy) - 1 without cancellation near the origin"""
    half = math.sin(0.5 * y)
    return complex(math.expm1(x) * math.cos(y) - 2.0 * half * half, math.exp(x) * math.sin(y))


def _integral_upper_limit(w: complex, r: float, r_prime: float) -> float:
    # K_0(w R(s)) has dropped by exp(-KERNEL_DECAY_MARGIN) relative to s = 0
    target = r + r_prime + KERNEL_DECAY_MARGIN / w.real
    ratio = (target * target - r * r - r_prime * r_prime) / (2.0 * r * r_prime)
    upper = math.acosh(max(ratio, 1.0))
    if upper > KERNEL_S_MAX:
        logger.debug("kernel integral: upper limit %.1f capped at %.1f (Re w = %.3e)", upper, KERNEL_S_MAX, w.real)
        return KERNEL_S_MAX
    return max(upper, 1.0)


def _complex_quad(func, lo: float, hi: float, points=None) -> complex:
    options = dict(limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, points=points)
    re, _ = quad(lambda s: func(s).real, lo, hi, **options)
    im, _ = quad(lambda s: func(s).imag, lo, hi, **options)
    return complex(re, im)


def friedrichs_kernel_integral(alpha, z, x, x_prime) -> complex:
    """
    Scalar Friedrichs kernel from its angular integral representation

    G = [e^{-i alpha phi} K_0(w d) - (1/pi) int_0^inf F(s, phi) K_0(w R(s)) ds] / (2 pi)
    with phi = theta - theta' in [-pi, pi], d = |x - x'|, R(s)^2 = r^2 + r'^2 + 2 r r' cosh s and
    F = sin(pi alpha) [e^{-alpha s} / (1 + e^{-s + i phi}) + e^{(alpha - 1) s} / (e^{-s} + e^{i phi})].
    The pair of poles of F at s = +-i(phi -+ pi) is removed in closed form, so the
    quadrature stays smooth as |phi| approaches pi. At |phi| = pi the first term
    becomes cos(pi alpha) K_0(w d).

    Converges absolutely for every x != x', equal radii included.

    Args:
        alpha: Reduced flux
        z: Spectral point off [0, inf)
        x: Polar point off the origin
        x_prime: Polar point off the origin, distinct from x

    Returns:
        Diagonal entry of the kernel block
    """
    alpha = as_flux(alpha)
    a = alpha.alpha
    w = as_spectral_point(z).w
    x = _off_origin(x, "friedrichs_kernel")
    x_prime = _off_origin(x_prime, "friedrichs_kernel")
    r, rp = x.r, x_prime.r
    phi = math.remainder(x.theta - x_prime.theta, TWO_PI)
    dist = math.sqrt(max(r * r + rp * rp - 2.0 * r * rp * math.cos(phi), 0.0))
    if dist == 0:
        raise CoincidencePointError("kernel is singular at x = x'", "friedrichs_kernel")

    sin_pa = math.sin(math.pi * a)
    k_near = bessel_k(0, w * (r + rp))
    upper = _integral_upper_limit(w, r, rp)

    def k_far(s: float) -> complex:
        return bessel_k(0, w * math.sqrt(r * r + rp * rp + 2.0 * r * rp * math.cosh(s)))

    sign = 1.0 if phi >= 0 else -1.0
    psi = phi - sign * math.pi
    if psi == 0:
        head = math.cos(math.pi * a) * bessel_k(0, w * dist)

        def integrand(s: float) -> complex:
            return sin_pa * (math.exp(-a * s) - math.exp((a - 1.0) * s)) / -math.expm1(-s) * k_far(s)

        tail = _complex_quad(integrand, 0.0, upper, points=[1.0] if upper > 1.0 else None)
    else:
        head = cmath.exp(-1j * a * phi) * bessel_k(0, w * dist)
        residue = cmath.exp(-1j * a * psi)
        back_phase = cmath.exp(-1j * phi)

        def integrand(s: float) -> complex:
            pair = -(math.exp(-a * s) / _cexpm1(-s, psi) + math.exp((a - 1.0) * s) * back_phase / _cexpm1(-s, -psi))
            pole = residue * 2j * psi / (s * s + psi * psi)
            return sin_pa * (pair * k_far(s) - pole * k_near)

        breaks = [p for p in sorted({min(abs(psi), 0.5), 1.0}) if p < upper]
        tail = _complex_quad(integrand, 0.0, upper, points=breaks or None)
        tail += sin_pa * k_near * residue * 2j * math.copysign(1.0, psi) * math.atan(upper / abs(psi))
    return (head - tail / math.pi) / TWO_PI


def friedrichs_kernel(alpha, z, x, x_prime, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Integral kernel of the Friedrichs resolvent (H - z)^{-1}

    Args:
        alpha: Reduced flux
        z: Spectral point off [0, inf)
        x: Polar point (r, theta)
        x_prime: Polar point (r', theta') distinct from x
        tol: Bound on the truncated partial-wave tail

    Returns:
        Spin-diagonal 2x2 block

    Radii closer than KERNEL_SERIES_MAX_RHO go through the angular integral,
    where the partial-wave series converges slowly or only conditionally.
    """
    alpha = as_flux(alpha)
    point = as_spectral_point(z)
    x = _off_origin(x, "friedrichs_kernel")
    x_prime = _off_origin(x_prime, "friedrichs_kernel")
    dtheta = math.remainder(x.theta - x_prime.theta, TWO_PI)
    if x.r == x_prime.r and dtheta == 0:
        raise CoincidencePointError("kernel is singular at x = x'", "friedrichs_kernel")
    if min(x.r, x_prime.r) >= KERNEL_SERIES_MAX_RHO * max(x.r, x_prime.r):
        value = friedrichs_kernel_integral(alpha, point, x, x_prime)
    else:
        value = _friedrichs_sum(alpha, point.w, x.r, x_prime.r, dtheta, tol)
    return np.diag([value, value])


def single_layer_branch(alpha, w: complex, q, x) -> np.ndarray:
    """G q at x for an arbitrary branch parameter w"""
    alpha = as_flux(alpha)
    q = as_charge4(q, "single_layer")
    x = _off_origin(x, "single_layer")
    g = defect_vector(alpha, w, x.r, x.theta) * q
    return np.array([g[0] + g[1], g[2] + g[3]])


def single_layer(alpha, z, q, x) -> np.ndarray:
    """
    Single-layer potential G(z) q evaluated at x

    Args:
        alpha: Reduced flux
        z: Spectral point
        q: Charges in flat order
        x: Polar point off the origin

    Returns:
        Spinor (up, down)
    """
    return single_layer_branch(alpha, as_spectral_point(z).w, q, x)


def krein_correction(alpha, ext: ExtensionParam, z, x, x_prime) -> np.ndarray:
    """Rank-four part of the Krein formula, zero for Friedrichs"""
    alpha = as_flux(alpha)
    theta = ext.theta_matrix(alpha)
    if theta is None:
        return np.zeros((2, 2), dtype=complex)
    point = as_spectral_point(z)
    x = _off_origin(x, "krein_correction")
    x_prime = _off_origin(x_prime, "krein_correction")
    m = invert_boundary_matrix(lambda_weyl(alpha, point) + theta, "krein_kernel")
    left = defect_vector(alpha, point.w, x.r, x.theta)
    right = defect_vector(alpha, point.w, x_prime.r, -x_prime.theta)
    full = left[:, None] * m * right[None, :]
    return full.reshape(2, 2, 2, 2).sum(axis=(1, 3))


def krein_kernel(alpha, ext: ExtensionParam, z, x, x_prime, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Resolvent kernel of the extension: Friedrichs kernel plus Krein correction

    Args:
        alpha: Reduced flux
        ext: Extension descriptor
        z: Spectral point, not an eigenvalue
        x: Polar point
        x_prime: Polar point distinct from x
        tol: Partial-wave tolerance of the Friedrichs part

    Returns:
        2x2 kernel block
    """
    base = friedrichs_kernel(alpha, z, x, x_prime, tol)
    if ext.is_friedrichs:
        return base
    return base + krein_correction(alpha, ext, z, x, x_prime)
