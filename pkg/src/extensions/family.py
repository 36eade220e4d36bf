"""
Extension Family
Boundary matrices L, Lambda, Lambda_pm and the beta <-> Theta correspondence
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import quad

from src.config.numerics_config import (
    HERMITIAN_TOL,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
)
from src.errors import ConfigError, NonHermitianError, NonPositiveError
from src.extensions.flux import FluxAlpha, as_flux, as_spectral_point
from src.specfun import bessel_k

logger = logging.getLogger(__name__)

EXTENSION_KINDS = ("friedrichs", "theta", "beta")
SIDES = ("+", "-")


def as_herm4(matrix, operation: str = "as_herm4") -> np.ndarray:
    """
    Validate a 4x4 Hermitian matrix in the flat channel ordering

    Args:
        matrix: Array-like 4x4
        operation: Name reported on failure

    Returns:
        Complex read-only array
    """
    try:
        m = np.array(matrix, dtype=complex)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"matrix is not numeric: {e}", operation)
    if m.shape != (4, 4):
        raise ConfigError(f"expected a 4x4 matrix, got shape {m.shape}", operation)
    if not np.all(np.isfinite(m)):
        raise ConfigError("matrix has non-finite entries", operation)
    scale = max(1.0, np.linalg.norm(m))
    if np.linalg.norm(m - m.conj().T) > HERMITIAN_TOL * scale:
        raise NonHermitianError("matrix is not Hermitian", operation)
    m.setflags(write=False)
    return m


def check_side(side: str) -> str:
    if side not in SIDES:
        raise ConfigError(f"side must be '+' or '-', got {side!r}", "check_side")
    return side


def opposite_side(side: str) -> str:
    return "-" if check_side(side) == "+" else "+"


@dataclass(frozen=True, eq=False)
class ExtensionParam:
    """Friedrichs, a finite Theta, or a beta still to be converted"""

    kind: str
    matrix: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind not in EXTENSION_KINDS:
            raise ConfigError(f"unknown extension kind {self.kind!r}", "ExtensionParam")
        if self.kind == "friedrichs":
            if self.matrix is not None:
                raise ConfigError("friedrichs extension takes no matrix", "ExtensionParam")
        else:
            object.__setattr__(self, "matrix", as_herm4(self.matrix, "ExtensionParam"))

    @classmethod
    def friedrichs(cls) -> "ExtensionParam":
        return cls("friedrichs")

    @classmethod
    def krein(cls) -> "ExtensionParam":
        return cls("theta", np.zeros((4, 4), dtype=complex))

    @classmethod
    def from_theta(cls, theta) -> "ExtensionParam":
        return cls("theta", theta)

    @classmethod
    def from_beta(cls, beta) -> "ExtensionParam":
        return cls("beta", beta)

    @property
    def is_friedrichs(self) -> bool:
        return self.kind == "friedrichs"

    def theta_matrix(self, alpha) -> Optional[np.ndarray]:
        """Theta in the flat ordering, None for Friedrichs"""
        if self.kind == "friedrichs":
            return None
        if self.kind == "beta":
            return theta_from_beta(alpha, self.matrix)
        return np.array(self.matrix)

    def resolve(self, alpha) -> "ExtensionParam":
        """Convert a beta descriptor to the equivalent Theta descriptor"""
        if self.kind == "beta":
            return ExtensionParam.from_theta(theta_from_beta(alpha, self.matrix))
        return self

    def __repr__(self) -> str:
        if self.is_friedrichs:
            return "ExtensionParam(friedrichs)"
        return f"ExtensionParam({self.kind}, {np.array2string(self.matrix, precision=4)})"


def l_matrix(alpha, lam: float) -> np.ndarray:
    """Diagonal L(lambda) with entries pi lambda^{2 nu} / (2 sin pi alpha)"""
    alpha = as_flux(alpha)
    if not lam > 0:
        raise NonPositiveError(f"lambda must be positive, got {lam}", "l_matrix")
    return np.diag(alpha.weyl_scale * lam ** (2.0 * alpha.channel_orders())).astype(complex)


def weyl_from_branch(alpha, w: complex) -> np.ndarray:
    """Diagonal pi/(2 sin pi alpha) [w^{2 nu} - 1] for a branch value w"""
    alpha = as_flux(alpha)
    w = complex(w)
    return np.diag(alpha.weyl_scale * (w ** (2.0 * alpha.channel_orders()) - 1.0))


def lambda_weyl(alpha, z) -> np.ndarray:
    """
    Weyl matrix Lambda(z) for z off [0, inf)

    Args:
        alpha: Reduced flux
        z: Complex spectral parameter or SpectralPoint

    Returns:
        Complex diagonal 4x4 matrix, zero at z = -1
    """
    point = as_spectral_point(z)
    return weyl_from_branch(alpha, point.w)


def lambda_weyl_zero(alpha) -> np.ndarray:
    """Lambda(0) = -pi/(2 sin pi alpha) I, the z -> 0 limit"""
    alpha = as_flux(alpha)
    return -alpha.weyl_scale * np.eye(4, dtype=complex)


def lambda_limit_pm(alpha, lam: float, side: str) -> np.ndarray:
    """
    Boundary values Lambda(lambda +/- i0)

    The side '+' is the limit from the upper half plane, branch
    w = e^{-i pi/2} sqrt(lambda).

    Args:
        alpha: Reduced flux
        lam: Energy lambda > 0
        side: '+' or '-'

    Returns:
        Complex diagonal 4x4 matrix (not Hermitian)
    """
    alpha = as_flux(alpha)
    check_side(side)
    if not lam > 0:
        raise NonPositiveError(f"lambda must be positive, got {lam}", "lambda_limit_pm")
    nu = alpha.channel_orders()
    sgn = -1.0 if side == "+" else 1.0
    return np.diag(alpha.weyl_scale * (np.exp(sgn * 1j * math.pi * nu) * lam ** nu - 1.0))


def boundary_branch(lam: float, side: str) -> complex:
    """w = -i sqrt(lambda +/- i0) = e^{-/+ i pi/2} sqrt(lambda)"""
    check_side(side)
    return (-1j if side == "+" else 1j) * math.sqrt(lam)


def theta_from_beta(alpha, beta) -> np.ndarray:
    """Theta = beta + pi/(2 sin pi alpha) I"""
    alpha = as_flux(alpha)
    beta = as_herm4(beta, "theta_from_beta")
    return beta + alpha.weyl_scale * np.eye(4)


def beta_from_theta(alpha, theta) -> np.ndarray:
    """Inverse of theta_from_beta"""
    alpha = as_flux(alpha)
    theta = as_herm4(theta, "beta_from_theta")
    return theta - alpha.weyl_scale * np.eye(4)


def boundary_form(alpha, beta, lam: float, q) -> float:
    """Boundary contribution q* [L(lambda) + beta] q to the quadratic form"""
    q = np.asarray(q, dtype=complex)
    m = l_matrix(alpha, lam) + as_herm4(beta, "boundary_form")
    return float(np.real(np.vdot(q, m @ q)))


def _complex_quad(func, lo: float, hi: float) -> complex:
    re, _ = quad(lambda r: func(r).real, lo, hi, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    im, _ = quad(lambda r: func(r).imag, lo, hi, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL)
    return complex(re, im)


def weyl_gram(alpha, z, w) -> np.ndarray:
    """
    Diagonal Gram matrix of the single-layer profiles at z and w

    Entry: integral over r of r a^nu K_nu(a r) b^nu K_nu(b r), with
    a = -i sqrt(z), b = -i sqrt(w). Lambda(z) - Lambda(w) = (w - z) times this.

    Args:
        alpha: Reduced flux
        z: First spectral point
        w: Second spectral point

    Returns:
        Complex diagonal 4x4 matrix
    """
    alpha = as_flux(alpha)
    a = as_spectral_point(z).w
    b = as_spectral_point(w).w
    cutoff = 40.0 / (a.real + b.real)
    entries = {}
    for nu in (alpha.nu0, alpha.nu1):
        def integrand(r, nu=nu):
            return r * a ** nu * bessel_k(nu, a * r) * b ** nu * bessel_k(nu, b * r)
        split = min(1.0, cutoff)
        entries[nu] = _complex_quad(integrand, 0.0, split) + _complex_quad(integrand, split, max(cutoff, split))
    return np.diag([entries[nu] for nu in alpha.channel_orders()])


def weyl_gram_closed_form(alpha, z, w) -> np.ndarray:
    """Closed form pi (a^{2nu} - b^{2nu}) / (2 sin pi alpha (a^2 - b^2)) of weyl_gram"""
    alpha = as_flux(alpha)
    a = as_spectral_point(z).w
    b = as_spectral_point(w).w
    if a == b:
        raise ConfigError("closed-form Gram matrix needs z != w", "weyl_gram_closed_form")
    nu = alpha.channel_orders()
    return np.diag(math.pi * (a ** (2 * nu) - b ** (2 * nu)) / (2.0 * alpha.sin_pi_alpha * (a * a - b * b)))
