"""
Finite Differences
Central-difference applications of the radial and Pauli operators, used as residual oracles
"""
from typing import Callable

import numpy as np

from src.extensions.flux import as_flux

SpinorField = Callable[[float, float], np.ndarray]

DEFAULT_STEP = 1e-3


def d_dr(fn: Callable, r: float, theta: float, h: float = DEFAULT_STEP):
    return (np.asarray(fn(r + h, theta)) - np.asarray(fn(r - h, theta))) / (2.0 * h)


def d2_dr2(fn: Callable, r: float, theta: float, h: float = DEFAULT_STEP):
    centre = np.asarray(fn(r, theta))
    return (np.asarray(fn(r + h, theta)) - 2.0 * centre + np.asarray(fn(r - h, theta))) / (h * h)


def d_dtheta(fn: Callable, r: float, theta: float, h: float = DEFAULT_STEP):
    return (np.asarray(fn(r, theta + h)) - np.asarray(fn(r, theta - h))) / (2.0 * h)


def d2_dtheta2(fn: Callable, r: float, theta: float, h: float = DEFAULT_STEP):
    centre = np.asarray(fn(r, theta))
    return (np.asarray(fn(r, theta + h)) - 2.0 * centre + np.asarray(fn(r, theta - h))) / (h * h)


def radial_residual(alpha, mode: int, radial_fn: Callable[[float], complex], r: float, energy: float,
                    h: float = DEFAULT_STEP) -> complex:
    """
    (-d^2/dr^2 - (1/r) d/dr + nu^2/r^2 - E) f at r for one partial wave

    Args:
        alpha: Reduced flux
        mode: Angular momentum l, nu = |l + alpha|
        radial_fn: f(r)
        r: Radius > h
        energy: E (negative for bound states)
        h: Step

    Returns:
        Residual value
    """
    alpha = as_flux(alpha)
    nu = alpha.order(mode)
    f = complex(radial_fn(r))
    fp = (complex(radial_fn(r + h)) - complex(radial_fn(r - h))) / (2.0 * h)
    fpp = (complex(radial_fn(r + h)) - 2.0 * f + complex(radial_fn(r - h))) / (h * h)
    return -fpp - fp / r + (nu * nu / (r * r) - energy) * f


def pauli_residual(alpha, psi: SpinorField, r: float, theta: float, energy: float,
                   h: float = DEFAULT_STEP) -> np.ndarray:
    """
    (H_P - E) psi at a point off the flux line, each spin component separately

    Away from r = 0 the field vanishes and each component obeys
    -d_r^2 - (1/r) d_r + (-i d_theta + alpha)^2 / r^2.

    Args:
        alpha: Reduced flux
        psi: Callable (r, theta) -> spinor
        r: Radius > h
        theta: Angle
        energy: E
        h: Step

    Returns:
        Residual spinor
    """
    alpha = as_flux(alpha)
    a = alpha.alpha
    value = np.asarray(psi(r, theta), dtype=complex)
    angular = (-d2_dtheta2(psi, r, theta, h) - 2j * a * d_dtheta(psi, r, theta, h) + a * a * value) / (r * r)
    return -d2_dr2(psi, r, theta, h) - d_dr(psi, r, theta, h) / r + angular - energy * value
