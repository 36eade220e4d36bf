"""
Special Functions
Gamma and real-order Bessel/Hankel functions with input validation
"""
import logging
from typing import Union

import mpmath
import numpy as np
from scipy import special

from src.config.numerics_config import ORDER_GUARD
from src.errors import (
    BranchCutError,
    FluxRangeError,
    NonPositiveError,
    PoleError,
    SpecialFunctionOverflow,
    ZeroArgumentError,
)

logger = logging.getLogger(__name__)

Number = Union[float, complex]

# Beyond these magnitudes a double product I*K loses its exponent
_TINY = 1e-280
_HUGE = 1e280


def _finite(value, operation: str):
    if not np.all(np.isfinite(value)):
        raise SpecialFunctionOverflow(f"{operation}: result outside double range", operation)
    return value


def _nonnegative_order(nu: float, operation: str) -> float:
    nu = float(nu)
    if not np.isfinite(nu) or nu < 0:
        raise NonPositiveError(f"{operation}: order must be a finite non-negative real, got {nu}", operation)
    return nu


def gamma(x: float) -> float:
    """
    Euler Gamma function on the real line

    Args:
        x: Real argument, not a non-positive integer

    Returns:
        Gamma(x)
    """
    x = float(x)
    if x <= 0 and x == np.floor(x):
        raise PoleError(f"Gamma has a pole at x = {x:g}", "gamma")
    return float(_finite(special.gamma(x), "gamma"))


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for real x >= 0"""
    nu = _nonnegative_order(nu, "bessel_j")
    x = float(x)
    if x < 0:
        raise BranchCutError(f"bessel_j: negative argument {x} lies on the branch cut", "bessel_j")
    return float(_finite(special.jv(nu, x), "bessel_j"))


def bessel_i(nu: float, z: Number) -> complex:
    """Principal-branch I_nu(z)"""
    nu = _nonnegative_order(nu, "bessel_i")
    z = complex(z)
    if z.imag == 0 and z.real >= 0:
        value = special.iv(nu, z.real)
    else:
        value = special.iv(nu, z)
    return complex(_finite(value, "bessel_i"))


def bessel_k(nu: float, z: Number) -> complex:
    """
    Modified Bessel function of the second kind

    Negative orders are reflected, K_{-nu} = K_nu. Integer orders are valid
    here; the guard band applies to bessel_ik_product only.

    Args:
        nu: Real order
        z: Argument off the cut (-inf, 0]

    Returns:
        K_nu(z)
    """
    z = complex(z)
    if z == 0:
        raise ZeroArgumentError("bessel_k: K_nu is singular at z = 0", "bessel_k")
    if z.imag == 0 and z.real < 0:
        raise BranchCutError(f"bessel_k: arg z = pi for z = {z}", "bessel_k")
    nu = abs(float(nu))
    value = special.kv(nu, z.real) if z.imag == 0 else special.kv(nu, z)
    return complex(_finite(value, "bessel_k"))


def hankel1(nu: float, x: float) -> complex:
    """H^(1)_nu(x) = J_nu(x) + i Y_nu(x) for x > 0"""
    nu = _nonnegative_order(nu, "hankel1")
    x = float(x)
    if x == 0:
        raise ZeroArgumentError("hankel1: H^(1) is singular at x = 0", "hankel1")
    if x < 0:
        raise BranchCutError(f"hankel1: negative argument {x}", "hankel1")
    return complex(_finite(special.hankel1(nu, x), "hankel1"))


def bessel_ip(nu: float, z: Number) -> complex:
    """Derivative I'_nu(z)"""
    nu = _nonnegative_order(nu, "bessel_ip")
    return complex(_finite(special.ivp(nu, complex(z)), "bessel_ip"))


def bessel_kp(nu: float, z: Number) -> complex:
    """Derivative K'_nu(z)"""
    z = complex(z)
    if z == 0:
        raise ZeroArgumentError("bessel_kp: K'_nu is singular at z = 0", "bessel_kp")
    if z.imag == 0 and z.real < 0:
        raise BranchCutError(f"bessel_kp: arg z = pi for z = {z}", "bessel_kp")
    nu = abs(float(nu))
    value = special.kvp(nu, z.real) if z.imag == 0 else special.kvp(nu, z)
    return complex(_finite(value, "bessel_kp"))


def bessel_ik_product(nu: np.ndarray, a: Number, b: Number) -> np.ndarray:
    """
    I_nu(a) * K_nu(b) for an array of orders

    Orders large enough to push either factor out of the double exponent
    range are evaluated with mpmath. The orders are |l + alpha|, so each
    must sit at least ORDER_GUARD away from an integer.

    Args:
        nu: Array of non-negative, non-integer orders
        a: Argument of I (the smaller radius)
        b: Argument of K (the larger radius)

    Returns:
        Complex array of products
    """
    nu = np.asarray(nu, dtype=float)
    a, b = complex(a), complex(b)
    near = np.abs(nu - np.round(nu)) < ORDER_GUARD
    if np.any(near):
        raise FluxRangeError(
            f"bessel_ik_product: order {nu[near][0]} within {ORDER_GUARD:g} of an integer",
            "bessel_ik_product",
        )
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        i_vals = special.iv(nu, a)
        k_vals = special.kv(nu, b)
        products = np.asarray(i_vals * k_vals, dtype=complex)

    bad = (
        ~np.isfinite(products)
        | ((np.abs(i_vals) < _TINY) & (nu > 0))
        | (np.abs(k_vals) > _HUGE)
    )
    if np.any(bad):
        logger.debug("bessel_ik_product: %d orders evaluated in arbitrary precision", int(bad.sum()))
        for idx in np.flatnonzero(bad):
            value = mpmath.besseli(nu[idx], a) * mpmath.besselk(nu[idx], b)
            products[idx] = complex(value)
    return products


def bessel_j_orders(nu: np.ndarray, x: float) -> np.ndarray:
    """J_nu(x) for an array of non-negative orders at one real x >= 0"""
    nu = np.asarray(nu, dtype=float)
    if np.any(nu < 0):
        raise NonPositiveError("bessel_j_orders: orders must be non-negative", "bessel_j_orders")
    x = float(x)
    if x < 0:
        raise BranchCutError(f"bessel_j_orders: negative argument {x}", "bessel_j_orders")
    return _finite(special.jv(nu, x), "bessel_j_orders")
