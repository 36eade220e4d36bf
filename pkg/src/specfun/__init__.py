"""
Special Functions Package
"""
from src.specfun.functions import (
    gamma,
    bessel_j,
    bessel_i,
    bessel_k,
    hankel1,
    bessel_ip,
    bessel_kp,
    bessel_ik_product,
    bessel_j_orders
)

__all__ = [
    'gamma',
    'bessel_j',
    'bessel_i',
    'bessel_k',
    'hankel1',
    'bessel_ip',
    'bessel_kp',
    'bessel_ik_product',
    'bessel_j_orders'
]
