"""
Flux and Channel Bookkeeping
Reduced AB flux, the four (spin, mode) channels and spectral points
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from src.config.numerics_config import ALPHA_GUARD
from src.errors import (
    BranchCutError,
    ConfigError,
    FluxRangeError,
    IntegerFluxError,
    NonPositiveError,
)

logger = logging.getLogger(__name__)

SPIN_UP = "up"
SPIN_DOWN = "down"
SPINS = (SPIN_UP, SPIN_DOWN)
MODES = (0, -1)


@dataclass(frozen=True)
class FluxAlpha:
    """AB flux reduced to (0, 1) with the channel orders it induces"""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (ALPHA_GUARD < a < 1.0 - ALPHA_GUARD):
            raise FluxRangeError(
                f"alpha = {a} outside ({ALPHA_GUARD}, {1 - ALPHA_GUARD})", "FluxAlpha"
            )
        object.__setattr__(self, "alpha", a)

    @property
    def nu0(self) -> float:
        return self.alpha

    @property
    def nu1(self) -> float:
        return 1.0 - self.alpha

    def order(self, mode: int) -> float:
        """nu_l = |l + alpha| for any integer mode"""
        return abs(mode + self.alpha)

    @property
    def sin_pi_alpha(self) -> float:
        return math.sin(math.pi * self.alpha)

    @property
    def weyl_scale(self) -> float:
        """pi / (2 sin(pi alpha)), the common factor of L, Lambda and the beta shift"""
        return math.pi / (2.0 * self.sin_pi_alpha)

    def channel_orders(self) -> np.ndarray:
        """Orders nu over the flat channel ordering"""
        return np.array([self.nu0, self.nu1, self.nu0, self.nu1])


def as_flux(alpha) -> FluxAlpha:
    return alpha if isinstance(alpha, FluxAlpha) else FluxAlpha(alpha)


def reduce_flux(alpha_raw: float) -> Tuple[FluxAlpha, int]:
    """
    Reduce an arbitrary flux to (0, 1)

    The winding n = floor(alpha) is removed by the gauge phase e^{-i n theta}.

    Args:
        alpha_raw: Flux in units of the flux quantum

    Returns:
        (reduced flux, winding)
    """
    winding = math.floor(alpha_raw)
    reduced = alpha_raw - winding
    if reduced == 0.0:
        raise IntegerFluxError(f"integer flux {alpha_raw} is gauge-trivial", "reduce_flux")
    logger.debug("reduce_flux: %s -> %s (winding %d)", alpha_raw, reduced, winding)
    return FluxAlpha(reduced), int(winding)


@dataclass(frozen=True)
class ChannelIndex:
    spin: str
    mode: int

    @property
    def flat(self) -> int:
        return 2 * SPINS.index(self.spin) + MODES.index(self.mode)

    @classmethod
    def from_flat(cls, flat: int) -> "ChannelIndex":
        return CHANNELS[flat]


CHANNELS = tuple(ChannelIndex(s, m) for s in SPINS for m in MODES)
CHANNEL_LABELS = ("up,0", "up,-1", "down,0", "down,-1")


def spin_slot(spin: str) -> int:
    """Row of a spinor holding the given spin"""
    if spin not in SPINS:
        raise ConfigError(f"unknown spin {spin!r}, expected one of {SPINS}", "spin_slot")
    return SPINS.index(spin)


@dataclass(frozen=True)
class PolarPoint:
    r: float
    theta: float = 0.0

    def __post_init__(self):
        r = float(self.r)
        if not np.isfinite(r) or r < 0:
            raise NonPositiveError(f"radius must be finite and non-negative, got {r}", "PolarPoint")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", float(self.theta) % (2.0 * math.pi))


def as_point(x) -> PolarPoint:
    if isinstance(x, PolarPoint):
        return x
    r, theta = x
    return PolarPoint(r, theta)


def branch_sqrt(z: complex) -> complex:
    """Square root with Im > 0 off the cut [0, inf)"""
    s = np.sqrt(complex(z))
    return -s if s.imag < 0 else s


@dataclass(frozen=True)
class SpectralPoint:
    """z off [0, inf) together with w = -i sqrt(z), Re w > 0"""

    z: complex
    w: complex = field(init=False)

    def __post_init__(self):
        z = complex(self.z)
        if z.imag == 0 and z.real >= 0:
            raise BranchCutError(f"z = {z} lies on the spectrum [0, inf)", "SpectralPoint")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", -1j * branch_sqrt(z))

    @property
    def minus_i_sqrt_z(self) -> complex:
        return self.w

    def conjugate(self) -> "SpectralPoint":
        return SpectralPoint(self.z.conjugate())


def as_spectral_point(z) -> SpectralPoint:
    return z if isinstance(z, SpectralPoint) else SpectralPoint(z)


def as_charge4(q, operation: str = "as_charge4") -> np.ndarray:
    """Complex 4-vector of charges in the flat channel ordering"""
    try:
        vec = np.array(q, dtype=complex).reshape(-1)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"charge is not numeric: {e}", operation)
    if vec.shape != (4,) or not np.all(np.isfinite(vec)):
        raise ConfigError(f"charge must be 4 finite complex numbers, got {q!r}", operation)
    return vec


def unit_charge(channel) -> np.ndarray:
    """Unit charge in one channel, given as ChannelIndex or flat index"""
    flat = channel.flat if isinstance(channel, ChannelIndex) else int(channel)
    q = np.zeros(4, dtype=complex)
    q[flat] = 1.0
    return q
