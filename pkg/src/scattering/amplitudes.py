"""
Scattering Amplitudes
Off-forward AB amplitudes, extension amplitudes, cross sections and partial-wave S-matrix
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.config.numerics_config import ABEL_EPSILONS, FORWARD_TOL
from src.errors import ConfigError, ForwardDirectionError, InvalidRangeError, NonPositiveError
from src.extensions.family import ExtensionParam, check_side
from src.extensions.flux import CHANNELS, as_flux, spin_slot
from src.scattering.eigenfunctions import WaveVector, theta_correction_matrix

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
# (2 pi)^{3/2}
TWO_PI_32 = TWO_PI ** 1.5


@dataclass(frozen=True)
class ChannelPhase:
    """S-matrix eigenvalue of partial wave ell"""

    ell: int
    phase: complex

    def __post_init__(self):
        if abs(abs(self.phase) - 1.0) > 1e-14:
            raise ConfigError(f"|S_l| = {abs(self.phase)} is not 1", "ChannelPhase")


def _check_energy(energy: float, operation: str) -> float:
    energy = float(energy)
    if not (np.isfinite(energy) and energy > 0):
        raise NonPositiveError(f"{operation}: energy must be positive, got {energy}", operation)
    return energy


def _off_forward(angle: float, operation: str) -> complex:
    """e^{i angle}, refusing angle = 0 mod 2 pi"""
    phase = np.exp(1j * angle)
    if abs(phase - 1.0) < FORWARD_TOL:
        raise ForwardDirectionError(
            f"{operation}: forward direction is distributional (angle = {angle:.3e})", operation
        )
    return phase


def friedrichs_amplitude(alpha, energy: float, delta_omega: float) -> complex:
    """
    Off-forward Aharonov-Bohm amplitude

    Args:
        alpha: Reduced flux
        energy: lambda > 0
        delta_omega: Scattering angle, not 0 mod 2 pi

    Returns:
        (2 pi / (i k))^{1/2} (i / pi) sin(pi alpha) / (e^{i delta} - 1)
    """
    alpha = as_flux(alpha)
    energy = _check_energy(energy, "friedrichs_amplitude")
    phase = _off_forward(delta_omega, "friedrichs_amplitude")
    prefactor = np.sqrt(TWO_PI / (1j * math.sqrt(energy)))
    return complex(prefactor * (1j / math.pi) * alpha.sin_pi_alpha / (phase - 1.0))


def friedrichs_cross_section(alpha, energy: float, omega: float) -> float:
    """sin^2(pi alpha) / (2 pi sqrt(lambda) sin^2(omega / 2))"""
    alpha = as_flux(alpha)
    energy = _check_energy(energy, "friedrichs_cross_section")
    _off_forward(omega, "friedrichs_cross_section")
    return alpha.sin_pi_alpha ** 2 / (TWO_PI * math.sqrt(energy) * math.sin(omega / 2.0) ** 2)


def abel_partial_sum(alpha, delta_omega: float, epsilon: float) -> complex:
    """(1/2 pi) sum_l (S_l - 1) e^{i l delta} e^{-epsilon |l|}"""
    alpha = as_flux(alpha)
    if not epsilon > 0:
        raise NonPositiveError(f"Abel parameter must be positive, got {epsilon}", "abel_amplitude")
    n = int(math.ceil(40.0 / epsilon))
    ells = np.arange(-n, n + 1)
    s_ell = np.exp(1j * math.pi * (ells - np.abs(ells + alpha.alpha)))
    terms = (s_ell - 1.0) * np.exp(1j * ells * delta_omega - epsilon * np.abs(ells))
    return complex(np.sum(terms) / TWO_PI)


def abel_amplitude(alpha, energy: float, delta_omega: float, epsilons: Sequence[float] = ABEL_EPSILONS) -> complex:
    """
    Partial-wave amplitude under Abel summation, extrapolated to epsilon = 0

    The sums at each epsilon are fitted by a polynomial through all sweep
    points, real and imaginary parts separately.

    Args:
        alpha: Reduced flux
        energy: lambda > 0
        delta_omega: Scattering angle
        epsilons: Abel sweep

    Returns:
        Amplitude estimate
    """
    energy = _check_energy(energy, "abel_amplitude")
    eps = np.asarray(epsilons, dtype=float)
    sums = np.array([abel_partial_sum(alpha, delta_omega, e) for e in eps])
    deg = len(eps) - 1
    re0 = np.polyfit(eps, sums.real, deg)[-1]
    im0 = np.polyfit(eps, sums.imag, deg)[-1]
    logger.debug("abel_amplitude: sweep %s -> %.6g%+.6gi", tuple(eps), re0, im0)
    return complex(np.sqrt(TWO_PI / (1j * math.sqrt(energy))) * complex(re0, im0))


def _spin_pair(spins) -> Tuple[str, str]:
    try:
        s_in, s_out = spins
    except (TypeError, ValueError):
        raise ConfigError(f"spins must be a pair (s, s'), got {spins!r}", "theta_amplitude")
    spin_slot(s_in)
    spin_slot(s_out)
    return s_in, s_out


def extension_amplitude(alpha, ext: ExtensionParam, kvec: WaveVector, sign: str, spins, theta_dir: float) -> complex:
    """Part of the amplitude carried by the boundary condition, zero for Friedrichs"""
    alpha = as_flux(alpha)
    check_side(sign)
    s_in, s_out = _spin_pair(spins)
    if ext.is_friedrichs:
        return 0j
    k = kvec.k
    pm = 1.0 if sign == "+" else -1.0
    omega_s = kvec.direction(sign)
    m = theta_correction_matrix(alpha, ext, k, sign)
    total = 0j
    for ch_out in CHANNELS:
        if ch_out.spin != s_out:
            continue
        for ch_in in CHANNELS:
            if ch_in.spin != s_in:
                continue
            nu_sum = alpha.order(ch_out.mode) + alpha.order(ch_in.mode)
            power = k ** nu_sum * np.exp(pm * 0.5j * math.pi * nu_sum)
            total += m[ch_out.flat, ch_in.flat] * np.exp(1j * (ch_out.mode * theta_dir - ch_in.mode * omega_s)) * power
    prefactor = math.pi * np.exp(-pm * 0.25j * math.pi) / (TWO_PI_32 * math.sqrt(k))
    return complex(prefactor * total)


def theta_amplitude(
    alpha,
    ext: ExtensionParam,
    kvec: WaveVector,
    sign: str,
    spins,
    theta_dir: float,
    include_friedrichs: bool = True
) -> complex:
    """
    Far-field amplitude of the extension eigenfunction of the given sign

    The Friedrichs summand is singular where 1 + e^{i(theta - omega_pm)}
    vanishes; the extension summand is regular everywhere.

    Args:
        alpha: Reduced flux
        ext: Extension descriptor
        kvec: Wave vector
        sign: '+' or '-'
        spins: (incident spin, outgoing spin)
        theta_dir: Observation direction
        include_friedrichs: Add the regularized Friedrichs summand

    Returns:
        Complex amplitude
    """
    alpha = as_flux(alpha)
    check_side(sign)
    s_in, s_out = _spin_pair(spins)
    value = extension_amplitude(alpha, ext, kvec, sign, (s_in, s_out), theta_dir)
    if include_friedrichs and s_in == s_out:
        pm = 1.0 if sign == "+" else -1.0
        delta = theta_dir - kvec.direction(sign)
        # pole of 1 + e^{i delta}
        phase = -_off_forward(delta + math.pi, "theta_amplitude")
        prefactor = np.exp(pm * 0.25j * math.pi) / (TWO_PI_32 * math.sqrt(kvec.k))
        value += complex(prefactor * pm * 2j * alpha.sin_pi_alpha / (1.0 + phase))
    return value


def theta_cross_section(alpha, ext: ExtensionParam, kvec: WaveVector, spins, theta_dir: float) -> float:
    """(2 pi)^2 |f^{Theta,-}|^2, equal to friedrichs_cross_section for Friedrichs"""
    f = theta_amplitude(alpha, ext, kvec, "-", spins, theta_dir)
    return float(TWO_PI ** 2 * abs(f) ** 2)


def _ell_bounds(ell_range) -> Tuple[int, int]:
    try:
        lo, hi = int(ell_range[0]), int(ell_range[1])
    except (TypeError, ValueError, IndexError):
        raise InvalidRangeError(f"ell_range must be a pair of integers, got {ell_range!r}", "s_matrix_phases")
    if lo > hi:
        raise InvalidRangeError(f"empty ell_range ({lo}, {hi})", "s_matrix_phases")
    return lo, hi


def s_matrix_phases(alpha, ell_range) -> List[ChannelPhase]:
    """S_l = e^{i pi (l - |l + alpha|)} for l in [lo, hi]"""
    alpha = as_flux(alpha)
    lo, hi = _ell_bounds(ell_range)
    return [
        ChannelPhase(ell, complex(np.exp(1j * math.pi * (ell - alpha.order(ell)))))
        for ell in range(lo, hi + 1)
    ]


def s_matrix_angular(alpha, ell_range, n_angles: int) -> np.ndarray:
    """
    Truncated S-matrix kernel on a uniform angular grid

    Entry (j, k) is (1/N) sum_l S_l e^{i l (theta_j - theta_k)}, the kernel
    times the quadrature weight 2 pi / N. It acts unitarily on vectors
    band-limited to ell_range.

    Args:
        alpha: Reduced flux
        ell_range: (lo, hi) partial waves kept
        n_angles: Grid size, at least hi - lo + 1

    Returns:
        Complex N x N matrix
    """
    lo, hi = _ell_bounds(ell_range)
    if n_angles < hi - lo + 1:
        raise ConfigError(f"{n_angles} angles alias {hi - lo + 1} partial waves", "s_matrix_angular")
    phases = s_matrix_phases(alpha, (lo, hi))
    grid = TWO_PI * np.arange(n_angles) / n_angles
    diff = grid[:, None] - grid[None, :]
    matrix = np.zeros((n_angles, n_angles), dtype=complex)
    for p in phases:
        matrix += p.phase * np.exp(1j * p.ell * diff)
    return matrix / n_angles
