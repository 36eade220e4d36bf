"""
Spectral Data
Negative eigenvalues, bound states, zero-energy resonances and exceptional points
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from src.config.numerics_config import (
    DEFAULT_LAMBDA_RANGE,
    DEFAULT_MU_RANGE,
    DEFAULT_TOL,
    EXCEPTIONAL_GRID_POINTS,
    EXCEPTIONAL_SV_TOL,
    KERNEL_RESIDUAL_TOL,
    POINTS_PER_DECADE,
    RESONANCE_SV_TOL,
    ROOT_MERGE_RTOL,
)
from src.errors import ChargeNotInKernelError, ConfigError, InvalidRangeError
from src.extensions.defect import SQRT_2PI
from src.extensions.family import ExtensionParam, check_side, lambda_limit_pm, lambda_weyl_zero
from src.extensions.flux import FluxAlpha, as_charge4, as_flux, as_point
from src.resolvent.kernels import single_layer
from src.specfun import gamma

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenvalueRecord:
    """Eigenvalue -mu with its multiplicity and charges spanning ker[Lambda(-mu) + Theta]"""

    mu: float
    multiplicity: int
    kernel_basis: Tuple[np.ndarray, ...]

    @property
    def eigenvalue(self) -> float:
        return -self.mu


def boundary_matrix_negative(alpha: FluxAlpha, theta: np.ndarray, mu: float) -> np.ndarray:
    """Hermitian Lambda(-mu) + Theta; Lambda(-mu) is real diagonal"""
    return np.diag(alpha.weyl_scale * (mu ** alpha.channel_orders() - 1.0)) + theta


def _check_range(bounds: Sequence[float], name: str) -> Tuple[float, float]:
    try:
        lo, hi = float(bounds[0]), float(bounds[1])
    except (TypeError, ValueError, IndexError):
        raise InvalidRangeError(f"{name} must be a pair of numbers, got {bounds!r}", name)
    if not (np.isfinite(lo) and np.isfinite(hi) and 0 < lo < hi):
        raise InvalidRangeError(f"{name} must satisfy 0 < lo < hi, got ({lo}, {hi})", name)
    return lo, hi


def _merge_roots(roots: List[float]) -> List[List[float]]:
    groups: List[List[float]] = []
    for mu in sorted(roots):
        if groups and abs(mu - groups[-1][0]) <= ROOT_MERGE_RTOL * groups[-1][0]:
            groups[-1].append(mu)
        else:
            groups.append([mu])
    return groups


def point_spectrum(
    alpha,
    ext: ExtensionParam,
    mu_range: Sequence[float] = DEFAULT_MU_RANGE,
    tol: float = DEFAULT_TOL,
    points_per_decade: int = POINTS_PER_DECADE
) -> List[EigenvalueRecord]:
    """
    Negative eigenvalues -mu with mu in mu_range

    Each sorted eigenvalue of the Hermitian matrix Lambda(-mu) + Theta is
    strictly increasing in mu, so it crosses zero at most once. Crossings are
    bracketed on a logarithmic grid and refined in log(mu).

    Args:
        alpha: Reduced flux
        ext: Extension descriptor
        mu_range: (mu_lo, mu_hi)
        tol: Relative accuracy of mu
        points_per_decade: Scan density

    Returns:
        Records sorted by mu
    """
    alpha = as_flux(alpha)
    lo, hi = _check_range(mu_range, "point_spectrum")
    if ext.is_friedrichs:
        return []
    theta = ext.theta_matrix(alpha)

    count = max(2, int(math.ceil(points_per_decade * math.log10(hi / lo))) + 1)
    ts = np.linspace(math.log(lo), math.log(hi), count)
    mus = np.exp(ts)
    stacked = alpha.weyl_scale * (mus[:, None] ** alpha.channel_orders()[None, :] - 1.0)
    matrices = np.einsum("ij,jk->ijk", stacked, np.eye(4)) + theta[None, :, :]
    eigs = np.linalg.eigvalsh(matrices)

    roots: List[float] = []
    for k in range(4):
        col = eigs[:, k]
        if col[0] == 0.0:
            roots.append(lo)
        for i in np.flatnonzero((col[:-1] < 0) & (col[1:] >= 0)):
            if col[i + 1] == 0.0:
                roots.append(float(mus[i + 1]))
                continue

            def branch(t, k=k):
                return np.linalg.eigvalsh(boundary_matrix_negative(alpha, theta, math.exp(t)))[k]

            fa, fb = branch(ts[i]), branch(ts[i + 1])
            if fa * fb > 0 or fa == 0.0:
                # rounding moved the crossing onto a grid point
                t_root = ts[i] if abs(fa) <= abs(fb) else ts[i + 1]
            else:
                t_root = brentq(branch, ts[i], ts[i + 1], xtol=tol * 1e-2)
            roots.append(math.exp(t_root))

    records = []
    for group in _merge_roots(roots):
        mu = float(np.mean(group))
        mult = len(group)
        values, vectors = np.linalg.eigh(boundary_matrix_negative(alpha, theta, mu))
        order = np.argsort(np.abs(values))[:mult]
        basis = tuple(vectors[:, j].copy() for j in order)
        records.append(EigenvalueRecord(mu=mu, multiplicity=mult, kernel_basis=basis))
    logger.info("point_spectrum: %d eigenvalue(s) on [%.3g, %.3g]", len(records), lo, hi)
    return records


def bound_state(alpha, ext: ExtensionParam, record: EigenvalueRecord, q, x) -> np.ndarray:
    """
    Bound state G(-mu) q at x

    Args:
        alpha: Reduced flux
        ext: Extension the record belongs to
        record: Eigenvalue record
        q: Charge in the span of record.kernel_basis
        x: Polar point off the origin

    Returns:
        Spinor (up, down)
    """
    alpha = as_flux(alpha)
    theta = ext.theta_matrix(alpha)
    if theta is None:
        raise ChargeNotInKernelError("Friedrichs extension has no bound states", "bound_state")
    q = as_charge4(q, "bound_state")
    norm_q = np.linalg.norm(q)
    residual = np.linalg.norm(boundary_matrix_negative(alpha, theta, record.mu) @ q)
    scale = max(1.0, np.linalg.norm(theta, 2))
    if norm_q == 0 or residual > KERNEL_RESIDUAL_TOL * norm_q * scale:
        raise ChargeNotInKernelError(
            f"charge not in ker[Lambda(-mu) + Theta] at mu = {record.mu:.6g} (residual {residual:.2e})",
            "bound_state",
        )
    return single_layer(alpha, -record.mu, q, x)


@dataclass(frozen=True, eq=False)
class ZeroResonance:
    """Charges spanning ker[Lambda(0) + Theta]"""

    alpha: FluxAlpha
    charges: Tuple[np.ndarray, ...]

    @property
    def dimension(self) -> int:
        return len(self.charges)

    def profile(self, x, q=None) -> np.ndarray:
        """Resonance sum_l q_l 2^{nu-1} Gamma(nu) r^{-nu} e^{i l theta} / sqrt(2 pi)"""
        x = as_point(x)
        q = self.charges[0] if q is None else as_charge4(q, "zero_resonance")
        values = []
        for flat, mode in enumerate((0, -1, 0, -1)):
            nu = self.alpha.order(mode)
            values.append(q[flat] * 2.0 ** (nu - 1.0) * gamma(nu) * x.r ** (-nu) * np.exp(1j * mode * x.theta))
        values = np.array(values) / SQRT_2PI
        return np.array([values[0] + values[1], values[2] + values[3]])


def zero_resonance(alpha, ext: ExtensionParam) -> Optional[ZeroResonance]:
    """Zero-energy resonances, None when Lambda(0) + Theta is invertible"""
    alpha = as_flux(alpha)
    theta = ext.theta_matrix(alpha)
    if theta is None:
        return None
    _, sv, vh = np.linalg.svd(lambda_weyl_zero(alpha) + theta)
    cutoff = RESONANCE_SV_TOL * max(1.0, sv[0])
    charges = tuple(vh[i].conj() for i in range(4) if sv[i] <= cutoff)
    if not charges:
        return None
    logger.info("zero_resonance: %d-dimensional resonance space", len(charges))
    return ZeroResonance(alpha=alpha, charges=charges)


def singular_value_floor(alpha, ext: ExtensionParam, lambdas: Sequence[float], side: str) -> np.ndarray:
    """Smallest singular value of Lambda_pm(lambda) + Theta on a grid"""
    alpha = as_flux(alpha)
    check_side(side)
    theta = ext.theta_matrix(alpha)
    if theta is None:
        raise ConfigError("singular_value_floor needs a finite Theta", "exceptional_points")
    return np.array([
        np.linalg.svd(lambda_limit_pm(alpha, lam, side) + theta, compute_uv=False)[-1]
        for lam in lambdas
    ])


def exceptional_points(
    alpha,
    ext: ExtensionParam,
    lambda_range: Sequence[float] = DEFAULT_LAMBDA_RANGE,
    points: int = EXCEPTIONAL_GRID_POINTS
) -> List[float]:
    """
    Energies where Lambda_pm(lambda) + Theta becomes singular

    Im Lambda_pm = -/+ (pi/2) diag(lambda^nu) keeps the smallest singular
    value above (pi/2) min(lambda^alpha, lambda^(1-alpha)) for Hermitian
    Theta, so the scan is expected to come back empty.

    Args:
        alpha: Reduced flux
        ext: Finite-Theta extension
        lambda_range: (lambda_lo, lambda_hi)
        points: Log-grid size

    Returns:
        Grid energies with a singular value below threshold
    """
    lo, hi = _check_range(lambda_range, "exceptional_points")
    lambdas = np.logspace(math.log10(lo), math.log10(hi), points)
    found = set()
    for side in ("+", "-"):
        floor = singular_value_floor(alpha, ext, lambdas, side)
        found.update(float(lam) for lam in lambdas[floor < EXCEPTIONAL_SV_TOL])
    if found:
        logger.warning("exceptional_points: %d grid energies with singular Lambda_pm + Theta", len(found))
    return sorted(found)
