"""
Symmetry Classification
Admissible (S, T) transformations of the Pauli and Dirac forms and the diagonal-beta criterion
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.linalg import expm

from src.config.numerics_config import BETA_INVARIANCE_TOL, SYMMETRY_TOL
from src.errors import ConfigError, NonOrthogonalError, NonUnitaryError
from src.extensions.family import as_herm4, l_matrix
from src.extensions.flux import CHANNELS, SPIN_UP, as_flux

logger = logging.getLogger(__name__)

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_1, SIGMA_2, SIGMA_3])
IDENTITY_2 = np.eye(2, dtype=complex)

UNITARY_CHECK_TOL = 1e-12

# Reflections named by the anti-linear Dirac classes
_DIAGONAL_REFLECTION = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class SpinMatrix:
    """2x2 complex matrix acting on spin, optionally certified unitary"""

    entries: np.ndarray
    unitary: bool = True

    def __post_init__(self):
        try:
            m = np.array(self.entries, dtype=complex)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"spin matrix is not numeric: {e}", "SpinMatrix")
        if m.shape != (2, 2):
            raise ConfigError(f"spin matrix must be 2x2, got shape {m.shape}", "SpinMatrix")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        if self.unitary and not self.is_unitary():
            raise NonUnitaryError("S S^dagger differs from I by more than 1e-12", "SpinMatrix")

    def is_unitary(self, tol: float = UNITARY_CHECK_TOL) -> bool:
        return bool(np.max(np.abs(self.entries @ self.entries.conj().T - IDENTITY_2)) <= tol)

    @property
    def inverse(self) -> np.ndarray:
        return self.entries.conj().T


@dataclass(frozen=True, eq=False)
class PlaneTransform:
    """Constant real 2x2 map T of the plane"""

    matrix: np.ndarray
    kind: str = field(init=False)

    def __post_init__(self):
        try:
            m = np.array(self.matrix)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"plane transform is not numeric: {e}", "PlaneTransform")
        if m.shape != (2, 2):
            raise ConfigError(f"plane transform must be 2x2, got shape {m.shape}", "PlaneTransform")
        if np.iscomplexobj(m):
            if np.max(np.abs(m.imag)) > 0:
                raise ConfigError("plane transform must be real", "PlaneTransform")
            m = m.real
        m = m.astype(float)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if not self.is_orthogonal():
            kind = "general"
        elif np.linalg.det(m) > 0:
            kind = "rotation"
        else:
            kind = "reflection"
        object.__setattr__(self, "kind", kind)

    def is_orthogonal(self, tol: float = SYMMETRY_TOL) -> bool:
        return bool(np.max(np.abs(self.matrix @ self.matrix.T - np.eye(2))) <= tol)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    @classmethod
    def rotation(cls, angle: float) -> "PlaneTransform":
        c, s = math.cos(angle), math.sin(angle)
        return cls(np.array([[c, -s], [s, c]]))

    @classmethod
    def reflection(cls, angle: float) -> "PlaneTransform":
        """Reflection T(angle) = [[cos, sin], [sin, -cos]]"""
        c, s = math.cos(angle), math.sin(angle)
        return cls(np.array([[c, s], [s, -c]]))


def as_spin_matrix(s) -> SpinMatrix:
    return s if isinstance(s, SpinMatrix) else SpinMatrix(s, unitary=False)


def as_plane_transform(t) -> PlaneTransform:
    return t if isinstance(t, PlaneTransform) else PlaneTransform(t)


def spin_exponential(eta0: float, eta) -> SpinMatrix:
    """S = e^{-i eta0} e^{-i eta.sigma}"""
    eta = np.asarray(eta, dtype=float).reshape(3)
    generator = np.einsum("j,jkl->kl", eta, PAULI)
    return SpinMatrix(np.exp(-1j * eta0) * expm(-1j * generator))


@dataclass(frozen=True)
class SymmetryVerdict:
    """Outcome of classifying one (S, T) pair"""

    admissible: bool
    potential_sign: int
    field_sign: int
    family: Optional[str] = None
    reason: str = ""

    @property
    def transformed_potential_rule(self) -> str:
        sign = "+" if self.potential_sign > 0 else "-"
        return f"A~(x) = {sign}T A(T^-1 x) + grad eta0"

    def transform_potential(self, potential: Callable, transform: PlaneTransform, x) -> np.ndarray:
        """Transformed vector potential at x for a global gauge"""
        t = as_plane_transform(transform).matrix
        x = np.asarray(x, dtype=float)
        return self.potential_sign * t @ np.asarray(potential(np.linalg.solve(t, x)), dtype=float)

    def transform_field(self, field_fn: Callable, transform: PlaneTransform, x) -> float:
        t = as_plane_transform(transform).matrix
        return self.field_sign * float(field_fn(np.linalg.solve(t, np.asarray(x, dtype=float))))


def _validated(s, t, operation: str):
    s = as_spin_matrix(s)
    t = as_plane_transform(t)
    if not s.is_unitary():
        raise NonUnitaryError("S must be unitary", operation)
    if not t.is_orthogonal():
        raise NonOrthogonalError("T must be orthogonal", operation)
    return s, t


def _signs(t: PlaneTransform, antilinear: bool):
    det_sign = 1 if t.det > 0 else -1
    if antilinear:
        return -1, -det_sign
    return 1, det_sign


def rodrigues_conjugate(eta) -> np.ndarray:
    """
    e^{-i eta.sigma} sigma_j e^{i eta.sigma} for j = 1, 2, 3

    Rotation by angle 2|eta| about eta, written out with the Rodrigues formula.

    Args:
        eta: Real 3-vector

    Returns:
        Array of shape (3, 2, 2)
    """
    eta = np.asarray(eta, dtype=float).reshape(3)
    norm = float(np.linalg.norm(eta))
    if norm == 0.0:
        return PAULI.copy()
    cos2, sin2 = math.cos(2.0 * norm), math.sin(2.0 * norm)
    eta_dot_sigma = np.einsum("j,jkl->kl", eta, PAULI)
    cross = np.stack([
        eta[1] * SIGMA_3 - eta[2] * SIGMA_2,
        eta[2] * SIGMA_1 - eta[0] * SIGMA_3,
        eta[0] * SIGMA_2 - eta[1] * SIGMA_1,
    ])
    return np.stack([
        cos2 * PAULI[j] - sin2 / norm * cross[j] + (1.0 - cos2) / norm ** 2 * eta[j] * eta_dot_sigma
        for j in range(3)
    ])


def conjugate_by_exponential(eta) -> np.ndarray:
    """Same conjugation through scipy's matrix exponential"""
    eta = np.asarray(eta, dtype=float).reshape(3)
    generator = np.einsum("j,jkl->kl", eta, PAULI)
    left, right = expm(-1j * generator), expm(1j * generator)
    return np.stack([left @ PAULI[j] @ right for j in range(3)])


def _conjugated(s: SpinMatrix, antilinear: bool) -> np.ndarray:
    """S sigma_j S^{-1}, with sigma_j complex-conjugated for anti-linear maps"""
    sig = PAULI.conj() if antilinear else PAULI
    return np.einsum("ab,jbc,cd->jad", s.entries, sig, s.inverse)


def pauli_structure_holds(s, t, antilinear: bool, tol: float = SYMMETRY_TOL) -> bool:
    """
    Direct check sum_{j,l} T_hj T_ml S sigma_j sigma_l S^{-1} = sigma_h sigma_m

    Conjugated sigmas are used for anti-linear maps. h, m, j, l run over 1, 2.
    """
    s = as_spin_matrix(s)
    t = as_plane_transform(t).matrix
    conj = _conjugated(s, antilinear)[:2]
    products = np.einsum("jab,lbc->jlac", conj, conj)
    lhs = np.einsum("hj,ml,jlac->hmac", t, t, products)
    rhs = np.einsum("hab,mbc->hmac", PAULI[:2], PAULI[:2])
    return bool(np.max(np.abs(lhs - rhs)) <= tol)


def dirac_structure_holds(s, t, antilinear: bool, tol: float = SYMMETRY_TOL) -> bool:
    """sum_j T_hj S sigma_j S^{-1} = sigma_h (linear) or -sigma_h (anti-linear)"""
    s = as_spin_matrix(s)
    t = as_plane_transform(t).matrix
    conj = _conjugated(s, antilinear)[:2]
    lhs = np.einsum("hj,jab->hab", t, conj)
    target = -PAULI[:2] if antilinear else PAULI[:2]
    return bool(np.max(np.abs(lhs - target)) <= tol)


def classify_pauli(s, t, antilinear: bool = False) -> SymmetryVerdict:
    """
    Decide whether (S, T) maps the Pauli form to itself

    Requires S sigma_3 S^{-1} = det(T) sigma_3, with the opposite sign for
    anti-linear maps.

    Args:
        s: Unitary spin matrix
        t: Orthogonal plane transform
        antilinear: Whether the map includes complex conjugation

    Returns:
        SymmetryVerdict
    """
    s, t = _validated(s, t, "classify_pauli")
    potential_sign, field_sign = _signs(t, antilinear)
    expected = (-1 if antilinear else 1) * (1 if t.det > 0 else -1) * SIGMA_3
    mismatch = float(np.max(np.abs(s.entries @ SIGMA_3 @ s.inverse - expected)))
    if mismatch > SYMMETRY_TOL:
        return SymmetryVerdict(
            admissible=False,
            potential_sign=potential_sign,
            field_sign=field_sign,
            reason=f"S sigma_3 S^-1 misses {'-' if expected[0, 0] < 0 else '+'}sigma_3 by {mismatch:.2e}",
        )
    family = f"{'antilinear' if antilinear else 'linear'}-{t.kind}"
    return SymmetryVerdict(True, potential_sign, field_sign, family=family)


def _dirac_family(s: SpinMatrix, t: PlaneTransform, antilinear: bool) -> str:
    if not antilinear:
        return "linear-rotation"
    if t.kind == "rotation":
        return "antilinear-rotation"
    if np.max(np.abs(t.matrix - _DIAGONAL_REFLECTION)) <= SYMMETRY_TOL:
        return "antilinear-reflection-diagonal"
    if np.max(np.abs(t.matrix + _DIAGONAL_REFLECTION)) <= SYMMETRY_TOL:
        return "antilinear-reflection-antidiagonal"
    return "reflection-unlisted"


def classify_dirac(s, t, antilinear: bool = False) -> SymmetryVerdict:
    """
    Decide whether (S, T) maps the Dirac form to itself

    Linear maps need S = e^{-i eta_0 - i eta_3 sigma_3} and T = R(2 eta_3);
    linear reflections never qualify. Anti-linear maps are decided by the same
    vector condition with conjugated sigmas and then named after the
    closed-form class they fall in.

    Args:
        s: Unitary spin matrix
        t: Orthogonal plane transform
        antilinear: Whether the map includes complex conjugation

    Returns:
        SymmetryVerdict
    """
    s, t = _validated(s, t, "classify_dirac")
    potential_sign, field_sign = _signs(t, antilinear)
    if not antilinear and t.kind == "reflection":
        return SymmetryVerdict(
            False, potential_sign, field_sign, reason="no spin matrix pairs with a linear reflection"
        )
    if not dirac_structure_holds(s, t, antilinear):
        if not antilinear:
            eta3 = -0.5 * np.angle(s.entries[0, 0] / s.entries[1, 1]) if abs(s.entries[1, 1]) > SYMMETRY_TOL else float("nan")
            reason = f"rotation angle does not match 2 eta_3 = {2 * eta3:.6f}"
        else:
            reason = "S sigma_j* S^-1 does not rotate into -sigma_h under T"
        return SymmetryVerdict(False, potential_sign, field_sign, reason=reason)
    family = _dirac_family(s, t, antilinear)
    if family == "reflection-unlisted":
        logger.info("classify_dirac: admissible anti-linear reflection outside the listed classes")
    return SymmetryVerdict(True, potential_sign, field_sign, family=family)


def beta_invariance(alpha, beta, eta3: float, sigma_angle: float, lam: float) -> bool:
    """
    Whether the extension with parameter beta commutes with the rotation
    (eta_3, sigma_angle) and a global gauge

    Every entry (a, b) of L(lambda) + beta must vanish unless its phase
    e^{i sigma (l_a - l_b)}, times e^{+/- 2 i eta_3} between opposite spins,
    equals one.

    Args:
        alpha: Reduced flux
        beta: Hermitian 4x4 matrix
        eta3: Spin rotation angle
        sigma_angle: Plane rotation angle
        lam: Reference energy > 0

    Returns:
        True when all conditions hold
    """
    alpha = as_flux(alpha)
    matrix = l_matrix(alpha, lam) + as_herm4(beta, "beta_invariance")
    tol = BETA_INVARIANCE_TOL * max(1.0, float(np.max(np.abs(matrix))))
    for a in CHANNELS:
        for b in CHANNELS:
            angle = sigma_angle * (a.mode - b.mode)
            if a.spin != b.spin:
                angle += 2.0 * eta3 if a.spin == SPIN_UP else -2.0 * eta3
            if abs(matrix[a.flat, b.flat] * (np.exp(1j * angle) - 1.0)) > tol:
                return False
    return True
