"""
Error Types
Input errors exit with 2, numerical failures with 3
"""
from typing import Optional


class AbPauliError(Exception):
    """Base error carrying the failing operation and a CLI exit code"""

    exit_code = 1

    def __init__(self, message: str, operation: Optional[str] = None):
        super().__init__(message)
        self.operation = operation or "unknown"


class InputError(AbPauliError):
    exit_code = 2


class NumericalError(AbPauliError):
    exit_code = 3


# --- input errors ---

class ConfigError(InputError):
    """Malformed run configuration, extension file or matrix input"""


class PoleError(InputError):
    """Gamma function evaluated at a non-positive integer"""


class ZeroArgumentError(InputError):
    """Singular function evaluated at r = 0 or z = 0"""


class BranchCutError(InputError):
    """Argument on a branch cut ([0, inf) for z, arg = pi for K)"""


class IntegerFluxError(InputError):
    """Integer flux is gauge-trivial"""


class FluxRangeError(InputError):
    """Reduced flux too close to 0 or 1"""


class NonPositiveError(InputError):
    """A strictly positive parameter was not positive"""


class NonHermitianError(InputError):
    pass


class InvalidRangeError(InputError):
    pass


class CoincidencePointError(InputError):
    """Kernel requested on its diagonal singularity"""


class ForwardDirectionError(InputError):
    """Amplitude requested in the distributional forward direction"""


class ChargeNotInKernelError(InputError):
    pass


class NonUnitaryError(InputError):
    pass


class NonOrthogonalError(InputError):
    pass


class RegularPartError(InputError):
    """Regular part of a spinor not flagged as vanishing at the origin"""


# --- numerical errors ---

class SpecialFunctionOverflow(NumericalError):
    pass


class SpectralPointError(NumericalError):
    """Lambda(z) + Theta is singular, z is an eigenvalue"""


class SingularMatrixError(NumericalError):
    pass


class TruncationError(NumericalError):
    """Partial-wave sum did not reach its tolerance within the cap"""
