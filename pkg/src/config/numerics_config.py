"""
Numerical Configuration
Tolerances, scan densities and named extension presets
"""

# Named extensions accepted by --ext
EXTENSION_PRESETS = {
    "friedrichs": {
        "kind": "friedrichs",
        "matrix_scale": None,
        "description": "Regular boundary behaviour in every channel (formal Theta = infinity)"
    },

    "krein": {
        "kind": "theta",
        "matrix_scale": 0.0,
        "description": "Scale-invariant extension, Theta = 0"
    }
}

DEFAULT_EXTENSION = "friedrichs"

# Flux guard band: 1/sin(pi*alpha) blows up at the ends of (0, 1)
ALPHA_GUARD = 1e-6

# Matrix checks
HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
SINGULAR_RCOND = 1e-12

# Point spectrum scan
DEFAULT_MU_RANGE = (1e-8, 1e8)
POINTS_PER_DECADE = 400
ROOT_MERGE_RTOL = 1e-8
KERNEL_RESIDUAL_TOL = 1e-8

# Zero-energy resonances and exceptional points
RESONANCE_SV_TOL = 1e-10
EXCEPTIONAL_SV_TOL = 1e-10
DEFAULT_LAMBDA_RANGE = (1e-3, 1e3)
EXCEPTIONAL_GRID_POINTS = 200

# Partial-wave sums
DEFAULT_TOL = 1e-10
MAX_PARTIAL_WAVES = 20000
PARTIAL_WAVE_BLOCK = 64
# Orders within this distance of an integer are refused by the I*K product
ORDER_GUARD = ALPHA_GUARD

# Kernel at close radii: angular integral instead of the partial-wave series
KERNEL_SERIES_MAX_RHO = 0.9
KERNEL_DECAY_MARGIN = 40.0
KERNEL_S_MAX = 50.0

# Scattering
ABEL_EPSILONS = (0.1, 0.05, 0.025)
FORWARD_TOL = 1e-12
DEFAULT_FORWARD_EXCLUSION = 1e-3

# Symmetry checks
SYMMETRY_TOL = 1e-10
BETA_INVARIANCE_TOL = 1e-12

# Dirac traces
DIRAC_TRACE_RADII = (1e-3, 1e-4, 1e-5)
DIRAC_ANGULAR_POINTS = 64
DIRAC_MEMBERSHIP_TOL = 1e-9

# Quadrature
QUAD_LIMIT = 400
QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-11
