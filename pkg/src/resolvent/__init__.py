"""
Resolvent Package
"""
from src.resolvent.kernels import (
    invert_boundary_matrix,
    friedrichs_partial_wave,
    friedrichs_kernel,
    friedrichs_kernel_integral,
    single_layer,
    single_layer_branch,
    krein_correction,
    krein_kernel
)
from src.resolvent.spectrum import (
    EigenvalueRecord,
    ZeroResonance,
    boundary_matrix_negative,
    point_spectrum,
    bound_state,
    zero_resonance,
    singular_value_floor,
    exceptional_points
)

__all__ = [
    'invert_boundary_matrix',
    'friedrichs_partial_wave',
    'friedrichs_kernel',
    'friedrichs_kernel_integral',
    'single_layer',
    'single_layer_branch',
    'krein_correction',
    'krein_kernel',
    'EigenvalueRecord',
    'ZeroResonance',
    'boundary_matrix_negative',
    'point_spectrum',
    'bound_state',
    'zero_resonance',
    'singular_value_floor',
    'exceptional_points'
]
