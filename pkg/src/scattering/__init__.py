"""
Scattering Package
"""
from src.scattering.eigenfunctions import (
    WaveVector,
    partial_wave_cutoff,
    plane_wave,
    plane_wave_partial,
    friedrichs_partial_sum,
    friedrichs_eigenfunction,
    tau_trace,
    tau_vector,
    single_layer_limit,
    single_layer_limit_hankel,
    theta_correction_matrix,
    theta_eigenfunction
)
from src.scattering.amplitudes import (
    ChannelPhase,
    friedrichs_amplitude,
    friedrichs_cross_section,
    abel_partial_sum,
    abel_amplitude,
    extension_amplitude,
    theta_amplitude,
    theta_cross_section,
    s_matrix_phases,
    s_matrix_angular
)

__all__ = [
    'WaveVector',
    'partial_wave_cutoff',
    'plane_wave',
    'plane_wave_partial',
    'friedrichs_partial_sum',
    'friedrichs_eigenfunction',
    'tau_trace',
    'tau_vector',
    'single_layer_limit',
    'single_layer_limit_hankel',
    'theta_correction_matrix',
    'theta_eigenfunction',
    'ChannelPhase',
    'friedrichs_amplitude',
    'friedrichs_cross_section',
    'abel_partial_sum',
    'abel_amplitude',
    'extension_amplitude',
    'theta_amplitude',
    'theta_cross_section',
    's_matrix_phases',
    's_matrix_angular'
]
