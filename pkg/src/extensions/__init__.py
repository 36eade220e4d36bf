"""
Extension Family Package
"""
from src.extensions.flux import (
    FluxAlpha,
    ChannelIndex,
    PolarPoint,
    SpectralPoint,
    CHANNELS,
    CHANNEL_LABELS,
    SPIN_UP,
    SPIN_DOWN,
    reduce_flux,
    as_flux,
    as_point,
    as_spectral_point,
    branch_sqrt,
    spin_slot,
    as_charge4,
    unit_charge
)
from src.extensions.family import (
    ExtensionParam,
    as_herm4,
    l_matrix,
    lambda_weyl,
    lambda_weyl_zero,
    lambda_limit_pm,
    weyl_from_branch,
    boundary_branch,
    opposite_side,
    theta_from_beta,
    beta_from_theta,
    boundary_form,
    weyl_gram,
    weyl_gram_closed_form
)
from src.extensions.defect import (
    defect_vector,
    defect_g,
    defect_norm,
    defect_norm_numeric,
    small_r_expansion,
    defect_g_vn,
    defect_vn_norm_numeric
)

__all__ = [
    'FluxAlpha',
    'ChannelIndex',
    'PolarPoint',
    'SpectralPoint',
    'CHANNELS',
    'CHANNEL_LABELS',
    'SPIN_UP',
    'SPIN_DOWN',
    'reduce_flux',
    'as_flux',
    'as_point',
    'as_spectral_point',
    'branch_sqrt',
    'spin_slot',
    'as_charge4',
    'unit_charge',
    'ExtensionParam',
    'as_herm4',
    'l_matrix',
    'lambda_weyl',
    'lambda_weyl_zero',
    'lambda_limit_pm',
    'weyl_from_branch',
    'boundary_branch',
    'opposite_side',
    'theta_from_beta',
    'beta_from_theta',
    'boundary_form',
    'weyl_gram',
    'weyl_gram_closed_form',
    'defect_vector',
    'defect_g',
    'defect_norm',
    'defect_norm_numeric',
    'small_r_expansion',
    'defect_g_vn',
    'defect_vn_norm_numeric'
]
