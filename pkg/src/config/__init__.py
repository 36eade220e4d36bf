"""
Configuration Package
"""
from src.config.numerics_config import (
    EXTENSION_PRESETS,
    DEFAULT_EXTENSION,
    ALPHA_GUARD,
    DEFAULT_MU_RANGE,
    DEFAULT_LAMBDA_RANGE,
    POINTS_PER_DECADE,
    ABEL_EPSILONS,
    DEFAULT_FORWARD_EXCLUSION,
    DIRAC_TRACE_RADII
)

from src.config.settings import (
    PROJECT_ROOT,
    OUTPUT_FOLDER,
    LOG_FOLDER,
    LOG_FILE,
    LOG_LEVEL,
    DEFAULT_WORKERS,
    DEFAULT_TOL,
    SUPPORTED_FORMATS,
    DEFAULT_FORMAT
)

from src.config.logging_config import setup_logging, get_logger

__all__ = [
    'EXTENSION_PRESETS',
    'DEFAULT_EXTENSION',
    'ALPHA_GUARD',
    'DEFAULT_MU_RANGE',
    'DEFAULT_LAMBDA_RANGE',
    'POINTS_PER_DECADE',
    'ABEL_EPSILONS',
    'DEFAULT_FORWARD_EXCLUSION',
    'DIRAC_TRACE_RADII',
    'PROJECT_ROOT',
    'OUTPUT_FOLDER',
    'LOG_FOLDER',
    'LOG_FILE',
    'LOG_LEVEL',
    'DEFAULT_WORKERS',
    'DEFAULT_TOL',
    'SUPPORTED_FORMATS',
    'DEFAULT_FORMAT',
    'setup_logging',
    'get_logger'
]
