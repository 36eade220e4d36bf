"""
Utilities Package
"""
from src.utils.json_formatter import (
    complex_to_json,
    complex_from_json,
    load_extension,
    save_extension,
    format_for_display,
    create_final_output,
    write_table,
    write_spectrum_report,
    read_spectrum_csv
)
from src.utils.grid_runner import parallel_map
from src.utils.finite_difference import radial_residual, pauli_residual

__all__ = [
    'complex_to_json',
    'complex_from_json',
    'load_extension',
    'save_extension',
    'format_for_display',
    'create_final_output',
    'write_table',
    'write_spectrum_report',
    'read_spectrum_csv',
    'parallel_map',
    'radial_residual',
    'pauli_residual'
]
