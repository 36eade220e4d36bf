"""
Symmetry and Dirac Package
"""
from src.symmetry.classify import (
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    PAULI,
    SpinMatrix,
    PlaneTransform,
    SymmetryVerdict,
    spin_exponential,
    rodrigues_conjugate,
    conjugate_by_exponential,
    pauli_structure_holds,
    dirac_structure_holds,
    classify_pauli,
    classify_dirac,
    beta_invariance
)
from src.symmetry.dirac import (
    TRACE_NAMES,
    DiracCharges,
    DiracSpinor,
    DiracSquareReport,
    dirac_defect_xi,
    dirac_traces,
    dirac_traces_numeric,
    dirac_membership,
    dirac_square_charges,
    apply_dirac
)

__all__ = [
    'SIGMA_1',
    'SIGMA_2',
    'SIGMA_3',
    'PAULI',
    'SpinMatrix',
    'PlaneTransform',
    'SymmetryVerdict',
    'spin_exponential',
    'rodrigues_conjugate',
    'conjugate_by_exponential',
    'pauli_structure_holds',
    'dirac_structure_holds',
    'classify_pauli',
    'classify_dirac',
    'beta_invariance',
    'TRACE_NAMES',
    'DiracCharges',
    'DiracSpinor',
    'DiracSquareReport',
    'dirac_defect_xi',
    'dirac_traces',
    'dirac_traces_numeric',
    'dirac_membership',
    'dirac_square_charges',
    'apply_dirac'
]
