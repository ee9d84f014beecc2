"""
Exotic conformal Galilei algebra: generators, brackets and the involution omega
"""
from .brackets import (
    BRACKET_TABLE,
    LieElement,
    ScanReport,
    bracket,
    bracket_lie,
    bracket_table_json,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    check_omega,
    omega,
    omega_lie,
    weight_shift,
)
from .generators import (
    CARTAN,
    LOWERING,
    LOWERING_INDEX,
    RAISING,
    Generator,
    TriangularPart,
    part_of,
)

__all__ = [
    'BRACKET_TABLE', 'LieElement', 'ScanReport', 'bracket', 'bracket_lie',
    'bracket_table_json', 'check_antisymmetry', 'check_grading', 'check_jacobi',
    'check_omega', 'omega', 'omega_lie', 'weight_shift',
    'CARTAN', 'LOWERING', 'LOWERING_INDEX', 'RAISING', 'Generator',
    'TriangularPart', 'part_of',
]
