"""
Verma module V^{d,r}: PBW basis, weight spaces and the generator action
"""
from .engine import VermaModule, module_element_json
from .formulas import PRINTED_ACTIONS, printed_action
from .monomials import HIGHEST_WEIGHT, ModuleElement, Monomial
from .parameters import ParameterMode, ParameterPoint
from .weights import (
    WeightLabel,
    coordinates,
    dimension,
    enumerate_basis,
    from_coordinates,
    weight_of,
)

__all__ = [
    'VermaModule', 'module_element_json',
    'PRINTED_ACTIONS', 'printed_action',
    'HIGHEST_WEIGHT', 'ModuleElement', 'Monomial',
    'ParameterMode', 'ParameterPoint',
    'WeightLabel', 'coordinates', 'dimension', 'enumerate_basis',
    'from_coordinates', 'weight_of',
]
