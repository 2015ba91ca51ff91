"""
根系、对合、限制根系与着色扇
"""

from .roots import RootSystem, parse_type
from .involutions import InvolutionData, build_theta
from .restricted import RestrictedRootSystem, ValuationCone, lattice_basis, restrict, valuation_cone
from .fans import ColoredCone, ColoredFan, Verdict, homogeneity_verdict, is_complete, slice_highest_weight, validate_cone

__all__ = [
    "RootSystem",
    "parse_type",
    "InvolutionData",
    "build_theta",
    "RestrictedRootSystem",
    "ValuationCone",
    "lattice_basis",
    "restrict",
    "valuation_cone",
    "ColoredCone",
    "ColoredFan",
    "Verdict",
    "homogeneity_verdict",
    "is_complete",
    "slice_highest_weight",
    "validate_cone",
]
