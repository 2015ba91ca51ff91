"""
精确代数层：标量域、线性代数、合成代数、Jordan 代数
"""

from .field import Scalar, parse_rational, to_scalar
from .linalg import Mat, SpanBuilder, annihilator, det, intersect_spans, kernel, pfaffian, rank, solve
from .composition import (
    AlgElement,
    CompositionAlgebra,
    associator,
    cayley_dickson,
    derivations,
    is_quaternion_subalgebra,
    standard_algebra,
    subalgebra_closure,
)
from .jordan import Herm3, Zorn2, comatrix, det3, freudenthal_phi, in_section, jordan_product

__all__ = [
    "Scalar",
    "parse_rational",
    "to_scalar",
    "Mat",
    "SpanBuilder",
    "annihilator",
    "det",
    "intersect_spans",
    "kernel",
    "pfaffian",
    "rank",
    "solve",
    "AlgElement",
    "CompositionAlgebra",
    "associator",
    "cayley_dickson",
    "derivations",
    "is_quaternion_subalgebra",
    "standard_algebra",
    "subalgebra_closure",
    "Herm3",
    "Zorn2",
    "comatrix",
    "det3",
    "freudenthal_phi",
    "in_section",
    "jordan_product",
]
