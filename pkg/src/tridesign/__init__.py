"""Ternary codes from quadratic trace forms, their minimum-weight 2-designs and design codes."""

from .codes import LinearCode, WeightEnumerator, macwilliams
from .designs import Design, is_t_design, p_rank
from .errors import ConfigurationError, ConsistencyError, InfeasibleError, ShapeError
from .gf3m import Field, field_new
from .trits import SpanBasis, TritMat, TritVec

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError", "ConsistencyError", "Design", "Field", "InfeasibleError", "LinearCode",
    "ShapeError", "SpanBasis", "TritMat", "TritVec", "WeightEnumerator", "field_new", "is_t_design",
    "macwilliams", "p_rank",
]
