"""Hessian loci of cubic hypersurfaces: exact computations over finite fields and Q."""
from .hessian import CubicForm, hessian_data, named_cubic, random_smooth_cubic

__version__ = "0.1.0"

__all__ = ["CubicForm", "hessian_data", "named_cubic", "random_smooth_cubic", "__version__"]
