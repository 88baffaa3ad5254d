"""Exact algebra of skein-valued cluster transformations."""
from skeincluster.coeffs import LaurentSA, RationalSA, q_factorial, q_integer

__version__ = "0.1.0"

__all__ = ["LaurentSA", "RationalSA", "q_integer", "q_factorial", "__version__"]
