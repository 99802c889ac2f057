"""Centers and ozone invariants of PI skew polynomial rings."""

from .core import SkewParams, parse_params, validate_and_normalize

__version__ = "0.1.0"

__all__ = ["SkewParams", "parse_params", "validate_and_normalize", "__version__"]
