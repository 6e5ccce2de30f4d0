from .rational import binomial, nearest_integer, to_fraction
from .validation import require_order

__all__ = ["binomial", "nearest_integer", "require_order", "to_fraction"]
