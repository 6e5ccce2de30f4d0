from .analytic import AnalyticSuite
from .associativity import AssociativitySuite
from .base import Suite
from .dimensions import DimensionsSuite
from .identities import IdentitiesSuite
from .stability import StabilitySuite

__all__ = [
    "AnalyticSuite",
    "AssociativitySuite",
    "DimensionsSuite",
    "IdentitiesSuite",
    "StabilitySuite",
    "Suite",
]
