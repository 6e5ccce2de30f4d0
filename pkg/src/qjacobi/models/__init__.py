from .bracket import BracketFamily, StarSeries
from .depth import DepthProfile, Subalgebra
from .form import (
    E1,
    E2,
    E4,
    GENERATORS,
    P,
    PZ,
    UNIT,
    Form,
    Generator,
    Monomial,
)
from .group import JacobiGroupElement
from .numeric import NumericContext, Representation, SamplePoint
from .report import DimensionReport, ReportRecord
from .scalar import ONE, TWO_PI_I, ZERO, Scalar
from .types import Depth, RationalLike

__all__ = [
    "BracketFamily",
    "Depth",
    "DepthProfile",
    "DimensionReport",
    "E1",
    "E2",
    "E4",
    "Form",
    "GENERATORS",
    "Generator",
    "JacobiGroupElement",
    "Monomial",
    "NumericContext",
    "ONE",
    "P",
    "PZ",
    "RationalLike",
    "Representation",
    "ReportRecord",
    "SamplePoint",
    "Scalar",
    "StarSeries",
    "Subalgebra",
    "TWO_PI_I",
    "UNIT",
    "ZERO",
]
