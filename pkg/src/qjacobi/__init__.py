__version__ = "0.1.0"

from .algebra import (
    basis_monomials,
    depth_expand,
    depth_of,
    depth_profile,
    e6,
    in_subalgebra,
    q_op,
    random_homogeneous,
    random_modular,
    weight_of,
)
from .brackets import (
    associativity_defect,
    bracket,
    rc_bracket,
    rc_d_bracket,
    star_truncated,
    transvectant,
)
from .calculus import (
    d_deriv,
    delta,
    dtau,
    dz,
    eisenstein,
    oberdieck,
    theta,
    theta_prime,
)
from .dimensions import dimension_table, dims_by_enumeration, dims_by_series, dims_closed_form
from .exceptions import (
    ConfigurationError,
    EmptyBasisError,
    ExpressionError,
    ExpressionSyntaxError,
    InhomogeneousFormError,
    InvalidArgumentError,
    InvalidOrderError,
    InvalidWeightError,
    NumericDomainError,
    PoleError,
    QJacobiError,
    UnknownIdentifierError,
    ZeroFormError,
)
from .expression import format_form, parse
from .models import (
    E1,
    E2,
    E4,
    P,
    PZ,
    BracketFamily,
    Form,
    Generator,
    JacobiGroupElement,
    Monomial,
    NumericContext,
    ReportRecord,
    Representation,
    SamplePoint,
    Scalar,
    Subalgebra,
)
from .workbench import Workbench

__all__ = [
    "__version__",
    "Workbench",
    "QJacobiError",
    "ConfigurationError",
    "EmptyBasisError",
    "ExpressionError",
    "ExpressionSyntaxError",
    "InhomogeneousFormError",
    "InvalidArgumentError",
    "InvalidOrderError",
    "InvalidWeightError",
    "NumericDomainError",
    "PoleError",
    "UnknownIdentifierError",
    "ZeroFormError",
    "BracketFamily",
    "E1",
    "E2",
    "E4",
    "Form",
    "Generator",
    "JacobiGroupElement",
    "Monomial",
    "NumericContext",
    "P",
    "PZ",
    "ReportRecord",
    "Representation",
    "SamplePoint",
    "Scalar",
    "Subalgebra",
    "associativity_defect",
    "basis_monomials",
    "bracket",
    "d_deriv",
    "delta",
    "depth_expand",
    "depth_of",
    "depth_profile",
    "dimension_table",
    "dims_by_enumeration",
    "dims_by_series",
    "dims_closed_form",
    "dtau",
    "dz",
    "e6",
    "eisenstein",
    "format_form",
    "in_subalgebra",
    "oberdieck",
    "parse",
    "q_op",
    "random_homogeneous",
    "random_modular",
    "rc_bracket",
    "rc_d_bracket",
    "star_truncated",
    "theta",
    "theta_prime",
    "transvectant",
    "weight_of",
]
