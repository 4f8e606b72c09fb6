"""Exact construction and verification of Hopf algebras of GK-dimension one.

The scalars are cyclotomic rationals, so every check is an equality of
normal forms rather than a floating-point comparison.
"""

from .errors import (
    EmbeddingError,
    FieldMismatchError,
    HopfGKError,
    ParameterError,
    PreconditionError,
    PresentationMismatchError,
    QuotientConventionError,
    UnsupportedFamilyError,
)
from .exactnum import CycNum, CyclotomicField, Rational, cyclotomic_polynomial, embed, is_primitive_root, zeta
from .families import (
    DAlgebra,
    DihedralAlgebra,
    LaurentAlgebra,
    LiuAlgebra,
    Plain,
    PolynomialAlgebra,
    TaftAlgebra,
    UWord,
    make_family,
)
from .hopfcore import CheckResult, Element, HopfPresentation, TensorElement, run_axiom_suite
from .laurent import LaurentPoly, PhiFamily

__version__ = "0.1.0"
