"""Exact-arithmetic tools for square-zero odd operators on super spaces.

The core functor sends a supermodule with a square-zero odd action to
kernel modulo image. Around it the package provides finite fields and
their extensions, super linear algebra with echelon certificates,
supercommutative polynomial rings, truncated differential form and strand
complexes, coordinate superalgebras of matrix supergroups with frozen
expected-value tables, injectivity testing over exterior algebras on odd
primitives, a weight order with interval enumeration, and a command line
front end that renders deterministic verification reports.
"""

from .dsfunctor import (
    DSResult,
    SquareZeroOddOperator,
    complex_as_operator,
    direct_sum_operator,
    ds,
    dual_operator,
    induced_map,
    random_operator,
    tensor_operator,
)
from .fields import FieldExtension, PrimeField, eigenvalue_over_extension
from .linalg import GradedLinearMap, Subspace, SuperVectorSpace
from .oddmodules import (
    FREE,
    INCONCLUSIVE,
    WITNESS,
    OddModule,
    ds_at,
    find_witness,
    free_decompose,
    is_injective,
    random_module,
    truncated_counterexample,
)
from .report import CheckRecord, VerificationReport, available_suites, run_suite
from .superpoly import SuperDerivation, SuperPolyRing, SuperPolynomial

__version__ = "0.1.0"

__all__ = [
    "CheckRecord",
    "DSResult",
    "FieldExtension",
    "FREE",
    "GradedLinearMap",
    "INCONCLUSIVE",
    "OddModule",
    "PrimeField",
    "SquareZeroOddOperator",
    "Subspace",
    "SuperDerivation",
    "SuperPolyRing",
    "SuperPolynomial",
    "SuperVectorSpace",
    "VerificationReport",
    "WITNESS",
    "available_suites",
    "complex_as_operator",
    "direct_sum_operator",
    "ds",
    "ds_at",
    "dual_operator",
    "eigenvalue_over_extension",
    "find_witness",
    "free_decompose",
    "induced_map",
    "is_injective",
    "random_module",
    "random_operator",
    "run_suite",
    "tensor_operator",
    "truncated_counterexample",
    "__version__",
]
