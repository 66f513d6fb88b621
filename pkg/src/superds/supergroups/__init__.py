"""Catalogs of matrix supergroups and their class-level verifiers."""

from .catalogs import (
    LieQuotient,
    LieSuperAlgebra,
    OddSquareZero,
    SplitData,
    centralizer_ideal_generators,
    conjugation_derivation,
    gl_bialgebra,
    gl_lie,
    gl_maxrank_adapted,
    gl_maxrank_element,
    gl_rank_one_adapted,
    gl_rank_one_element,
    lie_centralizer_and_bracket,
    q_adapted,
    q_bialgebra,
    q_lie,
    q_odd_element,
    split_generator_space,
)
from .faithful import faithful_module_coefficients
from .gtilde import (
    FormulaCheck,
    TableReport,
    build_gl_case,
    build_gl_maxrank_case,
    build_q_case,
    gl_gtilde_presentation,
    gl_maxrank_check,
    q_gtilde_formulas,
)
from .localized import gl_antipode, gl_to_q_realization, q_antipode

__all__ = [
    "FormulaCheck",
    "LieQuotient",
    "LieSuperAlgebra",
    "OddSquareZero",
    "SplitData",
    "TableReport",
    "build_gl_case",
    "build_gl_maxrank_case",
    "build_q_case",
    "centralizer_ideal_generators",
    "conjugation_derivation",
    "faithful_module_coefficients",
    "gl_antipode",
    "gl_bialgebra",
    "gl_gtilde_presentation",
    "gl_lie",
    "gl_maxrank_adapted",
    "gl_maxrank_check",
    "gl_maxrank_element",
    "gl_rank_one_adapted",
    "gl_rank_one_element",
    "gl_to_q_realization",
    "lie_centralizer_and_bracket",
    "q_adapted",
    "q_antipode",
    "q_bialgebra",
    "q_gtilde_formulas",
    "q_lie",
    "q_odd_element",
    "split_generator_space",
]
