from .formula import Conn, Formula, PropSignature, Var, enumerate_formulas, parse_formula, render_formula, substitute
from .matrix import LogicMatrix, LogicPresentation, boolean_matrix, eval_formula, lukasiewicz_matrix, matrix_consequence
from .translation import SigTranslation, check_logic_morphism, translate_formula

__all__ = [
    "Conn",
    "Formula",
    "PropSignature",
    "Var",
    "enumerate_formulas",
    "parse_formula",
    "render_formula",
    "substitute",
    "LogicMatrix",
    "LogicPresentation",
    "boolean_matrix",
    "eval_formula",
    "lukasiewicz_matrix",
    "matrix_consequence",
    "SigTranslation",
    "check_logic_morphism",
    "translate_formula",
]
