"""Exact computations with grove, forest, Schubert and Grothendieck polynomials."""

from .ring import BETA, ONE, ZERO, BetaCoeff, BetaPolynomial, parse, x
from .forest import IndexedForest, from_word, parse_forest, qdes, trim, zigzag_forest
from .schubert import Permutation, grothendieck, parse_permutation, schubert
from .bases import (
    Expansion, expand_forest, expand_grove, expand_multifundamental,
    forest_polynomial, grove_polynomial, multifundamental,
)

__all__ = [
    "BETA", "ONE", "ZERO", "BetaCoeff", "BetaPolynomial", "parse", "x",
    "IndexedForest", "from_word", "parse_forest", "qdes", "trim", "zigzag_forest",
    "Permutation", "grothendieck", "parse_permutation", "schubert",
    "Expansion", "expand_forest", "expand_grove", "expand_multifundamental",
    "forest_polynomial", "grove_polynomial", "multifundamental",
]
__version__ = "0.1.0"
