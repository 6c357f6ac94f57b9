"""Structure constants, brackets and morphisms of the four Lie algebras."""

from .brackets import bracket, bracket_symbols, generators, jacobi_defect
from .morphisms import iso_frak_to_hv, iso_hv_to_frak, sigma, sigma_symbol
from .symbols import (
    SYMBOL_NAMES,
    AlgebraId,
    AlgebraMismatchError,
    BasisSym,
    E,
    Ehat,
    I,
    Ibar,
    InvalidSymbolError,
    L,
    Lbar,
    LieElt,
    T,
    That,
    central,
    sym,
)

__all__ = [
    # Symbols
    "SYMBOL_NAMES",
    "AlgebraId",
    "AlgebraMismatchError",
    "BasisSym",
    "InvalidSymbolError",
    "LieElt",
    "central",
    "sym",
    "L",
    "I",
    "Lbar",
    "Ibar",
    "T",
    "E",
    "That",
    "Ehat",
    # Brackets
    "bracket",
    "bracket_symbols",
    "generators",
    "jacobi_defect",
    # Morphisms
    "iso_frak_to_hv",
    "iso_hv_to_frak",
    "sigma",
    "sigma_symbol",
]
