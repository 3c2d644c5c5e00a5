"""Exact arithmetic for key polynomials, their Young analogues and related bases."""

from .analysis import basis_poly, expand
from .fillings import enumerate_family, gen_poly
from .operators import key_ops, ykey_ops, schubert_ops, yschubert_ops
from .polynomial import Polynomial, to_text

__version__ = "0.1.0"
