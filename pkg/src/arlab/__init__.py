"""Exact computations with Rees algebras, relation type and Artin-Rees numbers."""
from .field import DEFAULT_PRIME, QQ, PrimeField, RationalField, field_from_descriptor
from .groebner import GroebnerBasis, groebner_basis, is_member, normal_form
from .parse import ParseError, UnknownVariableError, parse_polynomial
from .polynomial import (GREVLEX, GRLEX, LEX, MonomialOrder, Polynomial, PolynomialRing,
                         RingMismatchError, leading_data, poly_arith)

__version__ = "0.1.0"
