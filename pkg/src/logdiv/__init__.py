"""Exact-arithmetic analysis of free divisors and their logarithmic
differential operator ideals.

The package is organized bottom-up:

  algebra   -- exact rational polynomials, parsing, gcd, weight search
  groebner  -- commutative Groebner bases, syzygies, dimension, quotients
  weyl      -- normal-ordered differential operators, left ideals, symbols
  divisor   -- logarithmic derivations, Saito certification, Koszul verdicts
  duality   -- the operator complex, dual presentation, annihilator checks
  cli       -- `logdiv` command-line front end with text/JSON reports
"""

from .algebra import (NotDivisible, Poly, PolyParseError, RationalFunction,
                      WeightVector, exact_divide, is_squarefree, parse_poly,
                      partial_derivative, poly_gcd, weighted_homogeneity)
from .divisor import (DerlogResult, KoszulResult, LogBasis, LogForm,
                      NotReduced, derlog, holonomicity_check, koszul_check,
                      lemma_det_check, logarithmic_form_check,
                      logarithmic_membership, saito_check, structure_constants)
from .duality import (DualPresentation, MismatchWithTilde, SpencerComplex,
                      annihilator_check, dual_presentation,
                      duality_identity_check, spencer_complex,
                      spencer_vs_syzygies, tilde_generators)
from .groebner import (GREVLEX, LEX, GroebnerBasis, MonomialOrder,
                       SyzygyModule, groebner_basis, hilbert_dimension,
                       ideal_quotient, is_regular_sequence, normal_form,
                       syzygy_module, weighted_order)
from .weyl import (LeftIdealGB, WeylOp, apply_operator, commutator,
                   d_weight_order, formal_adjoint, graded_ideal_dimension,
                   principal_symbol, weyl_groebner, weyl_mul,
                   weyl_normal_form, weyl_syzygies)

__version__ = "0.1.0"

__all__ = [
    "Poly", "RationalFunction", "WeightVector", "parse_poly",
    "partial_derivative", "exact_divide", "poly_gcd", "is_squarefree",
    "weighted_homogeneity", "NotDivisible", "PolyParseError",
    "MonomialOrder", "GREVLEX", "LEX", "weighted_order", "GroebnerBasis",
    "groebner_basis", "normal_form", "ideal_quotient", "syzygy_module",
    "SyzygyModule", "hilbert_dimension", "is_regular_sequence",
    "WeylOp", "weyl_mul", "commutator", "principal_symbol", "formal_adjoint",
    "apply_operator", "weyl_groebner", "weyl_normal_form", "weyl_syzygies",
    "graded_ideal_dimension", "LeftIdealGB", "d_weight_order",
    "LogBasis", "DerlogResult", "KoszulResult", "LogForm", "NotReduced",
    "derlog", "saito_check", "logarithmic_membership", "structure_constants",
    "lemma_det_check", "koszul_check", "holonomicity_check",
    "logarithmic_form_check",
    "SpencerComplex", "DualPresentation", "MismatchWithTilde",
    "spencer_complex", "spencer_vs_syzygies", "tilde_generators",
    "dual_presentation", "duality_identity_check", "annihilator_check",
]
