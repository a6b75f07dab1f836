"""Superspecial plane quintic curves over prime fields."""

from .ff import (MIN_CHARACTERISTIC, NonInvertibleDenominator, binomial_mod_p,
                 inv_mod, reduce_rational, rising_factorial, sqrt_mod)
from .hypergeom import HGSpec, PochhammerDivisionByZero, euler_identity_gap, truncated_hg
from .poly import BothZero, ModulusMismatch, Poly, ZeroPolynomial, gcd, is_separable
from .primes import is_prime, primes_in_range
from .quintic import (CountResult, CriterionAssertionError, CrossCheckMismatch,
                      InvalidPair, ParityViolation, QuinticFamily, WrongFamily,
                      WrongResidue, count_z8, count_z10,
                      fixed_type_is_superspecial, g_poly_z8, g_poly_z10,
                      hurwitz_is_superspecial_via_table, hurwitz_st,
                      lambda_r_relation, special_lambda_roots_z10)
from .superelliptic import (FamilyParams, IndexTuple, InvalidCurve,
                            InvalidLambda, SuperellipticCurve,
                            clambda_is_superspecial, compute_S, compute_T,
                            criterion_polynomials, family_curve,
                            oracle_is_superspecial, oracle_witnesses,
                            xmx_is_superspecial)

__all__ = [name for name in dir() if not name.startswith("_")]
