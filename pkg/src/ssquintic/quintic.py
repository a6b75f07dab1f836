"""Superspeciality of plane quintic curves, by automorphism type.

Fixed types (1-5) are decided by congruence conditions on p; the
one-parameter families with cyclic automorphism groups of order 10 and 8
are enumerated through the vanishing polynomial of their hypergeometric
criterion.  Every count is produced by two routes where two exist, and the
routes are required to agree at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce

from . import poly
from .ff import inv_mod, sqrt_mod
from .hypergeom import HGSpec, truncated_hg
from .poly import Poly
from .superelliptic import FamilyParams, criterion_polynomials


class WrongFamily(ValueError):
    """Operation does not apply to this automorphism type."""


class WrongResidue(ValueError):
    """The prime lies outside the residue class required here."""


class InvalidPair(ValueError):
    """(i, j) outside the six admissible pairs of the order-39 analysis."""


class CrossCheckMismatch(AssertionError):
    """Closed-form and constructive counts disagree: an implementation bug."""


class ParityViolation(AssertionError):
    """A vanishing-polynomial degree has impossible parity."""


class CriterionAssertionError(AssertionError):
    """A property the vanishing polynomial must satisfy failed."""


class QuinticFamily(Enum):
    TYPE1_FERMAT = "type1"
    TYPE2_HURWITZ = "type2"
    TYPE3 = "type3"
    TYPE4_Z20 = "type4"
    TYPE5_Z16 = "type5"
    TYPE6_Z10 = "z10"
    TYPE8_Z8 = "z8"


FIXED_TYPES = (QuinticFamily.TYPE1_FERMAT, QuinticFamily.TYPE2_HURWITZ,
               QuinticFamily.TYPE3, QuinticFamily.TYPE4_Z20,
               QuinticFamily.TYPE5_Z16)


@dataclass(frozen=True)
class CountResult:
    """Per-prime enumeration record for a one-parameter family."""

    p: int
    family: QuinticFamily
    deg_g: int | None
    count: int
    adjustments: int
    method: str  # closed_form | constructive | both_agree


def fixed_type_is_superspecial(family: QuinticFamily, p: int) -> bool:
    """Congruence criterion for the 0-dimensional types."""
    if family is QuinticFamily.TYPE1_FERMAT:
        return p % 5 == 4
    if family is QuinticFamily.TYPE2_HURWITZ:
        return p % 13 in (4, 10, 12)
    if family is QuinticFamily.TYPE3:
        return p % 5 == 4
    if family is QuinticFamily.TYPE4_Z20:
        return p % 20 == 19
    if family is QuinticFamily.TYPE5_Z16:
        return p % 16 == 15
    raise WrongFamily(f"{family} is a one-parameter family, use its count")


# Admissible (i, j) pairs for the order-39 quintic's coefficient analysis.
HURWITZ_PAIRS = ((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0))


def hurwitz_st(p: int, i: int, j: int) -> tuple[int, int]:
    """Smallest positive (s, t) with sp = 3i+4j+4 and tp = 4i+j+1 mod 13."""
    if (i, j) not in HURWITZ_PAIRS:
        raise InvalidPair(f"({i}, {j}) not admissible")
    if p % 13 == 0:
        raise ValueError("p must not be divisible by 13")
    pinv = inv_mod(p, 13)
    s = (3 * i + 4 * j + 4) * pinv % 13
    t = (4 * i + j + 1) * pinv % 13
    return s, t


def hurwitz_is_superspecial_via_table(p: int) -> bool:
    """Superspeciality of the order-39 quintic via the (s, t) comparison."""
    return all(s <= t for s, t in
               (hurwitz_st(p, i, j) for i, j in HURWITZ_PAIRS))


Z10_PARAMS = (Fraction(3, 5), Fraction(7, 10), Fraction(11, 10))


def g_poly_z10(p: int) -> Poly:
    """The order-10 family's vanishing polynomial for p = 4 mod 5.

    Its properties (degree (3p-7)/10, constant term 1, no root at 1,
    separability) are asserted at construction; a failure is a bug.
    """
    if p % 5 != 4 or p <= 13:
        raise WrongResidue(f"p = {p}: need p = 4 mod 5 and p > 13")
    d = (3 * p - 7) // 10
    g = truncated_hg(HGSpec(*Z10_PARAMS, d, p))
    if g.degree != d:
        raise CriterionAssertionError(f"p={p}: degree {g.degree} != {d}")
    if g.coefficient(0) != 1:
        raise CriterionAssertionError(f"p={p}: constant term != 1")
    if g.eval(1) == 0:
        raise CriterionAssertionError(f"p={p}: unexpected root at 1")
    if not poly.is_separable(g):
        raise CriterionAssertionError(f"p={p}: multiple root detected")
    return g


def special_lambda_roots_z10(g: Poly, p: int) -> int:
    """Roots of g with enlarged automorphism group.

    The quadratic x^2 - 18x + 1 captures the two parameters whose curve
    gains automorphism order 150; the point -1 captures the order-20
    curve.  Counted by gcd degree and evaluation, entirely inside F_p[x].
    """
    quad = Poly([1, -18, 1], p)
    count = poly.gcd(g, quad).degree
    if g.eval(p - 1) == 0:
        count += 1
    return count


def count_z10(p: int) -> CountResult:
    """Isomorphism classes in the order-10 family at p.

    Closed form: (3p-27)/20 if p = 9 mod 20, (3p-37)/20 if p = 19 mod 20,
    else 0.  For p = 4 mod 5 the constructive route (vanishing-polynomial
    degree minus special roots, halved) is also computed and must agree.
    """
    if p % 20 == 9:
        closed = (3 * p - 27) // 20
    elif p % 20 == 19:
        closed = (3 * p - 37) // 20
    else:
        closed = 0
    if p % 5 != 4:
        return CountResult(p, QuinticFamily.TYPE6_Z10, None, closed, 0,
                           "closed_form")
    g = g_poly_z10(p)
    adj = special_lambda_roots_z10(g, p)
    remaining = g.degree - adj
    if remaining % 2:
        raise ParityViolation(f"p={p}: {remaining} plain roots, odd")
    constructive = remaining // 2
    if constructive != closed:
        raise CrossCheckMismatch(
            f"p={p}: closed form {closed} != constructive {constructive}")
    return CountResult(p, QuinticFamily.TYPE6_Z10, g.degree, closed, adj,
                       "both_agree")


def _z8_case_specs(p: int) -> list[HGSpec]:
    """Expected criterion spec list for the order-8 family, by p mod 8.

    One entry per tuple of the index set (so the spec shared by two tuples
    appears twice).  Used as a cross-check against the list derived from
    first principles.
    """
    F = Fraction
    if p % 8 == 1:
        rows = [((p - 1) // 8, F(1, 4), F(1, 8), F(7, 8)),
                ((p - 1) // 4, F(1, 2), F(1, 4), F(3, 4)),
                ((p - 1) // 4, F(1, 2), F(1, 4), F(3, 4)),
                ((p - 1) // 8, F(3, 4), F(1, 8), F(3, 8)),
                ((p - 9) // 8, F(3, 4), F(9, 8), F(11, 8)),
                ((5 * p - 5) // 8, F(3, 4), F(5, 8), F(7, 8)),
                ((3 * p - 11) // 8, F(3, 4), F(11, 8), F(13, 8)),
                ((3 * p - 3) // 8, F(3, 4), F(3, 8), F(5, 8))]
    elif p % 8 == 3:
        rows = [((p - 11) // 8, F(3, 4), F(11, 8), F(13, 8)),
                ((p - 3) // 8, F(3, 4), F(3, 8), F(5, 8)),
                ((p - 3) // 4, F(1, 2), F(3, 4), F(5, 4)),
                ((p - 3) // 4, F(1, 2), F(3, 4), F(5, 4)),
                ((p - 3) // 8, F(1, 4), F(3, 8), F(9, 8)),
                ((3 * p - 1) // 8, F(1, 4), F(1, 8), F(7, 8))]
    elif p % 8 == 5:
        rows = [((p - 1) // 4, F(1, 2), F(1, 4), F(3, 4)),
                ((p - 1) // 4, F(1, 2), F(1, 4), F(3, 4)),
                ((p - 5) // 8, F(3, 4), F(5, 8), F(7, 8)),
                ((5 * p - 1) // 8, F(3, 4), F(1, 8), F(3, 8)),
                ((5 * p - 9) // 8, F(3, 4), F(9, 8), F(11, 8)),
                ((3 * p - 7) // 8, F(3, 4), F(7, 8), F(9, 8))]
    else:
        rows = [((p - 7) // 8, F(3, 4), F(7, 8), F(9, 8)),
                ((p - 3) // 4, F(1, 2), F(3, 4), F(5, 4)),
                ((p - 3) // 4, F(1, 2), F(3, 4), F(5, 4)),
                ((5 * p - 3) // 8, F(1, 4), F(3, 8), F(9, 8))]
    return [HGSpec(a, b, c, d, p) for d, a, b, c in rows]


def _spec_key(s: HGSpec) -> tuple:
    # a and b are interchangeable in the series definition
    return (s.d, s.c, *sorted((s.a, s.b)))


def g_poly_z8(p: int) -> Poly:
    """The order-8 family's vanishing polynomial: monic gcd of all criterion
    polynomials derived from the index set.

    The derived spec list must match the expected per-residue list, and the
    gcd must be separable with no root at 0 or 1; failures are bugs.
    """
    if p <= 13:
        raise WrongResidue(f"p = {p}: need p > 13")
    params = FamilyParams(4, 2, p)
    derived = [spec for _, spec in criterion_polynomials(params)]
    if sorted(map(_spec_key, derived)) != sorted(map(_spec_key,
                                                     _z8_case_specs(p))):
        raise CriterionAssertionError(
            f"p={p}: derived criterion list differs from the expected case")
    polys = [truncated_hg(spec) for spec in derived]
    g = reduce(poly.gcd, polys).monic()
    if g.is_zero:
        raise CriterionAssertionError(f"p={p}: zero gcd")
    if g.eval(0) == 0 or g.eval(1) == 0:
        raise CriterionAssertionError(f"p={p}: root at 0 or 1")
    if not poly.is_separable(g):
        raise CriterionAssertionError(f"p={p}: multiple root detected")
    return g


def count_z8(p: int) -> CountResult:
    """Isomorphism classes in the order-8 family at p.

    (deg g - 1)/2 when p = 15 mod 16 (the parameter -1 then carries the
    larger order-16 group and is dropped), deg g / 2 otherwise.
    """
    g = g_poly_z8(p)
    deg = g.degree
    minus_one_is_root = g.eval(p - 1) == 0
    if minus_one_is_root != (p % 16 == 15):
        raise CriterionAssertionError(
            f"p={p}: root at -1 is {minus_one_is_root}, "
            f"expected {p % 16 == 15}")
    if p % 16 == 15:
        if deg % 2 == 0:
            raise ParityViolation(f"p={p}: even degree {deg} with root at -1")
        return CountResult(p, QuinticFamily.TYPE8_Z8, deg, (deg - 1) // 2, 1,
                           "constructive")
    if deg % 2:
        raise ParityViolation(f"p={p}: odd degree {deg} without root at -1")
    return CountResult(p, QuinticFamily.TYPE8_Z8, deg, deg // 2, 0,
                       "constructive")


def lambda_r_relation(r2: int, p: int) -> tuple[int, int] | None:
    """Solve lambda + 1/lambda = r^2 - 2 for lambda in F_p.

    Returns the two roots (lambda, 1/lambda) of
    x^2 - (r^2 - 2)x + 1 when the discriminant is a square in F_p,
    otherwise None (the roots lie in the quadratic extension).
    """
    s = (r2 - 2) % p
    disc = (s * s - 4) % p
    root = sqrt_mod(disc, p)
    if root is None:
        return None
    half = inv_mod(2, p)
    return ((s + root) * half % p, (s - root) * half % p)
