"""Truncated Gaussian hypergeometric polynomials over F_p.

The degree-d truncation of the classical 2F1 series,

    sum_{l=0}^{d} (a;l)(b;l) / ((c;l)(1;l)) * z^l,

with (x;l) the rising factorial, reduced mod p.  Parameters are exact
rationals so the same symbolic triple (e.g. 3/5, 7/10, 11/10) can be
instantiated at many primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ff import inv_mod, reduce_rational
from .poly import Poly


class PochhammerDivisionByZero(ArithmeticError):
    """A denominator Pochhammer factor (c;l) or (1;l) vanished mod p.

    This signals parameters outside the valid regime; the offending
    (p, spec, l) triple is surfaced rather than guessing a convention.
    """

    def __init__(self, spec: "HGSpec", length: int):
        self.spec = spec
        self.length = length
        super().__init__(
            f"denominator Pochhammer factor vanishes at length {length} "
            f"for {spec}")


@dataclass(frozen=True)
class HGSpec:
    """Parameters (a, b, c), truncation order d, and prime p."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: int
    p: int

    def __post_init__(self):
        for q in (self.a, self.b, self.c):
            if q.denominator % self.p == 0:
                raise ValueError(f"denominator of {q} not coprime to {self.p}")
        if not 0 <= self.d < self.p:
            raise ValueError(f"truncation order {self.d} outside [0, {self.p})")


def truncated_hg(spec: HGSpec) -> Poly:
    """Build the truncated series as a polynomial in z of degree <= d.

    Terms follow the ratio recurrence
    term_{l+1} = term_l * (a+l)(b+l) / ((c+l)(1+l)), all in F_p.
    """
    p = spec.p
    a = reduce_rational(spec.a, p)
    b = reduce_rational(spec.b, p)
    c = reduce_rational(spec.c, p)
    coeffs = [1]
    term = 1
    for l in range(spec.d):
        den = (c + l) % p * ((l + 1) % p) % p
        if den == 0:
            raise PochhammerDivisionByZero(spec, l + 1)
        term = term * ((a + l) % p) % p * ((b + l) % p) % p * inv_mod(den, p) % p
        coeffs.append(term)
    return Poly(coeffs, p)


def euler_identity_gap(left: HGSpec, exponent: int, right: HGSpec) -> bool:
    """Check left = (1-z)**exponent * right as exact polynomials mod p.

    Euler's transformation formula predicts such identities between
    criterion polynomials; this predicate verifies them, it never assumes
    them.
    """
    if left.p != right.p:
        raise ValueError("specs must share the same prime")
    lhs = truncated_hg(left)
    rhs = Poly.one_minus_x(left.p).expand_power(exponent) * truncated_hg(right)
    return lhs == rhs
