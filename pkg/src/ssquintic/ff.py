"""Exact arithmetic in the prime field F_p.

Field elements are plain Python ints in the range [0, p); the modulus is
passed explicitly to each function.  Rational parameters such as 3/5 or
11/10 are carried as ``fractions.Fraction`` and reduced against a concrete
prime on demand, so the same symbolic parameter set can be reused across
many primes.

All products fit comfortably in Python ints; moduli up to 2**31 - 1 are
supported (and far more than needed for the desk-scale sweeps here).
"""

from __future__ import annotations

from fractions import Fraction

MIN_CHARACTERISTIC = 13  # everything downstream assumes p > 13


class NonInvertibleDenominator(ValueError):
    """Raised when a denominator is divisible by the modulus."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo p via extended Euclid (deterministic, exact)."""
    a %= p
    g, x, _ = xgcd(a, p)
    if g != 1:
        raise NonInvertibleDenominator(f"{a} is not invertible modulo {p}")
    return x % p


def reduce_rational(q: Fraction, p: int) -> int:
    """Reduce a rational number to its residue in F_p.

    Raises NonInvertibleDenominator if p divides the denominator.
    """
    if q.denominator % p == 0:
        raise NonInvertibleDenominator(
            f"denominator of {q} vanishes modulo {p}")
    return q.numerator * inv_mod(q.denominator, p) % p


def rising_factorial(x: int, length: int, p: int) -> int:
    """Rising factorial x(x+1)...(x+length-1) in F_p; 1 when length = 0."""
    acc = 1
    x %= p
    for i in range(length):
        acc = acc * (x + i) % p
    return acc


def binomial_mod_p(a: int, b: int, p: int) -> int:
    """Binomial coefficient C(a, b) mod p for 0 <= a < p.

    Returns 0 outside the range 0 <= b <= a; never 0 inside it (no factor
    of p can appear when a < p).
    """
    if not 0 <= a < p:
        raise ValueError(f"binomial_mod_p requires 0 <= a < p, got a={a}")
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    num, den = 1, 1
    for i in range(1, b + 1):
        num = num * (a - b + i) % p
        den = den * i % p
    return num * inv_mod(den, p) % p


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None if a is not a square.

    Tonelli-Shanks; deterministic apart from the search for a non-residue,
    which scans 2, 3, 4, ... in order.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r
