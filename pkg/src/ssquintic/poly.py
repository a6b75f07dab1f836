"""Dense univariate polynomials over F_p.

Coefficients are stored constant-term first as a tuple of ints in [0, p),
with no trailing zeros; the empty tuple is the canonical zero polynomial.
Values are immutable, so polynomials can be shared freely.

Multiplication uses an integer numpy convolution when the modulus is small
enough that accumulated products cannot overflow int64, and falls back to
schoolbook arithmetic on Python ints otherwise.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .ff import inv_mod

# Safe as long as min(len)*p*p < 2**63; degrees here stay below ~10**4.
_NUMPY_MOD_LIMIT = 1 << 21


class ModulusMismatch(ValueError):
    """Operands live over different prime fields."""


class BothZero(ValueError):
    """gcd(0, 0) is undefined."""


class ZeroPolynomial(ValueError):
    """Operation requires a nonzero polynomial."""


def _mul_coeffs(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    if p < _NUMPY_MOD_LIMIT:
        out = np.convolve(np.array(a, dtype=np.int64),
                          np.array(b, dtype=np.int64)) % p
        return out.tolist()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


class Poly:
    """Immutable dense polynomial over F_p."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable[int], p: int):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "p", p)

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls((1,), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls((0, 1), p)

    @classmethod
    def one_minus_x(cls, p: int) -> "Poly":
        return cls((1, -1), p)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of x^k; 0 beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def leading_coefficient(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "Poly") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"moduli differ: {self.p} != {other.p}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.p))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return Poly(out, self.p)

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.p)
        return Poly(_mul_coeffs(self.coeffs, other.coeffs, self.p), self.p)

    def scale(self, c: int) -> "Poly":
        c %= self.p
        return Poly((c * a for a in self.coeffs), self.p)

    def __pow__(self, e: int) -> "Poly":
        return self.expand_power(e)

    def expand_power(self, e: int) -> "Poly":
        """f**e by repeated multiplication; exact coefficients mod p."""
        if e < 0:
            raise ValueError("negative exponent")
        acc = Poly.one(self.p)
        for _ in range(e):
            acc = acc * self
        return acc

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        if len(rem) - 1 < dd:
            return Poly.zero(p), self
        inv_lead = inv_mod(div[-1], p)
        quo = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c * inv_lead % p
            quo[k - dd] = q
            for i in range(dd + 1):
                rem[k - dd + i] = (rem[k - dd + i] - q * div[i]) % p
        return Poly(quo, p), Poly(rem, p)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(inv_mod(self.coeffs[-1], self.p))

    def derivative(self) -> "Poly":
        """Formal derivative; may be zero for nonconstant f in char p."""
        return Poly((k * c for k, c in enumerate(self.coeffs) if k),
                    self.p)

    def eval(self, x: int) -> int:
        """Horner evaluation at x in F_p."""
        acc = 0
        x %= self.p
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __repr__(self) -> str:
        if self.is_zero:
            return f"Poly(0 mod {self.p})"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"Poly({' + '.join(terms)} mod {self.p})"


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; raises BothZero on gcd(0, 0)."""
    if f.p != g.p:
        raise ModulusMismatch(f"moduli differ: {f.p} != {g.p}")
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def is_separable(f: Poly) -> bool:
    """True iff f is coprime to its formal derivative.

    A nonconstant polynomial with zero derivative (a p-th power in
    disguise) is never separable: gcd(f, 0) = f is nonconstant.
    """
    if f.is_zero:
        raise ZeroPolynomial("separability of the zero polynomial")
    d = f.derivative()
    if d.is_zero:
        return f.degree == 0
    return gcd(f, d).degree == 0
