"""Superspeciality machinery for superelliptic curves y^n = f(x).

Two independent routes are provided:

* a brute-force oracle that expands f(x)^((ip-j)/n) and scans the
  x^(hp-k) coefficients directly, and
* the hypergeometric criterion for the one-parameter family
  C_lambda: y^n = x(x^r - 1)(x^r - lambda), driven by the index set T.

The two must agree; tests enforce this exhaustively for small primes.
All divisibility and inequality conditions are evaluated in exact integer
arithmetic, with strict bounds like h < (2r+1)i/n handled by
cross-multiplication (h*n < (2r+1)*i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .hypergeom import HGSpec, truncated_hg
from .poly import Poly, is_separable


class InvalidCurve(ValueError):
    """Curve data violates the superelliptic invariants."""


class InvalidLambda(ValueError):
    """The family parameter lambda must avoid 0 and 1."""


class IndexTuple(NamedTuple):
    i: int
    j: int
    h: int
    k: int


@dataclass(frozen=True)
class SuperellipticCurve:
    """y^n = f(x) with f square-free of degree m >= 3 and p not dividing n."""

    n: int
    f: Poly
    p: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidCurve(f"n = {self.n} < 2")
        if self.n % self.p == 0:
            raise InvalidCurve(f"p = {self.p} divides n = {self.n}")
        if self.f.p != self.p:
            raise InvalidCurve("modulus of f differs from p")
        if self.f.degree < 3:
            raise InvalidCurve(f"deg f = {self.f.degree} < 3")
        if not is_separable(self.f):
            raise InvalidCurve("f is not square-free")

    @property
    def m(self) -> int:
        return self.f.degree


@dataclass(frozen=True)
class FamilyParams:
    """The family C_lambda: y^n = x(x^r - 1)(x^r - lambda)."""

    n: int
    r: int
    p: int

    def __post_init__(self):
        if self.n < 2 or self.r < 1:
            raise InvalidCurve(f"need n >= 2 and r >= 1, got {self}")
        if self.n % self.p == 0:
            raise InvalidCurve(f"p = {self.p} divides n = {self.n}")


def family_curve(params: FamilyParams, lam: int) -> SuperellipticCurve:
    """The concrete member y^n = x(x^r - 1)(x^r - lambda)."""
    lam %= params.p
    if lam in (0, 1):
        raise InvalidLambda(f"lambda = {lam} is excluded")
    p, r = params.p, params.r
    xr_minus_1 = Poly([-1] + [0] * (r - 1) + [1], p)
    xr_minus_lam = Poly([-lam] + [0] * (r - 1) + [1], p)
    f = Poly.x(p) * xr_minus_1 * xr_minus_lam
    return SuperellipticCurve(params.n, f, p)


def _ij_pairs(n: int, p: int):
    """Pairs 1 <= i, j < n with n | (ip - j), together with (ip-j)/n."""
    for i in range(1, n):
        for j in range(1, n):
            if (i * p - j) % n == 0:
                yield i, j, (i * p - j) // n


def oracle_witnesses(curve: SuperellipticCurve,
                     stop_at_first: bool = False) -> list[IndexTuple]:
    """Tuples (i,j,h,k) whose x^(hp-k) coefficient in f^((ip-j)/n) is nonzero.

    Empty list means the curve is superspecial.  The expansion is computed
    once per (i, j) pair and scanned for all admissible (h, k).
    """
    n, m, p = curve.n, curve.m, curve.p
    witnesses = []
    for i, j, e in _ij_pairs(n, p):
        fe = curve.f.expand_power(e)
        for h in range(1, m):
            if h * n >= m * i:
                break
            for k in range(1, m):
                if k * n >= m * j:
                    break
                if fe.coefficient(h * p - k) != 0:
                    witnesses.append(IndexTuple(i, j, h, k))
                    if stop_at_first:
                        return witnesses
    return witnesses


def oracle_is_superspecial(curve: SuperellipticCurve) -> bool:
    """Brute-force coefficient-vanishing test; the ground truth oracle."""
    return not oracle_witnesses(curve, stop_at_first=True)


def compute_S(n: int, m: int, p: int) -> set[IndexTuple]:
    """The index set governing y^n = x^m - x; empty iff superspecial."""
    out = set()
    for i, j, a in _ij_pairs(n, p):
        for h in range(1, m):
            if h * n >= m * i:
                break
            for k in range(1, m):
                if k * n >= m * j:
                    break
                diff = h * p - k - a
                if diff % (m - 1) == 0 and 0 <= diff <= (m - 1) * a:
                    out.add(IndexTuple(i, j, h, k))
    return out


def xmx_is_superspecial(n: int, m: int, p: int) -> bool:
    """Superspeciality of y^n = x^m - x by emptiness of the index set."""
    return not compute_S(n, m, p)


def compute_T(params: FamilyParams) -> set[IndexTuple]:
    """The index set governing the family C_lambda."""
    n, r, p = params.n, params.r, params.p
    w = 2 * r + 1
    out = set()
    for i, j, a in _ij_pairs(n, p):
        for h in range(1, w):
            if h * n >= w * i:
                break
            for k in range(1, w):
                if k * n >= w * j:
                    break
                diff = h * p - k - a
                if diff % r == 0 and 0 <= diff <= 2 * r * a:
                    out.add(IndexTuple(i, j, h, k))
    return out


def criterion_polynomials(params: FamilyParams) -> list[tuple[IndexTuple, HGSpec]]:
    """One truncated-series spec per tuple of T, per the vanishing criterion.

    Writing a = (ip-j)/n and b = (hp-k-a)/r, the truncation order is b and
    the parameters are (j/n, k/r - j/(nr), 1 - j/n + k/r - j/(nr)) when
    b <= a; otherwise the order is 2a - b with parameters
    (j/n, -k/r + 2j/n + j/(nr), 1 + j/n - k/r + j/(nr)).

    Provably redundant entries are still emitted; redundancy is a fact to
    verify, not an assumption.
    """
    n, r, p = params.n, params.r, params.p
    out = []
    for t in sorted(compute_T(params)):
        a = (t.i * p - t.j) // n
        b = (t.h * p - t.k - a) // r
        jn = Fraction(t.j, n)
        kr = Fraction(t.k, r)
        jnr = Fraction(t.j, n * r)
        if b <= a:
            spec = HGSpec(jn, kr - jnr, 1 - jn + kr - jnr, b, p)
        else:
            spec = HGSpec(jn, -kr + 2 * jn + jnr, 1 + jn - kr + jnr,
                          2 * a - b, p)
        out.append((t, spec))
    return out


@lru_cache(maxsize=256)
def _criterion_polys(params: FamilyParams) -> tuple[Poly, ...]:
    return tuple(truncated_hg(spec)
                 for _, spec in criterion_polynomials(params))


def clambda_is_superspecial(params: FamilyParams, lam: int) -> bool:
    """Hypergeometric criterion: every criterion polynomial vanishes at lambda."""
    lam %= params.p
    if lam in (0, 1):
        raise InvalidLambda(f"lambda = {lam} is excluded")
    return all(g.eval(lam) == 0 for g in _criterion_polys(params))
