"""Primality and prime-range helpers."""

from __future__ import annotations

from collections.abc import Iterator

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64 (and well beyond)."""
    if n < 2:
        return False
    for w in _WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Primes p with lo <= p < hi, ascending."""
    for n in range(max(lo, 2), hi):
        if is_prime(n):
            yield n
