"""Prime testing, prime enumeration, and mod-p scalar arithmetic.

The modulus is carried alongside values as a plain int rather than being
baked into a type, so a single build handles arbitrary primes at runtime.
Passing values reduced under different moduli into the fp_* helpers is a
programming error, not a recoverable condition.
"""

from __future__ import annotations

# Witnesses making Miller-Rabin deterministic for all n < 3.317e24 (> 2^64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every n < 2**64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes q with lo <= q < hi, ascending."""
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid range [{lo}, {hi})")
    return [n for n in range(max(lo, 2), hi) if is_prime(n)]


def fp_add(a: int, b: int, p: int) -> int:
    return (a + b) % p


def fp_mul(a: int, b: int, p: int) -> int:
    return a * b % p


def fp_neg(a: int, p: int) -> int:
    return -a % p
