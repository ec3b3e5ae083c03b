"""Exact univariate Laurent polynomial arithmetic over F_p.

Polynomials are stored densely: a tuple of coefficients in [0, p) together
with the exponent ``lo`` of the first entry. Automaton states live in a
fixed small exponent window, where dense storage beats sparse and gives
cheap canonical hashing. Instances are immutable; every operation returns
a new polynomial in canonical trimmed form (no leading or trailing zero
coefficient, empty tuple for the zero polynomial).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .numtheory import is_prime


class PolyParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LaurentPoly:
    """A univariate Laurent polynomial over F_p.

    ``coeffs[k]`` is the coefficient of ``t**(lo + k)``. The zero polynomial
    is first class (empty coefficient tuple): it arises as a genuine
    automaton state, since digit extraction can annihilate a polynomial.
    """

    __slots__ = ("p", "lo", "coeffs")

    def __init__(self, p: int, lo: int, coeffs: tuple[int, ...]):
        # Raw constructor: inputs must already be canonical. Use from_terms,
        # parse, zero or one to build values from untrusted data.
        self.p = p
        self.lo = lo
        self.coeffs = coeffs

    @classmethod
    def _make(cls, p: int, lo: int, coeffs: Iterable[int]) -> "LaurentPoly":
        coeffs = list(coeffs)
        i, j = 0, len(coeffs)
        while i < j and coeffs[i] == 0:
            i += 1
        while j > i and coeffs[j - 1] == 0:
            j -= 1
        if i == j:
            return cls(p, 0, ())
        return cls(p, lo + i, tuple(coeffs[i:j]))

    @classmethod
    def zero(cls, p: int) -> "LaurentPoly":
        return cls(p, 0, ())

    @classmethod
    def one(cls, p: int) -> "LaurentPoly":
        return cls(p, 0, (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def hi(self) -> int:
        """Largest exponent with nonzero coefficient (zero polynomial: lo)."""
        return self.lo + max(len(self.coeffs) - 1, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.p, self.lo, self.coeffs) == (other.p, other.lo, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.lo, self.coeffs))

    def __repr__(self) -> str:
        return f"<LaurentPoly {self} (mod {self.p})>"

    def _check_modulus(self, other: "LaurentPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_modulus(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        acc = [0] * (hi - lo + 1)
        for src in (self, other):
            off = src.lo - lo
            for k, c in enumerate(src.coeffs):
                acc[off + k] = (acc[off + k] + c) % self.p
        return LaurentPoly._make(self.p, lo, acc)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_modulus(other)
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero(self.p)
        # int64 convolution is exact while every partial sum stays < 2**63.
        if (self.p - 1) ** 2 * min(len(self.coeffs), len(other.coeffs)) < 2**63:
            a = np.asarray(self.coeffs, dtype=np.int64)
            b = np.asarray(other.coeffs, dtype=np.int64)
        else:
            a = np.asarray(self.coeffs, dtype=object)
            b = np.asarray(other.coeffs, dtype=object)
        c = np.convolve(a, b) % self.p
        return LaurentPoly._make(self.p, self.lo + other.lo, c.tolist())

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def ct(self) -> int:
        """Coefficient of t**0 (0 if absent)."""
        if self.lo <= 0 <= self.hi and not self.is_zero:
            return self.coeffs[-self.lo]
        return 0

    def cartier(self, r: int) -> "LaurentPoly":
        """Digit-extraction operator: sum a_i t**i maps to sum a_(p*i+r) t**i."""
        p = self.p
        if not 0 <= r < p:
            raise ValueError(f"digit {r} out of range [0, {p})")
        if self.is_zero:
            return self
        start = (r - self.lo) % p
        picked = self.coeffs[start::p]
        if not picked:
            return LaurentPoly.zero(p)
        return LaurentPoly._make(p, (self.lo + start - r) // p, picked)

    def degree(self) -> int:
        """max(|lo|, |hi|); symmetric so a vanished leading term keeps degree."""
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(abs(self.lo), abs(self.hi))

    def inflate(self, k: int) -> "LaurentPoly":
        """Substitute t -> t**k (k >= 1)."""
        if k < 1:
            raise ValueError("inflation factor must be >= 1")
        if self.is_zero or k == 1:
            return self
        acc = [0] * ((len(self.coeffs) - 1) * k + 1)
        acc[::k] = self.coeffs
        return LaurentPoly(self.p, self.lo * k, tuple(acc))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.p, self.lo + k, self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.hi, self.lo - 1, -1):
            c = self.coeffs[e - self.lo]
            if c:
                parts.append(format_term(c, e))
        return "+".join(parts)

    def to_json_dict(self) -> dict:
        return {"lo": 0 if self.is_zero else self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, data: dict, p: int) -> "LaurentPoly":
        return cls._make(p, int(data["lo"]), [int(c) % p for c in data["coeffs"]])


def from_terms(terms: Iterable[tuple[int, int]], p: int) -> LaurentPoly:
    """Build a polynomial from (exponent, integer coefficient) pairs.

    Duplicate exponents are summed; coefficients are reduced into [0, p).
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    acc: dict[int, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    acc = {e: c % p for e, c in acc.items() if c % p}
    if not acc:
        return LaurentPoly.zero(p)
    lo, hi = min(acc), max(acc)
    coeffs = [acc.get(e, 0) for e in range(lo, hi + 1)]
    return LaurentPoly._make(p, lo, coeffs)


def format_term(coeff: int, exp: int) -> str:
    """One grammar term, e.g. (6, -1) -> '6t^-1', (1, 2) -> 't^2'."""
    if exp == 0:
        return str(coeff)
    body = "t" if exp == 1 else f"t^{exp}"
    return body if coeff == 1 else f"{coeff}{body}"


def format_terms(terms: Iterable[tuple[int, int]]) -> str:
    """Render (exponent, coefficient) pairs, highest exponent first."""
    parts = [format_term(c, e) for e, c in sorted(terms, reverse=True) if c]
    return "+".join(parts) if parts else "0"


def parse_terms(text: str) -> list[tuple[int, int]]:
    """Parse polynomial text into signed (exponent, coefficient) pairs.

    Grammar: poly := term (("+"|"-") term)*; term := coeff? ("t" ("^" int)?)?
    with whitespace ignored between tokens. Examples: ``32t^2+13t+1+27t^-1``,
    ``t+t^-1``, ``5``.
    """
    i, n = 0, len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_uint() -> int | None:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        return int(text[start:i]) if i > start else None

    terms: list[tuple[int, int]] = []
    sign = 1
    skip_ws()
    if i == n:
        raise PolyParseError("empty polynomial", i)
    while True:
        skip_ws()
        coeff = read_uint()
        skip_ws()
        exp = 0
        has_t = False
        if i < n and text[i] == "t":
            has_t = True
            exp = 1
            i += 1
            skip_ws()
            if i < n and text[i] == "^":
                i += 1
                skip_ws()
                esign = 1
                if i < n and text[i] == "-":
                    esign = -1
                    i += 1
                digits = read_uint()
                if digits is None:
                    raise PolyParseError("expected exponent digits after '^'", i)
                exp = esign * digits
        if coeff is None and not has_t:
            raise PolyParseError("expected a term", i)
        terms.append((exp, sign * (coeff if coeff is not None else 1)))
        skip_ws()
        if i == n:
            return terms
        if text[i] == "+":
            sign = 1
        elif text[i] == "-":
            sign = -1
        else:
            raise PolyParseError(f"expected '+' or '-', found {text[i]!r}", i)
        i += 1


def parse(text: str, p: int) -> LaurentPoly:
    """Parse polynomial text and reduce its coefficients mod p."""
    return from_terms(parse_terms(text), p)


def ct_pow_sequence(P: LaurentPoly, Q: LaurentPoly, N: int) -> list[int]:
    """First N values of n -> ct(P**n * Q) by direct expansion.

    Multiplies incrementally, so the whole prefix costs O(N^2 * deg) coefficient
    operations. Deliberately ignorant of the automaton machinery: this is the
    independent oracle the automaton engines are checked against.
    """
    P._check_modulus(Q)
    out = []
    cur = Q
    for _ in range(N):
        out.append(cur.ct())
        cur = cur * P
    return out
