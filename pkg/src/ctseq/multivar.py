"""Sparse multivariate Laurent polynomials with exact integer coefficients.

Supports of n-th powers grow quadratically with n, so terms are kept in a
hash map from exponent vector to coefficient (sparse wins here, unlike the
univariate window case). Coefficients are arbitrary-precision integers;
reduction mod p is a separate, explicit step.
"""

from __future__ import annotations

from typing import Iterable


class MultiLaurentPoly:
    """Multivariate Laurent polynomial: {exponent vector: nonzero int coeff}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int]):
        self.nvars = nvars
        self.terms = terms

    @classmethod
    def zero(cls, nvars: int) -> "MultiLaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "MultiLaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiLaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items())
        )
        return f"<MultiLaurentPoly {body or '0'}>"


def m_from_terms(
    nvars: int, terms: Iterable[tuple[tuple[int, ...], int]]
) -> MultiLaurentPoly:
    """Canonical sparse form: duplicates summed, zero coefficients dropped."""
    acc: dict[tuple[int, ...], int] = {}
    for exp, coeff in terms:
        exp = tuple(exp)
        if len(exp) != nvars:
            raise ValueError(f"exponent vector {exp} has length != {nvars}")
        acc[exp] = acc.get(exp, 0) + coeff
    return MultiLaurentPoly(nvars, {e: c for e, c in acc.items() if c})


def m_mul(A: MultiLaurentPoly, B: MultiLaurentPoly) -> MultiLaurentPoly:
    if A.nvars != B.nvars:
        raise ValueError(f"variable count mismatch: {A.nvars} vs {B.nvars}")
    acc: dict[tuple[int, ...], int] = {}
    for ea, ca in A.terms.items():
        for eb, cb in B.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            acc[e] = acc.get(e, 0) + ca * cb
    return MultiLaurentPoly(A.nvars, {e: c for e, c in acc.items() if c})


def m_pow(A: MultiLaurentPoly, n: int) -> MultiLaurentPoly:
    if n < 0:
        raise ValueError("negative power of a Laurent polynomial")
    result = MultiLaurentPoly.one(A.nvars)
    base = A
    while n:
        if n & 1:
            result = m_mul(result, base)
        n >>= 1
        if n:
            base = m_mul(base, base)
    return result


def m_ct(A: MultiLaurentPoly) -> int:
    """Coefficient of the all-zero exponent vector."""
    return A.terms.get((0,) * A.nvars, 0)


def m_ct_sequence_mod(
    P: MultiLaurentPoly, Q: MultiLaurentPoly, p: int, N: int
) -> list[int]:
    """First N values of n -> ct(P**n * Q) mod p.

    Coefficients are reduced mod p after every multiplication to keep term
    counts and integer sizes bounded.
    """
    if P.nvars != Q.nvars:
        raise ValueError(f"variable count mismatch: {P.nvars} vs {Q.nvars}")
    reduce = lambda A: MultiLaurentPoly(
        A.nvars, {e: c % p for e, c in A.terms.items() if c % p}
    )
    out = []
    cur = reduce(Q)
    Pred = reduce(P)
    for _ in range(N):
        out.append(m_ct(cur))
        cur = reduce(m_mul(cur, Pred))
    return out


def m_to_json_dict(A: MultiLaurentPoly) -> dict:
    """JSON form with coefficients as decimal strings (lossless big ints)."""
    return {
        "nvars": A.nvars,
        "terms": [
            {"exp": list(e), "coeff": str(c)} for e, c in sorted(A.terms.items())
        ],
    }


def m_from_json_dict(data: dict) -> MultiLaurentPoly:
    nvars = int(data["nvars"])
    return m_from_terms(
        nvars, ((tuple(t["exp"]), int(t["coeff"])) for t in data["terms"])
    )
