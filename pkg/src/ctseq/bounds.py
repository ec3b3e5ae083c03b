"""First-zero bounds and classification of observed first zeros.

Three bounds on the first index n0 with ct(P**n) = 0 mod p:

* the state-count worst case p**(p**((2*deg - 1)**r)), astronomically large
  but unconditional;
* the refuted conjectural bound p**deg for univariate P;
* the automaticity interval [p**(kappa - 1), p**kappa) where kappa is the
  minimal Moore machine size.

Only the upper half of the automaticity interval is trustworthy: instances
as small as P = t + t^-1 over F_2 (first zero 1, kappa 2) already fall below
the lower end, so the lower flag is reported, never asserted.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass


def decimal_str(x: int) -> str:
    """str(x) for naturals too large for the int-to-str conversion guard."""
    try:
        return str(x)
    except ValueError:
        old = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            return str(x)
        finally:
            sys.set_int_max_str_digits(old)


@dataclass(frozen=True)
class SymbolicPower:
    """base**exponent left unevaluated because it will not fit in memory."""

    base: int
    exponent: int

    def to_json_dict(self) -> dict:
        return {"base": self.base, "exponent": decimal_str(self.exponent)}

    def __str__(self) -> str:
        return f"{self.base}^{self.exponent}"


def worst_case_bound(
    p: int, deg: int, r: int = 1, max_bits: int = 10**6
) -> int | SymbolicPower:
    """p**(p**((2*deg - 1)**r)), exact up to max_bits, symbolic beyond.

    The inner exponent p**((2*deg - 1)**r) is always returned exactly; only
    the outer power is kept symbolic when its bit size exceeds `max_bits`.
    """
    if deg < 1 or r < 1:
        raise ValueError("degree and variable count must be >= 1")
    inner = p ** ((2 * deg - 1) ** r)
    if inner * math.log2(p) <= max_bits:
        return p**inner
    return SymbolicPower(p, inner)


def conjecture_bound(p: int, deg: int) -> int:
    """The refuted candidate bound p**deg for univariate P."""
    if deg < 0:
        raise ValueError("degree must be >= 0")
    return p**deg


def kappa_interval(p: int, kappa: int) -> tuple[int, int]:
    """[p**(kappa-1), p**kappa): digit strings of length exactly kappa."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return (p ** (kappa - 1), p**kappa)


@dataclass(frozen=True)
class BoundReport:
    """All three bounds for one (polynomial, prime), plus flags for one n0.

    The flags are None when no first zero was supplied (no zero exists or
    none was computed). `violates_conjecture` uses n0 >= p**deg, since the
    conjectured statement is n0 < p**deg; `violates_conjecture_strict` is
    the historically used strict test n0 > p**deg. Both are kept so results
    stay comparable either way.
    """

    p: int
    deg: int
    r: int
    kappa: int | None
    conjecture_bound: int
    worst_case: int | SymbolicPower
    kappa_lower: int | None
    kappa_upper: int | None
    n0: int | None = None
    violates_conjecture: bool | None = None
    violates_conjecture_strict: bool | None = None
    satisfies_kappa_upper: bool | None = None
    satisfies_kappa_lower: bool | None = None

    def to_json_dict(self) -> dict:
        def nat(x: int | None) -> str | None:
            return None if x is None else decimal_str(x)

        worst = self.worst_case
        return {
            "p": self.p,
            "deg": self.deg,
            "r": self.r,
            "kappa": self.kappa,
            "n0": nat(self.n0),
            "conjecture_bound": decimal_str(self.conjecture_bound),
            "worst_case": worst.to_json_dict()
            if isinstance(worst, SymbolicPower)
            else decimal_str(worst),
            "kappa_lower": nat(self.kappa_lower),
            "kappa_upper": nat(self.kappa_upper),
            "violates_conjecture": self.violates_conjecture,
            "violates_conjecture_strict": self.violates_conjecture_strict,
            "satisfies_kappa_upper": self.satisfies_kappa_upper,
            "satisfies_kappa_lower": self.satisfies_kappa_lower,
        }


def base_report(
    p: int, deg: int, kappa: int | None = None, r: int = 1
) -> BoundReport:
    """Bounds without classification flags (no first zero supplied)."""
    lower, upper = kappa_interval(p, kappa) if kappa is not None else (None, None)
    return BoundReport(
        p=p,
        deg=deg,
        r=r,
        kappa=kappa,
        conjecture_bound=conjecture_bound(p, deg),
        worst_case=worst_case_bound(p, deg, r),
        kappa_lower=lower,
        kappa_upper=upper,
    )


def classify(
    n0: int, p: int, deg: int, kappa: int | None = None, r: int = 1
) -> BoundReport:
    """Flag a first zero against the conjectural bound and kappa interval."""
    base = base_report(p, deg, kappa=kappa, r=r)
    cb = base.conjecture_bound
    return BoundReport(
        p=p,
        deg=deg,
        r=r,
        kappa=kappa,
        conjecture_bound=cb,
        worst_case=base.worst_case,
        kappa_lower=base.kappa_lower,
        kappa_upper=base.kappa_upper,
        n0=n0,
        violates_conjecture=n0 >= cb,
        violates_conjecture_strict=n0 > cb,
        satisfies_kappa_upper=None if kappa is None else n0 < base.kappa_upper,
        satisfies_kappa_lower=None if kappa is None else n0 >= base.kappa_lower,
    )
