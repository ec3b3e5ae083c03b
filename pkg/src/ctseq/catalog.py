"""Built-in reference instances and their published and derived values.

Holds the worked examples this library is checked against: the lattice-walk
constant term sequence, a small hand-drawn 4-state machine over F_2, the
explicit degree-2 counterexample over F_7 to the first-zero bound p**deg,
and ten further degree-2 polynomials published as counterexamples.

Each first-zero constant tagged `derived_` below was computed by the
bounded enumeration engine and independently confirmed by direct expansion
(scan of ct(P**n) values), then frozen here as a regression constant. Where
a published value disagrees with the derived one, both are kept; the
verify-paper command reports the comparison honestly.

Notable discrepancies, all machine-checked:

* The explicit counterexample's first zero is 81, not the published 225;
  ct(P**225) = 4 mod 7. The two indices are exact base-7 digit reversals
  of each other (81 = [4,4,1] least significant first, 225 = [1,4,4]),
  so the published figure most likely decoded the witness digit string
  with the opposite endianness. The polynomial genuinely violates the
  conjectured bound either way: 81 > 49.
* Five of the ten cataloged polynomials (numbers 1, 4, 5, 6, 9) have first
  zeros at or below p**2 and are not violations as printed; number 5 even
  has ct(P**3) = 378 = 7 * 54, checkable by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import MooreMachine
from .laurent import LaurentPoly, from_terms
from .multivar import MultiLaurentPoly, m_from_terms

# ct((x + 1/x + y + 1/y)**n): closed walks of length n on the Z^2 lattice.
LATTICE_WALK_CT = (1, 0, 4, 0, 36, 0, 400, 0, 4900)


def lattice_walk_poly() -> MultiLaurentPoly:
    return m_from_terms(
        2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)]
    )


# Hand-drawn 4-state example machine over F_2 producing 1,0,0,1,0,...
# (digits least significant first; state 3 absorbs).
DEMO_MACHINE_PREFIX = (1, 0, 0, 1, 0)


def demo_machine() -> MooreMachine:
    return MooreMachine(
        p=2,
        initial=0,
        outputs=(1, 1, 0, 0),
        transitions=((1, 2), (0, 3), (3, 0), (3, 3)),
    )


@dataclass(frozen=True)
class CounterexampleEntry:
    """One published degree-2 instance with its frozen first-zero index."""

    name: str
    p: int
    coeffs: tuple[int, int, int, int, int]  # exponents +2, +1, 0, -1, -2
    derived_first_zero: int

    def terms(self) -> list[tuple[int, int]]:
        return list(zip((2, 1, 0, -1, -2), self.coeffs))

    def poly(self) -> LaurentPoly:
        return from_terms(self.terms(), self.p)

    @property
    def claimed_violation(self) -> bool:
        # every catalog entry was published as a strict violation n0 > p**2
        return True

    @property
    def derived_violation(self) -> bool:
        return self.derived_first_zero > self.p**2


# The explicit counterexample: 32t^2+13t+1+27t^-1+35t^-2 reduced mod 7.
EXPLICIT_INT_TERMS = ((2, 32), (1, 13), (0, 1), (-1, 27), (-2, 35))
EXPLICIT_PRIME = 7
EXPLICIT_REDUCED_STR = "4t^2+6t+1+6t^-1"
EXPLICIT_PUBLISHED_FIRST_ZERO = 225
EXPLICIT_DERIVED_FIRST_ZERO = 81
EXPLICIT_KAPPA = 49
EXPLICIT_SEQ_PREFIX = (1, 1, 3, 5)  # derived; ct(P**3) = 649 = 7*92 + 5


def explicit_counterexample_poly() -> LaurentPoly:
    return from_terms(EXPLICIT_INT_TERMS, EXPLICIT_PRIME)


# Ten further published counterexamples (coefficients of t^2, t, 1, t^-1,
# t^-2 over the stated prime). derived_first_zero frozen from enumeration,
# confirmed by direct expansion.
COUNTEREXAMPLE_CATALOG = (
    CounterexampleEntry("catalog-01", 11, (1, 2, 3, 10, 2), 28),
    CounterexampleEntry("catalog-02", 5, (3, 0, 2, 3, 3), 43),
    CounterexampleEntry("catalog-03", 3, (1, 1, 1, 1, 2), 23),
    CounterexampleEntry("catalog-04", 5, (4, 0, 4, 4, 1), 24),
    CounterexampleEntry("catalog-05", 7, (0, 3, 3, 6, 1), 3),
    CounterexampleEntry("catalog-06", 11, (1, 0, 4, 4, 9), 42),
    CounterexampleEntry("catalog-07", 5, (0, 3, 1, 0, 4), 39),
    CounterexampleEntry("catalog-08", 3, (2, 2, 1, 2, 1), 23),
    CounterexampleEntry("catalog-09", 5, (4, 1, 2, 4, 1), 2),
    CounterexampleEntry("catalog-10", 3, (1, 2, 1, 2, 2), 23),
)
