"""Constant term sequences of Laurent polynomials mod p.

Compute A(n) = ct(P**n * Q) mod p three equivalent ways (direct expansion,
digit automaton, linear representation), find the exact first zero index,
evaluate bounds on it, and search randomly for polynomials whose first zero
lands beyond p**deg(P).
"""

from .automaton import (
    CapExceeded,
    Found,
    LinearRepresentation,
    MooreMachine,
    NoneExists,
    RZAutomaton,
    ShortestZeroOutcome,
    build_rz,
    kappa,
    machine_from_json_dict,
    machine_to_json_dict,
    minimize,
    shortest_zero_enum,
    shortest_zero_exact,
    to_dot,
    to_linrep,
    zero_state_reachable,
)
from .bounds import (
    BoundReport,
    SymbolicPower,
    base_report,
    classify,
    conjecture_bound,
    kappa_interval,
    worst_case_bound,
)
from .laurent import (
    LaurentPoly,
    PolyParseError,
    ct_pow_sequence,
    format_terms,
    from_terms,
    parse,
    parse_terms,
)
from .multivar import (
    MultiLaurentPoly,
    m_ct,
    m_ct_sequence_mod,
    m_from_json_dict,
    m_from_terms,
    m_mul,
    m_pow,
    m_to_json_dict,
)
from .numtheory import fp_add, fp_mul, fp_neg, is_prime, primes_in_range

__version__ = "0.1.0"
