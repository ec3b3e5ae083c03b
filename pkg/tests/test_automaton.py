import random
import re

import pytest

from ctseq.automaton import (
    CapExceeded,
    Found,
    MooreMachine,
    NoneExists,
    StateExplosionError,
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
from ctseq.catalog import (
    COUNTEREXAMPLE_CATALOG,
    EXPLICIT_DERIVED_FIRST_ZERO,
    EXPLICIT_KAPPA,
    demo_machine,
    explicit_counterexample_poly,
)
from ctseq.laurent import LaurentPoly, ct_pow_sequence, from_terms, parse

PRIMES = (2, 3, 5, 7, 11, 13)


def random_poly(rng, p, max_deg=2):
    while True:
        terms = [(e, rng.randrange(0, p)) for e in range(-max_deg, max_deg + 1)]
        poly = from_terms(terms, p)
        if not poly.is_zero:
            return poly


# ----------------------------- construction -----------------------------

def test_build_constant_output_machine():
    rz = build_rz(parse("1+t", 2))
    assert rz.machine.num_states == 1
    assert rz.machine.outputs == (1,)
    assert rz.machine.transitions == ((0, 0),)


def test_build_two_state_machine():
    rz = build_rz(parse("t+t^-1", 2))
    m = rz.machine
    assert m.num_states == 2
    assert rz.state_polys[0] == LaurentPoly.one(2)
    assert rz.state_polys[1].is_zero
    assert m.outputs == (1, 0)
    assert m.transitions[0][1] == 1  # digit 1 annihilates


def test_build_rejects_zero_base():
    with pytest.raises(ValueError):
        build_rz(LaurentPoly.zero(5))


def test_state_cap_sentinel():
    poly = explicit_counterexample_poly()
    with pytest.raises(StateExplosionError):
        build_rz(poly, state_cap=10)


def test_rz_invariants_on_catalog():
    for entry in COUNTEREXAMPLE_CATALOG[:4]:
        rz = build_rz(entry.poly())
        m = rz.machine
        D = rz.window
        assert m.num_states <= entry.p ** (2 * D + 1)
        assert len(set(rz.state_polys)) == m.num_states
        assert rz.state_polys[m.initial] == rz.Q
        for s, poly in enumerate(rz.state_polys):
            assert m.outputs[s] == poly.ct()
            if not poly.is_zero:
                assert -D <= poly.lo and poly.hi <= D
            # zero-digit transitions preserve the output
            assert m.outputs[m.transitions[s][0]] == m.outputs[s]


def test_window_covers_weight_support():
    P = parse("t+t^-1", 3)
    Q = parse("t^4+1", 3)
    rz = build_rz(P, Q)
    assert rz.window == 4
    seq = rz.machine.sequence(200)
    assert seq == ct_pow_sequence(P, Q, 200)


def test_zero_weight_machine():
    rz = build_rz(parse("t+t^-1", 3), LaurentPoly.zero(3))
    assert rz.machine.sequence(10) == [0] * 10
    assert shortest_zero_exact(rz.machine) == Found(0)


# ----------------------------- evaluation -----------------------------

def test_demo_machine_worked_examples():
    m = demo_machine()
    assert m.eval(3) == 1
    assert m.eval(4) == 0
    assert m.sequence(5) == [1, 0, 0, 1, 0]
    assert m.sequence(0) == []


def test_eval_rejects_negative():
    with pytest.raises(ValueError):
        demo_machine().eval(-1)


def test_eval_on_explicit_counterexample():
    m = build_rz(explicit_counterexample_poly()).machine
    assert m.eval(EXPLICIT_DERIVED_FIRST_ZERO) == 0
    # the published index 225 is the base-7 digit reversal of 81; the
    # sequence value there is 4, not 0
    assert m.eval(225) == 4


def test_machine_validation():
    with pytest.raises(ValueError):
        MooreMachine(p=2, initial=2, outputs=(0, 1), transitions=((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        MooreMachine(p=2, initial=0, outputs=(0, 1), transitions=((0,), (1, 0)))
    with pytest.raises(ValueError):
        MooreMachine(p=2, initial=0, outputs=(0, 3), transitions=((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        MooreMachine(p=2, initial=0, outputs=(0, 1), transitions=((0, 5), (1, 0)))


# ----------------------------- minimization -----------------------------

def test_minimize_demo_machine_is_already_minimal():
    m = demo_machine()
    assert minimize(m).num_states == 4


def test_minimize_merges_equivalent_states():
    # states 1 and 2 behave identically: mergeable copies
    m = MooreMachine(
        p=2,
        initial=0,
        outputs=(1, 0, 0),
        transitions=((1, 2), (1, 1), (2, 2)),
    )
    mm = minimize(m)
    assert mm.num_states == 2
    assert mm.sequence(50) == m.sequence(50)


def test_minimize_drops_unreachable_states():
    m = MooreMachine(
        p=2,
        initial=0,
        outputs=(1, 1, 0),
        transitions=((0, 0), (2, 2), (1, 1)),
    )
    assert minimize(m).num_states == 1


def test_minimize_idempotent_and_equivalent():
    rng = random.Random(13)
    for p in (2, 3, 5):
        for _ in range(10):
            n = rng.randint(1, 9)
            m = MooreMachine(
                p=p,
                initial=0,
                outputs=tuple(rng.randrange(p) for _ in range(n)),
                transitions=tuple(
                    tuple(rng.randrange(n) for _ in range(p)) for _ in range(n)
                ),
            )
            mm = minimize(m)
            assert mm.sequence(300) == m.sequence(300)
            assert minimize(mm).num_states == mm.num_states


def test_kappa_examples():
    assert kappa(parse("1+t", 2)) == 1
    assert kappa(parse("t+t^-1", 2)) == 2
    assert kappa(explicit_counterexample_poly()) == EXPLICIT_KAPPA
    assert kappa(explicit_counterexample_poly()) >= 3


# ----------------------------- first zeros -----------------------------

def test_zero_state_reachable():
    assert not zero_state_reachable(build_rz(parse("1+t", 2)).machine)
    assert zero_state_reachable(build_rz(parse("t+t^-1", 2)).machine)
    assert zero_state_reachable(demo_machine())


def test_shortest_zero_hand_cases():
    assert shortest_zero_exact(build_rz(parse("t+t^-1", 2)).machine) == Found(1)
    assert shortest_zero_exact(build_rz(parse("1+t", 2)).machine) == NoneExists()
    assert shortest_zero_exact(demo_machine()) == Found(1)


def test_shortest_zero_enum_cap_semantics():
    m = build_rz(explicit_counterexample_poly()).machine
    assert shortest_zero_enum(m, 50000) == Found(EXPLICIT_DERIVED_FIRST_ZERO)
    assert shortest_zero_enum(m, 50) == CapExceeded(50)
    assert shortest_zero_enum(build_rz(parse("1+t", 2)).machine, 10) == NoneExists()
    with pytest.raises(ValueError):
        shortest_zero_enum(m, 0)


def test_explicit_counterexample_first_zero():
    m = build_rz(explicit_counterexample_poly()).machine
    assert shortest_zero_exact(m) == Found(EXPLICIT_DERIVED_FIRST_ZERO)


@pytest.mark.parametrize("entry", COUNTEREXAMPLE_CATALOG, ids=lambda e: e.name)
def test_catalog_first_zeros_frozen(entry):
    m = build_rz(entry.poly()).machine
    expected = Found(entry.derived_first_zero)
    assert shortest_zero_exact(m) == expected
    assert shortest_zero_enum(m, 50000) == expected


def test_exact_matches_enum_on_random_instances():
    rng = random.Random(14)
    for p in PRIMES:
        for _ in range(6):
            m = build_rz(random_poly(rng, p)).machine
            exact = shortest_zero_exact(m)
            enum = shortest_zero_enum(m, 3000)
            if isinstance(enum, CapExceeded):
                assert isinstance(exact, Found) and exact.n0 >= 3000
            else:
                assert exact == enum


def test_first_zero_below_automaticity_bound():
    rng = random.Random(15)
    for p in (2, 3, 5, 7):
        for _ in range(5):
            P = random_poly(rng, p)
            rz = build_rz(P)
            outcome = shortest_zero_exact(rz.machine)
            if isinstance(outcome, Found):
                assert outcome.n0 < p ** minimize(rz.machine).num_states


def test_exact_zero_on_non_stable_machine():
    # zero output sits behind a 0-digit only; no canonical index reaches it
    m = MooreMachine(
        p=2,
        initial=0,
        outputs=(1, 0),
        transitions=((1, 0), (0, 1)),
    )
    # eval: n=0 -> 1; digits of n>=1 end in 1, landing in state 0
    assert shortest_zero_exact(m) == Found(2)  # digits [0,1]: 0 -> 1 -> 0? no
