import random

import pytest

from ctseq.laurent import (
    LaurentPoly,
    PolyParseError,
    ct_pow_sequence,
    format_terms,
    from_terms,
    parse,
    parse_terms,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def random_poly(rng, p, max_deg=3, allow_zero=False):
    terms = [(e, rng.randrange(0, p)) for e in range(-max_deg, max_deg + 1)]
    poly = from_terms(terms, p)
    while poly.is_zero and not allow_zero:
        terms = [(e, rng.randrange(0, p)) for e in range(-max_deg, max_deg + 1)]
        poly = from_terms(terms, p)
    return poly


# ----------------------------- construction -----------------------------

def test_from_terms_reduces_and_trims():
    poly = from_terms([(2, 32), (1, 13), (0, 1), (-1, 27), (-2, 35)], 7)
    assert str(poly) == "4t^2+6t+1+6t^-1"
    assert poly.lo == -1 and poly.hi == 2


def test_from_terms_empty_is_zero():
    assert from_terms([], 5).is_zero


def test_from_terms_modular_cancellation():
    assert from_terms([(0, 7)], 7).is_zero
    assert from_terms([(3, 4), (3, 3)], 7).is_zero


def test_from_terms_sums_duplicates():
    assert from_terms([(1, 2), (1, 2)], 5) == parse("4t", 5)


def test_from_terms_requires_prime_modulus():
    with pytest.raises(ValueError):
        from_terms([(0, 1)], 6)


# ----------------------------- ring operations -----------------------------

def test_mul_square():
    sq = parse("t+t^-1", 5) * parse("t+t^-1", 5)
    assert str(sq) == "t^2+2+t^-2"


def test_add_and_mul_identities():
    rng = random.Random(1)
    for p in PRIMES:
        A = random_poly(rng, p)
        zero = LaurentPoly.zero(p)
        one = LaurentPoly.one(p)
        assert A + zero == A
        assert A * zero == zero
        assert A * one == A


def test_modulus_mismatch_is_hard_error():
    with pytest.raises(ValueError, match="modulus mismatch"):
        parse("t", 3) * parse("t", 5)
    with pytest.raises(ValueError, match="modulus mismatch"):
        parse("t", 3) + parse("t", 5)


def test_pow_binomial_parity():
    assert str(parse("1+t", 2) ** 3) == "t^3+t^2+t+1"


def test_pow_zeroth_is_one():
    rng = random.Random(2)
    for p in PRIMES:
        assert random_poly(rng, p) ** 0 == LaurentPoly.one(p)


def test_pow_matches_repeated_mul():
    rng = random.Random(3)
    for p in (2, 5, 13):
        A = random_poly(rng, p, max_deg=2)
        acc = LaurentPoly.one(p)
        for n in range(17):
            assert A**n == acc
            acc = acc * A


def test_ct():
    assert from_terms([(2, 4), (1, 6), (0, 1), (-1, 6)], 7).ct() == 1
    assert parse("t+t^-1", 5).ct() == 0
    assert LaurentPoly.zero(5).ct() == 0


def test_ct_of_product_is_convolution():
    rng = random.Random(4)
    for p in (3, 7, 13):
        for _ in range(25):
            A = random_poly(rng, p, max_deg=2)
            B = random_poly(rng, p, max_deg=2)
            direct = sum(
                A.coeffs[i] * B.coeffs[-(A.lo + i) - B.lo]
                for i in range(len(A.coeffs))
                if B.lo <= -(A.lo + i) <= B.hi
            ) % p
            assert (A * B).ct() == direct


# ----------------------------- cartier -----------------------------

def test_cartier_by_definition():
    assert parse("t^3+2t+1+t^-3", 3).cartier(0) == parse("t+1+t^-1", 3)
    assert parse("t+t^-1", 2).cartier(1) == parse("1+t^-1", 2)


def test_cartier_digit_range():
    with pytest.raises(ValueError):
        parse("t", 3).cartier(3)


def test_frobenius_splitting():
    rng = random.Random(5)
    for p in PRIMES:
        for _ in range(8):
            A = random_poly(rng, p)
            Ap = A**p
            # support only at multiples of p, and digit 0 recovers A
            assert Ap == A.inflate(p)
            assert Ap.cartier(0) == A
            for r in range(1, p):
                assert Ap.cartier(r).is_zero


def test_cartier_linearity():
    rng = random.Random(6)
    for p in (2, 5, 11):
        for _ in range(20):
            A = random_poly(rng, p, allow_zero=True)
            B = random_poly(rng, p, allow_zero=True)
            for r in range(p):
                assert (A + B).cartier(r) == A.cartier(r) + B.cartier(r)


def test_cartier_reconstruction():
    rng = random.Random(7)
    for p in (2, 3, 7):
        for _ in range(20):
            A = random_poly(rng, p)
            acc = LaurentPoly.zero(p)
            for r in range(p):
                acc = acc + A.cartier(r).inflate(p).shift(r)
            assert acc == A


# ----------------------------- degree -----------------------------

def test_degree_symmetric_convention():
    assert parse("3t+3+6t^-1+t^-2", 7).degree() == 2
    assert LaurentPoly.one(5).degree() == 0
    assert parse("t^-3+t", 5).degree() == 3


def test_degree_of_zero_is_undefined():
    with pytest.raises(ValueError, match="degree"):
        LaurentPoly.zero(3).degree()


# ----------------------------- sequences -----------------------------

def test_ct_pow_sequence_central_binomial_mod_2():
    seq = ct_pow_sequence(parse("t+t^-1", 2), LaurentPoly.one(2), 5)
    assert seq == [1, 0, 0, 0, 0]


def test_ct_pow_sequence_central_trinomial_mod_3():
    # 1, 1, 3, 7, 19 reduced mod 3
    seq = ct_pow_sequence(parse("t^-1+1+t", 3), LaurentPoly.one(3), 5)
    assert seq == [1, 1, 0, 1, 1]


def test_ct_pow_sequence_starts_at_ct_q():
    rng = random.Random(8)
    for p in (2, 7):
        P = random_poly(rng, p)
        assert ct_pow_sequence(P, LaurentPoly.one(p), 1) == [1]
    assert ct_pow_sequence(parse("t", 5), LaurentPoly.zero(5), 4) == [0, 0, 0, 0]


# ----------------------------- text grammar -----------------------------

@pytest.mark.parametrize(
    "text,terms",
    [
        ("5", [(0, 5)]),
        ("t", [(1, 1)]),
        ("t^-1", [(-1, 1)]),
        ("4t^2", [(2, 4)]),
        ("32t^2+13t+1+27t^-1+35t^-2", [(2, 32), (1, 13), (0, 1), (-1, 27), (-2, 35)]),
        ("t^2-1", [(2, 1), (0, -1)]),
        (" 3 t ^ 2 + 1 ", [(2, 3), (0, 1)]),
        ("0t^2+3t", [(2, 0), (1, 3)]),
        ("t^10", [(10, 1)]),
    ],
)
def test_parse_terms(text, terms):
    assert parse_terms(text) == terms


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        ("   ", 3),
        ("+t", 0),
        ("t^", 2),
        ("t^-", 3),
        ("t%2", 1),
        ("3++4", 2),
        ("2t^2 3", 5),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as err:
        parse_terms(text)
    assert err.value.position == pos


def test_str_round_trips_through_parser():
    rng = random.Random(9)
    for p in PRIMES:
        for _ in range(20):
            A = random_poly(rng, p, allow_zero=True)
            assert parse(str(A), p) == A or A.is_zero


def test_format_terms_orders_descending():
    assert format_terms([(-1, 27), (2, 32), (0, 1)]) == "32t^2+1+27t^-1"
    assert format_terms([]) == "0"


def test_json_round_trip():
    rng = random.Random(10)
    for p in (2, 7, 13):
        for _ in range(10):
            A = random_poly(rng, p, allow_zero=True)
            assert LaurentPoly.from_json_dict(A.to_json_dict(), p) == A


def test_json_dict_shape():
    A = parse("4t^2+6t+1+6t^-1", 7)
    assert A.to_json_dict() == {"lo": -1, "coeffs": [6, 1, 6, 4]}
    assert LaurentPoly.zero(7).to_json_dict() == {"lo": 0, "coeffs": []}
