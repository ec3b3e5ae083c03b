import math
import random

import pytest

from ctseq.laurent import LaurentPoly, ct_pow_sequence, from_terms
from ctseq.multivar import (
    MultiLaurentPoly,
    m_ct,
    m_ct_sequence_mod,
    m_from_json_dict,
    m_from_terms,
    m_mul,
    m_pow,
    m_to_json_dict,
)


def walk_poly():
    return m_from_terms(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])


def random_multi(rng, nvars=2, nterms=4, span=2):
    terms = [
        (
            tuple(rng.randint(-span, span) for _ in range(nvars)),
            rng.randint(-5, 5),
        )
        for _ in range(nterms)
    ]
    return m_from_terms(nvars, terms)


def test_from_terms_canonical():
    P = walk_poly()
    assert len(P.terms) == 4
    assert m_from_terms(3, []).is_zero
    assert m_from_terms(1, [((0,), 2), ((0,), -2)]).is_zero


def test_from_terms_rejects_wrong_arity():
    with pytest.raises(ValueError):
        m_from_terms(2, [((1,), 1)])
    with pytest.raises(ValueError):
        m_mul(walk_poly(), m_from_terms(1, [((0,), 1)]))


def test_lattice_walk_values():
    P = walk_poly()
    values = [m_ct(m_pow(P, n)) for n in range(7)]
    assert values == [1, 0, 4, 0, 36, 0, 400]


def test_walk_counts_are_squared_binomials():
    P = walk_poly()
    for k in range(7):
        assert m_ct(m_pow(P, 2 * k)) == math.comb(2 * k, k) ** 2
    for n in range(1, 16, 2):
        assert m_ct(m_pow(P, n)) == 0


def test_pow_and_mul_identities():
    P = walk_poly()
    one = MultiLaurentPoly.one(2)
    assert m_pow(P, 0) == one
    assert m_mul(P, one) == P
    assert m_pow(P, 3) == m_mul(P, m_mul(P, P))


def test_mul_commutative_associative():
    rng = random.Random(11)
    for _ in range(20):
        A, B, C = (random_multi(rng) for _ in range(3))
        assert m_mul(A, B) == m_mul(B, A)
        assert m_mul(m_mul(A, B), C) == m_mul(A, m_mul(B, C))


def test_sequence_mod_reduces_lattice_values():
    P = walk_poly()
    one = MultiLaurentPoly.one(2)
    assert m_ct_sequence_mod(P, one, 7, 7) == [1, 0, 4, 0, 1, 0, 1]
    assert m_ct_sequence_mod(P, one, 7, 0) == []


def test_univariate_embedding_matches_laurent_module():
    rng = random.Random(12)
    for p in (2, 3, 5, 7, 11, 13):
        for _ in range(17):
            terms = [(e, rng.randrange(0, p)) for e in range(-2, 3)]
            P1 = from_terms(terms, p)
            Pm = m_from_terms(1, [((e,), c) for e, c in terms])
            want = ct_pow_sequence(P1, LaurentPoly.one(p), 50)
            got = m_ct_sequence_mod(Pm, MultiLaurentPoly.one(1), p, 50)
            assert got == want


def test_json_round_trip_preserves_big_coefficients():
    big = 10**40 + 7
    A = m_from_terms(2, [((1, -1), big), ((0, 0), -3)])
    data = m_to_json_dict(A)
    assert data["terms"][1]["coeff"] == str(big)
    assert m_from_json_dict(data) == A
