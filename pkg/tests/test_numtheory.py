import pytest

from ctseq.numtheory import fp_add, fp_mul, fp_neg, is_prime, primes_in_range


@pytest.mark.parametrize(
    "n,expected",
    [
        (0, False),
        (1, False),
        (2, True),
        (3, True),
        (4, False),
        (49, False),
        (97, True),
        (561, False),  # Carmichael
        (2**31 - 1, True),
        (2**61 - 1, True),
        ((2**31 - 1) * (2**19 - 1), False),
        (3215031751, False),  # strong pseudoprime to bases 2,3,5,7
    ],
)
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_primes_in_range_basics():
    assert primes_in_range(2, 12) == [2, 3, 5, 7, 11]
    assert primes_in_range(2, 3) == [2]
    assert primes_in_range(14, 16) == []
    assert primes_in_range(0, 2) == []


def test_prime_counting_to_100():
    assert len(primes_in_range(2, 101)) == 25


def test_primes_in_range_rejects_bad_bounds():
    with pytest.raises(ValueError):
        primes_in_range(5, 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_field_axioms_exhaustive(p):
    for a in range(p):
        assert fp_add(a, fp_neg(a, p), p) == 0
        for b in range(p):
            assert fp_add(a, b, p) == fp_add(b, a, p)
            assert fp_mul(a, b, p) == fp_mul(b, a, p)
            for c in range(p):
                assert fp_mul(a, fp_add(b, c, p), p) == fp_add(
                    fp_mul(a, b, p), fp_mul(a, c, p), p
                )


def test_fp_neg_identity():
    for p in (2, 7, 13):
        assert fp_neg(0, p) == 0
