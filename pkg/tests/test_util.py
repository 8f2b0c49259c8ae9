import pytest

from ybe_lab.util import divisors, factorize, square_part


def test_factorize_known_values():
    assert factorize(1) == {}
    assert factorize(2) == {2: 1}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-4)


def test_factorize_reconstructs_n():
    for n in range(1, 500):
        prod = 1
        for p, e in factorize(n).items():
            prod *= p**e
        assert prod == n


def test_divisors_known_values():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(16) == [1, 2, 4, 8, 16]
    assert divisors(97) == [1, 97]


def test_divisors_matches_trial_division():
    for n in range(1, 300):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_square_part_known_values():
    assert square_part(1) == 1
    assert square_part(16) == 4
    assert square_part(81) == 9
    assert square_part(1000) == 10
    assert square_part(30) == 1
    assert square_part(72) == 6


def test_square_part_is_largest_square_divisor():
    for n in range(1, 400):
        k = square_part(n)
        assert n % (k * k) == 0
        for m in range(k + 1, int(n**0.5) + 1):
            assert n % (m * m) != 0
