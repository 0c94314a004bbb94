import random
from math import comb

import pytest

from pdpoly.errors import NotDivisible
from pdpoly.polynomial import IntPolynomial, binomial_minus_one, div_exact


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_binomial_minus_one_k4():
    assert binomial_minus_one(4).coeffs == (0, 4, 6, 4, 1)


def test_binomial_minus_one_coefficients():
    for n in range(0, 12):
        p = binomial_minus_one(n)
        assert p.coeff(0) == 0
        for i in range(1, n + 1):
            assert p.coeff(i) == comb(n, i)


def test_mul_and_div_shift():
    assert (P(0, 2, 1) * P(0, 1)).coeffs == (0, 0, 2, 1)
    assert div_exact(P(0, 0, 2, 1), P(0, 2, 1)) == P(0, 1)


def test_eval_int():
    assert P(0, 4, 6, 4, 1).eval_int(1) == 15
    for n in range(1, 9):
        assert IntPolynomial.monomial(n).eval_int(1) == 1
    assert P(1, -3, 2).eval_int(5) == 1 - 15 + 50


def test_eval_complex_root_of_k4_poly():
    assert abs(P(0, 4, 6, 4, 1).eval_complex(-1 + 1j)) < 1e-12


@pytest.mark.parametrize(
    "coeffs,verdict,peak",
    [
        ((0, 4, 6, 4, 1), True, 2),
        ((0, 3, 3, 1), True, 1),
        ((0, 2, 1, 2), False, None),
        ((0, 0, 0, 5), True, 3),
    ],
)
def test_is_unimodal(coeffs, verdict, peak):
    got_verdict, got_peak = IntPolynomial(coeffs).is_unimodal()
    assert got_verdict is verdict
    if verdict:
        assert got_peak == peak


def test_unimodal_plateau_through_rise():
    assert IntPolynomial((0, 1, 2, 2, 3, 1)).is_unimodal()[0] is True
    assert IntPolynomial((0, 2, 1, 1, 2)).is_unimodal()[0] is False


def _random_poly(rng, max_deg=6, lo=-9, hi=9):
    return IntPolynomial([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg + 1))])


def test_ring_laws_random():
    rng = random.Random(1729)
    for _ in range(300):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert (p + q) - q == p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        if not q.is_zero():
            assert div_exact(p * q, q) == p


def test_div_exact_rejects_remainder():
    with pytest.raises(NotDivisible):
        div_exact(P(1, 1), P(0, 1))
    with pytest.raises(NotDivisible):
        div_exact(P(0, 1), P(0, 0, 1))
    with pytest.raises(NotDivisible):
        div_exact(P(0, 1), IntPolynomial())


def test_binomial_product_identity():
    # the x^i coefficient of ((x+1)^a - 1)((x+1)^b - 1) counts the i-subsets
    # of a disjoint a+b universe that hit both sides
    for a in range(1, 8):
        for b in range(1, 8):
            prod = binomial_minus_one(a) * binomial_minus_one(b)
            for i in range(1, a + b + 1):
                assert prod.coeff(i) == comb(a + b, i) - comb(a, i) - comb(b, i)


def test_shift_scale_pow():
    assert P(0, 2, 1).shift(2).coeffs == (0, 0, 0, 2, 1)
    assert P(1, 1).scale(-3).coeffs == (-3, -3)
    assert (P(1, 1) ** 3).coeffs == (1, 3, 3, 1)
    assert (P(0, 1) ** 0) == IntPolynomial.one()


def test_string_serialization_roundtrip():
    p = P(0, 10**30, 5, 123456789123456789)
    assert IntPolynomial.from_strings(p.coeff_strings()) == p
    assert p.coeff_strings()[1] == str(10**30)


def test_trailing_zeros_trimmed_and_equality():
    assert IntPolynomial((1, 2, 0, 0)) == IntPolynomial((1, 2))
    assert IntPolynomial((0,)).is_zero()
    assert IntPolynomial().degree == -1
    assert hash(IntPolynomial((1, 2, 0))) == hash(IntPolynomial((1, 2)))


def test_low_index():
    assert P(0, 0, 3, 1).low_index == 2
    assert IntPolynomial().low_index == -1
    assert P(7,).low_index == 0
