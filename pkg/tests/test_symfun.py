import math
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from rvnorm.chs import hunter_lower_constant
from rvnorm.distributions import Exponential, Laplace, Normal, Poisson, Rademacher, Uniform
from rvnorm.errors import BadParameter, DivisionByZeroConstantTerm
from rvnorm.partitions import enumerate_partitions, y_coeff, z_coeff
from rvnorm.symfun import (BivariateSeries, TruncatedSeries, bell_complete, chs, chs_sequence,
                           kummer_1f1, monomial_sym, p_pi, power_sum)

PHI = (1 + math.sqrt(5)) / 2


def h_brute(d, x):
    """h_d as a sum over all degree-d monomials."""
    return sum(math.prod(c) for c in combinations_with_replacement(x, d)) if d else 1.0


def test_power_sum_examples():
    assert power_sum(2, [1, 2, 3]) == 14
    assert power_sum(1, [4, -1, 2.5]) == pytest.approx(5.5)
    assert power_sum(3, [PHI, 1 - PHI]) == pytest.approx(4)
    with pytest.raises(BadParameter):
        power_sum(0, [1])


def test_chs_examples():
    assert chs(2, [1, 1]) == pytest.approx(3)
    x1, x2 = 0.7, -1.3
    assert chs(2, [x1, x2]) == pytest.approx(x1 ** 2 + x1 * x2 + x2 ** 2)
    assert chs(4, [PHI, 1 - PHI]) == pytest.approx(5)
    assert chs(0, [3.0]) == 1.0
    for n in (1, 2, 4):
        for d in (1, 3, 6):
            assert chs(d, [1.0] * n) == pytest.approx(math.comb(n + d - 1, d))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=1, max_size=5), st.integers(0, 6))
def test_chs_matches_monomial_sum(x, d):
    assert chs(d, x) == pytest.approx(h_brute(d, x), rel=1e-10, abs=1e-10)


def test_chs_newton_girard_vs_series(rng):
    for _ in range(30):
        n = int(rng.integers(1, 7))
        x = rng.normal(size=n)
        D = 10
        prod_series = TruncatedSeries([1.0] + [0.0] * D)
        for xi in x:
            prod_series = prod_series * TruncatedSeries([1.0, -xi] + [0.0] * (D - 1)).recip()
        hs = chs_sequence(D, x)
        for d in range(D + 1):
            assert hs[d] == pytest.approx(prod_series[d], rel=1e-10, abs=1e-10)


def test_chs_partition_identity(rng):
    for _ in range(20):
        x = rng.normal(size=int(rng.integers(1, 6)))
        for d in range(1, 9):
            p = [power_sum(k, x) for k in range(1, d + 1)]
            s = sum(p_pi(pi.parts, p) / z_coeff(pi) for pi in enumerate_partitions(d))
            assert s == pytest.approx(chs(d, x), rel=1e-10, abs=1e-10)


def test_hunter_positivity(rng):
    x = rng.normal(size=(10000, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    for d in (2, 4, 6, 8):
        bound = hunter_lower_constant(d)
        assert bound == pytest.approx(1 / (2 ** (d // 2) * math.factorial(d // 2)))
        worst = min(chs(d, row) for row in x)
        assert worst >= bound - 1e-12


def test_monomial_examples():
    x1, x2 = 1.5, -2.0
    assert monomial_sym((1, 1), [x1, x2]) == pytest.approx(x1 * x2)
    assert monomial_sym((2,), [1, 2, 3]) == 14
    assert monomial_sym((2, 1), [1, 2]) == 6
    assert monomial_sym((1, 1, 1), [1, 2]) == 0.0


def test_monomial_brute_force():
    x = [0.5, -1.0, 2.0]
    parts = (2, 1)
    exps = parts + (0,)
    brute = sum(math.prod(xi ** e for xi, e in zip(x, a)) for a in set(permutations(exps)))
    assert monomial_sym(parts, x) == pytest.approx(brute)


def test_bell_examples():
    x = [1.3, -0.4, 2.1, 0.7]
    x1, x2, x3, x4 = x
    b4 = x1 ** 4 + 6 * x1 ** 2 * x2 + 4 * x1 * x3 + 3 * x2 ** 2 + x4
    assert bell_complete(4, x) == pytest.approx(b4)
    assert bell_complete(0, []) == 1
    assert bell_complete(1, [x1]) == pytest.approx(x1)
    assert bell_complete(3, [1, 1, 1]) == 5
    assert isinstance(bell_complete(3, [1, 1, 1]), int)


def test_bell_partition_form(rng):
    for ell in range(1, 9):
        x = list(rng.normal(size=ell))
        s = sum(y_coeff(p) * math.prod(x[k - 1] for k in p.parts) for p in enumerate_partitions(ell))
        assert bell_complete(ell, x) == pytest.approx(s, rel=1e-10, abs=1e-10)


def test_bell_exact_rationals():
    x = [Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(5, 7)]
    s = sum(y_coeff(p) * math.prod(x[k - 1] for k in p.parts) for p in enumerate_partitions(4))
    assert bell_complete(4, x) == s


@pytest.mark.parametrize("spec", [Exponential(), Normal(0.3, 1.1), Poisson(2.0), Rademacher(),
                                  Uniform(-1, 2), Laplace(0.5, 1.5)])
def test_bell_moment_duality(spec):
    t = spec.moments(6)
    for ell in range(1, 7):
        assert float(bell_complete(ell, list(t.cumulants))) == pytest.approx(float(t.moments[ell]), rel=1e-10)


def test_series_fibonacci():
    s = TruncatedSeries([1, -1, -1] + [0] * 9).recip()
    assert s.c == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]


def test_series_exp_log_inverse(rng):
    for _ in range(10):
        a = TruncatedSeries([1.0] + list(rng.normal(size=8)))
        back = a.log().exp()
        assert np.allclose(back.c, a.c, atol=1e-12)


def test_series_pow_binomial():
    s = TruncatedSeries([1, -1] + [0] * 8).recip().pow(3)
    assert np.allclose([float(v) for v in s.c], [math.comb(k + 2, 2) for k in range(10)])
    half = TruncatedSeries([1.0, 1.0, 0, 0, 0, 0]).pow(0.5)
    assert np.allclose(half.c, [scipy.special.binom(0.5, k) for k in range(6)])


def test_series_errors():
    with pytest.raises(DivisionByZeroConstantTerm):
        TruncatedSeries([0, 1]).recip()
    with pytest.raises(DivisionByZeroConstantTerm):
        TruncatedSeries([0, 1]).log()
    with pytest.raises(BadParameter):
        TruncatedSeries([2, 1]).pow(0.5)


def test_series_arithmetic():
    a = TruncatedSeries([1, 2, 3])
    b = TruncatedSeries([0, 1, 1])
    assert (a + b).c == [1, 3, 4]
    assert (a - b).c == [1, 1, 2]
    assert (a * b).c == [0, 1, 3]
    assert (a / a).c == [1, 0, 0]
    assert a.scaled(2).c == [1, 4, 12]


def test_bivariate_geometric():
    D = 6
    s = BivariateSeries.constant(1.0, D)
    s.c[1, 1] = -4.0
    r = s.recip()
    for k in range(D // 2 + 1):
        assert r.coeff(k, k) == pytest.approx(4 ** k)
    assert r.coeff(1, 0) == 0


def test_bivariate_recip_product(rng):
    D = 5
    c = rng.normal(size=(D + 1, D + 1)) + 1j * rng.normal(size=(D + 1, D + 1))
    c[0, 0] = 1.5
    a = BivariateSeries(c)
    one = a * a.recip()
    expected = np.zeros((D + 1, D + 1), dtype=complex)
    expected[0, 0] = 1
    assert np.allclose(one.c, expected, atol=1e-10)


def test_kummer_examples():
    assert kummer_1f1(-1.5, 0.5, 0.0) == 1.0
    for a, z in [(0.3, 1.2), (2.0, -3.0), (-1.7, 0.4)]:
        assert kummer_1f1(a, a, z) == pytest.approx(math.exp(z), rel=1e-13)
    for b, z in [(0.5, 2.0), (3.0, -1.0)]:
        assert kummer_1f1(-1, b, z) == pytest.approx(1 - z / b)


@pytest.mark.parametrize("a,b,z", [(-1.5, 0.5, -4.0), (-2.6, 0.5, -0.3), (-0.6, 0.5, -12.0),
                                   (1.3, 2.2, 5.0), (-3.0, 0.5, -7.0), (0.7, 1.5, -20.0)])
def test_kummer_vs_scipy(a, b, z):
    assert kummer_1f1(a, b, z) == pytest.approx(scipy.special.hyp1f1(a, b, z), rel=1e-11)


def test_kummer_bad_b():
    with pytest.raises(BadParameter):
        kummer_1f1(1.0, -2.0, 0.5)
