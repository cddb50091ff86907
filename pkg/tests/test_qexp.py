import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    bernoulli_recurrence,
    divisor_count,
    is_prime,
    naive_delta,
    naive_euler_product,
    naive_level11,
    naive_mul,
    sigma,
)
from oscsign.errors import (
    EmptySpace,
    InsufficientPrecision,
    IrrationalEigenvalues,
    NonCuspidal,
    NonIntegralPrefactor,
    NonIntegralWeight,
    NotOneDimensional,
    OddWeight,
    WeightTooSmall,
)
from oscsign.qexp import (
    EtaQuotient,
    IntegerSeries,
    bernoulli,
    cusp_form_dimension,
    delta,
    eisenstein_series,
    eta_power,
    eta_quotient_expansion,
    fricke_image,
    hecke_eigenform,
    hecke_image,
    hecke_matrix,
    hecke_power_coefficient,
    hecke_prime_image,
    normalize,
    victor_miller_basis,
)
from oscsign.qexp.series import inverse, multiply, power


class TestSeriesArithmetic:
    @given(
        st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=25),
        st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=25),
    )
    def test_kronecker_product_matches_schoolbook(self, a, b):
        order = max(len(a), len(b)) + 3
        expected = naive_mul(a, b, order)[: min(len(a) + len(b) - 1, order + 1)]
        assert multiply(a, b, order) == expected

    def test_product_truncates(self):
        assert multiply([1, 1], [1, 1], 1) == [1, 2]

    def test_zero_operand(self):
        assert multiply([0, 0], [5, 7], 3) == [0, 0, 0]

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=15), st.sampled_from([1, -1]))
    def test_inverse(self, tail, unit):
        a = [unit] + tail
        order = len(a) + 4
        g = inverse(a, order)
        assert naive_mul(a, g, order) == [1] + [0] * order

    def test_negative_power_is_partition_numbers(self):
        p = power(eta_power(10).coeffs, -1, 10)
        assert p == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_integer_series_invariants(self):
        s = IntegerSeries((0, 1, -24))
        assert s.truncation_order == 2 and len(s) == 3
        with pytest.raises(ValueError):
            IntegerSeries(())
        with pytest.raises(ValueError):
            s.truncate(5)


class TestEta:
    def test_empty_product(self):
        assert eta_power(0).coeffs == (1,)

    def test_order_seven(self):
        assert list(eta_power(7).coeffs) == naive_euler_product(7) == [1, -1, -1, 0, 0, 1, 0, 1]

    def test_q12(self):
        assert eta_power(12)[12] == naive_euler_product(12)[12] == -1

    @pytest.mark.parametrize("order", [1, 50, 300])
    def test_matches_brute_force(self, order):
        assert list(eta_power(order).coeffs) == naive_euler_product(order)

    @pytest.mark.parametrize("order", [0, 1, 10, 1000, 20000])
    def test_pentagonal_sparsity(self, order):
        c = eta_power(order).coeffs
        nz = [x for x in c if x]
        assert set(nz) <= {1, -1}
        assert len(nz) <= 2 * math.ceil(math.sqrt(2 * order)) + 1

    def test_delta_prefix(self):
        s = eta_quotient_expansion(EtaQuotient(((1, 24),)), 2)
        assert s.coeffs == (0, 1, -24)

    def test_level11(self):
        s = eta_quotient_expansion(EtaQuotient(((1, 2), (11, 2)), 11), 5)
        assert list(s.coeffs) == naive_level11(5) == [0, 1, -2, -1, 2, 1]

    def test_level11_longer(self):
        s = eta_quotient_expansion(EtaQuotient.parse("1^2,11^2"), 150)
        assert list(s.coeffs) == naive_level11(150)

    def test_negative_exponents(self):
        # eta(z)^-1 eta(2z)^... sanity: eta(2z)^16/eta(z)^8 has weight 4, order 1
        q = EtaQuotient(((1, -8), (2, 16)), 2)
        s = eta_quotient_expansion(q, 30)
        inv = power(naive_euler_product(29), -8, 29)
        body = naive_mul(inv, naive_euler_product(29, 16, step=2), 29)
        assert list(s.coeffs) == [0] + body[:30]

    def test_half_integral_weight_rejected(self):
        with pytest.raises(NonIntegralWeight):
            EtaQuotient(((1, 1),))

    def test_non_cuspidal_prefactor_rejected(self):
        with pytest.raises(NonIntegralPrefactor):
            EtaQuotient(((1, 2),))

    def test_parse(self):
        q = EtaQuotient.parse("1^2, 11^2")
        assert q.factors == ((1, 2), (11, 2)) and q.level == 11 and q.weight == 2 and q.q_order == 1

    def test_fricke_image_of_level11(self):
        c, image = fricke_image(EtaQuotient.parse("1^2,11^2"))
        assert c == -1
        assert image.factors == ((1, 2), (11, 2))

    def test_fricke_image_of_delta(self):
        c, image = fricke_image(EtaQuotient(((1, 24),)))
        assert c == 1 and image.factors == ((1, 24),)


class TestBernoulliEisenstein:
    def test_small(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(12) == Fraction(-691, 2730)

    @pytest.mark.parametrize("n", range(0, 31))
    def test_against_recurrence(self, n):
        assert bernoulli(n) == bernoulli_recurrence(n)

    def test_e4_e6(self):
        e4 = eisenstein_series(4, 5)
        e6 = eisenstein_series(6, 5)
        assert e4[0] == 1 and e4[1] == 240
        assert e6[1] == -504
        assert list(e4.coeffs) == [1] + [240 * sigma(3, n) for n in range(1, 6)]
        assert list(e6.coeffs) == [1] + [-504 * sigma(5, n) for n in range(1, 6)]

    @pytest.mark.parametrize("k", [4, 6, 8, 10, 14])
    def test_integral_weights(self, k):
        assert eisenstein_series(k, 3).denominator == 1

    def test_e12_rational(self):
        e12 = eisenstein_series(12, 3)
        assert e12.denominator == 691
        assert Fraction(e12[1], e12.denominator) == Fraction(65520, 691)

    def test_errors(self):
        with pytest.raises(OddWeight):
            eisenstein_series(5, 3)
        with pytest.raises(WeightTooSmall):
            eisenstein_series(2, 3)

    def test_delta_identity(self):
        order = 500
        e4 = eisenstein_series(4, order)
        e6 = eisenstein_series(6, order)
        lhs = (e4 * e4 * e4) - (e6 * e6)
        assert list(lhs.coeffs) == [1728 * c for c in delta(order).coeffs]


class TestVictorMiller:
    @pytest.mark.parametrize("k,dim", [(4, 0), (10, 0), (12, 1), (14, 0), (24, 2), (26, 1), (36, 3), (38, 2)])
    def test_dimension(self, k, dim):
        assert cusp_form_dimension(k) == dim

    def test_weight12_is_delta(self):
        (b,) = victor_miller_basis(12, 30)
        assert list(b.coeffs) == naive_delta(30)

    def test_weight24_echelon(self):
        f1, f2 = victor_miller_basis(24, 10)
        assert f1.coeffs[:3] == (0, 1, 0)
        assert f2.coeffs[:3] == (0, 0, 1)

    def test_weight24_oracle_row_reduction(self):
        d = naive_delta(10)
        e4 = [1] + [240 * sigma(3, n) for n in range(1, 11)]
        g1 = naive_mul(naive_mul(naive_mul(d, e4, 10), e4, 10), e4, 10)
        g2 = naive_mul(d, d, 10)
        f1 = [x - g1[2] * y for x, y in zip(g1, g2)]
        f1_, f2_ = victor_miller_basis(24, 10)
        assert list(f1_.coeffs) == f1 and list(f2_.coeffs) == g2

    @pytest.mark.parametrize("k", [12, 24, 36, 48, 50])
    def test_echelon_property(self, k):
        basis = victor_miller_basis(k, 20)
        d = len(basis)
        for i, f in enumerate(basis):
            assert [f[n] for n in range(d + 1)] == [1 if n == i + 1 else 0 for n in range(d + 1)]

    def test_empty(self):
        with pytest.raises(EmptySpace):
            victor_miller_basis(10, 5)


class TestHecke:
    def test_delta_t2(self):
        assert hecke_matrix(12, [delta(20)], 2) == [[-24]]

    def test_delta_t6(self):
        assert hecke_matrix(12, [delta(20)], 6) == [[-6048]]

    @pytest.mark.parametrize("k", [12, 24, 36])
    def test_t1_identity(self, k):
        basis = victor_miller_basis(k, 20)
        m = hecke_matrix(k, basis, 1)
        assert m == [[1 if i == j else 0 for j in range(len(basis))] for i in range(len(basis))]

    def test_weight24_t2_charpoly(self):
        m = hecke_matrix(24, victor_miller_basis(24, 40), 2)
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        # x^2 - 1080 x - 20468736 (discriminant 144 * 144169, not a square)
        assert (tr, det) == (1080, -20468736)

    def test_hecke_commute(self):
        basis = victor_miller_basis(36, 60)
        t2 = np.array(hecke_matrix(36, basis, 2), dtype=object)
        t3 = np.array(hecke_matrix(36, basis, 3), dtype=object)
        assert (t2.dot(t3) == t3.dot(t2)).all()

    def test_multiplicative_composition(self):
        basis = victor_miller_basis(24, 80)
        t2 = np.array(hecke_matrix(24, basis, 2), dtype=object)
        t3 = np.array(hecke_matrix(24, basis, 3), dtype=object)
        t6 = np.array(hecke_matrix(24, basis, 6), dtype=object)
        assert (t2.dot(t3) == t6).all()

    def test_prime_formula_matches_divisor_formula(self):
        f = victor_miller_basis(24, 200)[0].coeffs
        for p in (2, 3, 5, 7):
            assert hecke_image(f, 24, p, 20) == hecke_prime_image(f, 24, p, 20)

    def test_insufficient_precision(self):
        with pytest.raises(InsufficientPrecision):
            hecke_matrix(12, [delta(5)], 6)

    def test_eigenforms(self):
        assert hecke_eigenform(12, 6).coeffs == (0, 1, -24, 252, -1472, 4830, -6048)
        assert hecke_eigenform(16, 2)[2] == 216

    def test_eigenform_16_matches_e4_delta(self):
        e4 = [1] + [240 * sigma(3, n) for n in range(1, 41)]
        assert list(hecke_eigenform(16, 40).coeffs) == naive_mul(e4, naive_delta(40), 40)

    def test_not_one_dimensional(self):
        with pytest.raises(NotOneDimensional):
            hecke_eigenform(24, 10)

    def test_irrational_eigenvalues(self):
        with pytest.raises(IrrationalEigenvalues):
            hecke_eigenform(24, 10, diagonalize=True)

    def test_power_coefficient(self):
        assert hecke_power_coefficient(-24, 2, 12, 0) == 1
        assert hecke_power_coefficient(-24, 2, 12, 2) == -1472
        assert hecke_power_coefficient(-24, 2, 12, 3) == 84480 == naive_delta(8)[8]

    @pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
    def test_hecke_recursion_and_multiplicativity(self, k):
        order = 2000
        a = hecke_eigenform(k, order).coeffs
        for p in (q for q in range(2, order) if is_prime(q)):
            pm, m = p, 1
            while pm <= order:
                assert a[pm] == hecke_power_coefficient(a[p], p, k, m)
                pm *= p
                m += 1
        for m in range(2, 45):
            for n in range(m + 1, 45):
                if math.gcd(m, n) == 1:
                    assert a[m * n] == a[m] * a[n]

    @pytest.mark.parametrize("k", [12, 16, 26])
    def test_deligne_bound(self, k):
        a = hecke_eigenform(k, 3000).coeffs
        for n in range(1, 3001):
            assert a[n] ** 2 <= divisor_count(n) ** 2 * n ** (k - 1)


class TestNormalize:
    def test_tau(self):
        s = normalize(delta(10), 12)
        assert s[1] == 1.0
        assert s[2] == pytest.approx(-0.5303300859, abs=1e-10)
        assert s[2] == -24 / 2**5.5

    def test_level11(self):
        s = normalize(eta_quotient_expansion(EtaQuotient.parse("1^2,11^2"), 5), 2)
        assert s[2] == pytest.approx(-1.41421356, abs=1e-8)

    def test_relative_error_against_fractions(self, tau_series):
        import mpmath

        s = normalize(tau_series.truncate(5000), 12)
        with mpmath.workdps(40):
            for n in list(range(1, 200)) + list(range(4800, 5000)):
                exact = mpmath.mpf(tau_series[n]) / mpmath.mpf(n) ** mpmath.mpf(5.5)
                if exact:
                    rel = abs((mpmath.mpf(s[n]) - exact) / exact)
                    assert rel <= 4 * np.finfo(float).eps

    def test_non_cuspidal(self):
        with pytest.raises(NonCuspidal):
            normalize(eisenstein_series(4, 5), 4)

    def test_rational_series(self):
        s = normalize(IntegerSeries((0, 3, 6), 3), 2)
        assert s[1] == 1.0 and s[2] == pytest.approx(2 / math.sqrt(2))
