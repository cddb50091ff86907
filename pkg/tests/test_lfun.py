import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscsign.errors import (
    DegenerateFit,
    InsufficientCoefficients,
    InsufficientPrecision,
    NonCuspidal,
    OutsideConvergence,
    TruncationTooSmall,
)
from oscsign.lfun import (
    LSeriesContext,
    completed_L,
    complex_gamma,
    default_grid,
    dirichlet_value,
    functional_equation_residual,
    growth_exponent,
    mellin_cross_check,
    partial_summation_check,
    rankin_partial_sums,
    smoothed_sum,
    upper_incomplete_gamma,
)
from oscsign.qexp import NormalizedSequence, delta, eisenstein_series, eta_quotient_expansion
from oscsign.qexp import EtaQuotient

L11 = EtaQuotient.parse("1^2,11^2")


def ones(n):
    return NormalizedSequence.from_values(np.ones(n), name="ones")


def alternating(n):
    return NormalizedSequence.from_values((-1.0) ** np.arange(1, n + 1), name="alt")


class TestIncompleteGamma:
    def test_closed_forms(self):
        assert upper_incomplete_gamma(1, 1) == pytest.approx(math.exp(-1), rel=1e-12)
        assert upper_incomplete_gamma(2, 1) == pytest.approx(2 * math.exp(-1), rel=1e-12)

    def test_half_against_quadrature(self):
        oracle = float(mpmath.quad(lambda t: t**-0.5 * mpmath.exp(-t), [2, mpmath.inf]))
        assert oracle == pytest.approx(0.0806471179603, abs=1e-12)
        assert upper_incomplete_gamma(0.5, 2).real == pytest.approx(oracle, rel=1e-12)

    @pytest.mark.parametrize("s", [complex(a, b) for a in (-1.5, 0, 0.5, 2, 6, 11.5) for b in (0, 0.7, 3, 5)])
    @pytest.mark.parametrize("x", [0.6, 1.9, 6.3, 20.0])
    def test_against_mpmath(self, s, x):
        ref = complex(mpmath.gammainc(mpmath.mpc(s.real, s.imag), x))
        assert abs(upper_incomplete_gamma(s, x) - ref) <= 1e-12 * abs(ref)

    @settings(max_examples=60, deadline=None)
    @given(
        st.floats(-3, 14).filter(lambda v: abs(v - round(v)) > 1e-3),
        st.floats(-6, 6),
        st.floats(0.6, 40),
    )
    def test_recursion(self, sr, si, x):
        s = complex(sr, si)
        lhs = upper_incomplete_gamma(s + 1, x)
        rhs = s * upper_incomplete_gamma(s, x) + x**s * math.exp(-x)
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(x**s * math.exp(-x)))

    def test_nonpositive_integer_parameter(self):
        ref = float(mpmath.gammainc(0, 2.0))
        assert upper_incomplete_gamma(0, 2.0).real == pytest.approx(ref, rel=1e-12)

    def test_complex_gamma(self):
        assert complex_gamma(5) == pytest.approx(24)


class TestDirichlet:
    def test_zeta2_partial(self):
        ctx = LSeriesContext(np.ones(101), normalized=True, alpha=0.0, constant=1.0)
        v = dirichlet_value(ctx, 2, 100)
        assert v.value.real == pytest.approx(sum(1 / n**2 for n in range(1, 101)), rel=1e-15)
        assert v.value.real == pytest.approx(1.634983900, abs=1e-9)
        assert v.tail_bound <= 0.01
        assert abs(math.pi**2 / 6 - v.value.real) <= v.tail_bound

    def test_zeta2_converges(self):
        ctx = LSeriesContext(np.ones(100_001), normalized=True, alpha=0.0, constant=1.0)
        v = dirichlet_value(ctx, 2)
        assert abs(v.value - math.pi**2 / 6) <= v.tail_bound

    def test_normalized_tau_two_truncations(self, tau_norm):
        ctx = LSeriesContext.from_normalized(tau_norm, 12)
        a = dirichlet_value(ctx, 3, 1000)
        b = dirichlet_value(ctx, 3, 4000)
        assert a.tail_bound < 1e-3
        assert abs(a.value - b.value) <= a.tail_bound + b.tail_bound

    def test_refuses_outside_convergence(self):
        ctx = LSeriesContext(np.ones(10), normalized=True, alpha=0.0)
        with pytest.raises(OutsideConvergence):
            dirichlet_value(ctx, 1.0)


@pytest.fixture(scope="module")
def delta_ctx():
    return LSeriesContext.from_series(delta(80), 12, 1, name="delta")


@pytest.fixture(scope="module")
def l11_ctx():
    return LSeriesContext.from_series(eta_quotient_expansion(L11, 400), 2, 11, name="11a")


class TestCompletedL:
    def test_delta_center_real_positive(self, delta_ctx):
        v = completed_L(delta_ctx, delta_ctx, 12, 1, 6)
        assert abs(v.imag) < 1e-15
        assert v.real > 0

    def test_delta_against_integral_representation(self, delta_ctx):
        coeffs = [int(c) for c in delta(80).coeffs]

        def delta_iy(y):
            if y < 1:
                # modular transformation Delta(i y) = y^-12 Delta(i / y)
                return y**-12 * delta_iy(1 / y)
            return sum(c * mpmath.exp(-2 * mpmath.pi * n * y) for n, c in enumerate(coeffs) if c)

        for s in (6, 4.5, 7 + 2j):
            with mpmath.workdps(25):
                oracle = mpmath.quad(lambda y: delta_iy(y) * y ** (mpmath.mpc(s) - 1), [0, 1, mpmath.inf])
            v = completed_L(delta_ctx, delta_ctx, 12, 1, s)
            assert abs(v - complex(oracle)) < 1e-12 * abs(complex(oracle))

    def test_delta_against_dirichlet_series(self, delta_ctx):
        ctx = LSeriesContext.from_series(delta(4000), 12, 1)
        for s in (9.5, 10, 10 + 3j):
            d = dirichlet_value(ctx, s)
            expected = (1 / (2 * math.pi)) ** s * complex_gamma(s) * d.value
            got = completed_L(delta_ctx, delta_ctx, 12, 1, s)
            assert abs(got - expected) <= 1e-12 + abs((1 / (2 * math.pi)) ** s * complex_gamma(s)) * d.tail_bound

    def test_symmetry_2_10(self, delta_ctx):
        a = completed_L(delta_ctx, delta_ctx, 12, 1, 2)
        b = completed_L(delta_ctx, delta_ctx, 12, 1, 10)
        assert abs(a - b) < 1e-10

    def test_real_on_real_axis(self, delta_ctx):
        for s in (-3.0, 0.5, 2.25, 6.0, 13.0):
            assert abs(completed_L(delta_ctx, delta_ctx, 12, 1, s).imag) < 1e-12

    def test_split_independence_for_true_pair(self, l11_ctx):
        g = LSeriesContext.from_series(eta_quotient_expansion(L11, 400), 2, 11, scale=-1)
        base = completed_L(l11_ctx, g, 2, 11, 0.7 + 1j)
        for t in (0.2, 0.35, 0.5):
            assert abs(completed_L(l11_ctx, g, 2, 11, 0.7 + 1j, split=t) - base) < 1e-12

    def test_non_cuspidal(self):
        e4 = LSeriesContext.from_series(eisenstein_series(4, 30), 4, 1)
        with pytest.raises(NonCuspidal):
            completed_L(e4, e4, 4, 1, 2)

    def test_insufficient_coefficients(self):
        short = LSeriesContext.from_series(eta_quotient_expansion(L11, 3), 2, 11)
        with pytest.raises(InsufficientPrecision):
            completed_L(short, short, 2, 11, 1)


class TestFunctionalEquation:
    def test_delta_grid(self, delta_ctx):
        grid = [complex(s) for s in range(2, 11)] + [complex(6, t) for t in range(6)]
        rep = functional_equation_residual(delta_ctx, delta_ctx, 12, 1, grid)
        assert rep.max_residual < 1e-9

    def test_delta_root_number(self, delta_ctx):
        rep = functional_equation_residual(delta_ctx, None, 12, 1, default_grid(12))
        assert abs(rep.root_number - 1) < 1e-9
        assert rep.max_residual < 1e-9

    def test_level11_root_number_measured(self, l11_ctx):
        rep = functional_equation_residual(l11_ctx, None, 2, 11, default_grid(2))
        assert abs(abs(rep.root_number) - 1) < 1e-6
        assert rep.root_number.real < 0
        assert rep.max_residual < 1e-8

    def test_perturbation_detected(self, delta_ctx):
        c = np.array(delta_ctx.coeffs)
        c[1] += 1
        bad = LSeriesContext(c, 12, 1, alpha=6)
        good = functional_equation_residual(delta_ctx, delta_ctx, 12, 1, default_grid(12)).max_residual
        worse = functional_equation_residual(delta_ctx, bad, 12, 1, default_grid(12)).max_residual
        assert worse > 1e4 * max(good, 1e-16)

    def test_symmetric_split_rejected(self, delta_ctx):
        with pytest.raises(ValueError):
            functional_equation_residual(delta_ctx, delta_ctx, 12, 1, [6], split_factor=1.0)


class TestSmoothing:
    def test_ones(self):
        s = smoothed_sum(ones(2000), 10)
        assert s.value == pytest.approx(1 / (math.exp(0.1) - 1), rel=1e-14)
        assert s.value == pytest.approx(9.5083, abs=1e-4)
        assert s.truncation_bound < 1e-12

    def test_alternating(self):
        s = smoothed_sum(alternating(2000), 10)
        assert s.value == pytest.approx(-1 / (math.exp(0.1) + 1), rel=1e-13)

    def test_tau_bounded(self, tau_norm):
        v = smoothed_sum(tau_norm, 50).value
        n = np.arange(1, 4001)
        oracle = math.fsum(tau_norm.values[:4000] * np.exp(-n / 50))
        assert v == pytest.approx(oracle, abs=1e-13)
        assert abs(v) < 10

    def test_insufficient(self):
        with pytest.raises(InsufficientCoefficients):
            smoothed_sum(ones(100), 10)

    def test_mellin_ones(self):
        c = mellin_cross_check(ones(2000), 5, 2.0, 60)
        assert abs(c.contour - 1 / (math.exp(0.2) - 1)) < 1e-8
        assert c.discrepancy < 1e-8

    def test_mellin_tau(self, tau_norm):
        c = mellin_cross_check(tau_norm, 5, 2.0)
        assert c.discrepancy < 1e-6

    def test_mellin_truncation_too_small(self):
        with pytest.raises(TruncationTooSmall):
            mellin_cross_check(ones(2000), 5, 2.0, 1)


class TestGrowth:
    def test_linear(self):
        xs = [1, 2, 4, 8, 16]
        fit = growth_exponent([(x, x) for x in xs])
        assert fit.slope == pytest.approx(1.0, abs=1e-12) and fit.rms < 1e-12

    def test_sqrt(self):
        fit = growth_exponent([(x, 3 * x**0.5) for x in (1, 3, 9, 27)])
        assert fit.slope == pytest.approx(0.5, abs=1e-12)
        assert fit.intercept == pytest.approx(math.log(3), abs=1e-12)

    def test_zero_dropped(self):
        fit = growth_exponent([(1, 1), (2, 0), (3, 3), (4, 4), (5, 5)])
        assert fit.dropped == 1

    def test_degenerate(self):
        with pytest.raises(DegenerateFit):
            growth_exponent([(1, 1), (2, 0), (3, 3), (4, 4)])

    def test_rankin_trivial(self):
        assert rankin_partial_sums(ones(100), [100]).sums == (100.0,)
        assert rankin_partial_sums(alternating(100), [100]).sums == (100.0,)

    def test_rankin_monotone_and_ones_slope(self):
        r = rankin_partial_sums(ones(100_000), [10, 100, 1000, 10_000, 100_000])
        assert all(b >= a for a, b in zip(r.sums, r.sums[1:]))
        assert growth_exponent(list(zip(r.thresholds, r.sums))).slope == pytest.approx(1.0, abs=1e-6)

    def test_rankin_tau_ratio(self, tau_norm):
        r = rankin_partial_sums(tau_norm, [10_000, 100_000])
        a4, a5 = r.sums[0] / 1e4, r.sums[1] / 1e5
        assert r.sums[0] > 0
        assert abs(a4 - a5) <= 0.2 * a5
        assert r.sums[1] == pytest.approx(math.fsum(np.square(tau_norm.values)), rel=1e-15)

    def test_rankin_errors(self):
        with pytest.raises(InsufficientCoefficients):
            rankin_partial_sums(ones(10), [20])
        with pytest.raises(ValueError):
            rankin_partial_sums(ones(10), [5], offset=5)

    def test_partial_summation_ones(self):
        c = partial_summation_check(ones(1000), 2, 0, 1000)
        assert c.series.real == pytest.approx(sum(1 / n**2 for n in range(1, 1001)), rel=1e-14)
        assert abs(c.series - (c.integral + c.boundary)) < 1e-12
        assert c.identity_error < 1e-12

    def test_partial_summation_tau(self, tau_norm):
        c = partial_summation_check(tau_norm, 1.5, 10, 10_000)
        assert c.discrepancy <= c.tail_bound
        assert c.identity_error < 1e-12

    def test_partial_summation_bad_range(self):
        with pytest.raises(ValueError):
            partial_summation_check(ones(100), 2, 50, 10)
