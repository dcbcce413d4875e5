import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bibeta.errors import ConvergenceError, DomainError
from bibeta.special import (IntegrandSpec, QuadratureResult, appell_f1, hyp2f1,
                            integrate_unit, ln_beta_multi, ln_gamma)
from oracles import appell_f1_series, gauss_legendre_unit, hyp2f1_series


class TestLnGamma:
    def test_known_values(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
        assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)
        assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)

    @pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.inf, math.nan])
    def test_rejects_outside_domain(self, bad):
        with pytest.raises(DomainError):
            ln_gamma(bad)

    @given(st.floats(min_value=0.1, max_value=100.0))
    @settings(max_examples=80, deadline=None)
    def test_recurrence(self, x):
        lhs = ln_gamma(x + 1.0)
        rhs = ln_gamma(x) + math.log(x)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


class TestLnBetaMulti:
    def test_known_values(self):
        assert ln_beta_multi((1.0, 1.0)) == pytest.approx(0.0, abs=1e-15)
        assert ln_beta_multi((1, 1, 1, 1)) == pytest.approx(math.log(1.0 / 6.0), rel=1e-14)
        # pinned by an arbitrary-precision gamma evaluation
        assert ln_beta_multi((4.7, 3.5, 2.1, 3.7)) == pytest.approx(
            -17.1412750392509089, rel=1e-13)

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            ln_beta_multi((2.0,))
        with pytest.raises(DomainError):
            ln_beta_multi((1.0, 0.0))
        with pytest.raises(DomainError):
            ln_beta_multi((1.0, -2.0, 3.0))


class TestIntegrateUnit:
    def test_constant(self):
        res = integrate_unit(IntegrandSpec(0.0, 0.0, lambda t: np.ones_like(t)))
        assert res.value == pytest.approx(1.0, rel=1e-12)
        assert res.evaluations >= 1
        assert res.abs_error_estimate >= 0.0

    def test_arcsine_weight(self):
        # both endpoint exponents singular; the smooth part is constant
        res = integrate_unit(IntegrandSpec(-0.5, -0.5, lambda t: np.ones_like(t)))
        assert res.value == pytest.approx(math.pi, rel=1e-10)

    def test_exp_smooth_against_oracles(self):
        res = integrate_unit(IntegrandSpec(0.5, 1.2, np.exp), tol=1e-12)
        # pinned by the dyadic Gauss-Legendre oracle at build time
        assert res.value == pytest.approx(0.3604571363997051, rel=1e-11)
        oracle = gauss_legendre_unit(
            lambda t: t ** 0.5 * (1.0 - t) ** 1.2 * np.exp(t))
        assert res.value == pytest.approx(oracle, rel=1e-11)

    @pytest.mark.parametrize("a", [0.1, 0.5, 1.0, 2.0, 10.0])
    @pytest.mark.parametrize("b", [0.1, 0.5, 1.0, 2.0, 10.0])
    def test_matches_beta_function(self, a, b):
        res = integrate_unit(IntegrandSpec(a - 1.0, b - 1.0, lambda t: np.ones_like(t)))
        assert res.value == pytest.approx(math.exp(ln_beta_multi((a, b))), rel=1e-10)

    def test_budget_exhaustion_carries_best_estimate(self):
        spec = IntegrandSpec(-0.5, -0.5, lambda t: np.ones_like(t))
        with pytest.raises(ConvergenceError) as err:
            integrate_unit(spec, tol=1e-10, max_levels=1)
        best = err.value.result
        assert isinstance(best, QuadratureResult)
        assert math.isfinite(best.value)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            IntegrandSpec(-1.0, 0.0, lambda t: t)
        with pytest.raises(DomainError):
            IntegrandSpec(0.0, -1.5, lambda t: t)
        with pytest.raises(DomainError):
            IntegrandSpec(0.0, 0.0, None)

    def test_result_validation(self):
        with pytest.raises(DomainError):
            QuadratureResult(1.0, -1e-3, 10)
        with pytest.raises(DomainError):
            QuadratureResult(1.0, 0.0, 0)


class TestHyp2F1:
    def test_unit_at_zero_argument(self):
        assert hyp2f1(0.7, 1.3, 2.0, 0.0) == 1.0
        assert hyp2f1(0.0, 1.3, 2.0, 0.5) == 1.0

    def test_log_identity(self):
        # 2F1(1,1;2;z) = -ln(1-z)/z
        assert hyp2f1(1.0, 1.0, 2.0, 0.5) == pytest.approx(2.0 * math.log(2.0), rel=1e-10)

    def test_negative_argument_pinned(self):
        # pinned by the Pfaff-mapped series oracle
        assert hyp2f1(0.3, 1.2, 2.5, -3.0) == pytest.approx(0.7835121623167526, rel=1e-9)

    @pytest.mark.parametrize("abcz", [
        (0.8, 0.6, 1.9, 0.4),
        (2.3, 1.1, 3.0, -0.7),
        (1.5, 2.2, 4.1, 0.85),
        (-0.4, 0.9, 2.6, 0.3),
    ])
    def test_against_series_oracle(self, abcz):
        a, b, c, z = abcz
        assert hyp2f1(a, b, c, z) == pytest.approx(hyp2f1_series(a, b, c, z), rel=1e-9)

    def test_parameter_symmetry(self):
        # both orderings satisfy c > b > 0 here
        assert hyp2f1(1.3, 0.7, 2.2, 0.4) == pytest.approx(
            hyp2f1(0.7, 1.3, 2.2, 0.4), rel=1e-9)

    def test_rejects_outside_domain(self):
        with pytest.raises(DomainError):
            hyp2f1(1.0, 2.0, 1.5, 0.3)     # c <= b
        with pytest.raises(DomainError):
            hyp2f1(1.0, 0.0, 1.5, 0.3)     # b <= 0
        with pytest.raises(DomainError):
            hyp2f1(1.0, 1.0, 2.0, 1.0)     # z at the branch point
        with pytest.raises(DomainError):
            hyp2f1(1.0, 1.0, 2.0, 1.7)
        with pytest.raises(DomainError):
            hyp2f1(math.nan, 1.0, 2.0, 0.5)


class TestAppellF1:
    def test_unit_at_zero_arguments(self):
        assert appell_f1(0.7, 0.4, 0.9, 1.8, 0.0, 0.0) == 1.0

    def test_collapses_to_gauss_when_b2_zero(self):
        got = appell_f1(0.7, 0.4, 0.0, 1.8, 0.3, -0.6)
        assert got == pytest.approx(hyp2f1(0.4, 0.7, 1.8, 0.3), rel=1e-9)
        # pinned value for the same tuple
        assert got == pytest.approx(1.0538860708928226, rel=1e-9)

    def test_double_series_pinned(self):
        assert appell_f1(0.7, 0.4, 0.9, 1.8, 0.3, -0.6) == pytest.approx(
            0.8828418932277526, rel=1e-9)

    @pytest.mark.parametrize("tup", [
        (0.7, 0.4, 0.9, 1.8, 0.3, -0.6),
        (1.4, 0.8, 0.3, 2.9, -0.5, 0.55),
        (2.1, 1.3, 0.6, 3.4, 0.25, 0.7),
    ])
    def test_against_double_series_oracle(self, tup):
        assert appell_f1(*tup) == pytest.approx(appell_f1_series(*tup), rel=1e-9)

    @pytest.mark.parametrize("z", [-0.8, -0.2, 0.35, 0.7])
    def test_equal_arguments_collapse(self, z):
        a, b1, b2, c = 0.9, 0.5, 1.1, 2.4
        # F1 with z1 = z2 = z degenerates to a Gauss function of b1 + b2
        assert appell_f1(a, b1, b2, c, z, z) == pytest.approx(
            hyp2f1(b1 + b2, a, c, z), rel=1e-9)

    def test_rejects_outside_domain(self):
        with pytest.raises(DomainError):
            appell_f1(2.0, 0.4, 0.9, 1.8, 0.3, -0.6)   # c <= a
        with pytest.raises(DomainError):
            appell_f1(0.0, 0.4, 0.9, 1.8, 0.3, -0.6)   # a <= 0
        with pytest.raises(DomainError):
            appell_f1(0.7, 0.4, 0.9, 1.8, 1.0, -0.6)   # z1 at branch point
        with pytest.raises(DomainError):
            appell_f1(0.7, 0.4, 0.9, 1.8, 0.3, 1.2)    # z2 beyond
