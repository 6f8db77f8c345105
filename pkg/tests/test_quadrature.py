import math

import numpy as np
import pytest

from darboux3 import (
    GridSpec,
    ModelParams,
    density_position,
    entropic_moment,
    entropic_moment_numeric,
    fourier_transform,
    integrate,
    momentum_density,
    momentum_profile,
    renyi_numeric,
    shannon_numeric,
    tsallis_numeric,
    wavefunction,
)

TABLE_ALPHAS = (0.5, 4.0 / 7.0, 2.0 / 3.0, 0.8, 1.25, 1.5, 1.75, 2.0)


class TestGridSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            GridSpec(half_width=-1.0, points=64)
        with pytest.raises(ValueError):
            GridSpec(half_width=5.0, points=16)
        with pytest.raises(ValueError):
            GridSpec(half_width=5.0, points=64, rule="trapezoid")


class TestIntegrate:
    def test_gaussian(self):
        val = integrate(lambda x: np.exp(-x * x), GridSpec(8.0, 320))
        assert val == pytest.approx(math.sqrt(math.pi), abs=1e-12)

    def test_odd_integrand(self):
        val = integrate(lambda x: x * np.exp(-x * x), GridSpec(8.0, 320))
        assert abs(val) < 1e-14

    def test_density_normalisation(self, deformed):
        val = integrate(lambda x: density_position(deformed, 0, x), GridSpec(14.0, 480))
        assert val == pytest.approx(1.0, abs=1e-10)

    def test_doubling_convergence(self):
        a = integrate(lambda x: np.exp(-x * x) * np.cos(3 * x), GridSpec(8.0, 320))
        b = integrate(lambda x: np.exp(-x * x) * np.cos(3 * x), GridSpec(8.0, 640))
        assert abs(a - b) <= 1e-10 * abs(b)

    def test_other_rules(self):
        target = math.sqrt(math.pi)
        for rule, pts in (("uniform_simpson", 1001), ("gauss_hermite", 64)):
            val = integrate(lambda x: np.exp(-x * x), GridSpec(8.0, pts, rule))
            assert val == pytest.approx(target, rel=1e-10)

    def test_nonfinite_sample_rejected(self):
        def f(x):
            with np.errstate(divide="ignore"):
                return 1.0 / x

        with pytest.raises(ValueError, match="non-finite"):
            integrate(f, GridSpec(8.0, 320, "uniform_simpson"))


class TestMomentNumeric:
    def test_disequilibrium_value(self, harmonic):
        assert entropic_moment_numeric(harmonic, 0, 2.0, "position") == pytest.approx(
            1.0 / math.sqrt(2.0 * math.pi), rel=1e-12
        )

    def test_normalisation_both_spaces(self, deformed):
        for space in ("position", "momentum"):
            assert entropic_moment_numeric(deformed, 3, 1.0, space) == pytest.approx(
                1.0, abs=1e-8
            )

    @pytest.mark.parametrize("lam", [0.0, 0.4, 1.0])
    @pytest.mark.parametrize("alpha", [2, 3])
    def test_cross_oracle_with_analytic(self, lam, alpha):
        p = ModelParams(1.0, lam)
        for n in (0, 5, 12):
            w_a = entropic_moment(p, n, alpha)
            w_q = entropic_moment_numeric(p, n, float(alpha), "position")
            assert abs(w_a - w_q) / w_a < 1e-9

    @pytest.mark.parametrize(
        "lam,n,alpha,space",
        [
            (0.4, 0, 2.0, "position"),
            (0.4, 13, 0.5, "position"),
            (0.0, 5, 2.0 / 3.0, "momentum"),
            (0.4, 20, 2.0, "momentum"),
            (1.5, 2, 0.5, "momentum"),
        ],
    )
    def test_grid_doubling_stability(self, lam, n, alpha, space):
        p = ModelParams(1.0, lam)
        w1 = entropic_moment_numeric(p, n, alpha, space, refine=1)
        w2 = entropic_moment_numeric(p, n, alpha, space, refine=2)
        r1 = math.log(w1) / (1.0 - alpha)
        r2 = math.log(w2) / (1.0 - alpha)
        assert abs(r1 - r2) < 1e-8

    def test_rejects_bad_inputs(self, deformed):
        with pytest.raises(ValueError):
            entropic_moment_numeric(deformed, 0, -1.0, "position")
        with pytest.raises(ValueError):
            entropic_moment_numeric(deformed, 0, 2.0, "phase-space")


class TestEntropiesNumeric:
    def test_published_position_value(self, harmonic):
        assert renyi_numeric(harmonic, 0, 0.5, "position") == pytest.approx(1.266, abs=1.5e-3)

    def test_published_momentum_values(self, deformed):
        assert renyi_numeric(deformed, 0, 2.0, "momentum") == pytest.approx(0.670, abs=1.5e-3)
        assert renyi_numeric(ModelParams(1.0, 0.5), 0, 2.0, "momentum") == pytest.approx(
            0.6207, abs=1e-4
        )

    def test_alpha_one_rejected(self, harmonic):
        with pytest.raises(ValueError):
            renyi_numeric(harmonic, 0, 1.0, "position")
        with pytest.raises(ValueError):
            tsallis_numeric(harmonic, 0, 1.0, "momentum")

    @pytest.mark.parametrize("space", ["position", "momentum"])
    def test_alpha_limit_brackets_shannon(self, deformed, space):
        s = shannon_numeric(deformed, 3, space)
        hi = renyi_numeric(deformed, 3, 1.0 - 1e-4, space)
        lo = renyi_numeric(deformed, 3, 1.0 + 1e-4, space)
        assert lo <= s <= hi
        assert hi - lo < 1e-3

    def test_shannon_harmonic_ground_exact(self, harmonic):
        expect = 0.5 * (1.0 + math.log(math.pi))
        for space in ("position", "momentum"):
            assert shannon_numeric(harmonic, 0, space) == pytest.approx(expect, abs=1e-10)


class TestFourierTransform:
    def test_gaussian_self_transform(self, harmonic):
        for p in (0.0, 0.7, 2.3):
            val = fourier_transform(harmonic, 0, None, p)
            expect = math.pi**-0.25 * math.exp(-0.5 * p * p)
            assert val.real == pytest.approx(expect, rel=1e-12)
            assert abs(val.imag) < 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_hermite_functions_are_eigenfunctions(self, harmonic, n):
        for p in (0.4, 1.1):
            val = fourier_transform(harmonic, n, None, p)
            expect = (-1j) ** n * wavefunction(harmonic, n, p)
            assert abs(val - expect) < 1e-12

    def test_grid_refinement_oracle(self, deformed):
        base = fourier_transform(deformed, 0, None, 0.0)
        fine = fourier_transform(
            deformed, 0, GridSpec(half_width=16.0, points=4096), 0.0
        )
        assert abs(base - fine) / abs(fine) < 1e-9

    def test_oscillation_warning(self, deformed):
        with pytest.warns(UserWarning, match="underresolve"):
            fourier_transform(deformed, 0, GridSpec(half_width=12.0, points=64), 40.0)

    def test_parity_structure(self, deformed):
        even = fourier_transform(deformed, 2, None, 0.9)
        odd = fourier_transform(deformed, 3, None, 0.9)
        assert abs(even.imag) <= 1e-10 * abs(even)
        assert abs(odd.real) <= 1e-10 * abs(odd)


class TestMomentumDensity:
    def test_harmonic_ground_gaussian(self, harmonic):
        prof = momentum_density(harmonic, 0)
        expect = np.exp(-prof.p**2) / math.sqrt(math.pi)
        assert np.max(np.abs(prof.gamma - expect)) < 1e-13

    def test_values_table_shape(self, deformed):
        prof = momentum_density(deformed, 2)
        vals = prof.values
        assert vals.shape == (len(prof.p), 2)
        np.testing.assert_array_equal(vals[:, 0], prof.p)
        np.testing.assert_array_equal(vals[:, 1], prof.gamma)

    def test_explicit_grid_path(self, deformed):
        grid_p = GridSpec(half_width=10.0, points=640)
        prof = momentum_density(deformed, 0, None, grid_p)
        assert prof.grid == grid_p
        norm = float(prof.weights @ prof.gamma)
        assert norm == pytest.approx(1.0, abs=1e-8)

    def test_localisation_variance_ordering(self, harmonic, deformed):
        def variance(prof):
            return 2.0 * float(prof.weights @ (prof.p**2 * prof.gamma))

        v0 = variance(momentum_profile(harmonic, 0))
        v4 = variance(momentum_profile(deformed, 0))
        assert v4 < v0

    def test_strong_coupling_side_maxima(self):
        prof = momentum_profile(ModelParams(1.0, 100.0), 0)
        g, p = prof.gamma, prof.p
        body = (p > 1e-3) & (p < 0.9 * prof.grid.half_width)
        dg = np.diff(g[body])
        has_interior_min_then_max = np.any((dg[:-1] < 0) & (dg[1:] > 0))
        assert has_interior_min_then_max

    @pytest.mark.parametrize("lam", [0.0, 0.4, 2.0])
    def test_parseval(self, lam):
        p = ModelParams(1.0, lam)
        for n in (0, 1, 7, 20):
            prof = momentum_profile(p, n)
            assert 2.0 * float(prof.weights @ prof.gamma) == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("n", [0, 6])
    def test_parseval_large_lam(self, n):
        prof = momentum_profile(ModelParams(1.0, 100.0), n)
        assert 2.0 * float(prof.weights @ prof.gamma) == pytest.approx(1.0, abs=1e-6)


class TestSelfDuality:
    def test_harmonic_position_equals_momentum(self, harmonic):
        for n in (0, 1, 4, 9, 20):
            for alpha in TABLE_ALPHAS:
                r_pos = renyi_numeric(harmonic, n, alpha, "position")
                r_mom = renyi_numeric(harmonic, n, alpha, "momentum")
                assert abs(r_pos - r_mom) < 1e-9


class TestLambdaLocalisation:
    def test_momentum_renyi_strictly_decreasing(self):
        lams = np.round(np.arange(0.0, 1.5001, 0.05), 10)
        for n in (0, 1, 2):
            vals = [
                renyi_numeric(ModelParams(1.0, float(lam)), n, 2.0, "momentum")
                for lam in lams
            ]
            assert all(a > b for a, b in zip(vals[:-1], vals[1:]))
