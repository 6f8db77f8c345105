import math

import numpy as np
import pytest

from darboux3 import ModelParams, conjugate_order, xi_renyi, xi_tsallis
from darboux3.quadrature import entropic_moment_numeric, renyi_numeric
from darboux3.position_entropy import renyi_position

RENYI_TABLE_ALPHAS = (0.6, 0.7, 0.8, 0.9, 1.125, 4.0 / 3.0, 1.75, 3.0)


class TestConjugateOrder:
    def test_fixed_point(self):
        assert conjugate_order(1.0).beta == pytest.approx(1.0, abs=1e-15)

    def test_two_maps_to_two_thirds(self):
        assert conjugate_order(2.0).beta == pytest.approx(2.0 / 3.0, rel=1e-15)

    def test_point_six_maps_to_three(self):
        assert conjugate_order(0.6).beta == pytest.approx(3.0, rel=1e-12)

    def test_involution(self):
        for alpha in (0.51, 0.6, 0.9, 1.4, 2.0, 7.0):
            back = conjugate_order(conjugate_order(alpha).beta).beta
            assert back == pytest.approx(alpha, abs=1e-14)

    def test_domain(self):
        with pytest.raises(ValueError):
            conjugate_order(0.5)
        with pytest.raises(ValueError):
            conjugate_order(0.2)


class TestXiRenyi:
    def test_harmonic_ground_saturates(self, harmonic):
        for alpha in RENYI_TABLE_ALPHAS:
            assert abs(xi_renyi(harmonic, 0, alpha).value) <= 1e-7

    def test_deformed_ground_does_not_saturate(self, deformed):
        assert xi_renyi(deformed, 0, 3.0).value > 1e-3

    def test_published_values(self, deformed):
        assert xi_renyi(deformed, 0, 3.0).value == pytest.approx(0.027, abs=1.5e-3)
        assert xi_renyi(deformed, 0, 2.0).value == pytest.approx(0.01796345, abs=1e-5)

    def test_path_metadata(self, deformed):
        assert xi_renyi(deformed, 0, 2.0).position_method == "analytic"
        assert xi_renyi(deformed, 0, 0.9).position_method == "quadrature"

    def test_alpha_one_rejected(self, deformed):
        with pytest.raises(ValueError):
            xi_renyi(deformed, 0, 1.0)

    def test_matches_component_assembly(self, deformed):
        # independent assembly from the component entropies and the bound
        alpha = 2.0
        beta = 2.0 / 3.0
        expect = (
            renyi_position(deformed, 1, 2)
            + renyi_numeric(deformed, 1, beta, "momentum")
            - math.log(math.pi * alpha ** (1 / (2 * alpha - 2)) * beta ** (1 / (2 * beta - 2)))
        )
        assert xi_renyi(deformed, 1, alpha).value == pytest.approx(expect, abs=1e-13)

    def test_nonnegative_sweep(self):
        for lam in (0.0, 0.7, 3.0):
            p = ModelParams(1.0, lam)
            for n in range(0, 11, 2):
                for alpha in (0.6, 0.9, 2.0, 3.0):
                    assert xi_renyi(p, n, alpha).value >= -1e-9


class TestXiTsallis:
    def test_harmonic_ground_saturates(self, harmonic):
        for alpha in (0.6, 0.7, 0.8, 0.9):
            assert abs(xi_tsallis(harmonic, 0, alpha).value) <= 1e-7

    def test_alpha_one_degenerates(self, deformed):
        assert xi_tsallis(deformed, 0, 1.0).value == 0.0

    def test_domain(self, deformed):
        for alpha in (0.5, 0.4, 1.2, 2.0):
            with pytest.raises(ValueError):
                xi_tsallis(deformed, 0, alpha)

    def test_published_values_at_demonstrated_accuracy(self, harmonic, deformed):
        # the published 4-decimal Tsallis-slack cells carry up to ~5e-4 of
        # their own quadrature error (see the decisions record); compare at
        # that demonstrated accuracy and pin the true values via the oracle
        assert xi_tsallis(harmonic, 2, 0.6).value == pytest.approx(0.2110, abs=6e-4)
        assert xi_tsallis(deformed, 0, 0.8).value == pytest.approx(0.00022, abs=2e-5)

    def test_oracle_harmonic_value(self, harmonic):
        # semi-analytic oracle: both sides reduce to moments of the exact
        # harmonic densities, here evaluated from the position quadrature
        alpha, beta = 0.6, 3.0
        w_a = entropic_moment_numeric(harmonic, 1, alpha, "position")
        w_b = entropic_moment_numeric(harmonic, 1, beta, "position")
        left = (alpha / math.pi) ** (1 / (4 * alpha)) * w_a ** (1 / (2 * alpha))
        right = (beta / math.pi) ** (1 / (4 * beta)) * w_b ** (1 / (2 * beta))
        assert xi_tsallis(harmonic, 1, alpha).value == pytest.approx(
            left - right, abs=1e-9
        )

    def test_nonnegative_sweep(self):
        for lam in (0.0, 1.0, 3.0):
            p = ModelParams(1.0, lam)
            for n in range(0, 11, 2):
                for alpha in (0.55, 2.0 / 3.0, 0.9):
                    assert xi_tsallis(p, n, alpha).value >= -1e-9

    def test_interior_maximum_in_lam(self):
        """Tsallis slack at order 2/3 vs lam rises then falls for n = 1:
        the maximum over [0, 1.5] is attained strictly inside."""
        lams = np.round(np.arange(0.0, 1.5001, 0.1), 10)
        vals = [xi_tsallis(ModelParams(1.0, float(l)), 1, 2.0 / 3.0).value for l in lams]
        k = int(np.argmax(vals))
        assert 0 < k < len(vals) - 1
        assert vals[k] > vals[0]
        assert vals[k] > vals[-1]
