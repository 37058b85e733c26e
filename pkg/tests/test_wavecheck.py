import math
import unittest

import numpy as np

from common.errors import ConfigurationError, EvaluationError
from common.models.models import Grid1D, WaveProfile
from physics import wavecheck
from tests.base_test import BaseTest


class TestGrid(BaseTest):

    def test_default_grid_spacings_differ(self):
        g = wavecheck.default_grid()
        self.assertAlmostEqual(g.dx, 2.0 * math.pi / 127)
        self.assertAlmostEqual(g.dt, math.pi / 127)

    def test_refine_halves_spacing(self):
        g = wavecheck.default_grid()
        fine = g.refine()
        self.assertEqual(fine.n_x, 255)
        self.assertAlmostEqual(fine.dx, g.dx / 2.0)
        self.assertAlmostEqual(fine.dt, g.dt / 2.0)

    def test_invalid_grid(self):
        with self.assertRaises(ConfigurationError):
            Grid1D(0.0, 1.0, 4, 0.0, 1.0, 16)
        with self.assertRaises(ConfigurationError):
            Grid1D(1.0, 0.0, 16, 0.0, 1.0, 16)


class TestResidual(BaseTest):

    def test_linear_profile_is_exact(self):
        residual = wavecheck.residual_wave_equation(wavecheck.linear_profile(), 1.0, 1.0, wavecheck.default_grid())
        self.assertLess(residual, 1e-8)

    def test_sine_residual_small(self):
        residual = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 1.0, wavecheck.default_grid())
        self.assertLessEqual(residual, 1e-3)
        self.assertGreater(residual, 0.0)

    def test_refinement_shrinks_by_four(self):
        g = wavecheck.default_grid()
        coarse = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 1.0, g)
        fine = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 1.0, g.refine())
        self.assertGreater(coarse / fine, 3.6)
        self.assertLess(coarse / fine, 4.4)

    def test_non_light_like_pair_detected(self):
        g = wavecheck.default_grid()
        for grid in (g, g.refine(), g.refine().refine()):
            residual = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 2.0, grid)
            # analytic residual is 3 k^2 max|sin|
            self.assertGreater(residual, 2.5)

    def test_translation_invariance(self):
        g = wavecheck.default_grid()
        base = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 1.0, g)
        shifted = wavecheck.residual_wave_equation(wavecheck.sine_profile(2.0 * math.pi), 1.0, 1.0, g)
        self.assertRelClose(shifted, base, rtol=1e-6)

    def test_non_finite_profile(self):
        profile = WaveProfile(evaluator=lambda u: np.where(u > 1.0, np.inf, u), descriptor="blows up")
        with self.assertRaises(EvaluationError):
            wavecheck.residual_wave_equation(profile, 1.0, 1.0, wavecheck.default_grid())


class TestConvergenceOrder(BaseTest):

    def test_sine_is_second_order(self):
        report = wavecheck.convergence_order(wavecheck.sine_profile(), 1.0, 1.0, wavecheck.default_grid())
        self.assertFalse(report.saturated)
        self.assertGreaterEqual(report.order, 1.8)
        self.assertLessEqual(report.order, 2.2)
        self.assertEqual(report.points, (128, 255, 509))

    def test_other_wave_number(self):
        report = wavecheck.convergence_order(wavecheck.sine_profile(), 3.0, 3.0, wavecheck.default_grid(3.0))
        self.assertGreaterEqual(report.order, 1.8)
        self.assertLessEqual(report.order, 2.2)

    def test_polynomials_saturate(self):
        for profile in (wavecheck.linear_profile(), wavecheck.cubic_profile()):
            report = wavecheck.convergence_order(profile, 1.0, 1.0, wavecheck.default_grid())
            self.assertTrue(report.saturated, profile.descriptor)
            self.assertIsNone(report.order)

    def test_needs_three_levels(self):
        with self.assertRaises(ConfigurationError):
            wavecheck.convergence_order(wavecheck.sine_profile(), 1.0, 1.0, wavecheck.default_grid(), levels=2)


if __name__ == "__main__":
    unittest.main()
