import math
import unittest

from hypothesis import given, settings, strategies as st

from common.errors import ConfigurationError, DomainError
from common.models.models import MonochromaticPulse, QuadraturePlan, QuadratureRule
from physics import kinematics, pulse
from tests.base_test import BaseTest
from tests.fixtures import create_test_plan, create_test_pulse

SWEEP_BETAS = (-0.99, -0.8, -0.6, -0.2, 0.0, 0.2, 0.6, 0.8, 0.99)


class TestPulseModel(BaseTest):

    def test_accessors(self):
        p = create_test_pulse(n_periods=4, nu=2.0)
        self.assertEqual(p.lam, 0.5)
        self.assertEqual(p.support_length, 2.0)
        self.assertEqual(p.support(1.0), (1.0, 3.0))
        self.assertAlmostEqual(p.k, 4.0 * math.pi)

    def test_invalid_pulses(self):
        for kwargs in ({"amplitude": 0.0}, {"nu": -1.0}, {"n_periods": 0}, {"phase0": float("nan")}):
            args = {"amplitude": 1.0, "nu": 1.0, "n_periods": 1}
            args.update(kwargs)
            with self.assertRaises(DomainError):
                MonochromaticPulse(**args)

    def test_invalid_plans(self):
        with self.assertRaises(ConfigurationError):
            QuadraturePlan(points_per_wavelength=4)
        with self.assertRaises(ConfigurationError):
            QuadraturePlan(points_per_wavelength=255, rule=QuadratureRule.SIMPSON)
        with self.assertRaises(ConfigurationError):
            QuadraturePlan(rule="trapezoid")
        self.assertEqual(QuadraturePlan(points_per_wavelength=255, rule="midpoint").rule, QuadratureRule.MIDPOINT)


class TestSampleFields(BaseTest):

    def test_crest(self):
        f = pulse.sample_fields(create_test_pulse(), 0.25, 0.0)
        self.assertAlmostEqual(f.e_field[1], 1.0, places=15)
        self.assertAlmostEqual(f.h_field[2], 1.0, places=15)

    def test_zero_phase(self):
        self.assertEqual(pulse.sample_fields(create_test_pulse(), 0.0, 0.0).e_field[1], 0.0)

    def test_outside_support_is_vacuum(self):
        p = create_test_pulse(n_periods=2)
        for x, t in ((-0.1, 0.0), (2.1, 0.0), (0.5, 1.0)):
            f = pulse.sample_fields(p, x, t)
            self.assertEqual(f.e_field.tolist(), [0.0, 0.0, 0.0])
            self.assertEqual(f.h_field.tolist(), [0.0, 0.0, 0.0])

    def test_travels_along_x(self):
        p = create_test_pulse(phase0=0.3)
        self.assertAlmostEqual(pulse.sample_fields(p, 0.4, 0.0).e_field[1],
                               pulse.sample_fields(p, 1.9, 1.5).e_field[1], places=12)


class TestIntegrateEnergy(BaseTest):

    def test_eight_periods(self):
        self.assertRelClose(pulse.integrate_energy(create_test_pulse(), create_test_plan()), 1.0 / math.pi, rtol=1e-12)

    def test_quadratic_in_amplitude(self):
        self.assertRelClose(pulse.integrate_energy(create_test_pulse(amplitude=2.0), create_test_plan()),
                            4.0 / math.pi, rtol=1e-12)

    def test_single_period_at_double_frequency(self):
        p = create_test_pulse(n_periods=1, nu=2.0)
        self.assertRelClose(pulse.integrate_energy(p, create_test_plan()), 1.0 / (16.0 * math.pi), rtol=1e-12)

    def test_midpoint_on_whole_periods(self):
        self.assertRelClose(pulse.integrate_energy(create_test_pulse(), create_test_plan(255, "midpoint")),
                            1.0 / math.pi, rtol=1e-12)

    def test_independent_of_frame_time(self):
        p = create_test_pulse(phase0=1.0)
        self.assertRelClose(pulse.integrate_energy(p, create_test_plan(), t=3.7),
                            pulse.integrate_energy(p, create_test_plan()), rtol=1e-12)

    def test_plan_type_checked(self):
        with self.assertRaises(ConfigurationError):
            pulse.integrate_energy(create_test_pulse(), {"points_per_wavelength": 256})

    @settings(max_examples=30, deadline=None)
    @given(amplitude=st.floats(min_value=1e-3, max_value=1e3), n_periods=st.integers(min_value=1, max_value=16))
    def test_energy_positive(self, amplitude, n_periods):
        self.assertGreater(pulse.integrate_energy(create_test_pulse(n_periods, amplitude), create_test_plan(64)), 0.0)


class TestEnergyWindow(BaseTest):

    def test_window_matches_closed_form(self):
        p = create_test_pulse(n_periods=2)
        value = pulse.integrate_energy_window(p, 0.3, 1.45, create_test_plan())
        self.assertRelClose(value, pulse.energy_window_closed_form(p, 0.3, 1.45), rtol=1e-9)

    def test_full_support_window_is_pulse_energy(self):
        p = create_test_pulse(n_periods=3)
        self.assertRelClose(pulse.energy_window_closed_form(p, 0.0, 3.0), pulse.pulse_energy_closed_form(p), rtol=1e-14)

    def test_window_outside_support(self):
        with self.assertRaises(DomainError):
            pulse.integrate_energy_window(create_test_pulse(n_periods=1), -0.5, 0.5, create_test_plan())


class TestBoostPulse(BaseTest):

    def test_identity(self):
        p = create_test_pulse()
        self.assertEqual(pulse.boost_pulse(kinematics.make_boost(0.0), p), p)

    def test_six_tenths(self):
        boosted = pulse.boost_pulse(kinematics.make_boost(0.6), create_test_pulse())
        self.assertAlmostEqual(boosted.nu, 0.5, places=14)
        self.assertAlmostEqual(boosted.amplitude, 0.5, places=14)
        self.assertEqual(boosted.n_periods, 8)

    def test_round_trip(self):
        p = create_test_pulse(amplitude=1.7, nu=2.3, phase0=0.4)
        b = kinematics.make_boost(0.6)
        back = pulse.boost_pulse(b.inverse(), pulse.boost_pulse(b, p))
        self.assertRelClose([back.amplitude, back.nu], [p.amplitude, p.nu], rtol=1e-10)
        self.assertEqual((back.n_periods, back.phase0), (p.n_periods, p.phase0))


class TestEnergyRatio(BaseTest):

    def test_closed_form_spot_values(self):
        self.assertEqual(pulse.energy_ratio_closed_form(kinematics.make_boost(0.0)), 1.0)
        self.assertAlmostEqual(pulse.energy_ratio_closed_form(kinematics.make_boost(0.6)), 2.0, places=13)
        self.assertAlmostEqual(pulse.energy_ratio_closed_form(kinematics.make_boost(0.8)), 3.0, places=13)

    def test_identity_frame(self):
        report = pulse.verify_energy_ratio(kinematics.make_boost(0.0), create_test_pulse(), create_test_plan())
        self.assertEqual(report.numeric_ratio, 1.0)
        self.assertEqual(report.rel_error, 0.0)

    def test_frame_consistency(self):
        plan = create_test_plan()
        for n_periods in (1, 8, 64):
            for beta in SWEEP_BETAS:
                report = pulse.verify_energy_ratio(kinematics.make_boost(beta), create_test_pulse(n_periods), plan)
                self.assertLessEqual(report.rel_error, 1e-6, f"beta={beta} n={n_periods}")

    def test_independent_of_phase(self):
        b = kinematics.make_boost(0.6)
        ratios = [pulse.verify_energy_ratio(b, create_test_pulse(phase0=phase0), create_test_plan()).numeric_ratio
                  for phase0 in (0.0, 0.9, 2.5)]
        self.assertRelClose(ratios, [ratios[0]] * 3, rtol=1e-10)


class TestConvergenceOrder(BaseTest):

    def test_simpson_is_fourth_order(self):
        report = pulse.convergence_order(create_test_pulse(n_periods=1), QuadratureRule.SIMPSON)
        self.assertFalse(report.saturated)
        self.assertGreaterEqual(report.order, 3.5)
        self.assertLessEqual(report.order, 4.5)

    def test_midpoint_is_second_order(self):
        report = pulse.convergence_order(create_test_pulse(n_periods=1), QuadratureRule.MIDPOINT)
        self.assertGreaterEqual(report.order, 1.8)
        self.assertLessEqual(report.order, 2.2)

    def test_whole_support_saturates(self):
        p = create_test_pulse(n_periods=2)
        report = pulse.convergence_order(p, QuadratureRule.SIMPSON, slab=p.support())
        self.assertTrue(report.saturated)
        self.assertIsNone(report.order)

    def test_errors_shrink(self):
        report = pulse.convergence_order(create_test_pulse(n_periods=1), QuadratureRule.SIMPSON)
        self.assertEqual(len(report.errors), 4)
        self.assertTrue(all(a > b for a, b in zip(report.errors, report.errors[1:])))

    def test_needs_two_levels(self):
        with self.assertRaises(ConfigurationError):
            pulse.convergence_order(create_test_pulse(), levels=1)


if __name__ == "__main__":
    unittest.main()
