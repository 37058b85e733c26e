import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from common.errors import DomainError
from common.models.models import FieldState
from physics import fields, kinematics
from tests.base_test import BaseTest

betas = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False, allow_infinity=False)
field_components = arrays(np.float64, 6, elements=st.floats(min_value=-1e3, max_value=1e3))


class TestEnergyDensity(BaseTest):

    def test_vacuum(self):
        self.assertEqual(fields.energy_density(FieldState((0, 0, 0), (0, 0, 0))), 0.0)

    def test_unit_plane_wave(self):
        self.assertAlmostEqual(fields.energy_density(FieldState((0, 1, 0), (0, 0, 1))), 1.0 / (4.0 * math.pi), places=15)

    def test_quadratic_in_field(self):
        self.assertAlmostEqual(fields.energy_density(FieldState((0, 2, 0), (0, 0, 2))), 1.0 / math.pi, places=15)

    def test_field_state_needs_three_components(self):
        with self.assertRaises(DomainError):
            FieldState((0, 1), (0, 0, 1))

    def test_field_state_is_read_only(self):
        f = FieldState((0, 1, 0), (0, 0, 1))
        with self.assertRaises(ValueError):
            f.e_field[1] = 2.0


class TestPoynting(BaseTest):

    def test_flux_along_x(self):
        np.testing.assert_allclose(fields.poynting(FieldState((0, 1, 0), (0, 0, 1))),
                                   [1.0 / (4.0 * math.pi), 0.0, 0.0], rtol=1e-15)

    def test_no_flux_without_e(self):
        np.testing.assert_array_equal(fields.poynting(FieldState((0, 0, 0), (0, 0, 1))), [0.0, 0.0, 0.0])

    def test_sign_flip(self):
        np.testing.assert_allclose(fields.poynting(FieldState((0, 1, 0), (0, 0, -1))),
                                   [-1.0 / (4.0 * math.pi), 0.0, 0.0], rtol=1e-15)

    def test_flux_equals_density_for_plane_wave(self):
        wave = fields.plane_wave(3.0, 1.1)
        self.assertRelClose(np.linalg.norm(fields.poynting(wave)), fields.energy_density(wave), rtol=1e-14)


class TestBoostFields(BaseTest):

    def test_identity(self):
        f = FieldState((1, 2, 3), (4, 5, 6))
        boosted = fields.boost_fields(kinematics.make_boost(0.0), f)
        np.testing.assert_array_equal(boosted.e_field, f.e_field)
        np.testing.assert_array_equal(boosted.h_field, f.h_field)

    def test_plane_wave_halves_at_six_tenths(self):
        boosted = fields.boost_fields(kinematics.make_boost(0.6), FieldState((0, 1, 0), (0, 0, 1)))
        np.testing.assert_allclose(boosted.e_field, [0.0, 0.5, 0.0], atol=1e-15)
        np.testing.assert_allclose(boosted.h_field, [0.0, 0.0, 0.5], atol=1e-15)

    def test_round_trip(self):
        f = FieldState((0.3, -1.2, 2.5), (1.1, 0.4, -0.7))
        b = kinematics.make_boost(0.6)
        back = fields.boost_fields(b.inverse(), fields.boost_fields(b, f))
        np.testing.assert_allclose(back.e_field, f.e_field, rtol=0, atol=1e-10)
        np.testing.assert_allclose(back.h_field, f.h_field, rtol=0, atol=1e-10)

    def test_plane_wave_stays_plane(self):
        for beta in (-0.99, -0.5, 0.0, 0.5, 0.99):
            self.assertTrue(fields.is_plane_wave(fields.boost_fields(kinematics.make_boost(beta),
                                                                     fields.plane_wave(1.0, 0.7))))

    def test_generic_field_is_not_plane(self):
        self.assertFalse(fields.is_plane_wave(FieldState((1, 0, 0), (0, 1, 0))))
        self.assertFalse(fields.is_plane_wave(FieldState((0, 0, 0), (0, 0, 0))))

    @settings(max_examples=200, deadline=None)
    @given(beta=betas, comps=field_components)
    def test_invariants_preserved(self, beta, comps):
        f = FieldState(comps[:3], comps[3:])
        before = fields.field_invariants(f)
        after = fields.field_invariants(fields.boost_fields(kinematics.make_boost(beta), f))
        scale = max(1.0, float(np.dot(comps, comps)))
        self.assertLessEqual(abs(after[0] - before[0]), 1e-11 * scale)
        self.assertLessEqual(abs(after[1] - before[1]), 1e-11 * scale)


class TestEnergyDensityRatio(BaseTest):

    def test_spot_values(self):
        self.assertEqual(fields.energy_density_ratio(kinematics.make_boost(0.0)), 1.0)
        self.assertAlmostEqual(fields.energy_density_ratio(kinematics.make_boost(0.6)), 4.0, places=13)
        self.assertAlmostEqual(fields.energy_density_ratio(kinematics.make_boost(0.8)), 9.0, places=12)

    @given(beta=betas)
    def test_square_of_doppler_factor(self, beta):
        b = kinematics.make_boost(beta)
        self.assertRelClose(fields.energy_density_ratio(b), kinematics.doppler_factor(b) ** 2, rtol=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(beta=betas, amplitude=st.floats(min_value=1e-3, max_value=1e3))
    def test_matches_transformed_fields(self, beta, amplitude):
        b = kinematics.make_boost(beta)
        wave = fields.plane_wave(amplitude, math.pi / 2.0)
        boosted = fields.boost_fields(b, wave)
        self.assertRelClose(fields.energy_density(wave) / fields.energy_density(boosted),
                            fields.energy_density_ratio(b), rtol=1e-10)

    def test_field_factor(self):
        self.assertAlmostEqual(fields.plane_wave_field_factor(kinematics.make_boost(0.6)), 0.5, places=15)


if __name__ == "__main__":
    unittest.main()
