from typing import List, Sequence

from common.models.models import (FrequencyEnergySample, MonochromaticPulse,
                                  QuadraturePlan, QuadratureRule, SweepConfig)

DEFAULT_BETAS = (0.0, 0.2, 0.4, 0.6, 0.8)


def create_test_pulse(n_periods: int = 8, amplitude: float = 1.0, nu: float = 1.0,
                      phase0: float = 0.0) -> MonochromaticPulse:
    """Create the reference pulse: unit amplitude and frequency, eight periods"""
    return MonochromaticPulse(amplitude=amplitude, nu=nu, n_periods=n_periods, phase0=phase0)


def create_test_plan(points_per_wavelength: int = 256, rule: str = "simpson") -> QuadraturePlan:
    """Create the default quadrature plan"""
    return QuadraturePlan(points_per_wavelength=points_per_wavelength, rule=QuadratureRule(rule))


def create_sweep_config(betas: Sequence[float] = DEFAULT_BETAS, h0: float = 1.0,
                        workers: int = 1, **pulse_args) -> SweepConfig:
    """Create a sweep over the default frames"""
    return SweepConfig(betas=tuple(betas), pulse=create_test_pulse(**pulse_args),
                       plan=create_test_plan(), h0=h0, workers=workers)


def create_proportional_samples(h: float = 1.0,
                                nus: Sequence[float] = (0.5, 1.0, 2.0, 3.0)) -> List[FrequencyEnergySample]:
    """Create samples lying exactly on E = h nu"""
    return [FrequencyEnergySample(nu=nu, photon_energy=h * nu) for nu in nus]
