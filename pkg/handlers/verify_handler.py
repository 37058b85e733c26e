import logging
import math
from typing import Callable, Dict, List, Tuple

import numpy as np

from common.errors import PlanckCheckError
from common.models.models import (FieldState, FourVector, FrequencyEnergySample,
                                  MonochromaticPulse, OutputFormat, PhotonEnsemble,
                                  QuadraturePlan, QuadratureRule, SuiteResult, SweepConfig)
from handlers.report_handler import encode_report, decode_report
from handlers.sweep_handler import FrameSweep
from physics import duality, fields, kinematics, pulse, wavecheck

# Configure logging
logger = logging.getLogger("verify_handler")

DEFAULT_SEED = 20051905
SWEEP_BETAS = (0.0, 0.2, -0.2, 0.6, -0.6, 0.8, -0.8, 0.99, -0.99)
PLANCK_H0 = 6.62607015e-27


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


class _Checks:
    """Collects (name, passed, detail) triples for one suite."""

    def __init__(self, name: str):
        self.name = name
        self.items: List[Tuple[str, bool, str]] = []

    def add(self, check: str, passed: bool, detail: str = "") -> None:
        self.items.append((check, bool(passed), detail))
        if not passed:
            logger.error(f"{self.name}/{check} failed: {detail}")

    def result(self) -> SuiteResult:
        return SuiteResult(name=self.name, checks=tuple(self.items))


def kinematics_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("kinematics")

    betas = rng.uniform(-0.99, 0.99, size=64)
    vectors = rng.uniform(-1e3, 1e3, size=(64, 4))
    worst_square, worst_round_trip = 0.0, 0.0
    for beta, comps in zip(betas, vectors):
        b = kinematics.make_boost(beta)
        v = FourVector(*comps)
        boosted = kinematics.boost_four_vector(b, v)
        s, s_boosted = kinematics.minkowski_square(v), kinematics.minkowski_square(boosted)
        worst_square = max(worst_square, abs(s_boosted - s) / max(abs(s), float(np.dot(comps, comps))))
        back = kinematics.boost_four_vector(b.inverse(), boosted)
        worst_round_trip = max(worst_round_trip, float(np.max(
            np.abs(back.as_array() - v.as_array()) / np.maximum(np.abs(v.as_array()), 1.0))))
    checks.add("minkowski_square_invariant", worst_square <= 1e-9, f"worst {worst_square:.3e}")
    checks.add("inverse_round_trip", worst_round_trip <= 1e-10, f"worst {worst_round_trip:.3e}")

    worst_reciprocity = max(
        abs(kinematics.doppler_factor(kinematics.make_boost(beta))
            * kinematics.doppler_factor(kinematics.make_boost(-beta)) - 1.0)
        for beta in SWEEP_BETAS)
    checks.add("doppler_reciprocity", worst_reciprocity <= 1e-12, f"worst {worst_reciprocity:.3e}")
    checks.add("blue_shift", all(kinematics.doppler_factor(kinematics.make_boost(beta)) > 1.0
                                 for beta in SWEEP_BETAS if beta > 0))
    checks.add("doppler_spot_values",
               _rel(kinematics.doppler_factor(kinematics.make_boost(0.6)), 2.0) <= 1e-12
               and _rel(kinematics.doppler_factor(kinematics.make_boost(0.8)), 3.0) <= 1e-12)

    worst_null = 0.0
    for beta in SWEEP_BETAS:
        k = kinematics.boost_wave_vector(kinematics.make_boost(beta), kinematics.wave_vector(1.0))
        worst_null = max(worst_null, abs(kinematics.minkowski_square(k)) / k.t_comp ** 2)
    checks.add("wave_vector_light_like", worst_null <= 1e-12, f"worst {worst_null:.3e}")
    return checks.result()


def fields_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("fields")

    worst_invariant = 0.0
    for beta, comps in zip(rng.uniform(-0.99, 0.99, size=64), rng.uniform(-1e3, 1e3, size=(64, 6))):
        f = FieldState(e_field=comps[:3], h_field=comps[3:])
        before = fields.field_invariants(f)
        after = fields.field_invariants(fields.boost_fields(kinematics.make_boost(beta), f))
        scale = max(1.0, float(np.dot(comps, comps)))
        worst_invariant = max(worst_invariant, max(abs(a - b) for a, b in zip(before, after)) / scale)
    # absolute bound scaled by |F|^2 so that 1e3-sized components are comparable
    checks.add("field_invariants", worst_invariant <= 1e-11, f"worst {worst_invariant:.3e}")

    worst_ratio = 0.0
    for beta, amplitude in zip(rng.uniform(-0.99, 0.99, size=64), rng.uniform(1e-3, 1e3, size=64)):
        b = kinematics.make_boost(beta)
        f = fields.plane_wave(amplitude, math.pi / 2.0)
        brute = fields.energy_density(f) / fields.energy_density(fields.boost_fields(b, f))
        worst_ratio = max(worst_ratio, _rel(brute, fields.energy_density_ratio(b)))
    checks.add("closed_form_vs_boosted_fields", worst_ratio <= 1e-10, f"worst {worst_ratio:.3e}")

    worst_square = max(_rel(fields.energy_density_ratio(kinematics.make_boost(beta)),
                            kinematics.doppler_factor(kinematics.make_boost(beta)) ** 2)
                       for beta in SWEEP_BETAS)
    checks.add("ratio_is_doppler_squared", worst_square <= 1e-12, f"worst {worst_square:.3e}")
    checks.add("ratio_spot_values",
               _rel(fields.energy_density_ratio(kinematics.make_boost(0.6)), 4.0) <= 1e-12
               and _rel(fields.energy_density_ratio(kinematics.make_boost(0.8)), 9.0) <= 1e-12)

    wave = fields.plane_wave(1.0, math.pi / 2.0)
    checks.add("flux_equals_density",
               _rel(float(np.linalg.norm(fields.poynting(wave))), fields.energy_density(wave)) <= 1e-12)
    checks.add("boosted_plane_wave_stays_plane",
               all(fields.is_plane_wave(fields.boost_fields(kinematics.make_boost(beta), wave))
                   for beta in SWEEP_BETAS))
    return checks.result()


def pulse_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("pulse")
    plan = QuadraturePlan(points_per_wavelength=256, rule=QuadratureRule.SIMPSON)

    simpson = pulse.convergence_order(MonochromaticPulse(1.0, 1.0, 1), QuadratureRule.SIMPSON)
    checks.add("simpson_order", simpson.order is not None and 3.5 <= simpson.order <= 4.5,
               f"order {simpson.order}")
    midpoint = pulse.convergence_order(MonochromaticPulse(1.0, 1.0, 1), QuadratureRule.MIDPOINT)
    checks.add("midpoint_order", midpoint.order is not None and 1.8 <= midpoint.order <= 2.2,
               f"order {midpoint.order}")

    full = MonochromaticPulse(1.0, 1.0, 8)
    worst_exact = _rel(pulse.integrate_energy(full, plan), pulse.pulse_energy_closed_form(full))
    checks.add("full_support_exact", worst_exact <= 1e-12, f"rel error {worst_exact:.3e}")

    worst_frame = 0.0
    for n_periods in (1, 2, 8, 64):
        p = MonochromaticPulse(1.0, 1.0, n_periods)
        for beta in SWEEP_BETAS:
            report = pulse.verify_energy_ratio(kinematics.make_boost(beta), p, plan)
            worst_frame = max(worst_frame, report.rel_error)
    checks.add("frame_consistency", worst_frame <= 1e-6, f"worst {worst_frame:.3e}")

    b = kinematics.make_boost(0.6)
    ratios = [pulse.verify_energy_ratio(b, MonochromaticPulse(1.0, 1.0, n, phase0), plan).numeric_ratio
              for n in (1, 8) for phase0 in (0.0, float(rng.uniform(0.0, 2.0 * math.pi)))]
    spread = max(_rel(r, ratios[0]) for r in ratios)
    checks.add("ratio_independent_of_periods_and_phase", spread <= 1e-6, f"spread {spread:.3e}")

    checks.add("energy_positive", all(pulse.integrate_energy(MonochromaticPulse(a, 1.0, 1), plan) > 0
                                      for a in rng.uniform(1e-3, 1e3, size=8)))
    return checks.result()


def duality_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("duality")
    plan = QuadraturePlan()
    seed_pulse = MonochromaticPulse(1.0, 1.0, 8)

    ens, calibrated = duality.seed_ensemble(seed_pulse, plan, 1.0)
    frame_betas = (0.0, 0.2, 0.4, 0.6, 0.8)
    chain = [duality.transform_ensemble(kinematics.make_boost(beta), ens, calibrated, plan)
             for beta in frame_betas]
    checks.add("count_invariance", all(e.count == ens.count for e in chain))

    samples = [duality.sample_of(e, beta) for e, beta in zip(chain, frame_betas)]
    worst_universal = max(duality.universal_ratio_check(samples[0], s) for s in samples)
    checks.add("universal_ratio", worst_universal <= 1e-6, f"worst {worst_universal:.3e}")
    worst_chain = max(duality.ratio_transitivity(a, b, c)
                      for a in samples for b in samples for c in samples)
    checks.add("ratio_transitivity", worst_chain <= 1e-9, f"worst {worst_chain:.3e}")
    null = duality.parallel_null_check(chain)
    checks.add("parallel_null", null <= 1e-6, f"deviation {null:.3e}")

    fit = duality.fit_planck_constant(samples)
    checks.add("h_recovery", _rel(fit.h_est, 1.0) <= 1e-6 and fit.max_rel_residual <= 1e-6,
               f"h_est {fit.h_est!r}")

    scale = int(rng.integers(2, 50))
    rescaled = [duality.sample_of(PhotonEnsemble(e.count * scale, e.total_energy * scale, e.frequency), beta)
                for e, beta in zip(chain, frame_betas)]
    checks.add("fit_normalisation_independent",
               _rel(duality.fit_planck_constant(rescaled).h_est, fit.h_est) <= 1e-9)

    slope = float(rng.uniform(0.5, 2.0))
    exact = [FrequencyEnergySample(nu, slope * nu) for nu in rng.uniform(0.1, 10.0, size=16)]
    checks.add("exact_model_slope", _rel(duality.fit_planck_constant(exact).h_est, slope) <= 1e-12)

    planck = FrameSweep(SweepConfig(betas=frame_betas, pulse=seed_pulse, plan=plan, h0=PLANCK_H0)).run()
    checks.add("h_recovery_physical_scale",
               _rel(planck.h_est, PLANCK_H0) <= 1e-6 and planck.max_rel_residual <= 1e-6,
               f"h_est {planck.h_est!r}")
    return checks.result()


def wavecheck_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("wavecheck")
    grid = wavecheck.default_grid()

    sine = wavecheck.convergence_order(wavecheck.sine_profile(), 1.0, 1.0, grid)
    checks.add("sine_order", sine.order is not None and 1.8 <= sine.order <= 2.2, f"order {sine.order}")
    checks.add("linear_saturated", wavecheck.convergence_order(wavecheck.linear_profile(), 1.0, 1.0, grid).saturated)
    checks.add("cubic_saturated", wavecheck.convergence_order(wavecheck.cubic_profile(), 1.0, 1.0, grid).saturated)

    control = wavecheck.convergence_order(wavecheck.sine_profile(), 1.0, 2.0, grid)
    checks.add("non_light_like_detected", min(control.errors) > 1.0, f"residuals {control.errors}")

    base = wavecheck.residual_wave_equation(wavecheck.sine_profile(), 1.0, 1.0, grid)
    shifted = wavecheck.residual_wave_equation(wavecheck.sine_profile(2.0 * math.pi), 1.0, 1.0, grid)
    checks.add("translation_invariance", _rel(shifted, base) <= 1e-6, f"residuals {base!r} {shifted!r}")
    return checks.result()


def report_suite(rng: np.random.Generator) -> SuiteResult:
    checks = _Checks("cli")
    config = SweepConfig(betas=(0.0, 0.2, 0.4, 0.6, 0.8), pulse=MonochromaticPulse(1.0, 1.0, 8),
                         plan=QuadraturePlan())
    first = encode_report(FrameSweep(config).run(), OutputFormat.CSV)
    second = encode_report(FrameSweep(config).run(), OutputFormat.CSV)
    checks.add("deterministic_output", first == second)

    report = FrameSweep(config).run()
    from_csv = decode_report(encode_report(report, OutputFormat.CSV), OutputFormat.CSV)
    from_json = decode_report(encode_report(report, OutputFormat.JSON), OutputFormat.JSON)
    checks.add("csv_json_agree", from_csv == from_json == report)
    checks.add("default_sweep_recovers_h", _rel(report.h_est, 1.0) <= 1e-6 and report.passed)
    return checks.result()


SUITES: Dict[str, Callable[[np.random.Generator], SuiteResult]] = {
    "kinematics": kinematics_suite,
    "fields": fields_suite,
    "pulse": pulse_suite,
    "duality": duality_suite,
    "wavecheck": wavecheck_suite,
    "cli": report_suite,
}


def run_suites(seed: int = DEFAULT_SEED) -> List[SuiteResult]:
    """
    Run every invariant suite with a fixed random seed.

    A suite that raises counts as failed rather than aborting the run.

    Args:
        seed (int): seed for the sampled parameters

    Returns:
        List[SuiteResult]: one result per suite, in SUITES order
    """
    results = []
    for name, suite in SUITES.items():
        rng = np.random.default_rng(seed)
        try:
            result = suite(rng)
        except (PlanckCheckError, ArithmeticError) as e:
            logger.error(f"Suite {name} raised: {e}")
            result = SuiteResult(name=name, checks=(("completed", False, str(e)),))
        logger.info(f"Suite {name}: {'PASS' if result.passed else 'FAIL'}")
        results.append(result)
    return results
