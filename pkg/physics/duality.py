import logging
import math
from typing import List, Sequence, Tuple

from common.errors import ConsistencyError, DegenerateFitError, DomainError
from common.models.models import (Boost, FourVector, FrequencyEnergySample,
                                  MonochromaticPulse, PhotonEnsemble, PlanckFit,
                                  QuadraturePlan)
from physics.kinematics import is_light_like
from physics.pulse import boost_pulse, integrate_energy, pulse_energy_closed_form

# Configure logging
logger = logging.getLogger("duality")

FREQUENCY_MATCH_RTOL = 1e-12
DISTINCT_FREQUENCY_RTOL = 1e-6
# Amplitude rescaling beyond this is reported
CALIBRATION_RTOL = 1e-6


def seed_ensemble(p: MonochromaticPulse, q: QuadraturePlan, h0: float = 1.0) -> Tuple[PhotonEnsemble, MonochromaticPulse]:
    """
    Populate a pulse with photons of energy h0 * nu.

    The count is round(E / (h0 nu)), at least 1, and the amplitude is rescaled so that
    the pulse holds exactly count quanta; the seed frame then fixes h to h0. A pulse
    holding well under one quantum is raised to one, so its own amplitude is lost.

    Args:
        p (MonochromaticPulse): pulse in the seed frame
        q (QuadraturePlan): plan used to integrate the seed energy
        h0 (float): reference constant

    Returns:
        Tuple[PhotonEnsemble, MonochromaticPulse]: the ensemble and the rescaled pulse
    """
    if not math.isfinite(h0) or h0 <= 0:
        raise DomainError(f"h0 must be positive, got {h0!r}")
    quantum = h0 * p.nu
    energy = pulse_energy_closed_form(p)
    quanta = energy / quantum if quantum > 0 else math.inf
    if not (math.isfinite(energy) and energy > 0.0) or not math.isfinite(quanta):
        raise DomainError(f"pulse energy {energy!r} cannot be counted in quanta of {quantum!r}")
    count = max(1, round(quanta))
    scale = math.sqrt(count * quantum / energy)
    if abs(scale - 1.0) > CALIBRATION_RTOL:
        logger.warning(f"amplitude {p.amplitude!r} rescaled by {scale!r} so the pulse holds exactly {count} quanta")
    calibrated = MonochromaticPulse(amplitude=p.amplitude * scale, nu=p.nu, n_periods=p.n_periods,
                                    phase0=p.phase0, polarization=p.polarization)
    ensemble = PhotonEnsemble(count=count, total_energy=integrate_energy(calibrated, q), frequency=p.nu)
    logger.debug(f"seeded {count} photons of {quantum!r} in a pulse of energy {ensemble.total_energy!r}")
    return ensemble, calibrated


def transform_ensemble(b: Boost, ens: PhotonEnsemble, p: MonochromaticPulse, q: QuadraturePlan) -> PhotonEnsemble:
    """
    The ensemble as seen from K' (moving with +beta).

    The photon count is a relativistic invariant; the total energy is the numeric
    energy of the boosted pulse and the frequency is the boosted pulse's frequency.

    Args:
        b (Boost): boost from K to K'
        ens (PhotonEnsemble): ensemble in K
        p (MonochromaticPulse): the pulse the ensemble describes, in K
        q (QuadraturePlan): plan for the boosted energy integral

    Returns:
        PhotonEnsemble: ensemble in K'

    Raises:
        ConsistencyError: if the ensemble and the pulse disagree on the frequency
    """
    if abs(ens.frequency - p.nu) > FREQUENCY_MATCH_RTOL * p.nu:
        raise ConsistencyError(f"ensemble frequency {ens.frequency!r} does not match pulse frequency {p.nu!r}")
    if b.beta == 0.0:
        return ens
    boosted = boost_pulse(b, p)
    return PhotonEnsemble(count=ens.count, total_energy=integrate_energy(boosted, q), frequency=boosted.nu)


def sample_of(ens: PhotonEnsemble, beta: float = 0.0) -> FrequencyEnergySample:
    return FrequencyEnergySample(nu=ens.frequency, photon_energy=ens.per_photon_energy, beta=beta)


def universal_ratio_check(s1: FrequencyEnergySample, s2: FrequencyEnergySample) -> float:
    """|(E1/E2) / (nu1/nu2) - 1|: zero when photon energy is proportional to frequency."""
    return abs((s1.photon_energy / s2.photon_energy) / (s1.nu / s2.nu) - 1.0)


def ratio_transitivity(a: FrequencyEnergySample, b: FrequencyEnergySample, c: FrequencyEnergySample) -> float:
    """Relative deviation of (E_a/E_b)(E_b/E_c) from E_a/E_c."""
    chained = (a.photon_energy / b.photon_energy) * (b.photon_energy / c.photon_energy)
    return abs(chained / (a.photon_energy / c.photon_energy) - 1.0)


def _distinct_frequencies(samples: Sequence[FrequencyEnergySample]) -> int:
    distinct: List[float] = []
    for nu in sorted(s.nu for s in samples):
        if not distinct or nu - distinct[-1] > DISTINCT_FREQUENCY_RTOL * nu:
            distinct.append(nu)
    return len(distinct)


def fit_planck_constant(samples: Sequence[FrequencyEnergySample]) -> PlanckFit:
    """
    Least-squares slope through the origin of E against nu.

    h = sum(nu E) / sum(nu^2); the sums are exactly rounded so the estimate does
    not depend on sample order.

    Args:
        samples (Sequence[FrequencyEnergySample]): at least two distinct frequencies

    Returns:
        PlanckFit: slope, largest relative residual and sample count

    Raises:
        DegenerateFitError: with fewer than two distinct frequencies
    """
    samples = list(samples)
    if len(samples) < 2 or _distinct_frequencies(samples) < 2:
        raise DegenerateFitError("proportionality needs at least two distinct frequencies")
    h_est = math.fsum(s.nu * s.photon_energy for s in samples) / math.fsum(s.nu * s.nu for s in samples)
    max_rel_residual = max(abs(s.photon_energy - h_est * s.nu) / (h_est * s.nu) for s in samples)
    logger.info(f"fitted h = {h_est!r} over {len(samples)} samples, max relative residual {max_rel_residual:.3e}")
    return PlanckFit(h_est=h_est, max_rel_residual=max_rel_residual, n_samples=len(samples))


def parallel_null_check(ensembles: Sequence[PhotonEnsemble]) -> float:
    """
    Treat energy and frequency as time components of the light-like vectors
    (E, E, 0, 0) and (nu, nu, 0, 0) of each frame.

    Both vectors must be null in every frame and E/nu must not depend on the frame.

    Args:
        ensembles (Sequence[PhotonEnsemble]): one ensemble per frame of a sweep

    Returns:
        float: spread max(E/nu) / min(E/nu) - 1 over all frames
    """
    ensembles = list(ensembles)
    if not ensembles:
        return 0.0
    for ens in ensembles:
        energy_vector = FourVector(ens.total_energy, ens.total_energy)
        frequency_vector = FourVector(ens.frequency, ens.frequency)
        if not (is_light_like(energy_vector) and is_light_like(frequency_vector)):
            raise ConsistencyError(f"energy or frequency vector is not light-like for {ens}")
    ratios = [ens.total_energy / ens.frequency for ens in ensembles]
    return max(ratios) / min(ratios) - 1.0
