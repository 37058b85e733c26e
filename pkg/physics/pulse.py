import logging
import math
from typing import Optional, Tuple

import numpy as np

from common.errors import ConfigurationError, DomainError
from common.models.models import (Boost, ConvergenceReport, EnergyRatioReport,
                                  FieldState, MonochromaticPulse, QuadraturePlan,
                                  QuadratureRule)
from physics.fields import EIGHT_PI, energy_density_ratio, plane_wave, plane_wave_field_factor
from physics.kinematics import doppler_factor, wavelength_ratio

# Configure logging
logger = logging.getLogger("pulse")

# Relative error below which a quadrature result counts as exact
SATURATION_RTOL = 1e-13


def _carrier_phase(p: MonochromaticPulse, x, t: float):
    return p.k * (x - t) + p.phase0


def _inside_support(p: MonochromaticPulse, x: float, t: float) -> bool:
    start, end = p.support(t)
    return start <= x <= end


def sample_fields(p: MonochromaticPulse, x: float, t: float) -> FieldState:
    """
    Field of the pulse at (x, t).

    Inside the support [t, t + n lambda] E_y = H_z = amplitude * sin(k(x - t) + phase0);
    outside it the field vanishes.

    Args:
        p (MonochromaticPulse): the pulse
        x (float): position
        t (float): frame time

    Returns:
        FieldState: field at the event
    """
    if not _inside_support(p, x, t):
        return FieldState(e_field=(0.0, 0.0, 0.0), h_field=(0.0, 0.0, 0.0))
    return plane_wave(p.amplitude, _carrier_phase(p, x, t))


def _energy_density_on(p: MonochromaticPulse, xs: np.ndarray, t: float) -> np.ndarray:
    # Vectorised energy_density(sample_fields(...)) for nodes known to lie in the support
    e = p.amplitude * np.sin(_carrier_phase(p, xs, t))
    return (e * e + e * e) / EIGHT_PI


def _rule_nodes_and_weights(a: float, b: float, panels: int, rule: QuadratureRule) -> Tuple[np.ndarray, np.ndarray]:
    h = (b - a) / panels
    if rule is QuadratureRule.MIDPOINT:
        nodes = a + (np.arange(panels) + 0.5) * h
        weights = np.full(panels, h)
        return nodes, weights
    if panels % 2:
        raise ConfigurationError(f"simpson needs an even number of panels, got {panels}")
    nodes = np.linspace(a, b, panels + 1)
    weights = np.empty(panels + 1)
    weights[0::2] = 2.0
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    return nodes, weights * (h / 3.0)


def _integrate(p: MonochromaticPulse, a: float, b: float, panels: int, rule: QuadratureRule, t: float) -> float:
    nodes, weights = _rule_nodes_and_weights(a, b, panels, rule)
    # fsum is exactly rounded, so the result does not depend on evaluation order
    return math.fsum(weights * _energy_density_on(p, nodes, t))


def integrate_energy(p: MonochromaticPulse, q: QuadraturePlan, t: float = 0.0) -> float:
    """
    Pulse energy per unit transverse area: the integral of W over the support at frame time t.

    Args:
        p (MonochromaticPulse): the pulse
        q (QuadraturePlan): rule and resolution
        t (float): simultaneity slice of the frame

    Returns:
        float: energy
    """
    if not isinstance(q, QuadraturePlan):
        raise ConfigurationError(f"expected a QuadraturePlan, got {type(q).__name__}")
    start, end = p.support(t)
    panels = q.points_per_wavelength * p.n_periods
    energy = _integrate(p, start, end, panels, q.rule, t)
    logger.debug(f"integrated {panels} {q.rule.value} panels over [{start}, {end}]: {energy!r}")
    return energy


def pulse_energy_closed_form(p: MonochromaticPulse) -> float:
    """amplitude^2 * n_periods * lambda / 8 pi."""
    return p.amplitude ** 2 * p.n_periods * p.lam / EIGHT_PI


def _energy_antiderivative(p: MonochromaticPulse, x: float, t: float) -> float:
    phase = _carrier_phase(p, x, t)
    return p.amplitude ** 2 / (4.0 * math.pi) * (x / 2.0 - math.sin(2.0 * phase) / (4.0 * p.k))


def energy_window_closed_form(p: MonochromaticPulse, x_start: float, x_end: float, t: float = 0.0) -> float:
    """Exact energy in the slab [x_start, x_end] of the pulse."""
    return _energy_antiderivative(p, x_end, t) - _energy_antiderivative(p, x_start, t)


def _slab_panels(p: MonochromaticPulse, x_start: float, x_end: float, q: QuadraturePlan) -> int:
    # the small offset keeps whole-period slabs from gaining a panel through round-off
    panels = max(1, math.ceil((x_end - x_start) / p.lam * q.points_per_wavelength - 1e-9))
    if q.rule is QuadratureRule.SIMPSON and panels % 2:
        panels += 1
    return panels


def integrate_energy_window(p: MonochromaticPulse, x_start: float, x_end: float,
                            q: QuadraturePlan, t: float = 0.0) -> float:
    """
    Energy contained in the slab [x_start, x_end], which must lie inside the support.

    The panel count is the plan's density scaled to the slab length, rounded up
    (and up to even for simpson).
    """
    start, end = p.support(t)
    if not start <= x_start < x_end <= end:
        raise DomainError(f"slab [{x_start}, {x_end}] is not inside the support [{start}, {end}]")
    panels = _slab_panels(p, x_start, x_end, q)
    return _integrate(p, x_start, x_end, panels, q.rule, t)


def boost_pulse(b: Boost, p: MonochromaticPulse) -> MonochromaticPulse:
    """
    Description in K' of a pulse given in K.

    The number of periods is the same in both frames; the frequency is divided by
    the Doppler factor and the amplitude picks up the plane-wave field factor g(1 - beta).

    Args:
        b (Boost): boost from K to K'
        p (MonochromaticPulse): pulse in K

    Returns:
        MonochromaticPulse: the same pulse in K'
    """
    return MonochromaticPulse(
        amplitude=p.amplitude * plane_wave_field_factor(b),
        nu=p.nu / doppler_factor(b),
        n_periods=p.n_periods,
        phase0=p.phase0,
        polarization=p.polarization,
    )


def energy_ratio_closed_form(b: Boost) -> float:
    """E/E' = (W/W') (lambda/lambda') = nu/nu'."""
    return energy_density_ratio(b) / wavelength_ratio(b)


def verify_energy_ratio(b: Boost, p: MonochromaticPulse, q: QuadraturePlan) -> EnergyRatioReport:
    """
    Integrate the pulse in K and in K' and compare E/E' with the closed form.

    Args:
        b (Boost): boost from K to K'
        p (MonochromaticPulse): pulse in K
        q (QuadraturePlan): plan used in both frames

    Returns:
        EnergyRatioReport: numeric ratio, closed-form ratio and relative error
    """
    energy = integrate_energy(p, q)
    energy_boosted = integrate_energy(boost_pulse(b, p), q)
    numeric = energy / energy_boosted
    closed = energy_ratio_closed_form(b)
    rel_error = abs(numeric / closed - 1.0)
    logger.debug(f"beta={b.beta!r}: numeric ratio {numeric!r}, closed form {closed!r}, rel error {rel_error:.3e}")
    return EnergyRatioReport(numeric_ratio=numeric, closed_form_ratio=closed, rel_error=rel_error)


def default_slab(p: MonochromaticPulse) -> Tuple[float, float]:
    """Slab inside the support whose ends are not on whole periods (t = 0)."""
    return 0.1 * p.lam, p.support_length - 0.2 * p.lam


def convergence_order(p: MonochromaticPulse, rule: QuadratureRule = QuadratureRule.SIMPSON,
                      base_points: int = 16, levels: int = 4,
                      slab: Optional[Tuple[float, float]] = None) -> ConvergenceReport:
    """
    Observed order of a quadrature rule on the energy of a slab of the pulse.

    The resolution doubles `levels - 1` times starting at `base_points` per wavelength.
    Pass slab=p.support() to measure the whole pulse; sin^2 over whole periods is
    integrated exactly, so that case reports saturated.

    Args:
        p (MonochromaticPulse): the pulse
        rule (QuadratureRule): rule under test
        base_points (int): coarsest points per wavelength
        levels (int): number of resolutions, at least 2
        slab (Optional[Tuple[float, float]]): integration range, default_slab(p) if None

    Returns:
        ConvergenceReport: panel counts, relative errors and the averaged order
    """
    if levels < 2:
        raise ConfigurationError(f"need at least 2 levels, got {levels}")
    rule = QuadratureRule(rule)
    x_start, x_end = slab if slab is not None else default_slab(p)
    exact = energy_window_closed_form(p, x_start, x_end)

    panels, errors = [], []
    for level in range(levels):
        q = QuadraturePlan(points_per_wavelength=base_points * 2 ** level, rule=rule)
        value = integrate_energy_window(p, x_start, x_end, q)
        panels.append(_slab_panels(p, x_start, x_end, q))
        errors.append(abs(value - exact) / abs(exact))

    orders = [
        math.log(errors[i] / errors[i + 1]) / math.log(panels[i + 1] / panels[i])
        for i in range(levels - 1)
        if errors[i] > SATURATION_RTOL and errors[i + 1] > SATURATION_RTOL
    ]
    if not orders:
        logger.info(f"{rule.value} quadrature saturated at errors {errors}")
        return ConvergenceReport(points=tuple(panels), errors=tuple(errors), order=None, saturated=True)
    order = math.fsum(orders) / len(orders)
    logger.info(f"{rule.value} quadrature order {order:.3f} over panels {panels}")
    return ConvergenceReport(points=tuple(panels), errors=tuple(errors), order=order, saturated=False)
