import logging
import math
from typing import Tuple

import numpy as np

from common.errors import ConfigurationError, EvaluationError
from common.models.models import ConvergenceReport, Grid1D, WaveProfile

# Configure logging
logger = logging.getLogger("wavecheck")

# Residuals within this multiple of the second-difference round-off count as exact
ROUND_OFF_FACTOR = 100.0


def sine_profile(shift: float = 0.0) -> WaveProfile:
    return WaveProfile(evaluator=lambda u: np.sin(u + shift), descriptor=f"sin(u + {shift:g})")


def linear_profile() -> WaveProfile:
    return WaveProfile(evaluator=lambda u: u, descriptor="u")


def cubic_profile() -> WaveProfile:
    return WaveProfile(evaluator=lambda u: u ** 3, descriptor="u^3")


PROFILES = {
    'sine': sine_profile,
    'linear': linear_profile,
    'cubic': cubic_profile,
}


def default_grid(k: float = 1.0, n: int = 128) -> Grid1D:
    """
    One period in x and half a period in t.

    The spacings differ on purpose: with dx = dt and omega = k the x and t stencils
    sample identical values and the residual collapses to round-off.
    """
    period = 2.0 * math.pi / k
    return Grid1D(x_min=0.0, x_max=period, n_x=n, t_min=0.0, t_max=period / 2.0, n_t=n)


def _residual_and_floor(p: WaveProfile, k: float, omega: float, g: Grid1D) -> Tuple[float, float]:
    xs = np.linspace(g.x_min, g.x_max, g.n_x)
    ts = np.linspace(g.t_min, g.t_max, g.n_t)
    xx, tt = np.meshgrid(xs, ts, indexing='ij')
    values = np.asarray(p.evaluator(k * xx - omega * tt), dtype=float)
    if values.shape != xx.shape or not np.all(np.isfinite(values)):
        raise EvaluationError(f"profile {p.descriptor} returned non-finite or misshaped values")

    dx2, dt2 = g.dx ** 2, g.dt ** 2
    centre = values[1:-1, 1:-1]
    f_xx = (values[2:, 1:-1] - 2.0 * centre + values[:-2, 1:-1]) / dx2
    f_tt = (values[1:-1, 2:] - 2.0 * centre + values[1:-1, :-2]) / dt2
    residual = float(np.max(np.abs(f_xx - f_tt)))
    floor = ROUND_OFF_FACTOR * np.finfo(float).eps * float(np.max(np.abs(values))) * (1.0 / dx2 + 1.0 / dt2)
    return residual, floor


def residual_wave_equation(p: WaveProfile, k: float, omega: float, g: Grid1D) -> float:
    """
    Largest |f_xx - f_tt| of f(kx - omega t) on the interior grid points (c = 1).

    Central second differences in x and t; no boundary points are used.

    Args:
        p (WaveProfile): profile f
        k (float): wave number
        omega (float): angular frequency
        g (Grid1D): sampling grid

    Returns:
        float: max absolute residual

    Raises:
        EvaluationError: if the profile yields non-finite values
    """
    residual, _ = _residual_and_floor(p, k, omega, g)
    return residual


def convergence_order(p: WaveProfile, k: float, omega: float, g: Grid1D, levels: int = 3) -> ConvergenceReport:
    """
    Observed order of the residual under uniform refinement.

    Each level halves both spacings. The order is the mean of log2 of successive
    residual ratios; when the residuals are at round-off level the report is
    saturated and carries no order.

    Args:
        p (WaveProfile): profile f
        k (float): wave number
        omega (float): angular frequency
        g (Grid1D): coarsest grid
        levels (int): number of grids, at least 3

    Returns:
        ConvergenceReport: n_x per level, residuals, order or saturation
    """
    if levels < 3:
        raise ConfigurationError(f"need at least 3 refinement levels, got {levels}")
    points, residuals, exact = [], [], []
    grid = g
    for _ in range(levels):
        residual, floor = _residual_and_floor(p, k, omega, grid)
        points.append(grid.n_x)
        residuals.append(residual)
        exact.append(residual <= floor)
        grid = grid.refine()

    ratios = [math.log2(residuals[i] / residuals[i + 1])
              for i in range(levels - 1)
              if not exact[i] and not exact[i + 1]]
    if not ratios:
        logger.info(f"{p.descriptor}: residual at round-off on every level {residuals}")
        return ConvergenceReport(points=tuple(points), errors=tuple(residuals), order=None, saturated=True)
    order = math.fsum(ratios) / len(ratios)
    logger.info(f"{p.descriptor}: k={k!r} omega={omega!r} order {order:.3f}")
    return ConvergenceReport(points=tuple(points), errors=tuple(residuals), order=order, saturated=False)
