import logging
import math
from typing import Tuple

import numpy as np

from common.models.models import Boost, FieldState

# Configure logging
logger = logging.getLogger("fields")

# Gaussian units, c = 1
EIGHT_PI = 8.0 * math.pi
FOUR_PI = 4.0 * math.pi


def plane_wave(amplitude: float, phase: float = 0.0) -> FieldState:
    """
    Canonical plane-wave field: E along +y, H along +z, flux along +x.

    Args:
        amplitude (float): peak field strength
        phase (float): carrier phase; E_y = H_z = amplitude * sin(phase)

    Returns:
        FieldState: the instantaneous field
    """
    value = amplitude * math.sin(phase)
    return FieldState(e_field=(0.0, value, 0.0), h_field=(0.0, 0.0, value))


def energy_density(f: FieldState) -> float:
    """W = (|E|^2 + |H|^2) / 8 pi."""
    return (float(np.dot(f.e_field, f.e_field)) + float(np.dot(f.h_field, f.h_field))) / EIGHT_PI


def poynting(f: FieldState) -> np.ndarray:
    """Energy flux S = (c / 4 pi) E x H with c = 1."""
    return np.cross(f.e_field, f.h_field) / FOUR_PI


def field_invariants(f: FieldState) -> Tuple[float, float]:
    """The two Lorentz invariants |E|^2 - |H|^2 and E.H."""
    return (float(np.dot(f.e_field, f.e_field) - np.dot(f.h_field, f.h_field)),
            float(np.dot(f.e_field, f.h_field)))


def is_plane_wave(f: FieldState, rel_tol: float = 1e-12) -> bool:
    """|E| = |H|, E perpendicular to H and the flux pointing along +x."""
    e_norm = float(np.linalg.norm(f.e_field))
    h_norm = float(np.linalg.norm(f.h_field))
    scale = max(e_norm, h_norm)
    if scale == 0.0:
        return False
    flux = poynting(f)
    return bool(abs(e_norm - h_norm) <= rel_tol * scale
                and abs(float(np.dot(f.e_field, f.h_field))) <= rel_tol * scale ** 2
                and flux[0] > 0.0
                and abs(flux[1]) + abs(flux[2]) <= rel_tol * scale ** 2)


def boost_fields(b: Boost, f: FieldState) -> FieldState:
    """
    Field components in K' (moving with +beta along x) from those in K.

    E_x, H_x are unchanged;
    E_y' = g(E_y - b H_z), E_z' = g(E_z + b H_y),
    H_y' = g(H_y + b E_z), H_z' = g(H_z - b E_y).

    Args:
        b (Boost): boost from K to K'
        f (FieldState): field in K

    Returns:
        FieldState: field in K'
    """
    g, beta = b.gamma, b.beta
    ex, ey, ez = f.e_field
    hx, hy, hz = f.h_field
    return FieldState(
        e_field=(ex, g * (ey - beta * hz), g * (ez + beta * hy)),
        h_field=(hx, g * (hy + beta * ez), g * (hz - beta * ey)),
    )


def plane_wave_field_factor(b: Boost) -> float:
    """Amplitude ratio E'/E = g(1 - beta) that boost_fields applies to the canonical plane wave."""
    return b.gamma * (1.0 - b.beta)


def energy_density_ratio(b: Boost) -> float:
    """W/W' = (1 + beta)^2 / (1 - beta^2) for a wave running along +x (cos alpha = 1)."""
    return (1.0 + b.beta) ** 2 / ((1.0 - b.beta) * (1.0 + b.beta))
