import logging
import math

from common.errors import DomainError
from common.models.models import LIGHT_LIKE_RTOL, Boost, FourVector, WaveFourVector

# Configure logging
logger = logging.getLogger("kinematics")


def make_boost(beta: float) -> Boost:
    """
    Build the boost to a frame K' moving with velocity beta along +x of K.

    Args:
        beta (float): V/c, strictly inside (-1, 1)

    Returns:
        Boost: the boost with gamma filled in

    Raises:
        DomainError: if |beta| >= 1 or beta is not finite
    """
    try:
        beta = float(beta)
    except (TypeError, ValueError):
        raise DomainError(f"beta must be a real number, got {beta!r}")
    return Boost(beta)


def compose_boosts(first: Boost, second: Boost) -> Boost:
    """Collinear velocity addition: the boost equivalent to `first` followed by `second`."""
    return Boost((first.beta + second.beta) / (1.0 + first.beta * second.beta))


def boost_four_vector(b: Boost, v: FourVector) -> FourVector:
    """
    Components in K of a four-vector given by its components in K'.

    k0 = (k0' + beta k_x') / sqrt(1 - beta^2), and the matching rule for x;
    y and z are unchanged. The result has the same type as `v`.

    Args:
        b (Boost): boost from K to K'
        v (FourVector): components in K'

    Returns:
        FourVector: components in K
    """
    t_comp = b.gamma * (v.t_comp + b.beta * v.x_comp)
    x_comp = b.gamma * (v.x_comp + b.beta * v.t_comp)
    return type(v)(t_comp, x_comp, v.y_comp, v.z_comp)


def boost_wave_vector(b: Boost, k: WaveFourVector) -> WaveFourVector:
    return boost_four_vector(b, k)


def minkowski_square(v: FourVector) -> float:
    # factored so null vectors with large components neither overflow nor cancel
    return (v.t_comp - v.x_comp) * (v.t_comp + v.x_comp) - v.y_comp * v.y_comp - v.z_comp * v.z_comp


def is_light_like(v: FourVector, rel_tol: float = LIGHT_LIKE_RTOL) -> bool:
    return abs(minkowski_square(v)) <= rel_tol * v.t_comp * v.t_comp


def wave_vector(nu: float) -> WaveFourVector:
    """
    Wave four-vector of a plane wave of frequency nu travelling along +x (c = 1).

    Args:
        nu (float): frequency

    Returns:
        WaveFourVector: (2 pi nu, 2 pi nu, 0, 0)
    """
    k0 = 2.0 * math.pi * nu
    return WaveFourVector(k0, k0, 0.0, 0.0)


def doppler_factor(b: Boost) -> float:
    """
    Frequency ratio nu/nu' = lambda'/lambda = (1 + beta)/sqrt(1 - beta^2) for a
    wave running along +x, nu measured in K and nu' in K'.
    """
    return (1.0 + b.beta) * b.gamma


def wavelength_ratio(b: Boost) -> float:
    """lambda'/lambda; identical to the frequency ratio for light."""
    return doppler_factor(b)
