import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from common.errors import ConfigurationError, DomainError

# Light-like tolerance relative to t_comp²
LIGHT_LIKE_RTOL = 1e-12


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")


# ---------------------------------------------------------------------------
# kinematics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Boost:
    """
    Change of inertial frame along x: K' moves with velocity beta (c = 1)
    relative to K.
    """
    beta: float
    gamma: float = field(init=False)
    direction: int = field(init=False)

    def __post_init__(self):
        if not math.isfinite(self.beta) or abs(self.beta) >= 1.0:
            raise DomainError(f"|beta| must be < 1, got {self.beta!r}")
        # (1 - b)(1 + b) keeps precision as |beta| -> 1
        gamma = 1.0 / math.sqrt((1.0 - self.beta) * (1.0 + self.beta))
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'direction', 1 if self.beta >= 0 else -1)

    def inverse(self) -> 'Boost':
        return Boost(-self.beta)


@dataclass(frozen=True)
class FourVector:
    t_comp: float
    x_comp: float
    y_comp: float = 0.0
    z_comp: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.t_comp, self.x_comp, self.y_comp, self.z_comp], dtype=float)


@dataclass(frozen=True)
class WaveFourVector(FourVector):
    """
    Wave four-vector (omega/c, k_x, k_y, k_z) of radiation; light-like by construction.
    With c = 1 the time component is the angular frequency itself.
    """

    def __post_init__(self):
        _require_positive("k0", self.t_comp)
        spatial = self.x_comp ** 2 + self.y_comp ** 2 + self.z_comp ** 2
        if abs(self.t_comp ** 2 - spatial) > LIGHT_LIKE_RTOL * self.t_comp ** 2:
            raise DomainError(f"wave four-vector is not light-like: {self}")

    @property
    def omega(self) -> float:
        return self.t_comp

    @property
    def nu(self) -> float:
        return self.t_comp / (2.0 * math.pi)

    @property
    def lam(self) -> float:
        return 2.0 * math.pi / self.t_comp


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def _as_vector3(name: str, value) -> np.ndarray:
    arr = np.array(value, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise DomainError(f"{name} must have exactly 3 components, got {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FieldState:
    """Electric and magnetic field at one spacetime point, Gaussian units."""
    e_field: np.ndarray
    h_field: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'e_field', _as_vector3("e_field", self.e_field))
        object.__setattr__(self, 'h_field', _as_vector3("h_field", self.h_field))

    def __str__(self):
        return f"E={self.e_field.tolist()} H={self.h_field.tolist()}"


# ---------------------------------------------------------------------------
# pulse
# ---------------------------------------------------------------------------

class QuadratureRule(str, Enum):
    MIDPOINT = 'midpoint'
    SIMPSON = 'simpson'


@dataclass(frozen=True)
class MonochromaticPulse:
    """
    Rectangular wave train of n_periods whole wavelengths travelling along +x.
    At t = 0 the support starts at x = 0.
    """
    amplitude: float
    nu: float
    n_periods: int
    phase0: float = 0.0
    polarization: str = 'y'  # only the canonical +y electric polarization exists

    def __post_init__(self):
        _require_positive("amplitude", self.amplitude)
        _require_positive("nu", self.nu)
        # |E|^2 + |H|^2 must stay representable
        square = 2.0 * self.amplitude * self.amplitude
        if not math.isfinite(square) or square == 0.0:
            raise DomainError(f"amplitude {self.amplitude!r} cannot be squared in floating point")
        if isinstance(self.n_periods, bool) or not isinstance(self.n_periods, int) or self.n_periods < 1:
            raise DomainError(f"n_periods must be a positive integer, got {self.n_periods!r}")
        if not math.isfinite(self.phase0):
            raise DomainError(f"phase0 must be finite, got {self.phase0!r}")
        if self.polarization != 'y':
            raise DomainError(f"unsupported polarization {self.polarization!r}")

    @property
    def lam(self) -> float:
        return 1.0 / self.nu

    @property
    def k(self) -> float:
        return 2.0 * math.pi * self.nu

    @property
    def support_length(self) -> float:
        return self.n_periods * self.lam

    def support(self, t: float = 0.0) -> Tuple[float, float]:
        return t, t + self.support_length


@dataclass(frozen=True)
class QuadraturePlan:
    points_per_wavelength: int = 256
    rule: QuadratureRule = QuadratureRule.SIMPSON

    def __post_init__(self):
        try:
            object.__setattr__(self, 'rule', QuadratureRule(self.rule))
        except ValueError:
            raise ConfigurationError(f"unknown quadrature rule {self.rule!r}")
        ppw = self.points_per_wavelength
        if isinstance(ppw, bool) or not isinstance(ppw, int) or ppw < 8:
            raise ConfigurationError(f"points_per_wavelength must be an integer >= 8, got {ppw!r}")
        if self.rule is QuadratureRule.SIMPSON and ppw % 2:
            raise ConfigurationError(f"simpson needs an even panel count per wavelength, got {ppw}")


@dataclass(frozen=True)
class EnergyRatioReport:
    numeric_ratio: float
    closed_form_ratio: float
    rel_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Errors per refinement level; order is None when the errors sit on the round-off floor."""
    points: Tuple[int, ...]
    errors: Tuple[float, ...]
    order: Optional[float] = None
    saturated: bool = False


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhotonEnsemble:
    count: int
    total_energy: float
    frequency: float

    def __post_init__(self):
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise DomainError(f"photon count must be a positive integer, got {self.count!r}")
        _require_positive("total_energy", self.total_energy)
        _require_positive("frequency", self.frequency)

    @property
    def per_photon_energy(self) -> float:
        return self.total_energy / self.count


@dataclass(frozen=True)
class FrequencyEnergySample:
    nu: float
    photon_energy: float
    beta: float = 0.0

    def __post_init__(self):
        _require_positive("nu", self.nu)
        _require_positive("photon_energy", self.photon_energy)


@dataclass(frozen=True)
class PlanckFit:
    h_est: float
    max_rel_residual: float
    n_samples: int


# ---------------------------------------------------------------------------
# wavecheck
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WaveProfile:
    evaluator: Callable[[np.ndarray], np.ndarray]
    descriptor: str


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n_x: int
    t_min: float
    t_max: float
    n_t: int

    def __post_init__(self):
        if self.n_x < 8 or self.n_t < 8:
            raise ConfigurationError(f"grid needs at least 8 points per axis, got n_x={self.n_x}, n_t={self.n_t}")
        if not self.x_max > self.x_min or not self.t_max > self.t_min:
            raise ConfigurationError("grid bounds must satisfy x_max > x_min and t_max > t_min")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_x - 1)

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n_t - 1)

    def refine(self) -> 'Grid1D':
        """Halve both spacings while keeping every existing node."""
        return Grid1D(self.x_min, self.x_max, 2 * self.n_x - 1,
                      self.t_min, self.t_max, 2 * self.n_t - 1)


# ---------------------------------------------------------------------------
# cli
# ---------------------------------------------------------------------------

class OutputFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'
    TABLE = 'table'


MAX_CLI_BETA = 0.999999


@dataclass(frozen=True)
class SweepConfig:
    betas: Tuple[float, ...]
    pulse: MonochromaticPulse
    plan: QuadraturePlan
    h0: float = 1.0
    output_format: OutputFormat = OutputFormat.CSV
    tolerance: float = 1e-6
    workers: int = 1

    def __post_init__(self):
        if not self.betas:
            raise ConfigurationError("betas must not be empty")
        for beta in self.betas:
            if not math.isfinite(beta) or abs(beta) > MAX_CLI_BETA:
                raise ConfigurationError(f"beta {beta!r} outside [-{MAX_CLI_BETA}, {MAX_CLI_BETA}]")
        if not math.isfinite(self.h0) or self.h0 <= 0:
            raise ConfigurationError(f"h0 must be positive, got {self.h0!r}")
        if not math.isfinite(self.tolerance) or self.tolerance <= 0:
            raise ConfigurationError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers!r}")
        try:
            object.__setattr__(self, 'output_format', OutputFormat(self.output_format))
        except ValueError:
            raise ConfigurationError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class FrameRow:
    beta: float
    nu: float
    lam: float
    w_ratio: float
    energy_numeric: float
    energy_ratio_numeric: float
    energy_ratio_closed: float
    photon_energy: float


@dataclass(frozen=True)
class RunReport:
    rows: List[FrameRow]
    h_est: float
    max_rel_residual: float
    suites: Dict[str, bool]
    calibrated_amplitude: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(self.suites.values())


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: Tuple[Tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)
