import logging
import os
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from dotenv import dotenv_values

from common.errors import ConfigurationError
from common.models.models import MonochromaticPulse, OutputFormat, QuadraturePlan, SweepConfig

# Configure logging
logger = logging.getLogger("config_handler")

ENV_PREFIX = "PLANCK_"


def _parse_betas(value: Any) -> Tuple[float, ...]:
    if isinstance(value, str):
        parts = [part.strip() for part in value.split(",") if part.strip()]
        return tuple(float(part) for part in parts)
    return tuple(float(v) for v in value)


# Config key -> (setting name, parser)
CONFIG_KEYS: Dict[str, Tuple[str, Callable[[Any], Any]]] = {
    "BETAS": ("betas", _parse_betas),
    "AMPLITUDE": ("amplitude", float),
    "FREQUENCY": ("frequency", float),
    "PERIODS": ("periods", int),
    "PHASE0": ("phase0", float),
    "POINTS_PER_WAVELENGTH": ("points_per_wavelength", int),
    "RULE": ("rule", str),
    "H0": ("h0", float),
    "FORMAT": ("format", str),
    "TOLERANCE": ("tolerance", float),
    "WORKERS": ("workers", int),
}

DEFAULTS: Dict[str, Any] = {
    "betas": (0.0, 0.2, 0.4, 0.6, 0.8),
    "amplitude": 1.0,
    "frequency": 1.0,
    "periods": 8,
    "phase0": 0.0,
    "points_per_wavelength": 256,
    "rule": "simpson",
    "h0": 1.0,
    "format": "csv",
    "tolerance": 1e-6,
    "workers": 1,
}


def _parse(key: str, value: Any) -> Tuple[str, Any]:
    name, parser = CONFIG_KEYS[key]
    try:
        return name, parser(value)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"invalid value {value!r} for {key}: {e}")


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read a flat KEY=VALUE config file (dotenv syntax).

    Args:
        path (str): path to the file

    Returns:
        Dict[str, Any]: parsed settings keyed by setting name

    Raises:
        ConfigurationError: if the file is missing or holds an unknown key or bad value
    """
    if not os.path.isfile(path):
        raise ConfigurationError(f"config file not found: {path}")
    settings = {}
    for key, value in dotenv_values(path).items():
        key = key.upper()
        if key not in CONFIG_KEYS:
            raise ConfigurationError(f"unknown key {key} in {path}")
        if value is None:
            raise ConfigurationError(f"key {key} in {path} has no value")
        name, parsed = _parse(key, value)
        settings[name] = parsed
    logger.info(f"Loaded {len(settings)} settings from {path}")
    return settings


def environment_settings(environ: Mapping[str, str]) -> Dict[str, Any]:
    """Settings given as PLANCK_<KEY> environment variables."""
    settings = {}
    for key in CONFIG_KEYS:
        value = environ.get(ENV_PREFIX + key)
        if value:
            name, parsed = _parse(key, value)
            settings[name] = parsed
    return settings


def resolve_config(overrides: Optional[Mapping[str, Any]] = None,
                   config_path: Optional[str] = None,
                   environ: Optional[Mapping[str, str]] = None) -> SweepConfig:
    """
    Build the sweep configuration.

    Precedence: command-line overrides > config file > PLANCK_* environment > defaults.
    Overrides set to None are treated as absent.

    Args:
        overrides (Optional[Mapping[str, Any]]): settings from command-line flags
        config_path (Optional[str]): flat KEY=VALUE file
        environ (Optional[Mapping[str, str]]): environment, os.environ if None

    Returns:
        SweepConfig: validated configuration
    """
    settings = dict(DEFAULTS)
    settings.update(environment_settings(os.environ if environ is None else environ))
    if config_path:
        settings.update(load_config_file(config_path))
    for name, value in (overrides or {}).items():
        if value is None:
            continue
        key = next((k for k, (n, _) in CONFIG_KEYS.items() if n == name), None)
        if key is None:
            raise ConfigurationError(f"unknown setting {name}")
        settings[name] = _parse(key, value)[1]

    pulse = MonochromaticPulse(
        amplitude=settings["amplitude"],
        nu=settings["frequency"],
        n_periods=settings["periods"],
        phase0=settings["phase0"],
    )
    plan = QuadraturePlan(points_per_wavelength=settings["points_per_wavelength"], rule=settings["rule"])
    return SweepConfig(
        betas=settings["betas"],
        pulse=pulse,
        plan=plan,
        h0=settings["h0"],
        output_format=settings["format"],
        tolerance=settings["tolerance"],
        workers=settings["workers"],
    )


def resolve_output_format(flag: Optional[str] = None,
                          config_path: Optional[str] = None,
                          environ: Optional[Mapping[str, str]] = None,
                          default: OutputFormat = OutputFormat.TABLE) -> OutputFormat:
    """
    Output format of a single-result command, layered like resolve_config
    but falling back to `default` instead of the sweep's csv.

    Raises:
        ConfigurationError: if the chosen value is not a known format
    """
    value: Optional[str] = flag
    if value is None and config_path:
        value = load_config_file(config_path).get("format")
    if value is None:
        value = environment_settings(os.environ if environ is None else environ).get("format")
    if value is None:
        return default
    try:
        return OutputFormat(value.lower())
    except ValueError:
        raise ConfigurationError(f"unknown output format {value!r}")
