# planck_cli.py
import argparse
import logging
import math
import os
import sys
from typing import Any, Dict, List, Optional, TextIO

from dotenv import load_dotenv

from common.errors import ConfigurationError, PlanckCheckError
from common.models.models import MAX_CLI_BETA, OutputFormat, SweepConfig
from handlers.config_handler import resolve_config, resolve_output_format
from handlers.report_handler import encode_record, encode_report, write_output
from handlers.sweep_handler import run_sweep
from handlers.verify_handler import DEFAULT_SEED, run_suites
from physics import fields, kinematics, pulse, wavecheck

# Load environment variables from .env file
load_dotenv()

# Configure logging; stdout carries reports only
_log_handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
if os.getenv("LOG_FILE"):
    _log_handlers.append(logging.FileHandler(os.getenv("LOG_FILE")))
logging.basicConfig(
    level=os.getenv("LOG_LEVEL", "WARNING").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=_log_handlers
)
logger = logging.getLogger("planck_cli")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _cli_beta(value: float) -> float:
    if not math.isfinite(value) or abs(value) > MAX_CLI_BETA:
        raise ConfigurationError(f"beta {value!r} outside [-{MAX_CLI_BETA}, {MAX_CLI_BETA}]")
    return value


def _record_format(args: argparse.Namespace) -> OutputFormat:
    # single-result commands fall back to a table rather than csv
    return resolve_output_format(args.format, config_path=args.config)


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    names = ["betas", "amplitude", "frequency", "periods", "phase0", "points_per_wavelength",
             "rule", "h0", "format", "tolerance", "workers"]
    return {name: getattr(args, name, None) for name in names}


def _config(args: argparse.Namespace) -> SweepConfig:
    return resolve_config(_overrides(args), config_path=args.config)


def _emit(args: argparse.Namespace, text: str, stream: Optional[TextIO]) -> None:
    write_output(text, path=args.output, stream=stream)


def cmd_doppler(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Print nu/nu', lambda'/lambda and W/W' for one beta."""
    b = kinematics.make_boost(_cli_beta(args.beta))
    record = {
        "beta": b.beta,
        "nu_ratio": kinematics.doppler_factor(b),
        "wavelength_ratio": kinematics.wavelength_ratio(b),
        "W_ratio": fields.energy_density_ratio(b),
    }
    _emit(args, encode_record(record, _record_format(args)), stream)
    return EXIT_OK


def cmd_boost_field(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Transform the crest of a canonical plane wave and report both frames."""
    b = kinematics.make_boost(_cli_beta(args.beta))
    amplitude = args.amplitude if args.amplitude is not None else 1.0
    wave = fields.plane_wave(amplitude, math.pi / 2.0)
    boosted = fields.boost_fields(b, wave)
    record = {
        "beta": b.beta,
        "e_y": float(wave.e_field[1]),
        "h_z": float(wave.h_field[2]),
        "e_y_prime": float(boosted.e_field[1]),
        "h_z_prime": float(boosted.h_field[2]),
        "poynting_x": float(fields.poynting(wave)[0]),
        "poynting_x_prime": float(fields.poynting(boosted)[0]),
        "W_ratio": fields.energy_density(wave) / fields.energy_density(boosted),
        "plane_wave_prime": fields.is_plane_wave(boosted),
    }
    _emit(args, encode_record(record, _record_format(args)), stream)
    return EXIT_OK


def cmd_pulse_energy(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Numeric against closed-form pulse energy; with --beta also the frame energy ratio."""
    config = _config(args)
    numeric = pulse.integrate_energy(config.pulse, config.plan)
    closed = pulse.pulse_energy_closed_form(config.pulse)
    rel_error = abs(numeric - closed) / closed
    record = {"energy_numeric": numeric, "energy_closed": closed, "rel_error": rel_error}
    passed = rel_error <= config.tolerance

    if args.beta is not None:
        ratio = pulse.verify_energy_ratio(kinematics.make_boost(_cli_beta(args.beta)), config.pulse, config.plan)
        record.update({
            "beta": args.beta,
            "energy_ratio_numeric": ratio.numeric_ratio,
            "energy_ratio_closed": ratio.closed_form_ratio,
            "ratio_rel_error": ratio.rel_error,
        })
        passed = passed and ratio.rel_error <= config.tolerance
    record["passed"] = passed

    _emit(args, encode_record(record, _record_format(args)), stream)
    if not passed:
        logger.error(f"Pulse energy check exceeded tolerance {config.tolerance!r}")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Run the frame sweep and write the full report."""
    config = _config(args)
    report = run_sweep(config)
    _emit(args, encode_report(report, config.output_format), stream)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_fit(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Run the sweep and report only the fitted constant."""
    config = _config(args)
    report = run_sweep(config)
    record = {
        "h_est": report.h_est,
        "h0": config.h0,
        "max_rel_residual": report.max_rel_residual,
        "n_samples": len(report.rows),
        "calibrated_amplitude": report.calibrated_amplitude,
        "passed": report.suites["planck_fit"],
    }
    _emit(args, encode_record(record, config.output_format), stream)
    return EXIT_OK if record["passed"] else EXIT_VERIFICATION_FAILED


def cmd_wavecheck(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Finite-difference wave-equation residual of f(kx - omega t) and its observed order."""
    omega = args.omega if args.omega is not None else args.k
    profile = wavecheck.PROFILES[args.profile]()
    report = wavecheck.convergence_order(profile, args.k, omega, wavecheck.default_grid(args.k), args.levels)
    record = {
        "profile": profile.descriptor,
        "k": args.k,
        "omega": omega,
        "residual_coarse": report.errors[0],
        "residual_fine": report.errors[-1],
        "order": report.order,
        "saturated": report.saturated,
    }
    _emit(args, encode_record(record, _record_format(args)), stream)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, stream: Optional[TextIO] = None) -> int:
    """Run every invariant suite and print PASS/FAIL per suite."""
    results = run_suites(args.seed)
    record: Dict[str, Any] = {result.name: result.passed for result in results}
    record["passed"] = all(result.passed for result in results)
    _emit(args, encode_record(record, _record_format(args)), stream)
    return EXIT_OK if record["passed"] else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="output format (sweep and fit default csv, other commands table)")
    output.add_argument("--output", default=None, help="write to this file instead of standard output")
    output.add_argument("--config", default=None, help="flat KEY=VALUE config file")

    setup = argparse.ArgumentParser(add_help=False)
    setup.add_argument("--amplitude", type=float, default=None)
    setup.add_argument("--frequency", type=float, default=None)
    setup.add_argument("--periods", type=int, default=None)
    setup.add_argument("--phase0", type=float, default=None)
    setup.add_argument("--points-per-wavelength", dest="points_per_wavelength", type=int, default=None)
    setup.add_argument("--rule", choices=["simpson", "midpoint"], default=None)
    setup.add_argument("--tolerance", type=float, default=None)

    frames = argparse.ArgumentParser(add_help=False)
    frames.add_argument("--betas", default=None, help="comma separated frame velocities")
    frames.add_argument("--h0", type=float, default=None, help="seed constant for the photon count")
    frames.add_argument("--workers", type=int, default=None, help="threads used for the frames")

    parser = argparse.ArgumentParser(prog="planck-check",
                                     description="Frame-by-frame checks of pulse energy against frequency")
    sub = parser.add_subparsers(dest="command", required=True)

    doppler = sub.add_parser("doppler", parents=[output], help="Doppler ratios for one beta")
    doppler.add_argument("--beta", type=float, required=True)
    doppler.set_defaults(func=cmd_doppler)

    boost_field = sub.add_parser("boost-field", parents=[output], help="plane-wave fields in both frames")
    boost_field.add_argument("--beta", type=float, required=True)
    boost_field.add_argument("--amplitude", type=float, default=None)
    boost_field.set_defaults(func=cmd_boost_field)

    pulse_energy = sub.add_parser("pulse-energy", parents=[output, setup], help="numeric vs closed-form energy")
    pulse_energy.add_argument("--beta", type=float, default=None)
    pulse_energy.set_defaults(func=cmd_pulse_energy)

    sweep = sub.add_parser("sweep", parents=[output, setup, frames], help="full frame sweep report")
    sweep.set_defaults(func=cmd_sweep)

    fit = sub.add_parser("fit", parents=[output, setup, frames], help="fitted constant over the sweep")
    fit.set_defaults(func=cmd_fit)

    check = sub.add_parser("wavecheck", parents=[output], help="wave-equation residual of a profile")
    check.add_argument("--profile", choices=sorted(wavecheck.PROFILES), default="sine")
    check.add_argument("--k", type=float, default=1.0)
    check.add_argument("--omega", type=float, default=None, help="defaults to k")
    check.add_argument("--levels", type=int, default=3)
    check.set_defaults(func=cmd_wavecheck)

    verify = sub.add_parser("verify", parents=[output], help="run every invariant suite")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Parse arguments and run one subcommand.

    Returns:
        int: 0 on success, 1 when a verification fails, 2 on usage, config or I/O errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        return args.func(args, stream)
    except PlanckCheckError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command}: could not write output: {e}")
        return EXIT_USAGE
    except ArithmeticError as e:
        logger.error(f"{args.command}: input out of floating-point range: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
