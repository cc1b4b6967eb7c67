import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional, Tuple

import structlog
from pydantic import ValidationError

from matrix_gegenbauer import CrossCheckError, MatrixGegenbauerSession, nu_label
from matrix_gegenbauer.config import get_config
from matrix_gegenbauer.logger import configure_logging
from matrix_gegenbauer.matrix.generating import InterpolationMismatchError, SeriesMismatchError
from matrix_gegenbauer.matrix.serialize import dumps
from matrix_gegenbauer.models import IdentityCheck, SessionConfig
from matrix_gegenbauer.polynomials.kernel import format_rational
from matrix_gegenbauer.verification import SUITES
from matrix_gegenbauer.zeros.export import reports_to_json, write_survey

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def parse_entry(text: str) -> Tuple[int, int]:
    try:
        i, j = (int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Entry must look like 'i,j', got {text!r}")
    return i, j


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--env', type=str, choices=['dev', 'prod', 'test'],
                        help="Specify the environment (dev, prod or test)")
    common.add_argument('--log-level', type=str, choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help="Set the logging level")
    common.add_argument('--two-ell', type=int, help="Twice the spin parameter; matrices have size two_ell + 1")
    common.add_argument('--nu', type=str, help="Gegenbauer parameter as 'p/q' or an integer")
    common.add_argument('--nu-grid', type=str, help="Comma separated nu values, overrides --nu for sweeps")
    common.add_argument('--n-max', type=int, help="Largest degree checked or surveyed")
    common.add_argument('--format', dest='output_format', choices=['json', 'csv', 'text'], help="Output format")
    common.add_argument('--out', type=str, help="Output directory")
    common.add_argument('--threads', type=int, help="Worker threads")
    common.add_argument('--seed', type=int, help="Seed for the root finder's starting points")
    common.add_argument('--tol', type=float, help="Classification tolerance for zeros")

    parser = argparse.ArgumentParser(description="Matrix-valued Gegenbauer polynomials")
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[common], help="Run exact identity suites")
    verify.add_argument('suite', choices=list(SUITES) + ['all'])

    hatp = commands.add_parser('hatp', parents=[common], help="Emit the symmetric polynomial hatP_n")
    hatp.add_argument('--n', type=int, required=True, help="Degree")
    hatp.add_argument('--basis', choices=['monomial', 'gegenbauer'], default='monomial')

    commands.add_parser('genfun', parents=[common], help="Emit the verified generating-function closed form")

    zeros = commands.add_parser('zeros', parents=[common], help="Survey zeros of matrix entries")
    zeros.add_argument('--n', type=int, help="Single degree to survey")
    zeros.add_argument('--n-min', type=int, default=0, help="First degree of the survey range")
    zeros.add_argument('--entry', type=parse_entry, action='append', help="Entry 'i,j'; repeat for several")
    zeros.add_argument('--echelon', type=int, help="Only entries of this echelon")
    zeros.add_argument('--no-svg', action='store_true', help="Skip the SVG scatter plots")
    zeros.add_argument('--require-real', action='store_true',
                       help="Fail unless echelon 1 and 2 entries have all zeros real in (-1, 1)")
    zeros.add_argument('--require-imaginary', action='store_true',
                       help="Fail unless every non-real zero is purely imaginary")
    zeros.add_argument('--require-interlacing', action='store_true',
                       help="Fail unless real zeros interlace between consecutive degrees")
    return parser


def session_config(args: argparse.Namespace, config) -> SessionConfig:
    """Command-line arguments over configuration values, which already merge environment and defaults."""
    def pick(value, fallback):
        return fallback if value is None else value

    return SessionConfig(
        two_ell=pick(args.two_ell, config.TWO_ELL),
        nu=pick(args.nu, config.NU),
        n_max=pick(args.n_max, config.N_MAX),
        nu_grid=pick(args.nu_grid, config.NU_GRID),
        output_format=pick(args.output_format, config.OUTPUT_FORMAT),
        output_dir=pick(args.out, config.OUTPUT_DIR),
        threads=pick(args.threads, config.THREADS),
        seed=pick(args.seed, config.SEED),
        tol=pick(args.tol, config.TOL),
        residual_tol=config.RESIDUAL_TOL,
        max_degree=config.MAX_DEGREE,
        aberth_max_iter=config.ABERTH_MAX_ITER,
        polish_dps=config.POLISH_DPS,
    )


def render_checks(checks: List[IdentityCheck], output_format: str) -> str:
    if output_format == 'json':
        return json.dumps([c.model_dump() for c in checks], indent=2)
    if output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=['name', 'passed', 'cells', 'counterexample'],
                                lineterminator='\r\n')
        writer.writeheader()
        writer.writerows(c.model_dump() for c in checks)
        return buffer.getvalue()
    lines = []
    for c in checks:
        lines.append(f"PASS {c.name}" if c.passed else f"FAIL {c.name}: {c.counterexample}")
    passed = sum(1 for c in checks if c.passed)
    lines.append(f"{passed}/{len(checks)} identities hold")
    return '\n'.join(lines) + '\n'


def emit(text: str, output_dir: Optional[str], filename: str) -> None:
    sys.stdout.write(text if text.endswith('\n') else text + '\n')
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        with open(os.path.join(output_dir, filename), 'w', encoding='utf-8') as handle:
            handle.write(text)


def run_verify(session: MatrixGegenbauerSession, args: argparse.Namespace) -> int:
    checks = session.verify(args.suite)
    sys.stdout.write(render_checks(checks, session.config.output_format))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILURE


def run_hatp(session: MatrixGegenbauerSession, args: argparse.Namespace) -> int:
    record = session.hat_p(args.n, args.basis)
    emit(dumps(record), args.out, f"hatp_2l{session.config.two_ell}_nu{nu_label(session.config.nu)}_n{args.n}.json")
    return EXIT_OK


def run_genfun(session: MatrixGegenbauerSession, args: argparse.Namespace) -> int:
    record = session.genfun()
    emit(dumps(record), args.out, f"genfun_2l{session.config.two_ell}_nu{nu_label(session.config.nu)}.json")
    return EXIT_OK


def run_zeros(session: MatrixGegenbauerSession, args: argparse.Namespace) -> int:
    logger = structlog.get_logger()
    config = session.config
    n_values = [args.n] if args.n is not None else list(range(args.n_min, config.n_max + 1))
    reports = session.zeros(n_values, args.entry, args.echelon)
    for nu in config.grid:
        selected = [r for r in reports if r.nu == nu]
        write_survey(selected, config.output_dir, f"zeros_2l{config.two_ell}_nu{nu_label(nu)}", svg=not args.no_svg)
    summary = session.zero_summary(reports)
    if config.output_format == 'json':
        sys.stdout.write(reports_to_json(reports) + '\n')
    else:
        sys.stdout.write(' '.join(f"{key}={value}" for key, value in summary.items()) + '\n')
    required = []
    if args.require_real:
        required.append(('real_low_echelon', summary['real_low_echelon']))
    if args.require_imaginary:
        required.append(('purely_imaginary', summary['purely_imaginary']))
    if args.require_interlacing:
        required.append(('interlacing', summary['interlacing']))
    failed = [name for name, ok in required if not ok]
    if failed:
        logger.error("Required zero assertions failed", assertions=failed)
        return EXIT_FAILURE
    return EXIT_OK


COMMANDS = {
    'verify': run_verify,
    'hatp': run_hatp,
    'genfun': run_genfun,
    'zeros': run_zeros,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Get configuration, prioritizing command-line arguments, then environment variables, then defaults
    try:
        config = get_config()
        config.ENV = args.env or config.ENV
        config.LOG_LEVEL = (args.log_level or config.LOG_LEVEL).lower()
        configure_logging(log_level=config.LOG_LEVEL, logging_dir=config.LOGGING_DIR, environment=config.ENV)
        cfg = session_config(args, config)
    except (ValidationError, ValueError) as e:
        sys.stderr.write(f"Configuration error: {e}\n")
        return EXIT_CONFIG

    logger = structlog.get_logger()
    logger.info("MatrixGegenbauer configuration",
                command=args.command,
                env=config.ENV,
                two_ell=cfg.two_ell,
                nu=format_rational(cfg.nu),
                grid=[format_rational(v) for v in cfg.grid],
                n_max=cfg.n_max,
                threads=cfg.threads)

    try:
        return COMMANDS[args.command](MatrixGegenbauerSession(cfg), args)
    except ValueError as e:
        # UnsupportedParameterError and DegreeTooLargeError included
        logger.error("Invalid parameters", error=str(e))
        return EXIT_CONFIG
    except (CrossCheckError, SeriesMismatchError, InterpolationMismatchError) as e:
        logger.error("Verification failed", error=str(e))
        return EXIT_FAILURE
    except Exception as e:
        logger.critical("Error while running MatrixGegenbauer", error=str(e))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
