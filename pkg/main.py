"""
Hinge Urchin - Main Entry Point
"""
import argparse
import json
import logging
import os
import sys
from typing import List, Optional

# Add project root to sys.path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from dotenv import load_dotenv  # noqa: E402

from app.config.constants import (  # noqa: E402
    ALL_COMMANDS, CMD_EXPONENTS, CMD_FACTOR, CMD_HINGE_CHECK, CMD_HINGE_MUL, CMD_LAMBDA,
    CMD_LIMIT_GLUED, CMD_LIMIT_HINGE, CMD_PROJECT, CMD_REP, CMD_REP_LIMIT, CMD_SELFTEST,
    CMD_SEPARATE, CMD_URCHIN, EXIT_VALIDATION,
)

COMMAND_HELP = {
    CMD_EXPONENTS: "exponents m, distinct values k and multiplicities alpha of a Laurent curve",
    CMD_FACTOR: "factorization gamma = a diag(z^-m) b",
    CMD_LIMIT_HINGE: "limit hinge of a Laurent curve",
    CMD_LIMIT_GLUED: "glued limit of the exterior powers of a Laurent curve",
    CMD_HINGE_CHECK: "validate a hinge against its axioms",
    CMD_HINGE_MUL: "product of two glued hinges",
    CMD_LAMBDA: "exterior power operator of a matrix or relation",
    CMD_REP: "build H_nu and optionally apply rho_nu",
    CMD_REP_LIMIT: "limit of a curve in polynomial representations",
    CMD_URCHIN: "limit of a curve in the sea urchin",
    CMD_PROJECT: "projection of an urchin point to a compactification",
    CMD_SEPARATE: "do compactifications separate the limits of two curves",
    CMD_SELFTEST: "run the sampled property suite",
}


def setup_logging(level: str, log_file: str = ''):
    """Configures the logging for the application; stdout stays reserved for results."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=level.upper(),
        handlers=handlers,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hinge-urchin',
        description="Exact limits of matrix curves: hinges, representations and the sea urchin.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-i', '--input', help="input JSON path (default: stdin)")
    common.add_argument('--format', choices=('json', 'text'), default=None, help="output format")
    common.add_argument('--precision', type=int, default=None, help="jet precision N (overrides HINGE_PRECISION)")
    common.add_argument('--verbose', action='store_true', help="debug logging on stderr")

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    commands = {name: subparsers.add_parser(name, parents=[common], help=COMMAND_HELP[name]) for name in ALL_COMMANDS}

    for name in (CMD_LIMIT_HINGE, CMD_HINGE_CHECK):
        commands[name].add_argument('--completed', action='store_true', help="also emit the completed hinge")
    commands[CMD_LAMBDA].add_argument('--degree', type=int, default=None, help="single exterior degree")
    for name in (CMD_REP, CMD_REP_LIMIT, CMD_PROJECT, CMD_SEPARATE):
        commands[name].add_argument('--signatures', nargs='+', default=None, metavar='NU',
                                    help="signatures such as 2,1,0")
    commands[CMD_REP].add_argument('--n', type=int, default=None, help="dimension of V (default: signature length)")
    commands[CMD_SELFTEST].add_argument('--seed', type=int, default=None, help="random seed")
    commands[CMD_SELFTEST].add_argument('--samples', type=int, default=None, help="samples per property")
    commands[CMD_SELFTEST].add_argument('--checks', nargs='+', default=None, help="subset of checks to run")
    return parser


def handler_for(command: str):
    from app.handlers.hinge import handle_hinge_check, handle_hinge_mul, handle_lambda
    from app.handlers.merofam import handle_exponents, handle_factor, handle_limit_glued, handle_limit_hinge
    from app.handlers.rep import handle_rep, handle_rep_limit
    from app.handlers.selftest import handle_selftest
    from app.handlers.urchin import handle_project, handle_separate, handle_urchin

    return {
        CMD_EXPONENTS: handle_exponents,
        CMD_FACTOR: handle_factor,
        CMD_LIMIT_HINGE: handle_limit_hinge,
        CMD_LIMIT_GLUED: handle_limit_glued,
        CMD_HINGE_CHECK: handle_hinge_check,
        CMD_HINGE_MUL: handle_hinge_mul,
        CMD_LAMBDA: handle_lambda,
        CMD_REP: handle_rep,
        CMD_REP_LIMIT: handle_rep_limit,
        CMD_URCHIN: handle_urchin,
        CMD_PROJECT: handle_project,
        CMD_SEPARATE: handle_separate,
        CMD_SELFTEST: handle_selftest,
    }[command]


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, wire the engine and run one subcommand; returns the exit code."""
    load_dotenv()
    from app.config.settings import settings
    settings.reload()

    args = build_parser().parse_args(argv)
    setup_logging('DEBUG' if args.verbose else settings.LOG_LEVEL, settings.LOG_FILE)
    logger = logging.getLogger(__name__)

    if args.format is None:
        args.format = settings.OUTPUT_FORMAT

    from app.utils.decorators import error_payload
    try:
        if args.precision is not None and args.precision < 1:
            raise ValueError("--precision must be a positive integer")
        from app.engine import HingeEngine
        engine = HingeEngine(settings, precision=args.precision)
    except ValueError as e:
        logger.error(f"Configuration Error: {e}")
        sys.stderr.write(json.dumps(error_payload(e), sort_keys=True) + "\n")
        return EXIT_VALIDATION

    return handler_for(args.command)(args, engine)


if __name__ == '__main__':
    sys.exit(main())
