"""
Custom Decorators
"""
import functools
import json
import logging
import sys

from app.config.constants import EXIT_AXIOM, EXIT_INTERNAL, EXIT_OK, EXIT_PRECISION, EXIT_VALIDATION
from app.utils.exceptions import (
    HingeAxiomError, HingeLibError, InternalInvariantError, PrecisionExhaustedError, ValidationError,
)

logger = logging.getLogger(__name__)


def error_payload(error: Exception) -> dict:
    """Machine-readable description of a failure."""
    return {
        'error': type(error).__name__,
        'message': str(error),
        'axiom': getattr(error, 'axiom', None),
        'index': getattr(error, 'index', None),
        'required': getattr(error, 'required', None),
    }


def exit_code_for(error: Exception) -> int:
    if isinstance(error, HingeAxiomError):
        return EXIT_AXIOM
    if isinstance(error, PrecisionExhaustedError):
        return EXIT_PRECISION
    if isinstance(error, InternalInvariantError):
        return EXIT_INTERNAL
    if isinstance(error, (ValidationError, json.JSONDecodeError, OSError)):
        return EXIT_VALIDATION
    return EXIT_INTERNAL


def log_command(func):
    """Decorator to log command usage"""
    @functools.wraps(func)
    def wrapper(args, engine, *extra, **kwargs):
        options = {k: v for k, v in vars(args).items() if k != 'handler'}
        logger.info(f"Executing {func.__name__}: {options}")
        return func(args, engine, *extra, **kwargs)

    return wrapper


def handle_errors(func):
    """Decorator mapping failures to exit codes, with the error JSON on stderr"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            result = func(*args, **kwargs)
            return EXIT_OK if result is None else result
        except HingeLibError as e:
            level = logging.ERROR if isinstance(e, InternalInvariantError) else logging.WARNING
            logger.log(level, f"Error in {func.__name__}: {e}", exc_info=level == logging.ERROR)
            error = e
        except (json.JSONDecodeError, OSError) as e:
            logger.warning(f"Unreadable input in {func.__name__}: {e}")
            error = e
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {e}", exc_info=True)
            error = e
        sys.stderr.write(json.dumps(error_payload(error), sort_keys=True) + "\n")
        return exit_code_for(error)

    return wrapper
