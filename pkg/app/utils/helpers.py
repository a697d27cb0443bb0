"""
Helper Functions
"""
import logging
import sys
from typing import Any

from app.utils.formatters import Formatter
from app.utils.validators import Validator

logger = logging.getLogger(__name__)


def read_input(args, required: bool = True):
    """JSON from -i PATH, or stdin; None when optional and no path was given."""
    path = getattr(args, 'input', None)
    if path is None and not required:
        return None
    return Validator.load_json(path)


def emit(args, command: str, payload: Any):
    """Write the payload to stdout in the requested format."""
    output_format = getattr(args, 'format', None) or 'json'
    text = Formatter.render(command, payload, output_format)
    sys.stdout.write(text + "\n")
    logger.debug(f"{command}: wrote {len(text)} characters of {output_format}")
