"""
Meromorphic Family Handlers
"""
import logging

from app.config.constants import CMD_EXPONENTS, CMD_FACTOR, CMD_LIMIT_GLUED, CMD_LIMIT_HINGE
from app.utils.decorators import handle_errors, log_command
from app.utils.helpers import emit, read_input
from app.utils.validators import Validator

logger = logging.getLogger(__name__)


@handle_errors
@log_command
def handle_exponents(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    exps = engine.merofam.exponents(gamma)
    emit(args, CMD_EXPONENTS, exps.to_dict())


@handle_errors
@log_command
def handle_factor(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    fac = engine.merofam.factorize(gamma, precision=args.precision)
    payload = fac.to_dict()
    payload['reassembly_matches'] = engine.merofam.reassembly_matches(gamma, fac)
    emit(args, CMD_FACTOR, payload)


@handle_errors
@log_command
def handle_limit_hinge(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    exps, hinge = engine.merofam.limit_hinge(gamma)
    payload = {
        'exponents': exps.to_dict(),
        'alpha': hinge.label().to_dict(),
        'hinge': hinge.to_dict(),
    }
    if args.completed:
        payload['completed'] = engine.merofam.completed_limit(gamma).to_dict()
    emit(args, CMD_LIMIT_HINGE, payload)


@handle_errors
@log_command
def handle_limit_glued(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    family = engine.merofam.limit_glued(gamma)
    emit(args, CMD_LIMIT_GLUED, family.to_dict())
