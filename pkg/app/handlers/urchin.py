"""
Sea Urchin Handlers
"""
import logging

from app.config.constants import CMD_PROJECT, CMD_SEPARATE, CMD_URCHIN
from app.models.urchin import Interior
from app.utils.decorators import handle_errors, log_command
from app.utils.exceptions import ParseError
from app.utils.helpers import emit, read_input
from app.utils.validators import Validator

logger = logging.getLogger(__name__)


@handle_errors
@log_command
def handle_urchin(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    point = engine.urchin.curve_limit(gamma)
    emit(args, CMD_URCHIN, point.to_dict())


@handle_errors
@log_command
def handle_project(args, engine):
    """Project a curve's limit, or a given urchin point, to [GL_n]_zeta."""
    spec = Validator.parse_spec(args.signatures or [])
    data = read_input(args)
    gamma = None
    if Validator.is_point(data):
        point = Validator.parse_point(data)
    else:
        gamma = Validator.parse_curve(data)
        point = engine.urchin.curve_limit(gamma)
    projection = engine.urchin.project(point, spec)
    n = point.g.rows if isinstance(point, Interior) else point.hinge.n
    payload = {'n': n, 'point': point.to_dict(), **projection.to_dict()}
    if gamma is not None:
        direct = engine.urchin.limit_of_zeta(gamma, spec)
        payload['matches_direct_limit'] = engine.urchin.projectively_equal(projection, direct)
    emit(args, CMD_PROJECT, payload)


@handle_errors
@log_command
def handle_separate(args, engine):
    """Input {"curves": [g1, g2], "specs": [["1,0", "1,1"], ...]}; --signatures adds one more spec."""
    data = Validator.require_keys(read_input(args), 'curves')
    curves = data['curves']
    if not isinstance(curves, list) or len(curves) != 2:
        raise ParseError("separate needs exactly two curves")
    specs = Validator.parse_specs(data.get('specs', []))
    if args.signatures:
        specs.append(Validator.parse_spec(args.signatures))
    if not specs:
        raise ParseError("separate needs at least one compactification")
    gamma1, gamma2 = (Validator.parse_curve(c) for c in curves)
    emit(args, CMD_SEPARATE, engine.urchin.separation_table(gamma1, gamma2, specs))
