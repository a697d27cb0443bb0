"""
Hinge Handlers
"""
import logging

from app.config.constants import AXIOM_DESCRIPTIONS, CMD_HINGE_CHECK, CMD_HINGE_MUL, CMD_LAMBDA
from app.services.exterior_service import ExteriorService
from app.services.hinge_service import HingeService
from app.services.relation_service import RelationService
from app.utils.decorators import handle_errors, log_command
from app.utils.exceptions import ParseError
from app.utils.helpers import emit, read_input
from app.utils.validators import Validator

logger = logging.getLogger(__name__)


def _load_hinge(data):
    """A hinge object {"n", "terms"}, or {"matrix": g} standing for the one-term hinge graph(g)."""
    if isinstance(data, dict) and 'terms' not in data and 'matrix' in data:
        g = Validator.parse_matrix(data)
        return HingeService.validate_hinge([RelationService.graph(g)], g.rows)
    n, terms = Validator.parse_hinge_terms(data)
    return HingeService.validate_hinge(terms, n)


def _attributes_dict(p):
    return {
        key: value.to_dict() if hasattr(value, 'to_dict') else value
        for key, value in RelationService.attributes(p).items()
    }


@handle_errors
@log_command
def handle_hinge_check(args, engine):
    hinge = _load_hinge(read_input(args))
    label = hinge.label()
    payload = {
        'valid': True,
        'alpha': label.to_dict(),
        'axioms': sorted(AXIOM_DESCRIPTIONS),
        'hinge': hinge.to_dict(),
        'attributes': [_attributes_dict(p) for p in hinge.terms],
        'projective_orbit_dimension': HingeService.projective_orbit_dimension(label),
    }
    if args.completed:
        payload['completed'] = HingeService.complete(hinge).to_dict()
    emit(args, CMD_HINGE_CHECK, payload)


@handle_errors
@log_command
def handle_hinge_mul(args, engine):
    data = Validator.require_keys(read_input(args), 'left', 'right')
    left, right = _load_hinge(data['left']), _load_hinge(data['right'])
    product = HingeService.glued_product(HingeService.glue(left), HingeService.glue(right))
    payload = product.to_dict()
    payload['weak_hinge'] = product.base.to_dict()
    payload['lies_over'] = HingeService.glued_lies_over(product, product.base)
    payload['well_glued'] = HingeService.well_glued(product, product.base)
    payload['nondegenerate'] = product.is_nondegenerate()
    emit(args, CMD_HINGE_MUL, payload)


@handle_errors
@log_command
def handle_lambda(args, engine):
    """lambda_cha of a matrix ({"matrix": ...}) or lambda of a relation."""
    data = read_input(args)
    degree = args.degree
    if isinstance(data, dict) and 'matrix' in data:
        g = Validator.parse_matrix(data)
        degrees = [degree] if degree is not None else list(range(g.cols + 1))
        blocks = [ExteriorService.lambda_cha(g, k) for k in degrees]
        payload = {'source': 'matrix', 'blocks': [b.to_dict() for b in blocks]}
        if degree is not None:
            payload.update(blocks[0].to_dict())
    elif isinstance(data, dict) and ('basis' in data or 'relation' in data):
        p = Validator.parse_relation(data)
        if degree is not None:
            op = ExteriorService.lambda_m(p, degree)
            payload = {'source': 'relation', **op.to_dict()}
        else:
            payload = {'source': 'relation', **ExteriorService.lambda_relation(p).to_dict()}
        payload['support'] = list(ExteriorService.support(p)) if RelationService.in_gamma(p) else None
    else:
        raise ParseError("lambda input must be {\"matrix\": ...} or a relation")
    emit(args, CMD_LAMBDA, payload)
