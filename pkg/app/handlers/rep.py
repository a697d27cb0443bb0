"""
Representation Handlers
"""
import logging

from app.config.constants import CMD_REP, CMD_REP_LIMIT
from app.models.hinge import GluedFamily
from app.utils.decorators import handle_errors, log_command
from app.utils.exceptions import ParseError
from app.utils.helpers import emit, read_input
from app.utils.validators import Validator

logger = logging.getLogger(__name__)


def _signatures(args):
    if not args.signatures:
        raise ParseError("--signatures is required, e.g. --signatures 2,1,0")
    return [Validator.parse_signature(s) for s in args.signatures]


@handle_errors
@log_command
def handle_rep(args, engine):
    """Build H_nu; with -i, also apply rho to a matrix {"matrix": g} or a glued family."""
    signatures = _signatures(args)
    n = args.n or max(nu.n for nu in signatures)
    zeta = engine.reps.zeta_direct_sum(signatures, n)
    payload = {
        'n': n,
        'signature': " + ".join(str(s) for s in zeta.signatures),
        'dim': sum(rep.dim for rep in zeta.spaces),
        'spaces': [
            {**rep.to_dict(), 'weyl_dimension': engine.reps.weyl_dimension(rep.signature)}
            for rep in zeta.spaces
        ],
    }
    data = read_input(args, required=False)
    if data is not None:
        if isinstance(data, dict) and 'blocks' in data:
            element = GluedFamily.from_dict(data)
        else:
            element = Validator.parse_matrix(data)
        payload.update(engine.reps.zeta_apply(zeta, element).to_dict())
    emit(args, CMD_REP, payload)


@handle_errors
@log_command
def handle_rep_limit(args, engine):
    gamma = Validator.parse_curve(read_input(args))
    exps = engine.merofam.exponents(gamma)
    limits, names = [], []
    for nu in _signatures(args):
        rep = engine.reps.build_rep(nu, gamma.n)
        op = engine.reps.rep_limit(rep, gamma)
        limits.append({**op.to_dict(), 'weight': rep.signature.weight(exps.m)})
        names.append(str(rep.signature))
    payload = {
        'n': gamma.n,
        'exponents': exps.to_dict(),
        'signature': " + ".join(names),
        'dim': sum(lim['dim'] for lim in limits),
        'limits': limits,
    }
    emit(args, CMD_REP_LIMIT, payload)
