"""
Selftest Handler
"""
import logging

from app.config.constants import CMD_SELFTEST, EXIT_INTERNAL, EXIT_OK
from app.services.selftest_service import SelftestService
from app.utils.decorators import handle_errors, log_command
from app.utils.helpers import emit

logger = logging.getLogger(__name__)


@handle_errors
@log_command
def handle_selftest(args, engine):
    seed = args.seed if args.seed is not None else engine.settings.SELFTEST_SEED
    samples = args.samples if args.samples is not None else engine.settings.SELFTEST_SAMPLES
    service = SelftestService(engine, engine.sampler(seed), samples)
    rows = service.run(args.checks)
    passed = all(r['passed'] for r in rows)
    emit(args, CMD_SELFTEST, {'seed': seed, 'samples': samples, 'passed': passed, 'checks': rows})
    if not passed:
        logger.error("Selftest found failing properties")
        return EXIT_INTERNAL
    return EXIT_OK
