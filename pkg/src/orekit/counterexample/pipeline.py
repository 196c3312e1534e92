import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, List, Literal, Optional, Tuple

from ..certificate import Certificate, failed
from ..config import current_settings
from ..errors import OrekitError
from ..report import VerificationReport, build_report
from .checks import (
    cited_injectivity,
    verify_centrality,
    verify_delta_periodicity,
    verify_filtration,
    verify_kernel_probe,
    verify_not_isomorphic,
    verify_phi,
)
from .instance import CounterexampleInstance

logger = logging.getLogger(__name__)

Depth = Literal['full', 'quick']
Check = Tuple[str, Callable[[], Certificate]]

FILTRATION_PRIMES = (2,)


def planned_checks(
    inst: CounterexampleInstance,
    depth: Depth = 'full',
    filtration: Optional[bool] = None,
) -> List[Check]:
    """
    The checks of a run, in report order.

    `quick` drops the supplementary filtration and kernel-probe checks. The
    filtration runs for p = 2 only unless `filtration` says otherwise.
    """
    if depth not in ('full', 'quick'):
        raise ValueError(f'unknown depth {depth!r}')
    checks: List[Check] = [
        ('delta periodicity', lambda: verify_delta_periodicity(inst)),
        ('centrality', lambda: verify_centrality(inst)),
        ('Phi homomorphism and onto', lambda: verify_phi(inst)),
        ('A not isomorphic to B', lambda: verify_not_isomorphic(inst)),
    ]
    if depth == 'full':
        if filtration if filtration is not None else inst.p in FILTRATION_PRIMES:
            checks.append(('filtration', lambda: verify_filtration(inst)))
        checks.append(('Phi kernel probe', lambda: verify_kernel_probe(inst)))
    checks.append(('Phi injective', cited_injectivity))
    return checks


def _timed(name: str, check: Callable[[], Certificate]) -> Tuple[Certificate, int]:
    start = time.perf_counter_ns()
    try:
        certificate = check()
    except OrekitError as error:
        certificate = failed(name, f'{type(error).__name__}: {error}')
    except Exception as error:
        logger.exception('%s: unexpected error', name)
        certificate = failed(name, f'{type(error).__name__}: {error}')
    if certificate.name != name:
        certificate = replace(certificate, name=name)
    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    logger.info('%s: %s (%d ms)', name, certificate.status, elapsed_ms)
    return certificate, elapsed_ms


def run_all(
    inst: CounterexampleInstance,
    depth: Depth = 'full',
    parallel: Optional[bool] = None,
    filtration: Optional[bool] = None,
) -> VerificationReport:
    """
    Run every check and assemble the report in the planned order.

    Args:
        inst: The instance to verify
        depth: 'full' or 'quick'
        parallel: Run independent checks on a thread pool (defaults to the
            `parallel` setting)
        filtration: Force the filtration check on or off

    Returns:
        A report whose overall status is pass iff no check failed
    """
    checks = planned_checks(inst, depth, filtration)
    parallel = current_settings().parallel if parallel is None else parallel
    start = time.perf_counter_ns()

    if parallel:
        with ThreadPoolExecutor(max_workers=len(checks)) as pool:
            futures = [pool.submit(_timed, name, check) for name, check in checks]
            results = [future.result() for future in futures]
    else:
        results = [_timed(name, check) for name, check in checks]

    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    report = build_report({**inst.parameters(), 'depth': depth}, results, elapsed_ms)
    logger.info('p=%d: overall %s in %d ms', inst.p, report.overall, elapsed_ms)
    return report
