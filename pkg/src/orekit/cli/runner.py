import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

from ..certificate import Certificate, failed
from ..config import current_settings
from ..errors import ScriptRuntimeError
from ..report import VerificationReport, build_report
from .evaluate import ScriptEnvironment
from .pretty import statement_to_text
from .statements import AssertStmt, Script

logger = logging.getLogger(__name__)

Step = Tuple[str, Callable[[], Certificate]]


def _timed(step: Step) -> Tuple[Certificate, int]:
    name, check = step
    start = time.perf_counter_ns()
    try:
        certificate = check()
    except Exception as error:
        logger.exception('%s: unexpected error', name)
        certificate = failed(name, f'{name}: {type(error).__name__}: {error}')
    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    logger.info('%s: %s (%d ms)', name, certificate.status, elapsed_ms)
    return certificate, elapsed_ms


def _constant(certificate: Certificate) -> Callable[[], Certificate]:
    return lambda: certificate


def run_script(
    script: Script,
    parallel: Optional[bool] = None,
    source: Optional[str] = None,
    env: Optional[ScriptEnvironment] = None,
) -> VerificationReport:
    """
    Execute a parsed script.

    Definitions run in order as they are met. Each assert becomes one check;
    asserts may be evaluated on a thread pool, but the report keeps script
    order. A definition that cannot be built becomes a failed check and the
    statements that use it fail in turn.

    Args:
        script: The parsed script
        parallel: Evaluate asserts concurrently (defaults to the `parallel` setting)
        source: Label of the script in the report
        env: Environment to extend (a fresh one by default)
    """
    env = env or ScriptEnvironment()
    parallel = current_settings().parallel if parallel is None else parallel
    steps: List[Step] = []

    start = time.perf_counter_ns()
    for statement in script.statements:
        if isinstance(statement, AssertStmt):
            steps.append((f'line {statement.line}', lambda s=statement: env.check(s)))
            continue
        try:
            env.define(statement)
        except ScriptRuntimeError as error:
            label = statement_to_text(statement)
            steps.append((f'line {statement.line}', _constant(failed(label, f'line {statement.line}: {error.message}'))))

    if parallel and len(steps) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(_timed, steps))
    else:
        results = [_timed(step) for step in steps]

    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    instance = {'script': source or '<script>', 'statements': len(script)}
    report = build_report(instance, results, elapsed_ms)
    logger.info('%s: %d checks, overall %s', instance['script'], len(results), report.overall)
    return report
