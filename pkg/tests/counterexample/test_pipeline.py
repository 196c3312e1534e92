import json

import pytest

from src.orekit.certificate import passed
from src.orekit.counterexample.instance import build_instance
from src.orekit.counterexample.pipeline import _timed, planned_checks, run_all
from src.orekit.errors import JetError
from src.orekit.report import to_json

FULL_P2 = [
    'delta periodicity',
    'centrality',
    'Phi homomorphism and onto',
    'A not isomorphic to B',
    'filtration',
    'Phi kernel probe',
    'Phi injective',
]


def test_planned_checks_full(instance2):
    assert [name for name, _ in planned_checks(instance2)] == FULL_P2


def test_planned_checks_quick(instance2):
    names = [name for name, _ in planned_checks(instance2, 'quick')]
    assert names == FULL_P2[:4] + ['Phi injective']


def test_filtration_only_for_p2_unless_forced(instance2, instance3):
    assert 'filtration' not in [name for name, _ in planned_checks(instance3)]
    assert 'filtration' in [name for name, _ in planned_checks(instance3, filtration=True)]
    assert 'filtration' not in [name for name, _ in planned_checks(instance2, filtration=False)]


def test_unknown_depth(instance2):
    with pytest.raises(ValueError):
        planned_checks(instance2, 'deep')


def test_errors_become_failures():
    def broken():
        raise JetError('truncation too small')

    certificate, elapsed = _timed('broken', broken)
    assert certificate.failed
    assert certificate.witness == 'JetError: truncation too small'
    assert elapsed >= 0


def test_unexpected_errors_become_failures():
    def racing():
        raise RuntimeError('dictionary changed size during iteration')

    certificate, _ = _timed('racing', racing)
    assert certificate.failed
    assert certificate.witness == 'RuntimeError: dictionary changed size during iteration'


def test_timed_passes_through():
    certificate, _ = _timed('fine', lambda: passed('fine'))
    assert certificate.passed


def test_report_uses_the_planned_name():
    certificate, _ = _timed('filtration', lambda: passed('filtration dims n <= 3'))
    assert certificate.name == 'filtration'


def test_quick_run_p2(instance2):
    report = run_all(instance2, 'quick')
    assert report.overall == 'pass'
    assert report.instance == {'prime': 2, 'variables': 3, 'delta_prime': "delta'", 'depth': 'quick'}
    statuses = {c.name: c.status for c in report.checks}
    assert statuses['Phi injective'] == 'cited'
    assert statuses['A not isomorphic to B'] == 'pass'
    witness = {c.name: c.witness for c in report.checks}['A not isomorphic to B']
    assert witness == 'x1*x2 != x3^2'


def test_full_run_p2(instance2):
    report = run_all(instance2, 'full')
    assert [c.name for c in report.checks] == FULL_P2
    assert report.passed


def test_control_run_fails():
    report = run_all(build_instance(2, delta_prime_power=1), 'quick')
    assert report.overall == 'fail'
    by_name = {c.name: c for c in report.checks}
    assert by_name['A not isomorphic to B'].status == 'fail'
    assert 'no obstruction' in by_name['A not isomorphic to B'].witness
    assert by_name['delta periodicity'].status == 'pass'


def test_json_is_deterministic_without_timing(instance2):
    first = to_json(run_all(instance2, 'quick'), include_timing=False)
    second = to_json(run_all(instance2, 'quick'), include_timing=False)
    assert first == second
    assert list(json.loads(first)) == ['tool_version', 'instance', 'overall', 'checks', 'digest']


def test_parallel_run_keeps_order(instance2):
    serial = run_all(instance2, 'quick', parallel=False)
    threaded = run_all(instance2, 'quick', parallel=True)
    assert [(c.name, c.status, c.witness) for c in serial.checks] == [
        (c.name, c.status, c.witness) for c in threaded.checks
    ]


@pytest.mark.slow
def test_full_run_p3(instance3):
    report = run_all(instance3, 'full')
    assert report.passed
    witness = {c.name: c.witness for c in report.checks}['A not isomorphic to B']
    assert witness == 'x2*x5 != x3*x4'
