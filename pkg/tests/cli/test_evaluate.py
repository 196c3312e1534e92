import pytest

from src.orekit.arith.ratfunc import RatFunc
from src.orekit.cli.evaluate import ScriptEnvironment, execute
from src.orekit.cli.parser import ScriptParser
from src.orekit.errors import ScriptRuntimeError

HEADER = """\
field K = ratfunc(F2; x1, x2, x3)
derivation delta on K: x1 -> x2, x2 -> x3, x3 -> x1
ring A = K[x; delta=delta][t]
"""


@pytest.fixture
def session():
    parser, env = ScriptParser(), ScriptEnvironment()
    for number, line in enumerate(HEADER.splitlines(), start=1):
        execute(env, parser.parse_line(line, number))

    def run(line):
        return execute(env, parser.parse_line(line, 10))

    return run, env


def test_definitions_return_none(session):
    run, env = session
    assert run('element z = x^4 - x in A') is None
    assert str(env.objects['z'].value) == 'x^4 + x'


def test_field_arithmetic(session):
    run, env = session
    run('element f = (x1 + 1)/x2 in K')
    value = env.objects['f'].value
    assert isinstance(value, RatFunc)
    assert str(value) == '(x1 + 1)/x2'


def test_skew_variable_is_not_central(session):
    run, _ = session
    certificate = run('assert central(x in A)')
    assert certificate.failed
    assert certificate.name == 'central(x in A)'
    assert certificate.witness == '[x, x1] = x2'


def test_central_and_equal(session):
    run, _ = session
    run('element z = x^4 - x in A')
    assert run('assert central(z)').passed
    assert run('assert equal(x*x1, x1*x + x2 in A)').passed
    certificate = run('assert equal(x*x1, x1*x in A)')
    assert certificate.failed
    assert certificate.witness == 'x1*x + x2 != x1*x'


@pytest.mark.parametrize('line, passes', [
    ('assert central(1 in A)', True),
    ('assert central(0 in A)', True),
    ('assert central(t in A)', True),
    ('assert central(x1 in A)', False),
    ('assert central(x1 in K)', True),
])
def test_central_constants_and_scalars(session, line, passes):
    run, _ = session
    assert run(line).passed is passes


def test_equal_lifts_integer_literals(session):
    run, _ = session
    run('element w = x - x in A')
    assert run('assert equal(w, 0 in A)').passed
    assert run('assert unequal(x, 1 in A)').passed


def test_unexpected_errors_become_failures(session, monkeypatch):
    from src.orekit.cli import evaluate

    def explode(env, statement, name):
        raise RuntimeError('dictionary changed size during iteration')

    monkeypatch.setitem(evaluate.PREDICATE_MAP, 'central', explode)
    run, _ = session
    certificate = run('assert central(x in A)')
    assert certificate.failed
    assert certificate.witness == 'line 10: RuntimeError: dictionary changed size during iteration'


def test_unequal_in_the_field(session):
    run, _ = session
    certificate = run('assert unequal(x1*x2, x3^2 in K)')
    assert certificate.passed
    assert certificate.witness == 'x1*x2 != x3^2'
    assert run('assert unequal(x1^2, x1*x1 in K)').failed


def test_periodicity(session):
    run, _ = session
    assert run('assert periodic(delta, 4, 1)').passed
    certificate = run('assert periodic(delta, 3, 1)')
    assert certificate.witness == 'delta^3(x1) = x1 but delta^1(x1) = x2'


def test_filtration(session):
    run, _ = session
    certificate = run('assert filtration(A, 8, 16)')
    assert certificate.passed
    assert certificate.witness == 'dims = [8, 16]'
    assert run('assert filtration(A, 8, 15)').witness == 'dims = [8, 16], expected [8, 15]'


def test_obstruction(session):
    run, _ = session
    run('derivation dp = delta^2')
    certificate = run('assert obstruction(delta, dp)')
    assert certificate.passed
    assert certificate.name == 'obstruction(delta, dp)'
    assert run('assert obstruction(delta, delta)').failed


def test_non_unit_division_fails_the_definition(session):
    run, env = session
    with pytest.raises(ScriptRuntimeError, match='x is not a unit of A'):
        run('element u = 1/x in A')
    assert 'u' in env.failed_names
    certificate = run('assert central(u)')
    assert certificate.failed
    assert certificate.witness == "line 10: 'u' is unavailable: x is not a unit of A"


def test_jets_on_a_polynomial_ring():
    parser, env = ScriptParser(), ScriptEnvironment()
    lines = [
        'field P = poly(Q; u, v)',
        'jet D = divided_power(P; u) truncation 4',
        'assert hs_axioms(D)',
        'assert iterative(D)',
        'assert kernel(v in P, D)',
        'assert slice(u in P, D)',
        'assert kernel(u in P, D)',
    ]
    results = [execute(env, parser.parse_line(line, n)) for n, line in enumerate(lines, start=1)]
    assert results[:2] == [None, None]
    assert [c.status for c in results[2:]] == ['pass', 'pass', 'pass', 'pass', 'fail']
    assert results[-1].witness == 'd_1(u) = 1'


def test_canonical_jet_in_characteristic_two(session):
    run, env = session
    run('jet E = canonical(delta)')
    assert env.objects['E'].truncation == 1
    assert run('assert hs_axioms(E)').passed
