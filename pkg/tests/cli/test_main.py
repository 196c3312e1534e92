import io
import json

import pytest
from rich.console import Console

from src.orekit import __version__
from src.orekit.cli.main import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, bundled_scripts, main, repl, resolve_script


def test_bundled_scripts():
    assert [p.name for p in bundled_scripts()] == ['counterexample_p2.ore', 'counterexample_p3.ore']
    assert resolve_script('counterexample_p2').name == 'counterexample_p2.ore'
    with pytest.raises(FileNotFoundError):
        resolve_script('no_such_script')


def test_verify_counterexample_json(capsys):
    code = main(['verify-counterexample', '--depth', 'quick', '--format', 'json', '--no-timing'])
    assert code == EXIT_PASS
    document = json.loads(capsys.readouterr().out)
    assert document['overall'] == 'pass'
    assert document['instance'] == {'prime': 2, 'variables': 3, 'delta_prime': "delta'", 'depth': 'quick'}
    assert 'timing' not in document


def test_verify_counterexample_to_file(tmp_path):
    out = tmp_path / 'report.txt'
    code = main(['verify-counterexample', '--depth', 'quick', '--output', str(out)])
    assert code == EXIT_PASS
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == f"orekit {__version__} | prime=2, variables=3, delta_prime=delta', depth=quick"
    assert lines[-1] == 'overall: pass'


def test_composite_prime_is_a_usage_error(capsys):
    assert main(['verify-counterexample', '--prime', '4']) == EXIT_USAGE
    assert 'orekit: 4 is not prime' in capsys.readouterr().err


def test_bad_environment_is_a_usage_error(monkeypatch):
    monkeypatch.setenv('OREKIT_TRUNCATION', 'zero')
    assert main(['verify-counterexample', '--depth', 'quick']) == EXIT_USAGE


def test_bad_option_exits_with_usage_code():
    with pytest.raises(SystemExit) as info:
        main(['verify-counterexample', '--parallel', 'sometimes'])
    assert info.value.code == EXIT_USAGE


def test_check_bundled_script(capsys):
    code = main(['check', 'counterexample_p2', '--format', 'json', '--no-timing'])
    assert code == EXIT_PASS
    document = json.loads(capsys.readouterr().out)
    assert document['instance']['script'] == 'counterexample_p2.ore'


def test_check_missing_file(capsys):
    assert main(['check', 'missing.ore']) == EXIT_USAGE
    assert "no script 'missing.ore'" in capsys.readouterr().err


def test_check_parse_error(tmp_path, capsys):
    path = tmp_path / 'bad.ore'
    path.write_text('field K = ratfunc(Q; u)\nlemma u\n', encoding='utf-8')
    assert main(['check', str(path)]) == EXIT_USAGE
    assert f"{path}:2:1: unknown statement 'lemma'" in capsys.readouterr().err


def test_check_failing_script(tmp_path):
    path = tmp_path / 'fails.ore'
    path.write_text(
        'field K = ratfunc(F2; x1, x2)\n'
        'derivation d on K: x1 -> x2\n'
        'ring A = K[x; delta=d]\n'
        'assert central(x in A)\n',
        encoding='utf-8',
    )
    assert main(['check', str(path), '--format', 'json']) == EXIT_FAIL


def test_repl_session():
    buffer = io.StringIO()
    lines = [
        'field K = ratfunc(F2; x1, x2)',
        'derivation d on K: x1 -> x2',
        'ring A = K[x; delta=d]',
        '# comments are ignored',
        'assert central(x in A)',
        'bogus',
        'assert central(1 in A)',
        ':q',
        'assert central(x in A)',
    ]
    code = repl(lines, Console(file=buffer, width=200))
    output = buffer.getvalue().splitlines()
    assert code == EXIT_FAIL
    assert output == [
        'defined K',
        'defined d',
        'defined A',
        'fail: [x, x1] = x2',
        "error: 6:1: unknown statement 'bogus'",
        'pass',
    ]


def test_repl_ignores_trailing_comments():
    buffer = io.StringIO()
    lines = [
        'field K = ratfunc(F2; x1, x2)  # the coefficient field',
        'derivation d on K: x1 -> x2 # shift',
        'ring A = K[x; delta=d]',
        'assert central(1 in A)  # constants commute with x',
        ':q  # done',
        'assert central(x in A)',
    ]
    code = repl(lines, Console(file=buffer, width=200))
    assert code == EXIT_PASS
    assert buffer.getvalue().splitlines() == ['defined K', 'defined d', 'defined A', 'pass']
