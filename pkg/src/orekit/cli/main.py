"""
Command-line driver.

    orekit verify-counterexample --prime 2 --format json
    orekit check script.ore
    orekit repl

Exit codes: 0 when every check passes, 1 when some check fails, 2 on a
usage, configuration or parse error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from rich.console import Console

from ..config import load_settings, parse_flag, use_settings
from ..counterexample.instance import build_instance
from ..counterexample.pipeline import run_all
from ..errors import ConfigError, NotPrimeError, ScriptError
from ..log import configure_logging, verbosity_to_level
from ..report import VerificationReport, print_report, render_text, to_json
from .evaluate import ScriptEnvironment, execute
from .lexer import strip_comment
from .parser import ScriptParser, parse_script
from .runner import run_script

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SCRIPTS_DIR = Path(__file__).parent / 'scripts'


def bundled_scripts() -> List[Path]:
    return sorted(SCRIPTS_DIR.glob('*.ore'))


def _bool_option(raw: str) -> bool:
    try:
        return parse_flag('--parallel', raw)
    except ConfigError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _positive(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer, got {raw!r}') from None
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {value}')
    return value


def build_parser() -> argparse.ArgumentParser:
    from .. import __version__

    parser = argparse.ArgumentParser(prog='orekit', description='Exact Ore-extension and Hasse-Schmidt computations.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'json'), default='text')
    common.add_argument('--output', type=Path, help='write the report here instead of stdout')
    common.add_argument('--truncation', type=_positive, help='jet truncation (overrides OREKIT_TRUNCATION)')
    common.add_argument('--parallel', type=_bool_option, help='run independent checks concurrently')
    common.add_argument('--no-timing', action='store_true', help='leave timings out of the report')
    common.add_argument('-v', '--verbose', action='count', default=0)

    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify-counterexample', parents=[common], help='certify the non-cancellation instance')
    verify.add_argument('--prime', type=int, default=2)
    verify.add_argument('--depth', choices=('full', 'quick'), default='full')
    verify.add_argument('--filtration', type=_bool_option, help='force the filtration check on or off')

    check = commands.add_parser('check', parents=[common], help='run a script file')
    check.add_argument('script', help="script path, or the name of a bundled script such as 'counterexample_p2'")

    repl = commands.add_parser('repl', help='evaluate statements interactively')
    repl.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def _configure(args: argparse.Namespace) -> None:
    settings = load_settings().with_overrides(
        truncation=getattr(args, 'truncation', None),
        parallel=getattr(args, 'parallel', None),
    )
    use_settings(settings)
    level = verbosity_to_level(args.verbose) if args.verbose else settings.log_level
    configure_logging(level)


def emit(report: VerificationReport, args: argparse.Namespace, console: Optional[Console] = None) -> int:
    """Write the report in the requested format and return the exit code."""
    include_timing = not args.no_timing
    if args.format == 'json':
        text = to_json(report, include_timing=include_timing)
    elif args.output is not None:
        text = render_text(report, include_timing=include_timing)
    else:
        text = None

    if args.output is not None:
        args.output.write_text(text, encoding='utf-8')
    elif text is not None:
        sys.stdout.write(text)
    else:
        print_report(report, console or Console(), include_timing=include_timing)
    return EXIT_PASS if report.passed else EXIT_FAIL


def resolve_script(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    bundled = SCRIPTS_DIR / f'{name}.ore'
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f'no script {name!r}')


def cmd_verify_counterexample(args: argparse.Namespace, console: Optional[Console] = None) -> int:
    try:
        instance = build_instance(args.prime)
    except NotPrimeError as error:
        print(f'orekit: {error}', file=sys.stderr)
        return EXIT_USAGE
    report = run_all(instance, depth=args.depth, parallel=args.parallel, filtration=args.filtration)
    return emit(report, args, console)


def cmd_check(args: argparse.Namespace, console: Optional[Console] = None) -> int:
    try:
        path = resolve_script(args.script)
        text = path.read_text(encoding='utf-8')
        script = parse_script(text)
    except FileNotFoundError as error:
        print(f'orekit: {error}', file=sys.stderr)
        return EXIT_USAGE
    except ScriptError as error:
        print(f'{args.script}:{error}', file=sys.stderr)
        return EXIT_USAGE
    report = run_script(script, parallel=args.parallel, source=path.name)
    return emit(report, args, console)


def repl(lines: Iterable[str], console: Console) -> int:
    """
    Evaluate statements one line at a time.

    Definitions are confirmed, asserts print their status; errors are
    reported and the session continues. Returns 1 if any assert failed.
    """
    parser = ScriptParser()
    env = ScriptEnvironment()
    any_failed = False
    for number, line in enumerate(lines, start=1):
        text = strip_comment(line)
        stripped = text.strip()
        if stripped in (':quit', ':q'):
            break
        if not stripped:
            continue
        try:
            statement = parser.parse_line(text, number)
            certificate = execute(env, statement)
        except ScriptError as error:
            console.print(f'error: {error}', style='red', markup=False)
            continue
        if certificate is None:
            console.print(f'defined {statement.name}', markup=False)
            continue
        any_failed = any_failed or certificate.failed
        style = 'green' if certificate.passed else 'red'
        text = certificate.status if certificate.witness is None else f'{certificate.status}: {certificate.witness}'
        console.print(text, style=style, markup=False)
    return EXIT_FAIL if any_failed else EXIT_PASS


def _stdin_lines(console: Console):
    while True:
        try:
            yield console.input('orekit> ')
        except EOFError:
            return


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure(args)
    except (ConfigError, ValueError) as error:
        print(f'orekit: {error}', file=sys.stderr)
        return EXIT_USAGE

    console = Console()
    if args.command == 'verify-counterexample':
        return cmd_verify_counterexample(args, console)
    if args.command == 'check':
        return cmd_check(args, console)
    return repl(_stdin_lines(console), console)


if __name__ == '__main__':
    sys.exit(main())
