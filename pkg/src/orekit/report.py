"""
Verification reports: the data every driver produces, its canonical JSON
form and its text renderings.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Literal, Optional, Sequence, Tuple

from rich.console import Console
from rich.table import Table
from rich.text import Text

from .certificate import Certificate
from .report_table import table_to_text

Overall = Literal['pass', 'fail']

STATUS_STYLES = {'pass': 'green', 'fail': 'bold red', 'cited': 'cyan'}


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    witness: Optional[str] = None
    elapsed_ms: int = 0

    @classmethod
    def from_certificate(cls, certificate: Certificate, elapsed_ms: int = 0, name: Optional[str] = None) -> 'CheckResult':
        return cls(name or certificate.name, certificate.status, certificate.witness, elapsed_ms)


@dataclass(frozen=True)
class VerificationReport:
    tool_version: str
    instance: Dict[str, Any]
    checks: Tuple[CheckResult, ...] = ()
    elapsed_ms: int = 0
    certificates: Tuple[Certificate, ...] = field(default=(), compare=False, repr=False)

    @property
    def overall(self) -> Overall:
        """pass iff no check failed; cited entries never fail a report."""
        return 'fail' if any(c.status == 'fail' for c in self.checks) else 'pass'

    @property
    def passed(self) -> bool:
        return self.overall == 'pass'


def build_report(
    instance: Dict[str, Any],
    results: Sequence[Tuple[Certificate, int]],
    elapsed_ms: int = 0,
) -> VerificationReport:
    """
    Args:
        instance: Parameters describing what was verified
        results: (certificate, elapsed milliseconds) in display order
        elapsed_ms: Wall time of the whole run
    """
    from . import __version__

    checks = tuple(CheckResult.from_certificate(c, ms) for c, ms in results)
    return VerificationReport(__version__, dict(instance), checks, elapsed_ms, tuple(c for c, _ in results))


def _body(report: VerificationReport) -> Dict[str, Any]:
    return {
        'tool_version': report.tool_version,
        'instance': report.instance,
        'overall': report.overall,
        'checks': [{'name': c.name, 'status': c.status, 'witness': c.witness} for c in report.checks],
    }


def _canonical(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(',', ':'))


def report_digest(report: VerificationReport) -> str:
    """SHA-256 of the canonical timing-free body."""
    return hashlib.sha256(_canonical(_body(report)).encode('utf-8')).hexdigest()


def to_json(report: VerificationReport, include_timing: bool = True, indent: Optional[int] = 2) -> str:
    """
    The machine-readable report.

    Keys appear in the order tool_version, instance, overall, checks, digest
    and, when requested, timing. Milliseconds are integers, so the document
    holds no floats.
    """
    document = _body(report)
    document['digest'] = report_digest(report)
    if include_timing:
        document['timing'] = {
            'elapsed_ms': report.elapsed_ms,
            'checks': [{'name': c.name, 'elapsed_ms': c.elapsed_ms} for c in report.checks],
        }
    return json.dumps(document, ensure_ascii=False, indent=indent) + '\n'


def _instance_line(report: VerificationReport) -> str:
    params = ', '.join(f'{k}={v}' for k, v in report.instance.items())
    return f'orekit {report.tool_version} | {params}'


def render_text(report: VerificationReport, include_timing: bool = True) -> str:
    """Plain pipe table of the checks, followed by the overall status."""
    columns: Dict[str, list] = {
        'check': [c.name for c in report.checks],
        'status': [c.status for c in report.checks],
        'witness': [c.witness for c in report.checks],
    }
    if include_timing:
        columns['ms'] = [c.elapsed_ms for c in report.checks]
    table = table_to_text(columns)
    return f'{_instance_line(report)}\n\n{table}\noverall: {report.overall}\n'


def print_report(report: VerificationReport, console: Optional[Console] = None, include_timing: bool = True) -> None:
    """Print the report as a rich table."""
    console = console or Console()
    table = Table(title=Text(_instance_line(report)))
    table.add_column('check')
    table.add_column('status')
    table.add_column('witness', overflow='fold')
    if include_timing:
        table.add_column('ms', justify='right')
    for c in report.checks:
        row = [Text(c.name), Text(c.status, style=STATUS_STYLES.get(c.status, '')), Text(c.witness or '')]
        if include_timing:
            row.append(Text(str(c.elapsed_ms)))
        table.add_row(*row)
    console.print(table)
    style = STATUS_STYLES[report.overall]
    console.print(Text.assemble('overall: ', (report.overall, style)))
