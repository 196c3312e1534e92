from dataclasses import dataclass, field
from typing import Any, Dict, Literal, Optional

Status = Literal['pass', 'fail', 'cited']


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of a finite check.

    `witness` is a human-readable expression explaining a failure (or the
    decisive fact of a pass, e.g. the obstruction inequality). `details`
    carries the structured objects behind it and is never serialized.
    """
    name: str
    status: Status
    witness: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.status != 'fail'

    @property
    def passed(self) -> bool:
        return self.status == 'pass'

    @property
    def failed(self) -> bool:
        return self.status == 'fail'


def passed(name: str, witness: Optional[str] = None, **details: Any) -> Certificate:
    return Certificate(name, 'pass', witness, details)


def failed(name: str, witness: Optional[str] = None, **details: Any) -> Certificate:
    return Certificate(name, 'fail', witness, details)


def cited(name: str, witness: Optional[str] = None, **details: Any) -> Certificate:
    """A fact taken from the written argument rather than computed."""
    return Certificate(name, 'cited', witness, details)


def combine(name: str, parts: list[Certificate]) -> Certificate:
    """
    Fold sub-certificates into one: the first failure wins, otherwise pass.

    The sub-certificates stay available under `details['parts']`.
    """
    for part in parts:
        if part.failed:
            return Certificate(name, 'fail', f'{part.name}: {part.witness}', {'parts': parts, 'first_failure': part})
    witnesses = [p.witness for p in parts if p.witness]
    return Certificate(name, 'pass', '; '.join(witnesses) or None, {'parts': parts})
