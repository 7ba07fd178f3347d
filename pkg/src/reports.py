"""Immutable verification reports with exact values in their JSON form."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional

from series.rational import format_rational


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


@dataclass(frozen=True)
class Failure:
    identity: str
    indices: dict
    expected: Any
    actual: Any
    detail: str = ''

    def to_dict(self) -> dict:
        return {
            'identity': self.identity,
            'indices': dict(self.indices),
            'expected': _encode(self.expected),
            'actual': _encode(self.actual),
            'detail': self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    name: str
    passed: bool
    checked: int
    failure: Optional[Failure] = None
    notes: tuple = ()

    def to_dict(self) -> dict:
        data = {'name': self.name, 'passed': self.passed, 'checked': self.checked}
        if self.failure is not None:
            data['failure'] = self.failure.to_dict()
        if self.notes:
            data['notes'] = list(self.notes)
        return data

    @classmethod
    def merge(cls, name: str, reports: Iterable['VerificationReport']) -> 'VerificationReport':
        reports = list(reports)
        failure = next((r.failure for r in reports if r.failure is not None), None)
        return cls(
            name=name,
            passed=all(r.passed for r in reports),
            checked=sum(r.checked for r in reports),
            failure=failure,
            notes=tuple(note for r in reports for note in r.notes),
        )


@dataclass
class ReportBuilder:
    """Counts checks and keeps the first failing one."""
    name: str
    checked: int = 0
    failure: Optional[Failure] = None
    notes: list = field(default_factory=list)

    def check(self, identity: str, expected: Any, actual: Any, tolerance: Optional[float] = None,
              detail: str = '', **indices) -> bool:
        self.checked += 1
        if tolerance is None:
            ok = expected == actual
        else:
            ok = abs(float(expected) - float(actual)) <= tolerance
        if not ok and self.failure is None:
            self.failure = Failure(identity, indices, expected, actual, detail)
        return ok

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def build(self) -> VerificationReport:
        return VerificationReport(
            name=self.name,
            passed=self.failure is None,
            checked=self.checked,
            failure=self.failure,
            notes=tuple(self.notes),
        )
