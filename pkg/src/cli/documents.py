"""Table documents: exact rational entries rendered as JSON or CSV."""
import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from combinatorics.triangle import Triangle
from errors import UsageError
from euler_basis import euler_polynomials
from prob_stirling import adell_benyi_triangle, cgf_series, first_kind_triangle, second_kind_triangle
from rv_models import RVSpec, format_rv
from series.rational import format_rational, to_rational

KINDS = ('S2Y', 'S1Y', 'S2YL', 'S1YL', 'CUMULANTS', 'EULER', 'ADELL_BENYI')
DEGENERATE_KINDS = ('S2YL', 'S1YL')
# kinds that take lambda without being degenerate Stirling kinds
LAMBDA_KINDS = DEGENERATE_KINDS + ('CUMULANTS', 'EULER')


@dataclass(frozen=True)
class TableEntry:
    n: int
    value: Fraction
    k: Optional[int] = None

    def to_dict(self, with_float: bool = False) -> dict:
        data = {'n': self.n}
        if self.k is not None:
            data['k'] = self.k
        data['value'] = format_rational(self.value)
        if with_float:
            data['float'] = float(self.value)
        return data


@dataclass(frozen=True)
class TableDocument:
    rv: str
    kind: str
    order: int
    entries: tuple
    lam: Optional[Fraction] = None

    @property
    def is_sequence(self) -> bool:
        return all(entry.k is None for entry in self.entries)

    def to_dict(self, with_float: bool = False) -> dict:
        data = {'rv': self.rv, 'kind': self.kind}
        if self.lam is not None:
            data['lambda'] = format_rational(self.lam)
        data['order'] = self.order
        data['entries'] = [entry.to_dict(with_float) for entry in self.entries]
        return data

    def to_json(self, with_float: bool = False) -> str:
        return json.dumps(self.to_dict(with_float), indent=2)

    def to_csv(self, with_float: bool = False) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        header = ['n', 'value'] if self.is_sequence else ['n', 'k', 'value']
        writer.writerow(header + (['float'] if with_float else []))
        for entry in self.entries:
            row = [entry.n] + ([] if self.is_sequence else [entry.k]) + [format_rational(entry.value)]
            writer.writerow(row + ([float(entry.value)] if with_float else []))
        return buffer.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> 'TableDocument':
        entries = tuple(TableEntry(e['n'], to_rational(e['value']), e.get('k')) for e in data['entries'])
        lam = data.get('lambda')
        return cls(data['rv'], data['kind'], data['order'], entries, None if lam is None else to_rational(lam))

    @classmethod
    def from_json(cls, text: str) -> 'TableDocument':
        return cls.from_dict(json.loads(text))


def _triangle_entries(triangle: Triangle) -> tuple:
    return tuple(TableEntry(n, value, k) for n, k, value in triangle.entries())


def build_table(rv: RVSpec, kind: str, order: int, lam: Optional[Fraction] = None) -> TableDocument:
    kind = kind.upper()
    if kind not in KINDS:
        raise UsageError(f'unknown kind {kind!r} (known: {", ".join(KINDS)})')
    if kind in DEGENERATE_KINDS and lam is None:
        raise UsageError(f'{kind} needs --lambda')
    if lam is not None and lam != 0 and kind not in LAMBDA_KINDS:
        raise UsageError(f'--lambda is only meaningful with {", ".join(LAMBDA_KINDS)}, got kind {kind}')
    kind_lam = lam if kind in LAMBDA_KINDS else None

    if kind in ('S2Y', 'S2YL'):
        entries = _triangle_entries(second_kind_triangle(rv, order, kind_lam))
    elif kind in ('S1Y', 'S1YL'):
        entries = _triangle_entries(first_kind_triangle(rv, order, kind_lam))
    elif kind == 'ADELL_BENYI':
        entries = _triangle_entries(adell_benyi_triangle(rv, order))
    elif kind == 'CUMULANTS':
        cgf = cgf_series(rv, order, kind_lam or None)
        entries = tuple(TableEntry(n, cgf[n]) for n in range(1, order + 1))
    else:
        entries = tuple(
            TableEntry(n, value, k)
            for n, poly in enumerate(euler_polynomials(rv, order, kind_lam or None))
            for k, value in enumerate(poly.coeffs + (Fraction(0),) * (n + 1 - len(poly.coeffs)))
        )
    return TableDocument(format_rv(rv), kind, order, entries, lam)
