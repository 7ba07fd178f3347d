import json
from fractions import Fraction

from reports import ReportBuilder, VerificationReport


def test_builder_keeps_first_failure():
    builder = ReportBuilder('demo')
    assert builder.check('equal', Fraction(1, 2), Fraction(2, 4), n=1)
    assert not builder.check('first', Fraction(1, 3), Fraction(1, 2), n=2, k=1)
    assert not builder.check('second', 0, 1)
    builder.note('skipped something')
    builder.note('skipped something')
    report = builder.build()
    assert not report.passed
    assert report.checked == 3
    assert report.failure.identity == 'first'
    assert report.notes == ('skipped something',)
    data = json.loads(json.dumps(report.to_dict()))
    assert data['failure'] == {
        'identity': 'first', 'indices': {'n': 2, 'k': 1}, 'expected': '1/3', 'actual': '1/2', 'detail': '',
    }


def test_tolerance_checks():
    builder = ReportBuilder('float')
    assert builder.check('close', 0.0, 1e-12, tolerance=1e-9)
    assert not builder.check('far', 0.0, 1e-6, tolerance=1e-9)


def test_merge():
    passed = ReportBuilder('a').build()
    builder = ReportBuilder('b')
    builder.check('x', 1, 1)
    builder.check('y', 1, 2)
    merged = VerificationReport.merge('all', [passed, builder.build()])
    assert merged.name == 'all'
    assert not merged.passed
    assert merged.checked == 2
    assert merged.failure.identity == 'y'
    assert VerificationReport.merge('none', []).passed
