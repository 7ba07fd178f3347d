import csv
import io
import json
import queue
from fractions import Fraction

import pytest

from cli import (
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    TableDocument,
    build_cases,
    run,
    run_cases,
)
from cli import suites
from cli.runner import _collect
from cli.suites import DEFAULT_GRID, DEFAULT_LAMBDAS
from combinatorics import stirling2
import environment
from environment import Config
from errors import UsageError
from reports import ReportBuilder
from rv_models import Geometric, Uniform


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def entry(document, n, k=None):
    return next(e for e in document['entries'] if e['n'] == n and e.get('k') == k)


def test_table_spot_values():
    code, text = invoke('table', '--rv', 'bernoulli:p=1/2', '--kind', 'S2Y', '--order', '3')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['rv'] == 'bernoulli:p=1/2'
    assert document['order'] == 3
    assert 'lambda' not in document
    assert entry(document, 3, 2)['value'] == '3/4'
    assert len(document['entries']) == 10

    code, text = invoke('table', '--rv', 'exponential:alpha=1', '--kind', 'S1Y', '--order', '3')
    assert code == EXIT_OK
    assert entry(json.loads(text), 3, 2)['value'] == '-6'


def test_table_constant_is_classical():
    code, text = invoke('table', '--rv', 'constant:c=1', '--kind', 's2y', '--order', '4')
    assert code == EXIT_OK
    for e in json.loads(text)['entries']:
        assert Fraction(e['value']) == stirling2(e['n'], e['k'])


def test_table_json_round_trip_and_csv_agree():
    argv = ('table', '--rv', 'geometric:p=1/3', '--kind', 'S2YL', '--lambda', '1/2', '--order', '5')
    _, text = invoke(*argv)
    document = TableDocument.from_json(text)
    assert document.to_json() + '\n' == text
    assert document.lam == Fraction(1, 2)

    code, csv_text = invoke(*argv, '--format', 'csv')
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(csv_text)))
    assert list(rows[0]) == ['n', 'k', 'value']
    assert [row['value'] for row in rows] == [e['value'] for e in json.loads(text)['entries']]


def test_table_sequences_and_float_column():
    code, text = invoke('table', '--rv', 'poisson:alpha=2', '--kind', 'CUMULANTS', '--order', '4', '--format', 'csv')
    assert code == EXIT_OK
    assert text.splitlines() == ['n,value', '1,2', '2,2', '3,2', '4,2']

    code, text = invoke('table', '--rv', 'constant:c=1', '--kind', 'EULER', '--order', '2', '--float')
    assert code == EXIT_OK
    e = entry(json.loads(text), 1, 0)
    assert e['value'] == '-1/2' and e['float'] == -0.5


def test_table_adell_benyi():
    code, text = invoke('table', '--rv', 'poisson:alpha=1', '--kind', 'ADELL_BENYI', '--order', '3')
    assert code == EXIT_OK
    assert entry(json.loads(text), 3, 2)['value'] == '-3'


@pytest.mark.parametrize('argv, expected', [
    (('table', '--rv', 'geometric:p=3', '--kind', 'S2Y'), EXIT_USAGE),
    (('table', '--rv', 'geometric:p=1/3', '--kind', 'S3Y'), EXIT_USAGE),
    (('table', '--rv', 'geometric:p=1/3', '--kind', 'S2YL'), EXIT_USAGE),
    (('table', '--rv', 'geometric:p=1/3', '--kind', 'S2Y', '--lambda', '1/2'), EXIT_USAGE),
    (('table', '--rv', 'geometric:p=1/3', '--kind', 'S2Y', '--order', '30'), EXIT_USAGE),
    (('table', '--rv', 'normal:mu=0,sigma2=1', '--kind', 'S1Y', '--order', '3'), EXIT_PRECONDITION),
    (('verify', 'everything'), EXIT_USAGE),
    (('expand', '--rv', 'uniform:a=-1,b=1', '--poly', '0,1'), EXIT_PRECONDITION),
    (('expand', '--rv', 'constant:c=1', '--poly', '0,,1'), EXIT_USAGE),
    ((), EXIT_USAGE),
])
def test_exit_codes(argv, expected):
    code, _ = invoke(*argv)
    assert code == expected


def test_expand():
    assert invoke('expand', '--rv', 'constant:c=1', '--poly', '0,0,1') == (EXIT_OK, '1/2, 1, 1\nreconstruction: exact\n')
    assert invoke('expand', '--rv', 'poisson:alpha=1', '--poly', '1') == (EXIT_OK, '1\nreconstruction: exact\n')
    code, text = invoke('expand', '--rv', 'geometric:p=1/2', '--poly', '0,1', '--lambda', '1/2', '--method', 'points')
    assert code == EXIT_OK
    coefficients, flag = text.splitlines()
    assert len(coefficients.split(', ')) == 2
    assert flag == 'reconstruction: exact'


def test_verify_single_rv():
    code, text = invoke('verify', 'orthogonality', '--rv', 'geometric:p=1/3', '--order', '10')
    assert code == EXIT_OK
    document = json.loads(text)
    assert document['passed'] and 'failure' not in document
    assert [case['name'] for case in document['cases']] == [
        'orthogonality geometric:p=1/3 lambda=0', 'orthogonality geometric:p=1/3 lambda=1/2',
    ]

    code, _ = invoke('verify', 'closed-forms', '--rv', 'gamma:alpha=2,beta=1', '--order', '8')
    assert code == EXIT_OK


def test_verify_suites_on_small_grid():
    for suite in ('vanishing', 'euler-roundtrip', 'oracle'):
        code, text = invoke('verify', suite, '--order', '4', '--samples', '3', '--seed', '7')
        assert code == EXIT_OK, text


def test_verify_with_workers_is_ordered():
    code, text = invoke('verify', 'closed-forms', '--order', '4', '--jobs', '2')
    assert code == EXIT_OK
    names = [case['name'] for case in json.loads(text)['cases']]
    expected = [f'closed-forms {rv} lambda={lam}' for rv in DEFAULT_GRID for lam in DEFAULT_LAMBDAS]
    assert names == expected


def test_verification_failure_exit_code(monkeypatch):
    def failing(case):
        builder = ReportBuilder(case.label)
        builder.check('one equals two', 1, 2, n=0)
        return builder.build()

    monkeypatch.setitem(suites.RUNNERS, 'orthogonality', failing)
    code, text = invoke('verify', 'orthogonality', '--rv', 'geometric:p=1/3', '--lambda', '1/2')
    assert code == EXIT_VERIFICATION_FAILED
    failure = json.loads(text)['failure']
    assert failure['identity'] == 'one equals two'
    assert failure['expected'] == 1 and failure['actual'] == 2
    assert failure['case'] == 'orthogonality geometric:p=1/3 lambda=1/2'


def test_verify_at_order_zero():
    code, text = invoke('verify', 'oracle', '--rv', 'geometric:p=1/3', '--order', '0')
    assert code == EXIT_OK, text
    code, text = invoke('verify', 'all', '--order', '0', '--samples', '2', '--seed', '1')
    assert code == EXIT_OK, text


def test_build_cases():
    cases = build_cases('all', [Geometric(Fraction(1, 3)), Uniform(-1, 1)], [None], 4)
    pairs = [(case.suite, str(case.rv)) for case in cases]
    # zero-mean variables are left out of the pairs that need E[Y] != 0
    assert ('orthogonality', 'uniform:a=-1,b=1') not in pairs
    assert ('vanishing', 'uniform:a=-1,b=1') in pairs
    assert [case.case_id for case in cases] == list(range(len(cases)))
    with pytest.raises(UsageError):
        build_cases('nothing', [Geometric(Fraction(1, 3))], [None], 4)
    assert run_cases([], jobs=4) == []


def test_config_from_environment(monkeypatch):
    monkeypatch.setenv('PROB_STIRLING_ORDER', '3')
    code, text = invoke('table', '--rv', 'constant:c=1', '--kind', 'S2Y')
    assert code == EXIT_OK
    assert json.loads(text)['order'] == 3

    monkeypatch.setenv('PROB_STIRLING_JOBS', 'many')
    with pytest.raises(ValueError):
        Config()
    assert invoke('table', '--rv', 'constant:c=1', '--kind', 'S2Y')[0] == EXIT_USAGE


def test_config_order_cap(monkeypatch):
    config = Config()
    assert config.check_order(30, unsafe=True) == 30
    with pytest.raises(UsageError):
        config.check_order(30)
    monkeypatch.setenv('PROB_STIRLING_ORDER', '40')
    with pytest.raises(ValueError):
        Config()


def test_config_summary_lists_settings(monkeypatch):
    lines = []
    monkeypatch.setattr(environment.logger, 'debug', lines.append)
    Config().log_summary()
    assert lines[0] == lines[2] == lines[-1] == '═' * 80
    assert any(line.startswith('SAMPLES') and line.endswith(': 100') for line in lines)


def test_collect_gives_up_when_workers_are_gone():
    class Exited:
        def is_alive(self):
            return False

    results = queue.Queue()
    results.put((0, None, None))
    assert _collect(results, [Exited()], 1, poll=0.01) == [(0, None, None)]
    results.put((1, None, None))
    with pytest.raises(RuntimeError, match='before reporting 1 cases'):
        _collect(results, [Exited()], 2, poll=0.01)


@pytest.mark.slow
def test_verify_all_on_grid():
    code, text = invoke('verify', 'all', '--order', '8', '--samples', '100')
    assert code == EXIT_OK, json.loads(text).get('failure')
