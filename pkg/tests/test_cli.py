import json
import os
from unittest.mock import patch

import pytest

from quasisym.config import ENUMERATION_BOUND_ENV
from quasisym.errors import PartSetError
from quasisym.identities import DegreeResidual, VerificationReport
from quasisym.permcore import PartSet
from quasisym.run import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, parse_parts, run


@pytest.fixture(autouse=True)
def no_env_bound(monkeypatch):
    monkeypatch.delenv(ENUMERATION_BOUND_ENV, raising=False)


def test_parse_parts():
    assert parse_parts('set:2') == PartSet('explicit', frozenset({2}))
    assert parse_parts('even') == PartSet('even')
    with pytest.raises(PartSetError):
        parse_parts('set:0,2')


def test_verify_theorem_json(capsys):
    status = main(['verify', 'theorem', '--parts', 'even', '--max-degree', '4', '--output', 'json', '--no-timing'])
    assert status == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    report = json.loads(lines[0])
    assert report['identity'] == 'theorem'
    assert report['ok'] is True
    assert report['parameters'] == {'parts': 'even', 'max_degree': 4}
    assert 'elapsed_ms' not in report


def test_json_output_is_byte_stable(capsys):
    argv = ['verify', 'extras', '--which', 'hooks', '--max-degree', '4', '--output', 'json', '--no-timing']
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_text_and_json_agree(capsys):
    assert main(['verify', 'ung', '--which', 'h2', '--max-degree', '4']) == EXIT_OK
    text = capsys.readouterr().out
    assert text.splitlines()[0].endswith(': OK')
    assert 'note shape_reading: (2^p)' in text
    assert main(['verify', 'ung', '--which', 'h2', '--max-degree', '4', '--output', 'json']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['ok'] is True


def test_unit_series_part_set(capsys):
    assert main(['verify', 'theorem', '--parts', 'set:5', '--max-degree', '4']) == EXIT_OK
    assert 'OK' in capsys.readouterr().out


def test_expand(capsys):
    status = main(['expand', '--series', 'theorem-rhs', '--parts', 'set:2', '--degree', '4', '--basis', 'G'])
    assert status == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        '1*G[1,2,3,4]',
        '1*G[1,3,2,4]',
        '1*G[1,4,2,3]',
        '1*G[2,3,1,4]',
        '1*G[2,4,1,3]',
    ]


def test_expand_json(capsys):
    assert main(['expand', '--series', 'h1', '--degree', '2', '--basis', 'F', '--output', 'json']) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {
        'basis': 'F',
        'degree': 2,
        'terms': [{'perm': '1,2', 'coeff': '-1'}, {'perm': '2,1', 'coeff': '1'}]
    }


def test_invert(capsys):
    assert main(['invert', '--series', 'h1', '--max-degree', '3', '--output', 'json']) == EXIT_OK
    series = json.loads(capsys.readouterr().out)
    assert series['basis'] == 'G'
    assert series['order'] == 3
    assert series['parts'][2]['terms'] == [{'perm': '1,2', 'coeff': '2'}]


def test_oracle(capsys):
    assert main(['oracle', '--alphabet', '3', '--max-degree', '3', '--output', 'json', '--no-timing']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['identity'] == 'oracle'


def test_verify_all_runs_every_check(capsys):
    assert main(['verify', 'all', '--max-degree', '3', '--output', 'json', '--no-timing']) == EXIT_OK
    reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [report['identity'] for report in reports][:5] == ['theorem'] * 5
    assert all(report['ok'] for report in reports)


@pytest.mark.parametrize('argv,message', [
    (['verify', 'ung', '--max-degree', '3'], 'Bad config'),
    (['verify', 'theorem', '--parts', 'set:0,2'], 'Bad part set'),
    (['verify', 'theorem', '--max-degree', '12'], 'Bad config'),
    (['verify', 'theorem', '--series', 'h1'], 'Conflicting flags'),
    (['oracle', '--which', 'h1'], 'Conflicting flags'),
    (['oracle', '--alphabet', '0', '--max-degree', '2'], 'Bad config'),
    (['verify', 'ung', '--which', 'h1', '--parts', 'even'], 'Conflicting flags'),
    (['verify', 'extras', '--which', 'hooks', '--parts', 'set:2'], 'Conflicting flags'),
    (['verify', 'all', '--parts', 'odd'], 'Conflicting flags'),
    (['oracle', '--parts', 'even'], 'Conflicting flags'),
])
def test_usage_errors(capsys, argv, message):
    assert main(argv) == EXIT_USAGE
    captured = capsys.readouterr()
    assert message in captured.err
    assert captured.out == ''


def test_env_bound_is_enforced(capsys):
    with patch.dict(os.environ, {ENUMERATION_BOUND_ENV: '3'}):
        assert main(['verify', 'theorem', '--max-degree', '4']) == EXIT_USAGE
    assert 'exceeds enumeration_bound 3' in capsys.readouterr().err


def test_unknown_verb_exits():
    with pytest.raises(SystemExit) as error:
        main(['plot'])
    assert error.value.code == 2


def test_failed_verification_exit_status(capsys):
    failing = VerificationReport('theorem', {'parts': 'all', 'max_degree': 1},
                                 per_degree=[DegreeResidual(1, 1, [('1', 1)])])
    with patch('quasisym.run.execute_command', return_value=([failing], False)):
        assert main(['verify', 'theorem', '--max-degree', '1', '--no-timing']) == EXIT_FAILED
    assert 'FAILED' in capsys.readouterr().out


def test_run_accepts_a_plain_dict(capsys):
    status = run({'command': 'verify', 'target': 'extras', 'which': 'ncschur', 'max_degree': 3,
                  'output': 'json', 'timing': False})
    assert status == EXIT_OK
    assert json.loads(capsys.readouterr().out)['identity'] == 'ncschur'
