# path: tests/test_main.py

import json
import os
from fractions import Fraction

import pytest

from main import main
from matrix_gegenbauer import MatrixGegenbauerSession, nu_label
from matrix_gegenbauer.matrix.mvop import hat_p
from matrix_gegenbauer.matrix.serialize import matpoly_from_dict
from matrix_gegenbauer.models import WeightSpec
from matrix_gegenbauer.zeros.export import CSV_COLUMNS


@pytest.fixture(autouse=True)
def test_environment(tmp_path, monkeypatch):
    monkeypatch.setenv('MVG_LOGGING_DIR', str(tmp_path / 'logs'))
    monkeypatch.setenv('MVG_ENV', 'test')
    monkeypatch.setenv('MVG_LOG_LEVEL', 'warning')


def test_invalid_nu_is_a_configuration_error():
    assert main(['verify', 'weight', '--nu', '0']) == 2
    assert main(['verify', 'weight', '--nu', 'abc']) == 2


def test_unknown_suite_is_rejected():
    with pytest.raises(SystemExit):
        main(['verify', 'determinants'])


def test_verify_scalar_size(capsys):
    assert main(['verify', 'connection', '--two-ell', '0', '--nu', '3/2', '--n-max', '3']) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith('identities hold')
    assert 'FAIL' not in out


def test_verify_json_output(capsys):
    assert main(['verify', 'weight', '--two-ell', '1', '--nu', '1', '--format', 'json']) == 0
    checks = json.loads(capsys.readouterr().out)
    assert checks and all(c['passed'] for c in checks)


def test_hatp_json(capsys):
    assert main(['hatp', '--two-ell', '2', '--nu', '3/2', '--n', '3']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['basis'] == 'monomial'
    assert matpoly_from_dict(record) == hat_p(3, WeightSpec.of(2, Fraction(3, 2)))


def test_hatp_degree_out_of_range():
    assert main(['hatp', '--two-ell', '1', '--n-max', '4', '--n', '9']) == 2


def test_genfun_writes_file(tmp_path, capsys):
    out_dir = tmp_path / 'genfun'
    assert main(['genfun', '--two-ell', '1', '--nu', '1', '--out', str(out_dir)]) == 0
    printed = json.loads(capsys.readouterr().out)
    with open(out_dir / 'genfun_2l1_nu1.json', encoding='utf-8') as handle:
        assert json.load(handle) == printed
    assert printed['denominator_offset'] == 1


def test_empty_zero_survey(tmp_path):
    out_dir = tmp_path / 'zeros'
    assert main(['zeros', '--two-ell', '2', '--nu', '3', '--n-min', '5', '--n-max', '4', '--out', str(out_dir)]) == 0
    with open(out_dir / 'zeros_2l2_nu3.csv', encoding='utf-8', newline='') as handle:
        assert handle.read() == ','.join(CSV_COLUMNS) + '\r\n'


def test_zero_survey_assertions(tmp_path, capsys):
    out_dir = tmp_path / 'zeros'
    argv = ['zeros', '--two-ell', '2', '--nu', '3', '--n-min', '3', '--n-max', '5', '--echelon', '1',
            '--require-real', '--require-interlacing', '--no-svg', '--out', str(out_dir)]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert 'real_low_echelon=True' in out
    assert os.listdir(out_dir) == ['zeros_2l2_nu3.csv']


def test_zero_survey_imaginary_pair(tmp_path):
    argv = ['zeros', '--two-ell', '4', '--nu', '3', '--n', '6', '--entry', '2,2', '--require-imaginary',
            '--out', str(tmp_path / 'zeros')]
    assert main(argv) == 0
    assert sorted(os.listdir(tmp_path / 'zeros')) == ['zeros_2l4_nu3.csv', 'zeros_2l4_nu3_n6_2_2.svg']


def test_bad_entry_is_rejected():
    with pytest.raises(SystemExit):
        main(['zeros', '--entry', '2;2'])


def test_session_summary(session_config):
    session = MatrixGegenbauerSession(session_config)
    reports = session.zeros([4, 5], entries=[(0, 0), (1, 1)])
    summary = session.zero_summary(reports)
    assert summary['reports'] == 4
    assert summary['failed'] == 0
    assert summary['roots'] == 18
    assert summary['real_low_echelon'] and summary['real_in_interval']
    assert summary['interlacing'] and summary['interlacing_compared'] == 2


def test_session_hat_p_range(session_config):
    session = MatrixGegenbauerSession(session_config)
    assert session.hat_p(2, 'gegenbauer')['lambda'] == '5'
    with pytest.raises(ValueError):
        session.hat_p(session_config.n_max + 1)


def test_nu_label():
    assert nu_label(Fraction(7, 3)) == '7_3'
    assert nu_label(Fraction(2)) == '2'
