import io
import json
from pathlib import Path

import jsonschema
import pytest

from calculus import commutator
from kernel import format_scalar
from algebra import fit_poly_in_J0
from runners.qes_runner import main
from runners.report import Report, exact, validate
from spaces import V1Space, make_bosonic
from utils import FORMAT_ENV

CONFIGS = Path(__file__).parent.parent / 'configs'


@pytest.fixture(autouse=True)
def no_format_env(monkeypatch):
    monkeypatch.delenv(FORMAT_ENV, raising=False)


def run(argv, tmp_path):
    stream = io.StringIO()
    code = main(argv + ['--save_dir', str(tmp_path)], stream=stream)
    return code, stream.getvalue()


def run_json(argv, tmp_path):
    code, out = run(argv, tmp_path)
    return code, json.loads(out)


def test_check_preserving_operator(tmp_path):
    code, doc = run_json(['check', '--space', 'V1(2,3,a)', '--op', 'Jp(2,3,a)'], tmp_path)
    assert code == 0
    assert doc['status'] is True
    assert doc['verdicts'] == {'invariant': True}
    assert doc['data']['dim'] == '7'
    assert len(doc['data']['matrix']) == 7
    validate(doc)


def test_check_failing_operator_names_a_witness(tmp_path):
    code, doc = run_json(['check', '--space', 'V1(1,1,a)', '--op', 'd'], tmp_path)
    assert code == 1
    assert doc['status'] is False
    assert doc['witnesses'][0][:3] == ['invariant', 'a', 'a-1']


def test_fit_command(tmp_path):
    argv = ['fit', '--space', 'V1(1,1,a)', '--op', 'comm(Jp(1,1,a), Jm(1,1,a))', '--in', 'J0(1,1,a)',
            '--maxdeg', '3']
    code, doc = run_json(argv, tmp_path)
    assert code == 0
    assert doc['data']['fit']['ok'] is True
    plus, zero, minus = make_bosonic(1, 1)
    expected = fit_poly_in_J0(commutator(plus, minus), zero, V1Space(1, 1), max_deg=3)
    assert doc['data']['fit']['coeffs'] == [format_scalar(c) for c in expected.coeffs]


def test_comm_command(tmp_path):
    code, doc = run_json(['comm', '--op1', 'd', '--op2', 'x'], tmp_path)
    assert code == 0
    assert doc['normal_forms'] == {'comm': '(1)'}
    assert doc['data']['vanishes'] is False


def test_closure_command(tmp_path):
    argv = ['closure', '--space', 'V1(1,1,a)', '--gens', 'Jp(1,1,a), J0(1,1,a), Jm(1,1,a)', '--in', 'J0(1,1,a)']
    code, doc = run_json(argv, tmp_path)
    assert code == 0
    assert doc['verdicts']['closes'] is True
    assert doc['verdicts']['jacobi'] is True


def test_closure_failure_is_a_false_verdict(tmp_path):
    code, doc = run_json(['closure', '--space', 'P(2)', '--gens', 'jp(2), jm()'], tmp_path)
    assert code == 1
    assert doc['verdicts']['closes'] is False
    assert doc['witnesses'][0][:2] == ['closes', '[jp(2), jm()]']


def test_search_on_polynomials(tmp_path):
    code, doc = run_json(['search', '--space', 'P(2)', '--max-order', '1', '--deg=-1:1'], tmp_path)
    assert code == 0
    assert doc['data']['dimension'] == '4'
    assert 'resample_agrees' not in doc['verdicts']


def test_search_resamples_generic_spaces(tmp_path):
    code, doc = run_json(['search', '--space', 'V1(1,1,a)', '--max-order', '2', '--deg=-1:1'], tmp_path)
    assert doc['verdicts']['self_consistent'] is True
    assert int(doc['data']['dimension']) >= 4
    assert len(doc['data']['resamples']) == 2


def test_bad_window_is_an_input_error(tmp_path):
    code, doc = run_json(['search', '--space', 'P(2)', '--max-order', '1', '--deg', '2:1'], tmp_path)
    assert code == 2
    assert doc['error'].startswith('PreconditionError')


def test_lame_spectrum(tmp_path):
    code, doc = run_json(['lame', '--n', '1', '--spectrum'], tmp_path)
    assert code == 0
    assert doc['data']['degree'] == '3'
    assert doc['verdicts']['real_distinct'] is True


def test_degenerate_lame_modulus(tmp_path):
    code, doc = run_json(['lame', '--n', '1', '--k2', '1'], tmp_path)
    assert code == 2
    assert doc['error'].startswith('DegenerateExtension')


def test_catalog_of_a_monomial_space(tmp_path):
    code, doc = run_json(['catalog', '--space', 'V1(2,1,a)'], tmp_path)
    assert code == 0
    names = [entry['name'] for entry in doc['data']['generators']]
    assert {'Jp', 'K', 'Kp', 'Q_0', 'Q_1', 'Qb_0', 'Qb_1'} <= set(names)


def test_parse_error_exits_with_usage_code(tmp_path):
    code, doc = run_json(['check', '--space', 'V1(1,1,a)', '--op', 'x +'], tmp_path)
    assert code == 2
    assert doc['status'] is False
    assert doc['error'].startswith('DslSyntaxError')


def test_missing_flag_is_a_usage_error(tmp_path):
    code, out = run(['check', '--space', 'V1(1,1,a)'], tmp_path)
    assert code == 2
    assert out == ''


def reject_float(text):
    raise AssertionError('float {} in a report'.format(text))


def test_reports_carry_no_floats(tmp_path):
    _, out = run(['lame', '--n', '2', '--k2', '1/2', '--spectrum'], tmp_path)
    doc = json.loads(out)
    assert doc['data']['samples'][0]['k2'] == '1/2'
    json.loads(out, parse_float=reject_float)
    with pytest.raises(TypeError):
        exact({'x': 0.5})


def test_schema_rejects_malformed_reports():
    document = Report('check').to_dict()
    validate(document)
    document['status'] = 'yes'
    with pytest.raises(jsonschema.ValidationError):
        validate(document)


def test_text_format_flag(tmp_path):
    code, out = run(['check', '--space', 'V1(1,1,a)', '--op', 'Jp(1,1,a)', '--format', 'text'], tmp_path)
    assert code == 0
    assert out.startswith('command')
    assert 'invariant' in out


def test_format_from_the_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, 'text')
    _, out = run(['comm', '--op1', 'd', '--op2', 'x'], tmp_path)
    assert out.startswith('command')
    _, out = run(['comm', '--op1', 'd', '--op2', 'x', '--format', 'json'], tmp_path)
    assert json.loads(out)['command']['name'] == 'comm'


def test_config_supplies_the_space_and_format(tmp_path):
    config = str(CONFIGS / 'sqrt-p2-closure.json')
    code, out = run(['check', '-c', config, '--op', 'f*d'], tmp_path)
    assert code == 0
    assert out.startswith('command')
    assert 'SqrtP2' in out


def test_missing_space_is_an_input_error(tmp_path):
    code, doc = run_json(['check', '--op', 'd'], tmp_path)
    assert code == 2
    assert 'no --space' in doc['error']


def test_report_written_to_a_file(tmp_path):
    target = tmp_path / 'report.json'
    code, out = run(['comm', '--op1', 'x', '--op2', 'x', '--out', str(target)], tmp_path)
    assert code == 0
    assert out == ''
    doc = json.loads(target.read_text())
    assert doc['data']['vanishes'] is True
    assert (tmp_path / 'logs' / 'qes-default').is_dir()
