import os

import orjson
import pytest
from click.testing import CliRunner

from qcalc.config import Config
from qcalc.fodc import THREE_D, Q3_MINUS
from qcalc.fodc import UnknownCalculusError
from qcalc.typing import assert_record_dict
from qcalc.testing import IsolatedConfig
from qcalc.util import get_version
from qcalc.cli import EXIT_PASSED, EXIT_CONFIG_ERROR, EXIT_WINDOW_TOO_SMALL
from qcalc.cli import RunPlan, PlanError
from qcalc.cli import cli, run

from .util import SMALL_WINDOW

WINDOW_ARGS = ['--n-max', str(SMALL_WINDOW['n_max']),
               '--k-min', str(SMALL_WINDOW['k_min']),
               '--k-max', str(SMALL_WINDOW['k_max'])]


def test_version():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', '--version'])
    assert result.exit_code == EXIT_PASSED
    assert get_version() in result.stdout


def test_missing_config_file_is_a_config_error():
    runner = CliRunner()
    result = runner.invoke(cli, ['--config', '/does/not/exist.yaml', '--version'])
    assert result.exit_code == EXIT_CONFIG_ERROR


def test_config_command_writes_the_config_file(tmp_path):
    runner = CliRunner()
    path = os.path.join(tmp_path, 'config.yaml')
    try:
        result = runner.invoke(cli, ['--no-config', 'config', '--path', path])
        assert result.exit_code == EXIT_PASSED
        assert os.path.exists(path)
        assert path in result.stdout
        assert Config().get_q_value() == '1/2'

        # Without --force the existing file is kept
        with open(path, mode='w') as file:
            file.write('verify:\n    q: "1/3"\n')
        result = runner.invoke(cli, ['--no-config', 'config', '--path', path])
        assert result.exit_code == EXIT_PASSED
        with open(path) as file:
            assert '1/3' in file.read()
    finally:
        Config().reset()


@pytest.mark.parametrize('args', [
    ['--q', '2'],
    ['--q', 'half'],
    ['--calculus', '5D'],
    ['--tol', '0'],
])
def test_invalid_parameters_are_config_errors(args):
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'verify-disk', *args])
    assert result.exit_code == EXIT_CONFIG_ERROR, result.output


def test_too_small_window():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'verify-disk', '--n-max', '2', '--k-min', '-1', '--k-max', '1'])
    assert result.exit_code == EXIT_WINDOW_TOO_SMALL, result.output


def test_verify_disk_text_report():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'verify-disk', *WINDOW_ARGS])
    assert result.exit_code == EXIT_PASSED, result.output
    lines = result.stdout.strip().splitlines()
    assert lines[-1] == '7/7 checks passed'


def test_verify_symbolic_json_report():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'verify-symbolic', '--calculus', THREE_D, '--format', 'json'])
    assert result.exit_code == EXIT_PASSED, result.output
    data = orjson.loads(result.stdout)
    assert len(data) > 9
    for row in data:
        assert_record_dict(row)
        assert row['pass'] is True

    assert {row['calculus'] for row in data} == {None, THREE_D}

    sampled = {row['check']: row['witness'] for row in data if row['check'] in ('absorption', 'leibniz')}
    assert sampled == {'absorption': '100 samples', 'leibniz': '100 samples'}


def test_run_command_uses_the_config_file():
    runner = CliRunner()
    with IsolatedConfig(**SMALL_WINDOW) as config:
        result = runner.invoke(cli, ['--config', config.path, 'run', '--mode', 'disk', '--format', 'json'])
        assert result.exit_code == EXIT_PASSED, result.output
        data = orjson.loads(result.stdout)
        assert len(data) == 7
        assert data[0]['window']['n_max'] == SMALL_WINDOW['n_max']


def test_run_plan_from_options():
    with IsolatedConfig(q_value='1/3', n_max=5, k_min=-4, k_max=6) as config:
        plan = RunPlan.from_options(config, 'operator', alpha_r='0.3,0,0.3', calculus=('THREE_D', 'Q3-'))
        assert plan.q_value == '1/3'
        assert (plan.n_max, plan.k_min, plan.k_max) == (5, -4, 6)
        assert plan.alpha_r == (0.3, 0.0, 0.3)
        assert plan.calculus == (THREE_D, Q3_MINUS)
        assert plan.window.dim == 5 * 11

        # Explicit options take precedence over the config
        plan = RunPlan.from_options(config, 'operator', q_value='2/3', n_max=7)
        assert plan.q_value == '2/3'
        assert plan.n_max == 7


def test_run_plan_validation():
    with pytest.raises(PlanError):
        RunPlan(mode='everything')

    with pytest.raises(PlanError):
        RunPlan(epsilon=0)

    with pytest.raises(UnknownCalculusError):
        RunPlan(calculus=('3d-ish', ))


def test_run_is_independent_of_the_number_of_threads():
    plan = RunPlan(mode='disk', **SMALL_WINDOW)
    records_single = run(plan, num_threads=1)
    records_multi = run(plan, num_threads=4)
    assert [r.to_dict() for r in records_single] == [r.to_dict() for r in records_multi]


def test_gram_command_with_default_options():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'gram', '--format', 'json'])
    assert result.exit_code == EXIT_PASSED, result.output
    data = orjson.loads(result.stdout)
    assert data[-1]['status'] == 'measured'
    assert all(row['pass'] for row in data)


def test_all_command_with_default_options():
    runner = CliRunner()
    result = runner.invoke(cli, ['--no-config', 'all', '--format', 'json'])
    assert result.exit_code == EXIT_PASSED, result.output
    data = orjson.loads(result.stdout)
    checks = {row['check'] for row in data}
    assert {'faithfulness_rank', 'gram_matrix', 'growth_probe', 'disk_calculus'} <= checks
    assert all(row['pass'] for row in data), [row for row in data if not row['pass']]
