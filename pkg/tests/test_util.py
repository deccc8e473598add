import os
import logging
import tempfile

import jinja2 as j2

from qcalc.config import Config, THREADS_ENV_VAR
from qcalc.util import TEMPLATE_ENV, NULL_LOGGER
from qcalc.util import get_version
from qcalc.util import get_num_threads
from qcalc.util import closest_match
from qcalc.util import ensure_folder
from qcalc.util import make_stream_logger
from qcalc.testing import IsolatedConfig


def test_get_version():
    version = get_version()
    assert isinstance(version, str)
    assert len(version) != 0
    assert len(version.split('.')) == 3


def test_loading_jinja_templates_from_environment_works():
    # The config template should always exist
    template = TEMPLATE_ENV.get_template('config.yaml.j2')
    assert isinstance(template, j2.Template)

    template = TEMPLATE_ENV.get_template('report.out.j2')
    assert isinstance(template, j2.Template)


def test_sci_filter_renders_missing_values_as_dash():
    template = TEMPLATE_ENV.from_string('{{ a | sci }} {{ b | sci }}')
    assert template.render(a=1.5e-12, b=None) == '1.50e-12 -'


def test_ensure_folder_is_able_to_create_nested_folder_structures():
    with tempfile.TemporaryDirectory() as path:
        folder_path = os.path.join(path, 'nested', 'folder', 'structure')
        ensure_folder(folder_path)
        assert os.path.exists(folder_path)
        assert os.path.isdir(folder_path)


def test_closest_match_suggests_similar_option():
    assert closest_match('4D', ['3D', '4D+', '4D-', 'Q3+']) in ('4D+', '4D-')
    assert closest_match('Q3_plus', ['3D', '4D+', 'Q3+']) == 'Q3+'


def test_get_num_threads_is_positive(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    config = Config()
    config.reset()
    assert get_num_threads(config) >= 1

    monkeypatch.setenv(THREADS_ENV_VAR, '0')
    assert get_num_threads(config) == 1

    with IsolatedConfig(threads=2) as config:
        monkeypatch.delenv(THREADS_ENV_VAR)
        assert get_num_threads(config) == 2


def test_null_logger_swallows_messages(caplog):
    NULL_LOGGER.info('this message goes nowhere')
    assert 'goes nowhere' not in caplog.text


def test_make_stream_logger_writes_to_stderr(capsys):
    logger = make_stream_logger('test_qcalc')
    assert isinstance(logger, logging.Logger)
    logger.info('progress message')

    captured = capsys.readouterr()
    assert 'progress message' in captured.err
    assert captured.out == ''
