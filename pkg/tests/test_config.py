import argparse
import copy
import logging

import pytest

from extension import QuadSpace
from parse_config import DEFAULT_CONFIG, ConfigParser
from runners.commands import SPACE_TYPES
from runners.qes_runner import QesRunner
from utils import FORMAT_ENV, default_format, format_name, namedtuple_with_defaults, read_json

SQRT_CONFIG = DEFAULT_CONFIG.parent / 'sqrt-p2-closure.json'


def make_config(tmp_path, path=DEFAULT_CONFIG, modification=None):
    config = copy.deepcopy(read_json(path))
    config['report']['save_dir'] = str(tmp_path)
    return ConfigParser(config, modification, run_id='')


def test_modifications_follow_keychains(tmp_path):
    config = make_config(tmp_path, modification={'report;format': 'text', 'search;seed': None, 'fit;max_deg': 5})
    assert config['report']['format'] == 'text'
    assert config['search']['seed'] == 7
    assert config['fit']['max_deg'] == 5


def test_effective_config_is_saved(tmp_path):
    config = make_config(tmp_path, modification={'fit;max_deg': 4})
    assert config.log_dir == tmp_path / 'logs' / 'qes-default'
    saved = read_json(config.log_dir / 'config.json')
    assert saved['fit']['max_deg'] == 4


def test_space_from_the_config(tmp_path):
    config = make_config(tmp_path, SQRT_CONFIG)
    assert 'space' in config
    space = config.init_obj('space', SPACE_TYPES)
    assert isinstance(space, QuadSpace)
    assert space.n == 3
    assert str(space).startswith('SqrtP2(3')
    with pytest.raises(AssertionError):
        config.init_obj('space', SPACE_TYPES, n=2)
    build = config.init_ftn('space', SPACE_TYPES)
    assert build().n == 3
    assert 'space' not in make_config(tmp_path)


def test_logger_verbosity(tmp_path):
    config = make_config(tmp_path)
    assert config.get_logger('qes.quiet', 0).level == logging.WARNING
    assert config.get_logger('qes.chatty', 2).level == logging.DEBUG
    with pytest.raises(AssertionError):
        config.get_logger('qes', 5)


def test_from_parsed_arguments(tmp_path):
    runner = QesRunner()
    runner.add_dynamic_arguments()
    args = argparse.Namespace(config=None, seed=3, save_dir=str(tmp_path), format='text', verbosity=None)
    config = ConfigParser.from_args(args, runner.dynamic_arguments)
    assert config['search']['seed'] == 3
    assert config['report']['format'] == 'text'
    assert config['report']['verbosity'] == 1
    assert config.log_dir.parent == tmp_path / 'logs' / 'qes-default'


def test_format_names(monkeypatch):
    assert format_name(' TEXT ') == 'text'
    with pytest.raises(ValueError):
        format_name('xml')
    monkeypatch.delenv(FORMAT_ENV, raising=False)
    assert default_format() == 'json'
    assert default_format('text') == 'text'
    monkeypatch.setenv(FORMAT_ENV, 'text')
    assert default_format() == 'text'


def test_namedtuple_defaults():
    Pair = namedtuple_with_defaults('Pair', 'left right', {'right': 2})
    assert Pair(1) == (1, 2)
    assert Pair() == (None, 2)
