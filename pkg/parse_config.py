import argparse
import logging
from datetime import datetime
from functools import partial, reduce
from operator import getitem
from pathlib import Path

from logger import setup_logging
from utils import read_json, write_json

DEFAULT_CONFIG = Path(__file__).parent / 'configs' / 'qes-default.json'


class ConfigParser:
    logs_dir_name = 'logs'

    def __init__(self, config, modification=None, run_id=None):
        """
        class to parse configuration json file. Handles engine settings, initializations of spaces
        named in the config, and the logging module.
        :param config: Dict containing configurations, contents of `qes-default.json` file for example.
        :param modification: Dict keychain:value, specifying position values to be replaced from config dict.
        :param run_id: Unique Identifier for a run. Used to place the run log. Timestamp is being used as default
        """
        # load config file and apply modification
        self._config = _update_config(config, modification)

        # set save_dir where the run log and the effective config will be saved.
        save_dir = Path(self.config['report']['save_dir'])

        exper_name = self.config['name']
        if run_id is None:  # use timestamp as default run-id
            run_id = datetime.now().strftime(r'%m%d_%H%M%S_%f')
        self._log_dir = save_dir / self.logs_dir_name / exper_name / run_id

        exist_ok = run_id == ''
        self.log_dir.mkdir(parents=True, exist_ok=exist_ok)

        write_json(self.config, self.log_dir / 'config.json')

        # configure logging module
        setup_logging(self.log_dir)
        self.log_levels = {
            0: logging.WARNING,
            1: logging.INFO,
            2: logging.DEBUG
        }

    @staticmethod
    def add_options(args, options):
        for opt in options:
            if opt.action:
                args.add_argument(*opt.flags, default=None, action=opt.action, help=opt.help)
            else:
                args.add_argument(*opt.flags, default=None, type=opt.type, help=opt.help)

    @classmethod
    def from_args(cls, args, options=''):
        """
        Initialize this class from some cli arguments, either a parser or an
        already parsed namespace whose parser knows ``options``.
        """
        if isinstance(args, argparse.ArgumentParser):
            cls.add_options(args, options)
            args = args.parse_args()

        cfg_fname = Path(args.config) if args.config is not None else DEFAULT_CONFIG
        assert cfg_fname.is_file(), 'configuration file {} does not exist'.format(cfg_fname)
        config = read_json(cfg_fname)

        # parse custom cli options into dictionary; --seed drives the resampling
        modification = {opt.target: getattr(args, _get_opt_name(opt.flags)) for opt in options}
        modification['search;seed'] = args.seed

        return cls(config, modification)

    def _constructor(self, name, module, kwargs):
        entry = self[name]
        module_args = dict(entry['args'])
        assert not set(kwargs) & set(module_args), 'Overwriting kwargs given in config file is not allowed'
        module_args.update(kwargs)
        return getattr(module, entry['type']), module_args

    def init_obj(self, name, module, *args, **kwargs):
        """
        Instance of the type named under ``name`` in the config,
        e.g. ``config.init_obj('space', SPACE_TYPES)`` is ``SqrtP2(n=3)``.
        """
        ctor, module_args = self._constructor(name, module, kwargs)
        return ctor(*args, **module_args)

    def init_ftn(self, name, module, *args, **kwargs):
        ctor, module_args = self._constructor(name, module, kwargs)
        return partial(ctor, *args, **module_args)

    def __getitem__(self, name):
        return self.config[name]

    def __contains__(self, name):
        return name in self.config

    def get_logger(self, name, verbosity=2):
        assert verbosity in self.log_levels, 'verbosity {} is not one of {}'.format(verbosity, sorted(self.log_levels))
        logger = logging.getLogger(name)
        logger.setLevel(self.log_levels[verbosity])
        return logger

    # setting read-only attributes
    @property
    def config(self):
        return self._config

    @property
    def log_dir(self):
        return self._log_dir

# helper functions to update config dict with custom cli options


def _update_config(config, modification):
    if modification is None:
        return config

    for k, v in modification.items():
        if v is not None:
            _set_by_path(config, k, v)
    return config


def _get_opt_name(flags):
    for flg in flags:
        if flg.startswith('--'):
            return flg.replace('--', '')
    return flags[0].replace('--', '')


def _set_by_path(tree, keys, value):
    """Set a value in a nested object in tree by sequence of keys."""
    keys = keys.split(';')
    _get_by_path(tree, keys[:-1])[keys[-1]] = value


def _get_by_path(tree, keys):
    """Access a nested object in tree by sequence of keys."""
    return reduce(getitem, keys, tree)
