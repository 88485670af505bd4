import argparse

import utils as util
from parse_config import ConfigParser

__all__ = ['BaseRunner', 'CustomArgs']

CustomArgs = util.namedtuple_with_defaults(
    'CustomArgs', 'flags type target action help', (None, ) * 5)


class BaseRunner:
    """
    Command-line front end: static arguments handled by the runner, dynamic
    arguments written into the json configuration, one subparser per command.
    """

    def __init__(self, description="Base Parser Description"):
        self.static_arguments = argparse.ArgumentParser(description=description)
        # options shared by every subcommand
        self.common_arguments = argparse.ArgumentParser(add_help=False)
        self.dynamic_arguments = []

    def add_static_arguments(self):
        """
            Arguments which are not related to the json file
            Where specific logic need to be performed for configuration
            purposes for example
        """
        args = self.common_arguments
        args.add_argument('-c', '--config', default=None, type=str,
                          help='config file path (default: configs/qes-default.json)')
        args.add_argument('-s', '--seed', default=None, type=int,
                          help='Seed of the nonresonant resampling')
        args.add_argument('-o', '--out', default=None, type=str,
                          help='write the report to this file instead of stdout')

    def add_dynamic_arguments(self):
        """
            custom cli options to modify configuration from default values
            given in json file.
        """
        self.dynamic_arguments = [
            CustomArgs(['--save_dir'], type=str, target='report;save_dir',
                       help='directory of the run logs'),
            CustomArgs(['-f', '--format'], type=util.format_name, target='report;format',
                       help='json or text (default: ${} or the config)'.format(util.FORMAT_ENV)),
            CustomArgs(['-v', '--verbosity'], type=int, target='report;verbosity',
                       help='0, 1 or 2 for warning, info or debug logs'),
        ]

    def command(self, subparsers, name, help):
        return subparsers.add_parser(name, help=help, parents=[self.common_arguments])

    def add_commands(self, subparsers):
        raise NotImplementedError

    def parse(self, argv=None):
        self.add_static_arguments()
        self.add_dynamic_arguments()
        ConfigParser.add_options(self.common_arguments, self.dynamic_arguments)
        subparsers = self.static_arguments.add_subparsers(dest='command', metavar='command')
        subparsers.required = True
        self.add_commands(subparsers)
        args = self.static_arguments.parse_args(argv)
        config = ConfigParser.from_args(args, self.dynamic_arguments)
        return args, config

    def _run(self, args, config):
        raise NotImplementedError

    def run(self, argv=None):
        args, config = self.parse(argv)
        return self._run(args, config)
