import os
import sys

# This is important to be able to call other modules
# in the upper directory (root dir for our code)
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from base import BaseRunner, QesError
from runners.commands import COMMANDS
from runners.report import EXIT_USAGE, Report, Stopwatch, emit
from utils import default_format

SPACE_HELP = 'space expression, e.g. "V1(2,3,a)" (default: the space of the config)'


class QesRunner(BaseRunner):

    def __init__(self, stream=None):
        super().__init__("Exact checks of operators preserving finite-dimensional function spaces")
        self.stream = stream

    def add_commands(self, subparsers):
        check = self.command(subparsers, 'check', 'does an operator preserve a space')
        check.add_argument('--space', default=None, help=SPACE_HELP)
        check.add_argument('--op', required=True, help='operator expression')

        comm = self.command(subparsers, 'comm', 'normal form of a commutator')
        comm.add_argument('--op1', required=True)
        comm.add_argument('--op2', required=True)
        comm.add_argument('--space', default=None, help='also restrict the commutator to this space')

        closure = self.command(subparsers, 'closure', 'commutator table and Killing form of generators')
        closure.add_argument('--space', default=None, help=SPACE_HELP)
        closure.add_argument('--gens', required=True, help='comma separated operator expressions')
        closure.add_argument('--in', dest='j0', default=None,
                             help='diagonal operator for commutators that are polynomials in it')

        fit = self.command(subparsers, 'fit', 'an operator as a polynomial in a diagonal one')
        fit.add_argument('--space', default=None, help=SPACE_HELP)
        fit.add_argument('--op', required=True)
        fit.add_argument('--in', dest='j0', required=True)
        fit.add_argument('--maxdeg', type=int, default=None)

        search = self.command(subparsers, 'search', 'all preserving operators of bounded order')
        search.add_argument('--space', default=None, help=SPACE_HELP)
        search.add_argument('--max-order', dest='max_order', type=int, required=True)
        search.add_argument('--deg', required=True, help='net degree window LO:HI')

        lame = self.command(subparsers, 'lame', 'the Lame operator on its invariant space')
        lame.add_argument('--n', type=int, required=True)
        lame.add_argument('--k2', default=None, help='rational modulus squared (default: symbolic)')
        lame.add_argument('--spectrum', action='store_true', help='characteristic polynomial and root counts')

        catalog = self.command(subparsers, 'catalog', 'the named generators of a space')
        catalog.add_argument('--space', default=None, help=SPACE_HELP)

    def _run(self, args, config):
        fmt = args.format or default_format(config['report']['format'])
        logger = config.get_logger('qes', config['report']['verbosity'])
        report = Report(command=args.command,
                        args={key: value for key, value in vars(args).items() if key != 'command'})
        watch = Stopwatch()
        try:
            COMMANDS[args.command](args, config, report)
        except (QesError, ZeroDivisionError) as err:
            logger.error('%s failed: %s', args.command, err)
            report.fail(err)
        report.elapsed_ms = watch.elapsed_ms()
        logger.info('%s: status %s in %s ms', args.command, report.status, report.elapsed_ms)
        emit(report, fmt, args.out, self.stream or sys.stdout)
        return report.exit_code


def main(argv=None, stream=None):
    try:
        return QesRunner(stream).run(argv)
    except SystemExit as err:
        # argparse usage errors
        return EXIT_USAGE if err.code else 0


if __name__ == "__main__":
    sys.exit(main())
