import argparse
import sys

from appsettings import SettingsParser

from cbgraph import context
from cbgraph import log

commands = ['gen', 'check', 'conditions', 'substructures', 'triangles', 'comb',
            'fellow', 'fftp', 'dismantle', 'core', 'stabilize', 'helly', 'cover', 'corpus']

# commands whose first operand is a graph (file, "-" or family:params)
graph_commands = [c for c in commands if c not in ('gen', 'corpus')]

with open(context.version_path) as version_file:
    __version__ = version_file.read().strip()


def int_list(string):
    try:
        values = [int(t) for t in string.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("%s is not a comma-separated list of integers" % string)
    if not values:
        raise argparse.ArgumentTypeError("Empty integer list")
    return values


def positive_int(string):
    try:
        value = int(string)
    except ValueError:
        raise argparse.ArgumentTypeError("%s is not an integer" % string)
    if value < 1:
        raise argparse.ArgumentTypeError("%s must be at least 1" % string)
    return value


class StoreTrue(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, True)
        setattr(namespace, self.dest + '_is_set', True)


class StoreValue(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, self.dest + '_is_set', True)


args = None


def config(argv=None, parser=None):
    global args

    if args is not None and argv is None:
        return args

    usage_bin = 'run' if sys.platform == 'win32' else 'run.sh'

    if parser is None:
        parser = SettingsParser(description='cbgraph recognizes and studies graphs in which every ball is convex.',
                                usage='%s <command> [operands] [options]' % usage_bin,
                                yaml_file=open(context.settings_path))

    parser.add_argument('command',
                        metavar='<command>',
                        action=StoreValue,
                        choices=commands,
                        help='Command to run. Can be one of: %(choices)s')

    parser.add_argument('operands',
                        metavar='<operand>',
                        action=StoreValue,
                        nargs='*',
                        default=[],
                        help='A graph (edge list file, "-" for standard input, or family:params such as cycle:5) '
                             'followed by command operands: vertices for comb and fftp, condition names for '
                             'conditions, a vertex set for helly. For gen: the family name and its parameters.')

    parser.add_argument('--format',
                        metavar='<string>',
                        action=StoreValue,
                        default='text',
                        choices=['text', 'kv'],
                        help='Report format. kv prints one key=value pair per line and is deterministic. '
                             'Can be one of: %(choices)s. Default: %(default)s')

    parser.add_argument('--threads',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=context.num_cores,
                        type=positive_int,
                        help='Maximum number of worker threads. Results do not depend on it. Default: %(default)s')

    parser.add_argument('--max-dist',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=None,
                        type=positive_int,
                        help='Only test local conditions at distance at most this value. Default: unbounded')

    parser.add_argument('--base',
                        metavar='<integer>',
                        action=StoreValue,
                        default=None,
                        type=int,
                        help='Base vertex for BFS orders and covers. Default: every vertex for dismantle, 0 for cover')

    parser.add_argument('--power',
                        metavar='<integer list>',
                        action=StoreValue,
                        default=[2],
                        type=int_list,
                        help='Comma-separated graph powers whose dismantlability is checked. Default: 2')

    parser.add_argument('--seeds',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=3,
                        type=positive_int,
                        help='Number of BFS tiebreak seeds per base vertex. Default: %(default)s')

    parser.add_argument('--radius',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=3,
                        type=positive_int,
                        help='Number of layers of the universal cover to build. Default: %(default)s')

    parser.add_argument('--cap',
                        metavar='<integer>',
                        action=StoreValue,
                        default=8,
                        type=int,
                        help='Largest set size tried by the Helly and simplex searches. Default: %(default)s')

    parser.add_argument('--samples',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=20000,
                        type=positive_int,
                        help='Number of random quadruples for the fellow traveler scan. Default: %(default)s')

    parser.add_argument('--seed',
                        metavar='<integer>',
                        action=StoreValue,
                        default=0,
                        type=int,
                        help='Random seed for sampling and random corpora. Default: %(default)s')

    parser.add_argument('--exhaustive',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Scan every quadruple (fellow) or prove clique-path uniqueness by backtracking (comb). Default: %(default)s')

    parser.add_argument('--max-len',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=6,
                        type=positive_int,
                        help='Longest non-geodesic path scanned by fftp. Default: %(default)s')

    parser.add_argument('--perm',
                        metavar='<string>',
                        action=StoreValue,
                        default=None,
                        help='Automorphism for stabilize: comma-separated images of the vertices '
                             'in increasing id order, given as input ids, or shift:k '
                             'moving each vertex k places along that order')

    parser.add_argument('--output', '-o',
                        metavar='<path>',
                        action=StoreValue,
                        default='-',
                        help='Edge list written by gen. "-" writes to standard output. Default: %(default)s')

    parser.add_argument('--emit',
                        metavar='<path>',
                        action=StoreValue,
                        default=None,
                        help='Write the cover built by cover as an edge list, with its image/height map next to it')

    parser.add_argument('--no-validate',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Build the cover without checking the local conditions first. Default: %(default)s')

    parser.add_argument('--compare-simplex',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Also compute the simplex numbers next to the Helly numbers. Default: %(default)s')

    parser.add_argument('--sections',
                        metavar='<integer list>',
                        action=StoreValue,
                        default=[2, 3, 4, 5],
                        type=int_list,
                        help='Pentagon chain truncations included in the corpus. Default: 2,3,4,5')

    parser.add_argument('--corpus-size',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=500,
                        type=positive_int,
                        help='Number of random graphs in the corpus. Default: %(default)s')

    parser.add_argument('--corpus-max-n',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=12,
                        type=positive_int,
                        help='Largest random graph in the corpus. At most 14. Default: %(default)s')

    parser.add_argument('--atlas-max-n',
                        metavar='<positive integer>',
                        action=StoreValue,
                        default=7,
                        type=positive_int,
                        help='Enumerate every connected graph up to this many vertices. At most 7. Default: %(default)s')

    parser.add_argument('--debug-direct',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Cross-check the 3-convex balls test against unrestricted convexity. Default: %(default)s')

    parser.add_argument('--all-methods',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Include the well-bridged characterization in check. Default: %(default)s')

    parser.add_argument('--log-json',
                        metavar='<path>',
                        action=StoreValue,
                        default=None,
                        help='Write a JSON log of the run to this path')

    parser.add_argument('--quiet',
                        action=StoreTrue,
                        nargs=0,
                        default=False,
                        help='Do not print log lines. Default: %(default)s')

    parser.add_argument('--version',
                        action='version',
                        version='cbgraph {0}'.format(__version__),
                        help='Displays version number and exits. ')

    args = parser.parse_args(argv)

    if args.command in graph_commands and not args.operands:
        log.CB_ERROR("%s needs a graph operand" % args.command)
        sys.exit(2)

    if args.command == 'gen' and not args.operands:
        log.CB_ERROR("gen needs a family name")
        sys.exit(2)

    if args.command == 'stabilize' and not args.perm:
        log.CB_ERROR("stabilize needs --perm")
        sys.exit(2)

    if args.cap < 2:
        log.CB_ERROR("--cap must be at least 2")
        sys.exit(2)

    if args.corpus_max_n > 14 or args.corpus_max_n < 3:
        log.CB_ERROR("--corpus-max-n must be between 3 and 14")
        sys.exit(2)

    if args.atlas_max_n > 7:
        log.CB_ERROR("--atlas-max-n must be at most 7")
        sys.exit(2)

    if any(p < 1 for p in args.power):
        log.CB_ERROR("--power values must be at least 1")
        sys.exit(2)

    if args.emit is not None and args.command != 'cover':
        log.CB_WARNING("--emit is only used by cover, ignoring")
        args.emit = None

    return args
