import argparse
import logging
import sys
from typing import Optional, Sequence

from .. import __version__
from ..errors import ConfigError, ConstellationError, NumericalError, ParseError
from ..fec import SCC_FEC_LIMIT
from ..utils import logger
from .commands import cmd_evaluate, cmd_export, cmd_fec_ber, cmd_optimize, cmd_reach
from .config import load_config

__all__ = ['EXIT_CONFIG', 'EXIT_NUMERICAL', 'EXIT_OK', 'build_parser', 'main']

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

COMMANDS = {
    'evaluate': 'rates over a distance x launch power grid',
    'optimize': 'pattern-search a GSS constellation for one operating point',
    'fec-ber': 'rates plus HD / Chase-I post-FEC BER over the grid',
    'export': 'write a constellation file and its PAPR / DOF summary',
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gsslink',
        description='4D geometric shell shaping over a single-span 400ZR link.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    for name, help_text in COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument('--config', help='key = value configuration file')
        cmd.add_argument('--seed', type=int, help='run seed')
        cmd.add_argument('--out', dest='output', help='output path (stdout if omitted)')
        cmd.add_argument('--workers', type=int, help='concurrent sweep points / polls')
        cmd.add_argument('--metric', choices=['mi', 'rbmd'], help='objective / optimum metric')
        cmd.add_argument('--constellation', help='pm16qam, pm16qam-ps, gss or a file')
        cmd.add_argument('--progress', action='store_true', help='show progress bars')
        cmd.add_argument('-v', '--verbose', action='store_true', help='debug logging')

    reach = sub.add_parser('reach', help='reach gain of sweep A over sweep B')
    reach.add_argument('a', help='sweep CSV of the candidate')
    reach.add_argument('b', help='sweep CSV of the reference')
    reach.add_argument('--column', default='post_fec_ber_sd', help='BER column to test')
    reach.add_argument('--limit', type=float, default=SCC_FEC_LIMIT, help='BER limit')
    reach.add_argument('--metric', choices=['mi', 'rbmd'], default='rbmd', help='optimum metric')
    reach.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s %(name)s %(levelname)s: %(message)s',
        stream=sys.stderr,
    )


def _run(args: argparse.Namespace) -> None:
    if args.command == 'reach':
        cmd_reach(args.a, args.b, args.column, args.limit, args.metric)
        return

    overrides = {
        'seed': args.seed,
        'output': args.output,
        'workers': args.workers,
        'metric': args.metric,
        'constellation': args.constellation,
        'progress': True if args.progress else None,
    }
    cfg = load_config(args.config, overrides)
    if args.command == 'evaluate':
        cmd_evaluate(cfg)
    elif args.command == 'fec-ber':
        cmd_fec_ber(cfg)
    elif args.command == 'optimize':
        cmd_optimize(cfg)
    else:
        cmd_export(cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command-line entry point.

    Returns:
        int: 0 on success, 2 on configuration, parse or constellation errors,
        3 on numerical failures.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        _run(args)
    except (ConfigError, ParseError, ConstellationError) as err:
        logger.error(f'configuration error: {err}')
        return EXIT_CONFIG
    except NumericalError as err:
        logger.error(f'numerical failure: {err}')
        return EXIT_NUMERICAL
    return EXIT_OK
