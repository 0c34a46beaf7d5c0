#! /usr/bin/env python
"""Command line entry point for netmig"""

import argparse
import sys

from netmig import __version__, commands
from netmig.config.manager import load_settings
from netmig.errors import BaseError
from netmig.logging.logger import getLogger
from netmig.scenarios.writer import FORMATS
from netmig.sweep import CURVES, PARAMETERS

COMMANDS = {
    'plan': commands.cmd_plan,
    'compare': commands.cmd_compare,
    'sweep': commands.cmd_sweep,
    'verify': commands.cmd_verify,
    'validate': commands.cmd_validate,
    'matrix': commands.cmd_matrix,
}


def _global_options():
    """Options accepted before or after the sub-command"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--output', choices=FORMATS, default=argparse.SUPPRESS,
                        help='result format (default: table, csv for sweep)')
    parser.add_argument('--out', default=argparse.SUPPRESS,
                        help='write the result to this file instead of stdout')
    parser.add_argument('--naive-tree', dest='naive_tree', action='store_true',
                        default=argparse.SUPPRESS,
                        help='build and evaluate the explicit search tree')
    parser.add_argument('--max-nodes', dest='max_nodes', type=int,
                        default=argparse.SUPPRESS,
                        help='largest search tree --naive-tree may build')
    parser.add_argument('--config', default=argparse.SUPPRESS,
                        help='extra YAML configuration file')
    parser.add_argument('--debug', action='store_true', default=argparse.SUPPRESS,
                        help='log debug messages')
    return parser


def build_parser():
    common = _global_options()
    parser = argparse.ArgumentParser(
        prog='netmig', parents=[common],
        description='Plan access network migrations that maximize expected NPV.')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    plan = subparsers.add_parser('plan', parents=[common],
                                 help='plan one scenario')
    plan.add_argument('scenario', help='scenario file or bundled scenario name')
    plan.add_argument('--curve', choices=CURVES,
                      help='use a bundled penetration curve')
    plan.add_argument('--goal', choices=('flexible', 'fixed'),
                      help='flexible (any FTTx) or fixed (FTTH only) goal')
    plan.add_argument('--cost-dataset', dest='cost_dataset',
                      help='cost dataset name (OASE, BSG, ...) or .json file')
    plan.add_argument('--opex-model', dest='opex_model',
                      choices=('table', 'percentage'))

    compare = subparsers.add_parser('compare', parents=[common],
                                    help='flexible against fixed goal on every curve')
    compare.add_argument('scenario')

    sweep = subparsers.add_parser('sweep', parents=[common],
                                  help='sensitivity sweep over one parameter')
    sweep.add_argument('scenario')
    sweep.add_argument('--parameter', required=True, choices=PARAMETERS)
    sweep.add_argument('--values', required=True,
                       help='comma separated values')
    sweep.add_argument('--curves', help='comma separated curves (default: all)')

    verify = subparsers.add_parser('verify', parents=[common],
                                   help='cross-check the evaluators and the oracle')
    verify.add_argument('scenario')

    validate = subparsers.add_parser('validate', parents=[common],
                                     help='list scenario violations')
    validate.add_argument('scenario')

    matrix = subparsers.add_parser('matrix', parents=[common],
                                   help='migration CAPEX of every edge')
    matrix.add_argument('scenario')
    return parser


def _settle(options, settings):
    """Fill options the command line left out from the settings"""
    given = vars(options)
    options.output_given = 'output' in given
    options.output = given.get('output', settings.get('output', 'table'))
    options.out = given.get('out', settings.get('out'))
    options.naive_tree = given.get('naive_tree', bool(settings.get('naive_tree')))
    options.max_nodes = given.get('max_nodes', settings.get('max_nodes'))
    oracle = settings.get('oracle') or {}
    options.oracle_max_years = oracle.get('max_years', 5)
    options.oracle_max_technologies = oracle.get('max_technologies', 4)
    return options


def main(argv=None):
    """
    Run one netmig command.

    :param argv: Arguments without the program name; sys.argv when None
    :return: Process exit code
    """
    options = build_parser().parse_args(argv)
    settings = {}
    try:
        settings = load_settings(getattr(options, 'config', None))
    except FileNotFoundError as error:
        getLogger().error(f"IO_ERROR: configuration file {error} not found")
        return 2
    log_config = dict(settings.get('logging') or {})
    if getattr(options, 'debug', False):
        log_config.setdefault('handlers', {'console': {
            'class': 'logging.StreamHandler', 'stream': 'ext://sys.stderr'}})
        log_config['root'] = {'level': 'DEBUG',
                              'handlers': list(log_config['handlers'])}
    getLogger(log_config)
    _settle(options, settings)
    try:
        return COMMANDS[options.command](options)
    except BaseError as error:
        error.action(config=settings)
        error.clear()
        return error.exit_code


if __name__ == '__main__':
    sys.exit(main())
