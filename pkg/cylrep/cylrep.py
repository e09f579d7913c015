#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cylrep.py
#
# Copyright 2020 The cylrep authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Main code for cylrep.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import logging.config
import random
from dataclasses import asdict, dataclass, fields
from typing import List, Optional

import coloredlogs
from voluptuous import ALLOW_EXTRA, All, Any, In, Invalid, Range, Schema

from .cylrepexceptions import CylrepError, InvalidInputFile, UnitClosureError
from .lib.algebra import Klass, mutate, random_structure
from .lib.axioms import (AX7_DEPTH,
                         AX7_MODE,
                         AX7_MODES,
                         ax7_inequalities,
                         catalog,
                         holds_atomwise,
                         holds_exhaustive,
                         validate)
from .lib.game import MAX_NODES, MAX_ROUNDS, Limits
from .lib.helpers import (algebra_to_dict,
                          load_algebra,
                          load_network,
                          load_representation,
                          load_unit,
                          to_json,
                          write_json)
from .lib.network import PreNetwork, check_network, network_to_dict
from .lib.represent import (CLOSURE_KINDS,
                            build_representation,
                            close_unit,
                            import_unit,
                            representation_to_dict,
                            unit_to_dict,
                            verify_embedding)

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__credits__ = ["The cylrep authors"]
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep'''  # non-class objects like functions can consult this Logger object
LOGGER = logging.getLogger(LOGGER_BASENAME)

# Constants, exit codes
EXIT_PASS = 0  # the report holds no failure
EXIT_FAIL = 1  # validation or verification failed, or a play stopped on a budget where saturation was required
EXIT_USAGE = 2  # bad arguments or malformed input files

# Constants, defaults
ORACLE_ATOM_BOUND = 6  # largest structure the oracle command checks exhaustively
ORACLE_MAX_ATOMS = 5  # atom count of the random structures drawn by the oracle command
COMMANDS = ('check', 'represent', 'verify', 'check-network', 'import-unit', 'close-unit', 'oracle')
KLASS_NAMES = [klass.value for klass in Klass]

COMMAND_SCHEMA = Schema({'command': In(COMMANDS),
                         'klass': Any(None, In(KLASS_NAMES)),
                         'ax7_depth': All(int, Range(min=0)),
                         'ax7_mode': In(AX7_MODES),
                         'max_rounds': All(int, Range(min=0)),
                         'max_nodes': All(int, Range(min=0)),
                         'oracle_atom_bound': All(int, Range(min=0)),
                         'random': All(int, Range(min=0)),
                         'kind': In(CLOSURE_KINDS)},
                        extra=ALLOW_EXTRA)


@dataclass(frozen=True)
class CommandConfig:  # pylint: disable=too-many-instance-attributes
    """The validated options of one invocation."""

    command: str
    inputs: List[str]
    output: Optional[str] = None
    network_output: Optional[str] = None
    klass: Optional[str] = None
    ax7_depth: int = AX7_DEPTH
    ax7_mode: str = AX7_MODE
    max_rounds: int = MAX_ROUNDS
    max_nodes: int = MAX_NODES
    debug_check_networks: bool = False
    oracle_atom_bound: int = ORACLE_ATOM_BOUND
    json: bool = False
    allow_bounded: bool = False
    skip_validation: bool = False
    use_oracle: bool = False
    kind: str = 'diagonalizable'
    random: int = 0
    seed: int = 0

    @property
    def limits(self):
        """The play budgets."""
        return Limits(self.max_rounds, self.max_nodes)


def _add_validation_options(parser):
    parser.add_argument('--ax7-depth',
                        help=f'Longest Ax7 instance to check. Defaults to {AX7_DEPTH}.',
                        dest='ax7_depth',
                        type=int,
                        default=AX7_DEPTH)
    parser.add_argument('--ax7-mode',
                        help=f'Reading of the Ax7 side condition. Defaults to {AX7_MODE}.',
                        dest='ax7_mode',
                        default=AX7_MODE,
                        choices=AX7_MODES)


def get_arguments(argv=None):
    """
    Gets us the cli arguments.

    Returns the args as parsed from the argsparser.
    """
    # https://docs.python.org/3/library/argparse.html
    parser = argparse.ArgumentParser(
        description='''cylrep - validate and represent finite cylindric-type algebras''')
    parser.add_argument('--log-level',
                        '-L',
                        help='Provide the log level. Defaults to info.',
                        dest='log_level',
                        action='store',
                        default='info',
                        choices=['debug',
                                 'info',
                                 'warning',
                                 'error',
                                 'critical'])
    parser.add_argument('--json',
                        help='Print the report as JSON.',
                        dest='json',
                        action='store_true')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    check = commands.add_parser('check', help='Validate an algebra against the axioms of a class.')
    check.add_argument('inputs', nargs=1, metavar='ALGEBRA')
    check.add_argument('--class', dest='klass', default='sc', choices=KLASS_NAMES)
    check.add_argument('--oracle',
                       help='Cross-check every verdict exhaustively.',
                       dest='use_oracle',
                       action='store_true')
    _add_validation_options(check)

    represent = commands.add_parser('represent', help='Play the game and write the representation.')
    represent.add_argument('inputs', nargs=1, metavar='ALGEBRA')
    represent.add_argument('--class', dest='klass', default='sc', choices=KLASS_NAMES)
    represent.add_argument('--output', '-o', dest='output', help='Where to write the representation.')
    represent.add_argument('--network-output', dest='network_output', help='Where to write the final network.')
    represent.add_argument('--max-rounds', dest='max_rounds', type=int, default=MAX_ROUNDS)
    represent.add_argument('--max-nodes', dest='max_nodes', type=int, default=MAX_NODES)
    represent.add_argument('--debug-check-networks',
                           help='Check the network conditions after every round.',
                           dest='debug_check_networks',
                           action='store_true')
    represent.add_argument('--allow-bounded',
                           help='Exit with success even when the play stopped on a budget.',
                           dest='allow_bounded',
                           action='store_true')
    represent.add_argument('--skip-validation',
                           help='Play without validating the algebra first, checking the network after every round.',
                           dest='skip_validation',
                           action='store_true')
    _add_validation_options(represent)

    verify = commands.add_parser('verify', help='Verify a representation of an algebra.')
    verify.add_argument('inputs', nargs=2, metavar=('ALGEBRA', 'REPRESENTATION'))

    check_network_ = commands.add_parser('check-network', help='Check a saved network against the network conditions.')
    check_network_.add_argument('inputs', nargs=2, metavar=('ALGEBRA', 'NETWORK'))
    check_network_.add_argument('--class', dest='klass', default='sc', choices=KLASS_NAMES)

    import_ = commands.add_parser('import-unit', help='Build the full set algebra on a unit.')
    import_.add_argument('inputs', nargs=1, metavar='UNIT')
    import_.add_argument('--class', dest='klass', default=None, choices=KLASS_NAMES,
                         help='Require the unit to be closed as the class demands.')
    import_.add_argument('--output', '-o', dest='output', help='Where to write the algebra.')

    close = commands.add_parser('close-unit', help='Close a unit under the non-surjective maps or every map.')
    close.add_argument('inputs', nargs=1, metavar='UNIT')
    close.add_argument('--kind', dest='kind', default='diagonalizable',
                       choices=list(CLOSURE_KINDS) + ['permutable-and-diagonalizable'])
    close.add_argument('--output', '-o', dest='output', help='Where to write the closed unit.')

    oracle = commands.add_parser('oracle', help='Compare the atomwise and the exhaustive checkers.')
    oracle.add_argument('inputs', nargs='*', metavar='ALGEBRA')
    oracle.add_argument('--class', dest='klass', default='sc', choices=KLASS_NAMES)
    oracle.add_argument('--random', dest='random', type=int, default=0,
                        help='Also check this many random two-dimensional structures.')
    oracle.add_argument('--seed', dest='seed', type=int, default=0)
    oracle.add_argument('--oracle-atom-bound', dest='oracle_atom_bound', type=int, default=ORACLE_ATOM_BOUND)
    _add_validation_options(oracle)
    args = parser.parse_args(argv)
    return args


def parse_config(args):
    """Validates the parsed arguments into a CommandConfig.

    Raises:
        Invalid: when an option is out of range.

    """
    values = asdict(CommandConfig(args.command, list(getattr(args, 'inputs', []))))
    values.update({option.name: getattr(args, option.name)
                   for option in fields(CommandConfig) if option.name != 'inputs' and hasattr(args, option.name)})
    if values['kind'] == 'permutable-and-diagonalizable':
        values['kind'] = 'permutable'
    return CommandConfig(**COMMAND_SCHEMA(values))


def _emit(config, report, summary):
    if config.json:
        print(to_json(report))
    else:
        print(summary)


def run_check(config):
    """Validates an algebra."""
    structure = load_algebra(config.inputs[0])
    report = validate(structure, config.klass, config.ax7_depth, config.ax7_mode, use_oracle=config.use_oracle,
                      oracle_bound=config.oracle_atom_bound)
    failed = report.failed_axioms() or report.wellformed.checks() or report.notes.checks()
    _emit(config, report.to_dict(),
          f'{config.klass}: ' + ('pass' if report.passed else 'fail at ' + ', '.join(failed)))
    return EXIT_PASS if report.passed else EXIT_FAIL


def run_represent(config):
    """Builds a representation and writes it."""
    structure = load_algebra(config.inputs[0])
    if not config.skip_validation:
        report = validate(structure, config.klass, config.ax7_depth, config.ax7_mode)
        if not report.passed:
            LOGGER.error('algebra does not validate as %s, refusing to play', config.klass)
            _emit(config, report.to_dict(), f'{config.klass}: fail')
            return EXIT_FAIL
    try:
        representation = build_representation(structure, config.klass, config.limits,
                                              debug=config.debug_check_networks or config.skip_validation)
    except CylrepError as error:
        LOGGER.error('the play broke down: %s', error)
        return EXIT_FAIL
    write_json(representation_to_dict(representation), config.output)
    if config.network_output:
        write_json(network_to_dict(PreNetwork(labels=representation.labeling)), config.network_output)
    LOGGER.info('representation %s with %s sequences over %s nodes', representation.status,
                len(representation.unit), len(representation.base))
    if not representation.complete and not config.allow_bounded:
        LOGGER.error('the play stopped on a budget before saturation')
        return EXIT_FAIL
    return EXIT_PASS


def run_verify(config):
    """Verifies a representation against its algebra."""
    structure = load_algebra(config.inputs[0])
    representation = load_representation(config.inputs[1])
    if representation.dimension != structure.dimension:
        raise InvalidInputFile(config.inputs[1], f'field n: {representation.dimension} does not match the algebra '
                                                 f'dimension {structure.dimension}')
    report = verify_embedding(structure, representation)
    if not report.complete:
        LOGGER.warning('representation is %s, failures may stem from unmet obligations', representation.status)
    _emit(config, report.to_dict(),
          'embedding: ' + ('pass' if report.passed else 'fail at ' + ', '.join(report.report.checks())))
    return EXIT_PASS if report.passed else EXIT_FAIL


def run_check_network(config):
    """Checks a saved network against the network conditions of a class."""
    structure = load_algebra(config.inputs[0])
    network = load_network(config.inputs[1])
    report = check_network(structure, network, config.klass)
    _emit(config, report.to_dict(),
          f'{report.name}: ' + ('pass' if report.passed else 'fail at ' + ', '.join(report.checks())))
    return EXIT_PASS if report.passed else EXIT_FAIL


def run_import_unit(config):
    """Writes the full set algebra on a unit."""
    unit = load_unit(config.inputs[0])
    try:
        structure = import_unit(unit, config.klass)
    except UnitClosureError as error:
        LOGGER.error(error)
        return EXIT_FAIL
    write_json(algebra_to_dict(structure), config.output)
    return EXIT_PASS


def run_close_unit(config):
    """Writes the closure of a unit."""
    unit = load_unit(config.inputs[0])
    closed = close_unit(unit, config.kind)
    LOGGER.info('closure added %s sequences', len(closed.sequences) - len(unit.sequences))
    write_json(unit_to_dict(closed), config.output)
    return EXIT_PASS


def _oracle_structures(config):
    for path in config.inputs:
        yield path, load_algebra(path)
    generator = random.Random(config.seed)
    for number in range(config.random):
        structure = random_structure(generator, 2, generator.randint(1, ORACLE_MAX_ATOMS))
        if number % 2:
            structure = mutate(structure, generator)
        yield f'random-{number}', structure


def run_oracle(config):
    """Compares both checkers on every catalog inequality."""
    disagreements, compared = [], 0
    for name, structure in _oracle_structures(config):
        if structure.atom_count > config.oracle_atom_bound:
            LOGGER.warning('skipping %s, %s atoms exceed the bound of %s', name, structure.atom_count,
                           config.oracle_atom_bound)
            continue
        inequalities = list(catalog(config.klass, structure.dimension))
        inequalities.extend(ax7_inequalities(structure.dimension, min(config.ax7_depth, 1), config.ax7_mode))
        for inequality in inequalities:
            compared += 1
            atomwise = holds_atomwise(structure, inequality)
            exhaustive = holds_exhaustive(structure, inequality, config.oracle_atom_bound)
            if atomwise.holds != exhaustive.holds:
                disagreements.append({'structure': name, 'inequality': str(inequality)})
    _emit(config, {'compared': compared, 'disagreements': disagreements},
          f'oracle: {compared} verdicts compared, {len(disagreements)} disagreements')
    return EXIT_PASS if not disagreements else EXIT_FAIL


COMMAND_RUNNERS = {'check': run_check,
                   'represent': run_represent,
                   'verify': run_verify,
                   'check-network': run_check_network,
                   'import-unit': run_import_unit,
                   'close-unit': run_close_unit,
                   'oracle': run_oracle}


def dispatch(argv=None):
    """Runs one command and returns its exit code.

    Usage errors and malformed files give 2, failed reports give 1.
    """
    try:
        args = get_arguments(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    coloredlogs_format = '%(asctime)s %(name)s[%(process)d] %(levelname)s %(message)s'
    coloredlogs.install(fmt=coloredlogs_format, level=args.log_level.upper())
    try:
        config = parse_config(args)
    except Invalid as error:
        LOGGER.error('invalid option %s: %s', '.'.join(str(part) for part in error.path), error.msg)
        return EXIT_USAGE
    try:
        return COMMAND_RUNNERS[config.command](config)
    except InvalidInputFile as error:
        LOGGER.error(error)
        return EXIT_USAGE
    except CylrepError as error:
        LOGGER.error(error)
        return EXIT_USAGE


def main():
    """
    Main method.

    This method holds what you want to execute when
    the script is run on command line.
    """
    raise SystemExit(dispatch())
