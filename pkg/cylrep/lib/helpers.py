#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: helpers.py
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
File formats of cylrep.

Every input is JSON checked against a voluptuous schema before it is turned into domain objects;
schema failures name the offending field.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging
import sys

from voluptuous import (All,
                        Any,
                        In,
                        Invalid,
                        Length,
                        Match,
                        MultipleInvalid,
                        Optional,
                        Range,
                        Required,
                        Schema)

from ..cylrepexceptions import CylrepError, InvalidInputFile
from .algebra import AtomStructure
from .network import network_from_dict
from .represent import representation_from_dict, unit_from_dict

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.helpers'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

INDEX = All(int, Range(min=0))
DIMENSION = All(int, Range(min=2))
NODE = Any(int, str)

ALGEBRA_SCHEMA = Schema({Required('n'): DIMENSION,
                         Optional('atoms'): [str],
                         Required('cyl'): [[[INDEX]]],
                         Required('diag'): {Match(r'^\s*\d+\s*,\s*\d+\s*$', msg='expected a key "i,j"'): [INDEX]}})

UNIT_SCHEMA = Schema({Required('n'): DIMENSION,
                      Required('base'): All([NODE], Length(min=1)),
                      Required('sequences'): All([[INDEX]], Length(min=1))})

REPRESENTATION_SCHEMA = Schema({Required('n'): DIMENSION,
                                Optional('base'): [NODE],
                                Required('unit'): [[NODE]],
                                Required('labels'): [INDEX],
                                Optional('status', default='saturated'): In(['saturated', 'bounded'])})

NETWORK_SCHEMA = Schema({Required('nodes'): [NODE],
                         Required('edges'): [{Required('tuple'): [NODE], Required('atom'): INDEX}]})


def read_json(path):
    """Reads a JSON document, ``-`` reads standard input.

    Raises:
        InvalidInputFile: if the file cannot be read or is not JSON.

    """
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path) as input_file:
            return json.load(input_file)
    except OSError as error:
        raise InvalidInputFile(path, error.strerror or str(error)) from None
    except ValueError as error:
        raise InvalidInputFile(path, f'not valid JSON, {error}') from None


def validated(schema, data, path):
    """Checks ``data`` against ``schema``.

    Raises:
        InvalidInputFile: naming the first offending field.

    """
    try:
        return schema(data)
    except MultipleInvalid as error:
        first = error.errors[0]
        raise InvalidInputFile(path, f'field {_field(first)}: {first.msg}') from None
    except Invalid as error:
        raise InvalidInputFile(path, f'field {_field(error)}: {error.msg}') from None


def _field(error):
    return '.'.join(str(part) for part in error.path) or '<document>'


def algebra_from_dict(data):
    """Builds an atom structure from the algebra format."""
    diag = {}
    for key, atoms in data['diag'].items():
        i, j = (int(part) for part in key.split(','))
        diag[(i, j)] = atoms
    return AtomStructure.build(data['n'], data['cyl'], diag, data.get('atoms'))


def algebra_to_dict(structure):
    """The algebra format ``{"n", "atoms", "cyl", "diag"}``."""
    return {'n': structure.dimension,
            'atoms': list(structure.names),
            'cyl': [[sorted(images) for images in per_index] for per_index in structure.cyl_images],
            'diag': {f'{i},{j}': sorted(atoms) for (i, j), atoms in sorted(structure.diag_atoms.items())}}


def _load(path, schema, convert):
    data = validated(schema, read_json(path), path)
    try:
        return convert(data)
    except CylrepError as error:
        raise InvalidInputFile(path, error.message) from None


def load_algebra(path):
    """Loads an algebra file into an AtomStructure."""
    return _load(path, ALGEBRA_SCHEMA, algebra_from_dict)


def load_unit(path):
    """Loads a unit file into a ConcreteUnit."""
    return _load(path, UNIT_SCHEMA, unit_from_dict)


def load_representation(path):
    """Loads a representation file into a Representation."""
    return _load(path, REPRESENTATION_SCHEMA, representation_from_dict)


def load_network(path):
    """Loads a network file into a PreNetwork."""
    return _load(path, NETWORK_SCHEMA, network_from_dict)


def to_json(data):
    """Byte-stable JSON with sorted keys."""
    return json.dumps(data, sort_keys=True, indent=2)


def write_json(data, path=None):
    """Writes ``data`` to ``path``, or to standard output when no path is given."""
    if not path or path == '-':
        sys.stdout.write(to_json(data) + '\n')
        return
    with open(path, 'w') as output_file:
        output_file.write(to_json(data) + '\n')
    LOGGER.debug('wrote %s', path)
