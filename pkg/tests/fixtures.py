#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: fixtures.py
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
Shared fixtures of the cylrep tests.

Atoms of imported units are their sequences in lexicographic order, so for the full square over
``{0, 1}`` atom 0 is ``(0,0)``, atom 1 is ``(0,1)``, atom 2 is ``(1,0)`` and atom 3 is ``(1,1)``.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import os
from dataclasses import replace
from itertools import combinations, product

from cylrep.lib.represent import ConcreteUnit, import_unit

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

FILES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'files')

FULL_SQUARE = [(0, 0), (0, 1), (1, 0), (1, 1)]
DIAGONAL_THREE = [(0, 0), (1, 1), (0, 1)]


def fixture_path(name):
    """The path of a file in ``tests/files``."""
    return os.path.join(FILES_DIR, name)


def unit(*sequences):
    """A unit over the numbers its sequences use."""
    return ConcreteUnit.of(sequences)


def algebra(*sequences):
    """The full set algebra on the unit of ``sequences``."""
    return import_unit(unit(*sequences))


def full_square():
    """The full set algebra on all pairs over ``{0, 1}``."""
    return algebra(*FULL_SQUARE)


def all_units(dimension, base_size):
    """Every nonempty unit of ``dimension``-sequences over ``base_size`` elements."""
    sequences = list(product(range(base_size), repeat=dimension))
    for size in range(1, len(sequences) + 1):
        for chosen in combinations(sequences, size):
            yield ConcreteUnit(dimension, tuple(range(base_size)), frozenset(chosen))


def full_unit(dimension, base_size):
    """The full set algebra on every ``dimension``-sequence over ``base_size`` elements."""
    return algebra(*product(range(base_size), repeat=dimension))


def single_flips(structure):
    """Every structure that differs from ``structure`` in one cylinder or diagonal membership.

    Yields:
        tuple: a label like ``('cyl', i, atom, other)`` or ``('diag', (i, j), atom)`` and the
            flipped structure.

    """
    for i, per_index in enumerate(structure.cyl_images):
        for atom in structure.atoms:
            for other in structure.atoms:
                cyl_images = [list(images) for images in structure.cyl_images]
                cyl_images[i][atom] = per_index[atom] ^ {other}
                yield ('cyl', i, atom, other), replace(structure,
                                                       cyl_images=tuple(tuple(images) for images in cyl_images))
    for key in sorted(structure.diag_atoms):
        for atom in structure.atoms:
            diag_atoms = dict(structure.diag_atoms)
            diag_atoms[key] = diag_atoms[key] ^ {atom}
            yield ('diag', key, atom), replace(structure, diag_atoms=diag_atoms)
