#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cylrepexceptions.py
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
Custom exception code for cylrep.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__credits__ = ["The cylrep authors"]
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class CylrepError(Exception):
    """Base of every fault raised by cylrep."""


class InvalidTransformation(CylrepError):
    """A transformation on the index set is malformed."""

    def __init__(self, images, reason):
        self.images = images
        self.message = f'invalid transformation {tuple(images)}: {reason}'
        super().__init__(self.message)


class ArityMismatch(CylrepError):
    """Two operands do not share the same arity."""

    def __init__(self, expected, received):
        self.message = f'arity mismatch, expected {expected} but got {received}'
        super().__init__(self.message)


class NotNonSurjective(CylrepError):
    """A permutation was given where a member of the non-surjective maps is required."""

    def __init__(self, transformation):
        self.message = f'{transformation} is a permutation, only non-surjective transformations decompose'
        super().__init__(self.message)


class InvalidIndex(CylrepError):
    """An index or atom is outside of its range."""

    def __init__(self, kind, value, bound):
        self.message = f'{kind} {value} out of range, must be below {bound}'
        super().__init__(self.message)


class AxiomViolation(CylrepError):
    """The structure contradicts an axiom that an operation relies upon.

    Raised for instance when ``c_i a . d_ij`` holds more than one atom, which cannot happen in an
    algebra satisfying the axioms since that meet is then an atom or zero.
    """

    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class UnboundVariable(CylrepError):
    """A term mentions a variable that is not bound by the environment."""

    def __init__(self, name):
        self.message = f'variable "{name}" is not bound'
        super().__init__(self.message)


class AtomwiseNotDeclared(CylrepError):
    """An inequality without the atomwise declaration was handed to the atomwise checker."""

    def __init__(self, inequality):
        self.message = f'inequality {inequality} is not declared safe for atomwise checking'
        super().__init__(self.message)


class OracleBoundExceeded(CylrepError):
    """The exhaustive checker refuses structures with too many atoms."""

    def __init__(self, atom_count, bound):
        self.message = f'exhaustive checking is limited to {bound} atoms, structure has {atom_count}'
        super().__init__(self.message)


class MosaicError(CylrepError):
    """A mosaic could not be built or failed its post-build assertions."""

    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class MergeConflict(CylrepError):
    """Two pre-networks label a shared edge differently."""

    def __init__(self, edge, left, right):
        self.edge = edge
        self.message = f'edge {edge} is labelled {left} and {right}'
        super().__init__(self.message)


class StrategyError(CylrepError):
    """The strategy met a state that the axioms rule out."""

    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class InvalidUnit(CylrepError):
    """A concrete unit is empty or refers to unknown base elements."""

    def __init__(self, reason):
        self.message = f'invalid unit: {reason}'
        super().__init__(self.message)


class UnitClosureError(CylrepError):
    """A concrete unit is not closed as its expected class requires."""

    def __init__(self, sequence, transformation, klass):
        self.message = (f'unit is not closed for class {klass}: {sequence} composed with '
                        f'{transformation} is missing')
        super().__init__(self.message)


class InvalidInputFile(CylrepError):
    """An input file could not be read or does not follow its format."""

    def __init__(self, path, reason):
        self.path = path
        self.message = f'could not load "{path}": {reason}'
        super().__init__(self.message)


class NotAChain(CylrepError):
    """A sequence of pre-networks is not increasing."""

    def __init__(self, position):
        self.message = f'pre-network at position {position} does not extend its predecessor'
        super().__init__(self.message)
