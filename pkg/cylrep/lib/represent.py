#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: represent.py
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
Representations built from saturated plays and the full set algebras of concrete units.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, FrozenSet, Tuple

from ..cylrepexceptions import InvalidUnit, UnitClosureError
from .algebra import AtomStructure, Klass, cyl
from .game import SATURATED, run_to_saturation
from .network import edge_key, same_except
from .report import Report
from .transform import apply_to_sequence, enumerate_transformations, replacement, transposition

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.represent'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

CLOSURE_KINDS = ('diagonalizable', 'permutable')
BOOLEAN_SAMPLES = 8


@dataclass(frozen=True)
class Representation:
    """A unit of sequences over a base with every sequence labelled by an atom.

    Attributes:
        dimension (int): the length of the sequences.
        unit (tuple): the sequences, in the order they were built.
        labeling (dict): sequence to atom.
        status (str): ``saturated`` or ``bounded``.

    """

    dimension: int
    unit: Tuple[Tuple[Any, ...], ...]
    labeling: Dict[Tuple[Any, ...], int] = field(hash=False)
    status: str = SATURATED

    @property
    def base(self):
        """The nodes occurring in the unit."""
        return frozenset(node for sequence in self.unit for node in sequence)

    @property
    def complete(self):
        """True for representations of saturated plays."""
        return self.status == SATURATED

    @classmethod
    def from_network(cls, network, dimension, status=SATURATED):
        """Packages the edges of a network."""
        return cls(dimension, tuple(network.labels), dict(network.labels), status)


@dataclass(frozen=True)
class ConcreteUnit:
    """A nonempty set of sequences over named base elements.

    Sequences hold positions into ``base``.
    """

    dimension: int
    base: Tuple[Any, ...]
    sequences: FrozenSet[Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, 'base', tuple(self.base))
        object.__setattr__(self, 'sequences', frozenset(tuple(sequence) for sequence in self.sequences))
        if self.dimension < 2:
            raise InvalidUnit(f'dimension {self.dimension} is below 2')
        if not self.sequences:
            raise InvalidUnit('there are no sequences')
        for sequence in self.sequences:
            if len(sequence) != self.dimension:
                raise InvalidUnit(f'sequence {sequence} does not have length {self.dimension}')
            if any(not isinstance(item, int) or not 0 <= item < len(self.base) for item in sequence):
                raise InvalidUnit(f'sequence {sequence} refers to elements outside the base')

    @classmethod
    def of(cls, sequences, base=None):
        """Builds a unit from sequences over ``0 .. k``, the base defaulting to the numbers used."""
        sequences = [tuple(sequence) for sequence in sequences]
        if not sequences:
            raise InvalidUnit('there are no sequences')
        if base is None:
            base = tuple(range(max(max(sequence) for sequence in sequences) + 1))
        return cls(len(sequences[0]), tuple(base), frozenset(sequences))

    def sorted_sequences(self):
        """The sequences in lexicographic order."""
        return sorted(self.sequences)

    def name(self, sequence):
        """The presentation name of a sequence, its base names in brackets."""
        return '(' + ','.join(str(self.base[item]) for item in sequence) + ')'


@dataclass
class EmbeddingReport:
    """The verdicts of :func:`verify_embedding`.

    ``complete`` is False for representations of bounded plays; their failures are expected where
    obligations were left unmet.
    """

    report: Report
    complete: bool = True
    checked: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self):
        """True when every check passed."""
        return self.report.passed

    def to_dict(self):
        """Plain representation for JSON output."""
        data = self.report.to_dict()
        data.update({'complete': self.complete, 'checked': dict(self.checked)})
        return data

    def __bool__(self):
        return self.passed


def build_representation(structure, klass, limits=None, debug=False):
    """Plays the game for ``structure`` and packages the final network.

    Returns:
        Representation: with the status of the play.

    """
    outcome = run_to_saturation(structure, klass, limits, debug=debug)
    if not outcome.saturated:
        LOGGER.warning('play stopped with %s unmet obligations, representation is incomplete', len(outcome.pending))
    return Representation.from_network(outcome.network, structure.dimension, outcome.status)


def psi(structure, representation, element):
    """The sequences of the unit whose label lies in ``element``."""
    element = frozenset(element)
    return frozenset(sequence for sequence in representation.unit if representation.labeling.get(sequence) in element)


def set_cylinder(unit, index, sequences):
    """``C_i`` relative to ``unit``, the members agreeing with one of ``sequences`` outside ``index``."""
    keys = {same_except(sequence, index) for sequence in sequences}
    return frozenset(sequence for sequence in unit if same_except(sequence, index) in keys)


def set_diagonal(unit, i, j):
    """``D_ij`` relative to ``unit``."""
    return frozenset(sequence for sequence in unit if sequence[i] == sequence[j])


def _first(sequences):
    return min(sequences, key=edge_key) if sequences else None


def check_dimension(structure, representation):
    """Raises InvalidUnit unless every sequence of the representation has one entry per index."""
    if representation.dimension != structure.dimension:
        raise InvalidUnit(f'representation of dimension {representation.dimension} for an algebra of dimension '
                          f'{structure.dimension}')
    short = next((sequence for sequence in representation.unit if len(sequence) != structure.dimension), None)
    if short is not None:
        raise InvalidUnit(f'sequence {short} does not have {structure.dimension} entries')


def verify_embedding(structure, representation, samples=BOOLEAN_SAMPLES, seed=0):
    """Verifies that ``psi`` embeds ``structure`` into the set algebra on the unit.

    Checks that every atom has a nonempty image, that the atom images partition the unit, that
    ``psi`` commutes with every cylindrification on atoms and hits every diagonal, and that Boolean
    operations are preserved on ``samples`` random element pairs drawn with ``seed``.

    Returns:
        EmbeddingReport: failures name the sequence that disagrees.

    Raises:
        InvalidUnit: if the representation is not of the dimension of ``structure``.

    """
    check_dimension(structure, representation)
    report = Report('embedding')
    unit = frozenset(representation.unit)
    dimension = structure.dimension
    checked = {}
    for sequence in representation.unit:
        atom = representation.labeling.get(sequence)
        if atom is None or not 0 <= atom < structure.atom_count:
            report.add('partition', f'{sequence} is labelled with unknown atom {atom}', sequence)
    images = {atom: psi(structure, representation, {atom}) for atom in structure.atoms}
    for atom, image in images.items():
        if not image:
            report.add('injective', f'atom {structure.name(atom)} has an empty image', atom)
    if sum(len(image) for image in images.values()) != len(unit):
        report.add('partition', 'the atom images do not cover the unit', None)
    checked['atoms'] = structure.atom_count
    for index in range(dimension):
        for atom in structure.atoms:
            expected = psi(structure, representation, cyl(structure, index, {atom}))
            actual = set_cylinder(unit, index, images[atom])
            if expected != actual:
                witness = _first(expected ^ actual)
                report.add('cylinder', f'c_{index} of atom {structure.name(atom)} differs at {witness}',
                           (index, atom, witness))
    checked['cylinder'] = dimension * structure.atom_count
    for i, j in product(range(dimension), repeat=2):
        expected = psi(structure, representation, structure.diag(i, j))
        actual = set_diagonal(unit, i, j)
        if expected != actual:
            witness = _first(expected ^ actual)
            report.add('diagonal', f'd_{i}{j} differs at {witness}', (i, j, witness))
    checked['diagonal'] = dimension * dimension
    generator = random.Random(seed)
    atoms = list(structure.atoms)
    for _ in range(samples):
        left = frozenset(atom for atom in atoms if generator.random() < 0.5)
        right = frozenset(atom for atom in atoms if generator.random() < 0.5)
        image_left, image_right = psi(structure, representation, left), psi(structure, representation, right)
        if psi(structure, representation, left | right) != image_left | image_right:
            report.add('boolean', f'join of {sorted(left)} and {sorted(right)} is not preserved', (left, right))
        if psi(structure, representation, left & right) != image_left & image_right:
            report.add('boolean', f'meet of {sorted(left)} and {sorted(right)} is not preserved', (left, right))
        if psi(structure, representation, structure.top - left) != unit - image_left:
            report.add('boolean', f'complement of {sorted(left)} is not preserved', left)
    checked['boolean'] = samples
    result = EmbeddingReport(report, representation.complete, checked)
    if not result.passed:
        LOGGER.info('embedding fails %s', ', '.join(report.checks()))
    return result


def closure_gap(unit, kind):
    """The first missing ``f o [i/j]`` (or ``f o [i,j]`` as well for ``permutable``).

    Returns:
        tuple: the sequence and the transformation, or None when the unit is closed.

    """
    dimension = unit.dimension
    generators = [replacement(dimension, i, j) for i, j in product(range(dimension), repeat=2) if i != j]
    if kind == 'permutable':
        generators += [transposition(dimension, i, j) for i, j in product(range(dimension), repeat=2) if i < j]
    for sequence in unit.sorted_sequences():
        for tau in generators:
            if apply_to_sequence(sequence, tau) not in unit.sequences:
                return sequence, tau
    return None


def is_diagonalizable(unit):
    """Tells whether ``f o [i/j]`` is in the unit for every member ``f``."""
    return closure_gap(unit, 'diagonalizable') is None


def is_permutable(unit):
    """Tells whether ``f o [i,j]`` is in the unit for every member ``f``."""
    dimension = unit.dimension
    return all(apply_to_sequence(sequence, transposition(dimension, i, j)) in unit.sequences
               for sequence in unit.sequences
               for i in range(dimension) for j in range(i + 1, dimension))


def classify_unit(unit):
    """The most specific class whose set algebras live on ``unit``."""
    if is_diagonalizable(unit):
        return Klass.SC if is_permutable(unit) else Klass.DC
    return Klass.RC


def import_unit(unit, klass_expect=None):
    """Builds the atom structure of the full set algebra on ``unit``.

    Atoms are the sequences in lexicographic order, ``c_i`` relates sequences agreeing outside
    ``i`` and ``d_ij`` holds the sequences with equal ``i`` and ``j`` entries.

    Args:
        unit (ConcreteUnit): the unit.
        klass_expect (Klass): when diagonalizable or permutable, the unit must be closed as such.

    Raises:
        UnitClosureError: if the unit is not closed as ``klass_expect`` requires.

    """
    if klass_expect is not None:
        klass_expect = Klass.from_name(klass_expect) if not isinstance(klass_expect, Klass) else klass_expect
        if klass_expect.diagonalizable:
            gap = closure_gap(unit, 'permutable' if klass_expect.permutable else 'diagonalizable')
            if gap is not None:
                raise UnitClosureError(unit.name(gap[0]), gap[1], klass_expect)
    sequences = unit.sorted_sequences()
    dimension = unit.dimension
    cyl_images = []
    for index in range(dimension):
        classes = {}
        for atom, sequence in enumerate(sequences):
            classes.setdefault(same_except(sequence, index), []).append(atom)
        cyl_images.append([classes[same_except(sequence, index)] for sequence in sequences])
    diag_atoms = {(i, j): [atom for atom, sequence in enumerate(sequences) if sequence[i] == sequence[j]]
                  for i, j in product(range(dimension), repeat=2)}
    names = [unit.name(sequence) for sequence in sequences]
    LOGGER.debug('imported a unit of %s sequences', len(sequences))
    return AtomStructure.build(dimension, cyl_images, diag_atoms, names)


def close_unit(unit, kind='diagonalizable'):
    """The least superset of ``unit`` closed under the non-surjective maps, or under every map.

    Args:
        unit (ConcreteUnit): the unit.
        kind (str): ``diagonalizable`` or ``permutable`` (which also closes under the
            non-surjective maps).

    Raises:
        ValueError: for an unknown kind.

    """
    kind = 'permutable' if kind == 'permutable-and-diagonalizable' else kind
    if kind not in CLOSURE_KINDS:
        raise ValueError(f'unknown closure kind "{kind}", expected one of {CLOSURE_KINDS}')
    family = enumerate_transformations(unit.dimension, 'all' if kind == 'permutable' else 'omega')
    closed = set(unit.sequences)
    closed.update(apply_to_sequence(sequence, tau) for sequence in unit.sequences for tau in family)
    return ConcreteUnit(unit.dimension, unit.base, frozenset(closed))


def representation_to_dict(representation):
    """The representation file format."""
    return {'n': representation.dimension,
            'base': sorted(representation.base, key=lambda node: edge_key((node,))),
            'unit': [list(sequence) for sequence in representation.unit],
            'labels': [representation.labeling[sequence] for sequence in representation.unit],
            'status': representation.status}


def representation_from_dict(data):
    """Builds a representation from its file format, already checked by the file schema."""
    unit = tuple(tuple(sequence) for sequence in data['unit'])
    short = next((sequence for sequence in unit if len(sequence) != data['n']), None)
    if short is not None:
        raise InvalidUnit(f'sequence {list(short)} does not have {data["n"]} entries')
    if len(unit) != len(data['labels']):
        raise InvalidUnit('there must be one label per unit sequence')
    labeling = dict(zip(unit, data['labels']))
    return Representation(data['n'], unit, labeling, data.get('status', SATURATED))


def unit_to_dict(unit):
    """The unit file format."""
    return {'n': unit.dimension,
            'base': list(unit.base),
            'sequences': [list(sequence) for sequence in unit.sorted_sequences()]}


def unit_from_dict(data):
    """Builds a unit from its file format."""
    return ConcreteUnit(data['n'], tuple(data['base']), frozenset(tuple(sequence) for sequence in data['sequences']))
