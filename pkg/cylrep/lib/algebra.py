#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: algebra.py
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
Finite atomic cylindric-type algebras presented by their atom structures.

Atoms are the dense indices ``0 .. atom_count-1`` and an element is a frozenset of atoms, so the
Boolean part is the powerset algebra. The structure stores, per index ``i`` and atom ``a``, the atoms
below ``c_i a`` and, per ordered pair ``(i, j)``, the atoms below ``d_ij``. Nothing is checked on
construction so that broken structures can be loaded and reported on; :func:`wellformed` does the
checking.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import reduce
from typing import Dict, FrozenSet, Tuple

from ..cylrepexceptions import AxiomViolation, InvalidIndex
from .report import Report
from .transform import decompose_replacements

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.algebra'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

EMPTY = frozenset()


class Klass(Enum):
    """The algebra classes a structure can be validated against and represented in."""

    RC = 'rc'
    DC = 'dc'
    SC = 'sc'
    DC_MINUS = 'dc-minus'
    SC_MINUS = 'sc-minus'

    @classmethod
    def from_name(cls, name):
        """Accepts ``sc``, ``SC``, ``sc-minus``, ``SCminus`` and ``sc_minus`` alike."""
        normalized = str(name).lower().replace('_', '-')
        if normalized.endswith('minus') and not normalized.endswith('-minus'):
            normalized = normalized[:-len('minus')] + '-minus'
        return cls(normalized)

    @property
    def diagonalizable(self):
        """Networks of this class are closed under the non-surjective maps."""
        return self is not Klass.RC

    @property
    def permutable(self):
        """Networks of this class are closed under every map."""
        return self in (Klass.SC, Klass.SC_MINUS)

    @property
    def modified(self):
        """The class drops the Ax7 schema and is represented with modified networks."""
        return self in (Klass.DC_MINUS, Klass.SC_MINUS)

    @property
    def base(self):
        """The class with the Ax7 schema put back."""
        return {Klass.DC_MINUS: Klass.DC, Klass.SC_MINUS: Klass.SC}.get(self, self)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AtomStructure:
    """A complete atomic algebra given by its atoms, cylinder images and diagonals.

    Attributes:
        dimension (int): the size n of the index set.
        atom_count (int): the number of atoms.
        cyl_images (tuple): ``cyl_images[i][a]`` is the frozenset of atoms below ``c_i a``.
        diag_atoms (dict): ``diag_atoms[(i, j)]`` is the frozenset of atoms below ``d_ij``.
        names (tuple): presentation names of the atoms, indices stay canonical.

    """

    dimension: int
    atom_count: int
    cyl_images: Tuple[Tuple[FrozenSet[int], ...], ...]
    diag_atoms: Dict[Tuple[int, int], FrozenSet[int]] = field(hash=False)
    names: Tuple[str, ...] = ()

    @classmethod
    def build(cls, dimension, cyl_images, diag_atoms, names=None):
        """Normalizes plain nested lists and dicts into a structure.

        Args:
            dimension (int): the size n of the index set.
            cyl_images (list): per index, per atom, an iterable of atoms.
            diag_atoms (dict): ``(i, j)`` to an iterable of atoms.
            names (list): optional atom names.

        """
        cyl_images = tuple(tuple(frozenset(images) for images in per_index) for per_index in cyl_images)
        atom_count = len(cyl_images[0]) if cyl_images else 0
        if names is not None:
            atom_count = len(names)
        diag_atoms = {(int(i), int(j)): frozenset(atoms) for (i, j), atoms in diag_atoms.items()}
        names = tuple(names) if names is not None else tuple(str(atom) for atom in range(atom_count))
        return cls(dimension, atom_count, cyl_images, diag_atoms, names)

    @property
    def atoms(self):
        """The atom indices."""
        return range(self.atom_count)

    @property
    def top(self):
        """The unit element 1, the set of all atoms."""
        return frozenset(self.atoms)

    @property
    def bottom(self):
        """The zero element."""
        return EMPTY

    def name(self, atom):
        """The presentation name of ``atom``."""
        return self.names[atom] if atom < len(self.names) else str(atom)

    def cyl_class(self, i, atom):
        """The atoms below ``c_i atom``."""
        self.check_index(i)
        self.check_atom(atom)
        return self.cyl_images[i][atom]

    def diag(self, i, j):
        """The element ``d_ij``."""
        self.check_index(i)
        self.check_index(j)
        return self.diag_atoms.get((i, j), EMPTY)

    def check_index(self, i):
        """Raises InvalidIndex unless ``i`` is an index below the dimension."""
        if not isinstance(i, int) or not 0 <= i < self.dimension:
            raise InvalidIndex('index', i, self.dimension)

    def check_atom(self, atom):
        """Raises InvalidIndex unless ``atom`` is an atom of the structure."""
        if not isinstance(atom, int) or not 0 <= atom < self.atom_count:
            raise InvalidIndex('atom', atom, self.atom_count)

    def element(self, atoms):
        """Builds an element from atom indices, checking their range."""
        atoms = frozenset(atoms)
        for atom in atoms:
            self.check_atom(atom)
        return atoms


def wellformed(structure):
    """Checks the structural invariants of an atom structure.

    These are: at least one atom, total tables with in-range entries, ``d_ii = 1``, every atom
    below its own cylinder and cylinder images forming classes (``b <= c_i a`` iff
    ``c_i a = c_i b``), which is the atom form of ``x <= c_i y <=> c_i x = c_i y``.

    Returns:
        Report: empty when the structure is wellformed.

    """
    report = Report('wellformed')
    count, dimension = structure.atom_count, structure.dimension
    if dimension < 2:
        report.add('dimension', f'dimension {dimension} is below 2', dimension)
    if count < 1:
        report.add('atoms', 'the structure has no atoms', count)
        return report
    if len(structure.cyl_images) != dimension:
        report.add('cyl-total', f'cylinder table covers {len(structure.cyl_images)} of {dimension} indices')
    for i, per_index in enumerate(structure.cyl_images):
        if len(per_index) != count:
            report.add('cyl-total', f'c_{i} is given for {len(per_index)} of {count} atoms', i)
        for atom, images in enumerate(per_index):
            stray = sorted(image for image in images if not isinstance(image, int) or not 0 <= image < count)
            if stray:
                report.add('cyl-range', f'c_{i} of atom {atom} names unknown atoms {stray}', (i, atom))
    for (i, j), atoms in structure.diag_atoms.items():
        if not (0 <= i < dimension and 0 <= j < dimension):
            report.add('diag-range', f'diagonal ({i},{j}) is outside the index set', (i, j))
        stray = sorted(atom for atom in atoms if not isinstance(atom, int) or not 0 <= atom < count)
        if stray:
            report.add('diag-range', f'd_{i}{j} names unknown atoms {stray}', (i, j))
    for i in range(dimension):
        for j in range(dimension):
            if (i, j) not in structure.diag_atoms:
                report.add('diag-total', f'd_{i}{j} is not given', (i, j))
    if not report.passed:
        return report
    for i in range(dimension):
        missing = sorted(structure.top - structure.diag_atoms[(i, i)])
        if missing:
            report.add('diag-unit', f'd_{i}{i} misses atoms {missing}', (i, i))
    for i in range(dimension):
        for atom in structure.atoms:
            images = structure.cyl_images[i][atom]
            if atom not in images:
                report.add('cyl-reflexive', f'atom {atom} is not below c_{i} of itself', (i, atom))
            for other in structure.atoms:
                if (other in images) != (structure.cyl_images[i][other] == images):
                    report.add('cyl-class', f'atoms {atom} and {other} break the c_{i} classes', (i, atom, other))
    return report


def structural(structure):
    """Tells whether the tables are total and in range, so that the operations can evaluate."""
    report = wellformed(structure)
    return not any(check in ('atoms', 'dimension', 'cyl-total', 'cyl-range', 'diag-range', 'diag-total')
                   for check in report.checks())


def join(*elements):
    """The join of elements."""
    return frozenset().union(*elements)


def meet(structure, *elements):
    """The meet of elements, the unit for an empty meet."""
    return reduce(frozenset.intersection, elements, structure.top)


def complement(structure, element):
    """The Boolean complement."""
    return structure.top - element


def cyl(structure, i, element):
    """``c_i`` of an element, the union of the cylinder images of its atoms."""
    structure.check_index(i)
    images = structure.cyl_images[i]
    return frozenset().union(*(images[atom] for atom in element))


def s_subst(structure, i, j, element):
    """The substitution ``s^i_j x``: ``x`` when ``i = j``, otherwise ``c_i(x . d_ij)``."""
    structure.check_index(i)
    structure.check_index(j)
    if i == j:
        return frozenset(element)
    return cyl(structure, i, element & structure.diag(i, j))


def t_subst(structure, i, j, element):
    """``t^i_j x``: ``x`` when ``i = j``, otherwise ``c_i x . d_ij``."""
    structure.check_index(i)
    structure.check_index(j)
    if i == j:
        return frozenset(element)
    return cyl(structure, i, element) & structure.diag(i, j)


def t_atom(structure, i, j, atom):
    """``t^i_j`` of an atom, which is an atom or zero.

    Returns:
        int: the atom, or None when ``c_i a . d_ij`` is zero.

    Raises:
        AxiomViolation: when the meet holds two or more atoms.

    """
    structure.check_atom(atom)
    if i == j:
        structure.check_index(i)
        return atom
    below = t_subst(structure, i, j, {atom})
    if not below:
        return None
    if len(below) > 1:
        raise AxiomViolation(f't^{i}_{j} of atom {atom} is {sorted(below)}, not an atom')
    return next(iter(below))


def p_elem(structure, i, j, element):
    """The element ``p_ij x`` used to label transposed edges.

    ``s^i_j c_j x . s^j_i c_i x`` times the meet over ``k != i, j`` of ``s^k_i s^i_j s^j_k c_k x``;
    the meet is the unit when there is no such ``k``.
    """
    structure.check_index(i)
    structure.check_index(j)
    element = frozenset(element)
    if i == j:
        return element
    result = (s_subst(structure, i, j, cyl(structure, j, element)) &
              s_subst(structure, j, i, cyl(structure, i, element)))
    for k in range(structure.dimension):
        if k in (i, j):
            continue
        term = s_subst(structure, j, k, cyl(structure, k, element))
        term = s_subst(structure, k, i, s_subst(structure, i, j, term))
        result &= term
    return result


def fold_replacements(structure, pairs, atom):
    """Applies ``t^{i_1}_{j_1}`` first, then the following pairs, to an atom.

    Returns:
        int: the resulting atom, or None as soon as a step yields zero.

    """
    current = atom
    for i, j in pairs:
        current = t_atom(structure, i, j, current)
        if current is None:
            return None
    return current


def tau_atom(structure, tau, atom):
    """``tau^A`` of an atom for a non-surjective ``tau``, along its canonical decomposition."""
    return fold_replacements(structure, decompose_replacements(tau), atom)


def random_structure(rng, dimension=2, atom_count=4):
    """A random structure whose cylinder images form classes and with ``d_ii = 1``.

    Args:
        rng (random.Random): the source of randomness.
        dimension (int): the size of the index set.
        atom_count (int): the number of atoms.

    """
    cyl_images = []
    for _ in range(dimension):
        blocks = [rng.randrange(atom_count) for _ in range(atom_count)]
        cyl_images.append([[other for other in range(atom_count) if blocks[other] == blocks[atom]]
                           for atom in range(atom_count)])
    diag_atoms = {}
    for i in range(dimension):
        diag_atoms[(i, i)] = list(range(atom_count))
        for j in range(i + 1, dimension):
            chosen = [atom for atom in range(atom_count) if rng.random() < 0.5]
            diag_atoms[(i, j)] = chosen
            diag_atoms[(j, i)] = chosen
    return AtomStructure.build(dimension, cyl_images, diag_atoms)


def mutate(structure, rng):
    """Flips one membership in a cylinder image or in a diagonal, keeping indices in range."""
    atom = rng.randrange(structure.atom_count)
    i = rng.randrange(structure.dimension)
    if rng.random() < 0.5:
        other = rng.randrange(structure.atom_count)
        cyl_images = [list(per_index) for per_index in structure.cyl_images]
        cyl_images[i][atom] = cyl_images[i][atom] ^ {other}
        return replace(structure, cyl_images=tuple(tuple(per_index) for per_index in cyl_images))
    j = rng.randrange(structure.dimension)
    diag_atoms = dict(structure.diag_atoms)
    diag_atoms[(i, j)] = diag_atoms.get((i, j), EMPTY) ^ {atom}
    return replace(structure, diag_atoms=diag_atoms)
