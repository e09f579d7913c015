#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_algebra.py
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
test_algebra
----------------------------------
Tests for `algebra` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import random
import unittest
from itertools import chain, combinations, permutations, product

from hypothesis import given, settings
from hypothesis import strategies as st

from cylrep.cylrepexceptions import AxiomViolation, InvalidIndex
from cylrep.lib.algebra import (AtomStructure,
                                Klass,
                                complement,
                                cyl,
                                fold_replacements,
                                join,
                                meet,
                                mutate,
                                p_elem,
                                random_structure,
                                s_subst,
                                structural,
                                t_atom,
                                t_subst,
                                tau_atom,
                                wellformed)
from cylrep.lib.transform import (Transformation,
                                  apply_to_sequence,
                                  decompose_replacements,
                                  enumerate_transformations,
                                  replacement,
                                  rng,
                                  transposition)
from .fixtures import DIAGONAL_THREE, algebra, full_square, full_unit

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

FULL = frozenset({0, 1, 2, 3})


def two_atoms_in_one_diagonal_class():
    """Both atoms below d01 and in one c_0 class, so t^0_1 of either is not an atom."""
    return AtomStructure.build(2,
                               [[[0, 1], [0, 1]], [[0], [1]]],
                               {(0, 0): [0, 1], (0, 1): [0, 1], (1, 0): [0, 1], (1, 1): [0, 1]})


class TestKlass(unittest.TestCase):

    def test_names(self):
        self.assertIs(Klass.from_name('sc'), Klass.SC)
        self.assertIs(Klass.from_name('DC'), Klass.DC)
        self.assertIs(Klass.from_name('SCminus'), Klass.SC_MINUS)
        self.assertIs(Klass.from_name('dc_minus'), Klass.DC_MINUS)
        self.assertEqual(str(Klass.SC_MINUS), 'sc-minus')
        with self.assertRaises(ValueError):
            Klass.from_name('qc')

    def test_properties(self):
        self.assertFalse(Klass.RC.diagonalizable)
        self.assertTrue(Klass.DC_MINUS.diagonalizable)
        self.assertTrue(Klass.SC_MINUS.permutable)
        self.assertFalse(Klass.DC.permutable)
        self.assertTrue(Klass.DC_MINUS.modified)
        self.assertFalse(Klass.SC.modified)
        self.assertIs(Klass.SC_MINUS.base, Klass.SC)
        self.assertIs(Klass.RC.base, Klass.RC)


class TestAtomStructure(unittest.TestCase):

    def setUp(self):
        self.square = full_square()

    def test_shape(self):
        self.assertEqual(self.square.dimension, 2)
        self.assertEqual(self.square.atom_count, 4)
        self.assertEqual(self.square.top, FULL)
        self.assertEqual(self.square.bottom, frozenset())
        self.assertEqual(self.square.names, ('(0,0)', '(0,1)', '(1,0)', '(1,1)'))
        self.assertEqual(self.square.name(2), '(1,0)')

    def test_tables(self):
        self.assertEqual(self.square.cyl_class(0, 0), frozenset({0, 2}))
        self.assertEqual(self.square.cyl_class(0, 1), frozenset({1, 3}))
        self.assertEqual(self.square.cyl_class(1, 0), frozenset({0, 1}))
        self.assertEqual(self.square.cyl_class(1, 3), frozenset({2, 3}))
        self.assertEqual(self.square.diag(0, 1), frozenset({0, 3}))
        self.assertEqual(self.square.diag(1, 0), frozenset({0, 3}))
        self.assertEqual(self.square.diag(1, 1), FULL)

    def test_out_of_range(self):
        with self.assertRaises(InvalidIndex):
            self.square.diag(0, 2)
        with self.assertRaises(InvalidIndex):
            self.square.cyl_class(0, 4)
        with self.assertRaises(InvalidIndex):
            self.square.element({5})
        with self.assertRaises(InvalidIndex):
            cyl(self.square, 3, {0})

    def test_missing_diagonal_is_empty(self):
        structure = AtomStructure.build(2, [[[0]], [[0]]], {(0, 0): [0], (1, 1): [0]})
        self.assertEqual(structure.diag(0, 1), frozenset())

    def test_default_names(self):
        structure = AtomStructure.build(2, [[[0]], [[0]]], {(0, 0): [0], (1, 1): [0], (0, 1): [0], (1, 0): [0]})
        self.assertEqual(structure.names, ('0',))


class TestWellformed(unittest.TestCase):

    def test_imported_units_are_wellformed(self):
        self.assertTrue(wellformed(full_square()).passed)
        self.assertTrue(wellformed(algebra(*DIAGONAL_THREE)).passed)

    def test_missing_diagonal(self):
        structure = AtomStructure.build(2, [[[0]], [[0]]], {(0, 0): [0], (1, 1): [0]})
        report = wellformed(structure)
        self.assertEqual(report.checks(), ['diag-total'])
        self.assertFalse(structural(structure))

    def test_unknown_atoms(self):
        structure = AtomStructure.build(2, [[[0, 7]], [[0]]], {(0, 0): [0], (1, 1): [0], (0, 1): [0], (1, 0): [3]})
        self.assertEqual(wellformed(structure).checks(), ['cyl-range', 'diag-range'])

    def test_dimension(self):
        structure = AtomStructure.build(1, [[[0]]], {(0, 0): [0]})
        self.assertIn('dimension', wellformed(structure).checks())

    def test_semantic_checks_keep_structure_loadable(self):
        structure = AtomStructure.build(2,
                                        [[[1], [0, 1]], [[0], [1]]],
                                        {(0, 0): [0], (1, 1): [0, 1], (0, 1): [], (1, 0): []})
        report = wellformed(structure)
        self.assertEqual(report.checks(), ['diag-unit', 'cyl-reflexive', 'cyl-class'])
        self.assertTrue(structural(structure))


class TestOperations(unittest.TestCase):

    def setUp(self):
        self.square = full_square()

    def test_boolean(self):
        self.assertEqual(join(frozenset({0}), frozenset({2})), frozenset({0, 2}))
        self.assertEqual(meet(self.square), FULL)
        self.assertEqual(meet(self.square, frozenset({0, 1}), frozenset({1, 2})), frozenset({1}))
        self.assertEqual(complement(self.square, frozenset({0, 3})), frozenset({1, 2}))

    def test_cylindrification(self):
        self.assertEqual(cyl(self.square, 0, {1}), frozenset({1, 3}))
        self.assertEqual(cyl(self.square, 1, {1, 2}), FULL)
        self.assertEqual(cyl(self.square, 0, frozenset()), frozenset())

    def test_substitutions(self):
        self.assertEqual(s_subst(self.square, 0, 1, {1}), frozenset())
        self.assertEqual(s_subst(self.square, 0, 1, {3}), frozenset({1, 3}))
        self.assertEqual(s_subst(self.square, 1, 1, {3}), frozenset({3}))
        self.assertEqual(t_subst(self.square, 0, 1, {2}), frozenset({0}))

    def test_t_atom(self):
        self.assertEqual(t_atom(self.square, 0, 1, 2), 0)
        self.assertEqual(t_atom(self.square, 1, 0, 1), 0)
        self.assertEqual(t_atom(self.square, 1, 1, 2), 2)

    def test_t_atom_zero(self):
        single = algebra((0, 1))
        self.assertIsNone(t_atom(single, 0, 1, 0))
        self.assertIsNone(fold_replacements(single, [(0, 1), (1, 0)], 0))

    def test_t_atom_needs_an_atom(self):
        with self.assertRaises(AxiomViolation):
            t_atom(two_atoms_in_one_diagonal_class(), 0, 1, 0)

    def test_transposition_label(self):
        self.assertEqual(p_elem(self.square, 0, 1, {1}), frozenset({2}))
        self.assertEqual(p_elem(self.square, 0, 1, {2}), frozenset({1}))
        self.assertEqual(p_elem(self.square, 0, 1, {0}), frozenset({0}))

    def test_tau_atom(self):
        self.assertEqual(tau_atom(self.square, Transformation((0, 0)), 1), 0)
        self.assertEqual(tau_atom(self.square, Transformation((1, 1)), 1), 3)
        self.assertEqual(tau_atom(self.square, Transformation((1, 1)), 2), 0)


class TestRandomStructures(unittest.TestCase):

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(2, 3), st.integers(1, 5))
    def test_random_structures_are_wellformed(self, seed, dimension, atom_count):
        structure = random_structure(random.Random(seed), dimension, atom_count)
        self.assertTrue(wellformed(structure).passed)
        self.assertEqual(structure.atom_count, atom_count)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_mutation_flips_one_membership(self, seed):
        generator = random.Random(seed)
        structure = random_structure(generator, 2, 3)
        mutated = mutate(structure, generator)
        self.assertNotEqual(mutated, structure)
        self.assertTrue(structural(mutated))
        changes = sum(len(before ^ after)
                      for per_before, per_after in zip(structure.cyl_images, mutated.cyl_images)
                      for before, after in zip(per_before, per_after))
        changes += sum(len(structure.diag_atoms[key] ^ mutated.diag_atoms[key]) for key in structure.diag_atoms)
        self.assertEqual(changes, 1)


class TestCubeIdentities(unittest.TestCase):
    """Identities of the full set algebra on every 3-sequence over ``{0, 1}``."""

    def setUp(self):
        self.cube = full_unit(3, 2)
        self.sequences = sorted(product(range(2), repeat=3))
        self.atom_of = {sequence: atom for atom, sequence in enumerate(self.sequences)}
        self.triples = list(permutations(range(3)))

    def test_replacements_move_sequences(self):
        for i, j in permutations(range(3), 2):
            for atom, sequence in enumerate(self.sequences):
                expected = self.atom_of[apply_to_sequence(sequence, replacement(3, i, j))]
                self.assertEqual(t_atom(self.cube, i, j, atom), expected)

    def test_decomposition_does_not_depend_on_the_spare_slot(self):
        for tau in enumerate_transformations(3, 'omega'):
            spares = [index for index in range(3) if index not in rng(tau)]
            for atom, sequence in enumerate(self.sequences):
                expected = self.atom_of[apply_to_sequence(sequence, tau)]
                self.assertEqual(tau_atom(self.cube, tau, atom), expected, msg=str(tau))
                for spare in spares:
                    pairs = decompose_replacements(tau, spare)
                    self.assertEqual(fold_replacements(self.cube, pairs, atom), expected, msg=f'{tau} {spare}')

    def test_transposition_labels_are_never_empty(self):
        for i, j in permutations(range(3), 2):
            for atom, sequence in enumerate(self.sequences):
                labels = p_elem(self.cube, i, j, {atom})
                self.assertTrue(labels)
                self.assertIn(self.atom_of[apply_to_sequence(sequence, transposition(3, i, j))], labels)

    def test_three_substitutions_meet_the_rotated_atom(self):
        for i, j, k in self.triples:
            for x in self.cube.atoms:
                rotated = t_atom(self.cube, k, j, x)
                rotated = t_atom(self.cube, j, i, rotated)
                rotated = t_atom(self.cube, i, k, rotated)
                below = s_subst(self.cube, j, k, cyl(self.cube, k, {x}))
                below = s_subst(self.cube, k, i, s_subst(self.cube, i, j, below))
                self.assertTrue(below)
                for y in below:
                    self.assertEqual(self.cube.cyl_images[k][y], self.cube.cyl_images[k][rotated])

    def test_one_substitution_meets_the_replaced_atom(self):
        for i, j in permutations(range(3), 2):
            for x in self.cube.atoms:
                replaced = t_atom(self.cube, j, i, x)
                below = s_subst(self.cube, i, j, cyl(self.cube, j, {x}))
                self.assertTrue(below)
                for y in below:
                    self.assertEqual(self.cube.cyl_images[i][y], self.cube.cyl_images[i][replaced])

    def test_rotating_substitutions_agree_on_cylinders(self):
        elements = chain.from_iterable(combinations(self.cube.atoms, size)
                                       for size in range(self.cube.atom_count + 1))
        for element in elements:
            for i, k, l in self.triples:
                base = cyl(self.cube, i, element)
                left = s_subst(self.cube, i, k, s_subst(self.cube, k, l, s_subst(self.cube, l, i, base)))
                right = s_subst(self.cube, i, l, s_subst(self.cube, l, k, s_subst(self.cube, k, i, base)))
                self.assertEqual(left, right, msg=f'{element} {(i, k, l)}')
