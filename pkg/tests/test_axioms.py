#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_axioms.py
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
test_axioms
----------------------------------
Tests for `axioms` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import random
import unittest
from dataclasses import replace

from hypothesis import given, settings
from hypothesis import strategies as st

from cylrep.cylrepexceptions import AtomwiseNotDeclared, OracleBoundExceeded, UnboundVariable
from cylrep.lib.algebra import AtomStructure, Klass, mutate, random_structure
from cylrep.lib.axioms import (Cyl,
                               Diag,
                               Inequality,
                               Meet,
                               Neg,
                               One,
                               Subst,
                               Var,
                               Zero,
                               ax7_inequalities,
                               ax7_instances,
                               catalog,
                               eval_term,
                               holds_atomwise,
                               holds_exhaustive,
                               meet_all,
                               validate)
from .fixtures import DIAGONAL_THREE, algebra, full_square

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def corrupted_square():
    """The full square with d01 shrunk to the atom (0,0) and d10 left alone."""
    square = full_square()
    diag_atoms = dict(square.diag_atoms)
    diag_atoms[(0, 1)] = frozenset({0})
    return replace(square, diag_atoms=diag_atoms)


class TestTerms(unittest.TestCase):

    def setUp(self):
        self.square = full_square()

    def test_evaluation(self):
        x = Var('x')
        self.assertEqual(eval_term(self.square, Cyl(0, x), {'x': frozenset({1})}), frozenset({1, 3}))
        self.assertEqual(eval_term(self.square, Subst(0, 1, x), {'x': frozenset({3})}), frozenset({1, 3}))
        self.assertEqual(eval_term(self.square, Neg(Diag(0, 1))), frozenset({1, 2}))
        self.assertEqual(eval_term(self.square, Meet(One(), Zero())), frozenset())

    def test_unbound_variable(self):
        with self.assertRaises(UnboundVariable):
            eval_term(self.square, Cyl(0, Var('y')), {'x': frozenset()})

    def test_rendering(self):
        self.assertEqual(str(Meet(Cyl(0, Var('x')), Diag(0, 1))), '(c0 x . d01)')
        self.assertEqual(str(meet_all([])), '1')
        self.assertEqual(str(Inequality('Ax2', 'i=0', Var('x'), Cyl(0, Var('x')))), 'Ax2[i=0]: x <= c0 x')


class TestCheckers(unittest.TestCase):

    def setUp(self):
        self.square = full_square()

    def test_atomwise_refuses_undeclared(self):
        inequality = Inequality('Ax2', 'i=0', Var('x'), Cyl(0, Var('x')), atomwise_valid=False)
        with self.assertRaises(AtomwiseNotDeclared):
            holds_atomwise(self.square, inequality)

    def test_exhaustive_bound(self):
        inequality = Inequality('Ax2', 'i=0', Var('x'), Cyl(0, Var('x')))
        with self.assertRaises(OracleBoundExceeded):
            holds_exhaustive(self.square, inequality, bound=3)

    def test_counterexample(self):
        inequality = Inequality('test', 'c0 below c1', Cyl(0, Var('x')), Cyl(1, Var('x')))
        verdict = holds_atomwise(self.square, inequality)
        self.assertFalse(verdict)
        self.assertEqual(verdict.counterexample, {'x': frozenset({0})})
        self.assertFalse(holds_exhaustive(self.square, inequality))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(1, 5), st.booleans())
    def test_checkers_agree(self, seed, atom_count, mutated):
        generator = random.Random(seed)
        structure = random_structure(generator, 2, atom_count)
        if mutated:
            structure = mutate(structure, generator)
        for inequality in list(catalog(Klass.SC, 2)) + list(ax7_inequalities(2, 1)):
            self.assertEqual(holds_atomwise(structure, inequality).holds,
                             holds_exhaustive(structure, inequality).holds,
                             msg=str(inequality))


class TestCatalog(unittest.TestCase):

    def test_diagonal_free_dimension_two(self):
        axioms = catalog(Klass.DC, 2).axioms()
        self.assertNotIn('Ax10', axioms)
        self.assertIn('Ax9', axioms)
        self.assertNotIn('Ax8', catalog('rc', 2).axioms())

    def test_modified_class_drops_ax7(self):
        dc_minus = catalog('dc-minus', 3)
        self.assertEqual(dc_minus.axioms(), ['Ax1', 'Ax2', 'Ax3', 'Ax4', 'Ax5', 'Ax6', 'Ax8', 'Ax9', 'Ax10'])
        self.assertFalse(dc_minus.uses_ax7)
        self.assertTrue(catalog('dc', 3).uses_ax7)

    def test_permutation_axiom_follows_dimension(self):
        self.assertIn('Ax11', catalog(Klass.SC, 2).axioms())
        self.assertNotIn('Ax12', catalog(Klass.SC, 2).axioms())
        self.assertIn('Ax12', catalog(Klass.SC_MINUS, 3).axioms())
        self.assertNotIn('Ax11', catalog(Klass.SC_MINUS, 3).axioms())

    def test_dimension_below_two(self):
        with self.assertRaises(ValueError):
            catalog(Klass.RC, 1)


class TestAx7(unittest.TestCase):

    def test_instance_counts(self):
        self.assertEqual(len(ax7_instances(2, 1, 'skip_t0')), 16)
        self.assertEqual(len(ax7_instances(2, 1, 'include_t0')), 8)
        self.assertEqual(ax7_instances(2, 0), [])

    def test_first_step_targets_its_own_cylinder(self):
        for instance in ax7_instances(2, 1):
            self.assertEqual(instance.k_seq[0], instance.target)

    def test_longer_instances_extend_shorter_ones(self):
        self.assertLess(len(ax7_instances(2, 1)), len(ax7_instances(2, 2)))
        self.assertEqual(ax7_instances(2, 2)[:8], ax7_instances(2, 1))

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            ax7_instances(2, 1, 'skip_everything')

    def test_compiled_instance(self):
        instance = next(instance for instance in ax7_instances(2, 1, 'skip_t0')
                        if (instance.i_seq, instance.j_seq, instance.k_seq, instance.target) == ((0,), (1,), (0,), 1))
        self.assertEqual(instance.tau.images, (1, 1))
        self.assertEqual(instance.diagonal_indices, (0,))
        self.assertEqual(str(instance.inequality().lhs), '(s01 c0 x . d01)')


class TestValidate(unittest.TestCase):

    def test_full_square_is_in_every_class(self):
        square = full_square()
        for klass in Klass:
            report = validate(square, klass)
            self.assertTrue(report.passed, msg=f'{klass}: {report.failed_axioms()}')

    def test_ax7_reading_matters(self):
        structure = algebra((0, 0), (1, 0))
        self.assertTrue(validate(structure, 'rc').passed)
        report = validate(structure, 'rc', ax7_depth=1, ax7_mode='skip_t0')
        self.assertEqual(report.failed_axioms(), ['Ax7'])
        failure = next(result for result in report.failures()
                       if result.inequality.label == 'i=[0],j=[1],k=[0],target=1')
        self.assertEqual(failure.counterexample, {'x': frozenset({1})})

    def test_diagonal_unit_is_not_permutable(self):
        structure = algebra(*DIAGONAL_THREE)
        self.assertTrue(validate(structure, 'dc').passed)
        report = validate(structure, 'sc')
        self.assertFalse(report.passed)
        self.assertIn('Ax11', report.failed_axioms())
        self.assertEqual(report.first_failure('Ax11').counterexample, {'x': frozenset({1})})
        self.assertFalse(report.summary()['Ax11'])
        self.assertTrue(report.summary()['Ax1'])

    def test_corrupted_diagonal(self):
        report = validate(corrupted_square(), Klass.SC)
        self.assertFalse(report.passed)
        self.assertTrue(report.wellformed.passed)

    def test_minus_classes_skip_ax7(self):
        report = validate(full_square(), 'sc-minus')
        self.assertEqual(report.ax7_instances, 0)
        self.assertNotIn('Ax7', report.summary())
        self.assertGreater(validate(full_square(), 'sc', ax7_depth=1).ax7_instances, 0)

    def test_unloadable_structure_is_reported(self):
        structure = AtomStructure.build(2, [[[0]], [[0]]], {(0, 0): [0], (1, 1): [0]})
        with self.assertLogs('cylrep.axioms', level='WARNING'):
            report = validate(structure, 'rc')
        self.assertFalse(report.passed)
        self.assertEqual(report.results, [])
        self.assertEqual(report.wellformed.checks(), ['diag-total'])

    def test_oracle_cross_check(self):
        report = validate(full_square(), 'sc', ax7_depth=1, use_oracle=True)
        self.assertTrue(report.notes.passed)
        with self.assertLogs('cylrep.axioms', level='WARNING'):
            validate(full_square(), 'sc', ax7_depth=1, use_oracle=True, oracle_bound=2)

    def test_report_dict(self):
        data = validate(algebra(*DIAGONAL_THREE), 'sc', ax7_depth=1).to_dict()
        self.assertEqual(data['class'], 'sc')
        self.assertFalse(data['passed'])
        self.assertFalse(data['axioms']['Ax11'])
        self.assertEqual(data['failures'][0]['counterexample'], {'x': [1]})
