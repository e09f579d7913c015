#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_transform.py
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
test_transform
----------------------------------
Tests for `transform` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from hypothesis import given
from hypothesis import strategies as st

from cylrep.cylrepexceptions import ArityMismatch, InvalidTransformation, NotNonSurjective
from cylrep.lib.transform import (Transformation,
                                  apply_to_sequence,
                                  compose,
                                  decompose_replacements,
                                  enumerate_transformations,
                                  identity,
                                  is_permutation,
                                  omega,
                                  permutation_chain,
                                  recompose,
                                  replacement,
                                  rng,
                                  transposition)

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def non_surjective(arity):
    """Image tuples of the non-surjective maps on ``arity`` indices."""
    return st.lists(st.integers(0, arity - 1), min_size=arity, max_size=arity).filter(
        lambda images: len(set(images)) < arity).map(Transformation)


class TestTransformation(unittest.TestCase):

    def test_rejects_bad_images(self):
        with self.assertRaises(InvalidTransformation):
            Transformation((0, 2))
        with self.assertRaises(InvalidTransformation):
            Transformation((0,))

    def test_constructors(self):
        self.assertEqual(replacement(3, 0, 2).images, (2, 1, 2))
        self.assertEqual(transposition(3, 0, 2).images, (2, 1, 0))
        self.assertEqual(identity(2).images, (0, 1))
        self.assertEqual(rng(replacement(3, 0, 2)), frozenset({1, 2}))
        self.assertEqual(str(replacement(2, 1, 0)), '<0,0>')

    def test_compose_replacements_gives_constant(self):
        self.assertEqual(compose(replacement(2, 0, 1), replacement(2, 1, 0)).images, (1, 1))

    def test_compose_with_identity(self):
        tau = Transformation((2, 0, 0))
        self.assertEqual(compose(identity(3), tau), tau)
        self.assertEqual(compose(tau, identity(3)), tau)

    def test_transposition_is_an_involution(self):
        swap = transposition(2, 0, 1)
        self.assertEqual(compose(swap, swap), identity(2))

    def test_compose_arity_mismatch(self):
        with self.assertRaises(ArityMismatch):
            compose(identity(2), identity(3))

    def test_apply_to_sequence(self):
        self.assertEqual(apply_to_sequence((5, 7), replacement(2, 0, 1)), (7, 7))
        self.assertEqual(apply_to_sequence(('p', 'q', 'r'), transposition(3, 0, 2)), ('r', 'q', 'p'))
        with self.assertRaises(ArityMismatch):
            apply_to_sequence((5, 7, 9), replacement(2, 0, 1))


class TestDecomposition(unittest.TestCase):

    def test_single_replacements(self):
        self.assertEqual(decompose_replacements(replacement(2, 1, 0)), [(1, 0)])
        self.assertEqual(decompose_replacements(Transformation((1, 1))), [(0, 1)])

    def test_cycle_is_rotated_through_the_spare(self):
        steps = decompose_replacements(Transformation((1, 0, 0)))
        self.assertEqual(steps, [(2, 0), (0, 1), (1, 2)])
        self.assertEqual(recompose(steps, 3).images, (1, 0, 0))

    def test_permutation_is_refused(self):
        with self.assertRaises(NotNonSurjective):
            decompose_replacements(transposition(3, 0, 1))

    def test_spare_in_range_is_refused(self):
        with self.assertRaises(InvalidTransformation):
            decompose_replacements(Transformation((0, 0, 0)), spare=0)

    def test_every_non_surjective_map_recomposes(self):
        for arity in (2, 3, 4):
            for tau in omega(arity):
                steps = decompose_replacements(tau)
                self.assertEqual(recompose(steps, arity), tau, msg=str(tau))
                self.assertLessEqual(len(steps), arity + arity // 2)

    def test_every_spare_recomposes(self):
        for tau in omega(3):
            for spare in set(range(3)) - rng(tau):
                self.assertEqual(recompose(decompose_replacements(tau, spare), 3), tau)

    @given(non_surjective(5))
    def test_recompose_property(self, tau):
        self.assertEqual(recompose(decompose_replacements(tau), 5), tau)


class TestEnumeration(unittest.TestCase):

    def test_family_sizes(self):
        self.assertEqual(len(enumerate_transformations(3)), 27)
        self.assertEqual(len(enumerate_transformations(3, 'omega')), 21)
        self.assertEqual(len(enumerate_transformations(3, 'permutations')), 6)
        self.assertEqual(len(omega(2)), 2)

    def test_lexicographic_order(self):
        family = enumerate_transformations(2)
        self.assertEqual([tau.images for tau in family], [(0, 0), (0, 1), (1, 0), (1, 1)])

    def test_bad_arguments(self):
        with self.assertRaises(InvalidTransformation):
            enumerate_transformations(1)
        with self.assertRaises(InvalidTransformation):
            enumerate_transformations(3, 'bijections')

    def test_permutation_chain(self):
        for arity in (2, 3, 4):
            chain = permutation_chain(arity)
            permutations = [entry.permutation for entry in chain]
            self.assertEqual(chain[0].permutation, identity(arity))
            self.assertIsNone(chain[0].parent_index)
            self.assertEqual(len(set(permutations)), len(enumerate_transformations(arity, 'permutations')))
            self.assertTrue(all(is_permutation(permutation) for permutation in permutations))
            for position, entry in enumerate(list(chain)[1:], start=1):
                self.assertLess(entry.parent_index, position)
                k, l = entry.transposition
                expected = compose(chain[entry.parent_index].permutation, transposition(arity, k, l))
                self.assertEqual(entry.permutation, expected)

    def test_chain_of_two(self):
        chain = permutation_chain(2)
        self.assertEqual(len(chain), 2)
        self.assertEqual(chain[1].transposition, (0, 1))
        self.assertEqual(chain[1].permutation.images, (1, 0))
