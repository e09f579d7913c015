#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: transform.py
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
Transformations on the finite index set ``n = {0, ..., n-1}``.

A transformation is stored as the tuple of its images, ``images[x] = tau(x)``. Composition follows
``(sigma o tau)(x) = sigma(tau(x))`` and a sequence ``f`` is acted upon from the right, ``f o tau``.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import List, Optional, Tuple

from ..cylrepexceptions import ArityMismatch, InvalidTransformation, NotNonSurjective

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.transform'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

KINDS = ('all', 'omega', 'permutations')


@dataclass(frozen=True)
class Transformation:
    """A total map on the index set, given by its images."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, 'images', images)
        if len(images) < 2:
            raise InvalidTransformation(images, 'arity must be at least 2')
        if any(not isinstance(image, int) or not 0 <= image < len(images) for image in images):
            raise InvalidTransformation(images, 'every image must be an index below the arity')

    @property
    def arity(self):
        """The size n of the index set."""
        return len(self.images)

    def __call__(self, index):
        return self.images[index]

    def __str__(self):
        return '<' + ','.join(str(image) for image in self.images) + '>'


@dataclass(frozen=True)
class ChainEntry:
    """One permutation of a chain together with the way it was reached."""

    permutation: Transformation
    parent_index: Optional[int] = None
    transposition: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class PermutationChain:
    """All permutations of ``n`` where every entry is its parent composed with a transposition."""

    arity: int
    entries: Tuple[ChainEntry, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]


def identity(arity):
    """The identity transformation on ``arity`` indices."""
    return Transformation(tuple(range(arity)))


def replacement(arity, i, j):
    """The replacement ``[i/j]``: fixes everything except that it sends ``i`` to ``j``."""
    images = list(range(arity))
    images[i] = j
    return Transformation(tuple(images))


def transposition(arity, i, j):
    """The transposition ``[i,j]``: swaps ``i`` and ``j`` and fixes everything else."""
    images = list(range(arity))
    images[i], images[j] = j, i
    return Transformation(tuple(images))


def rng(tau):
    """The range of ``tau`` as a frozenset."""
    return frozenset(tau.images)


def compose(sigma, tau):
    """Returns ``sigma o tau``, the map ``x -> sigma(tau(x))``.

    Raises:
        ArityMismatch: if the two transformations act on different index sets.

    """
    if sigma.arity != tau.arity:
        raise ArityMismatch(sigma.arity, tau.arity)
    return Transformation(tuple(sigma.images[image] for image in tau.images))


def apply_to_sequence(sequence, tau):
    """Returns the sequence ``f o tau``, that is ``i -> f(tau(i))``.

    Raises:
        ArityMismatch: if the sequence length differs from the arity of ``tau``.

    """
    if len(sequence) != tau.arity:
        raise ArityMismatch(tau.arity, len(sequence))
    return tuple(sequence[image] for image in tau.images)


def is_permutation(tau):
    """Tells whether ``tau`` is a bijection of the index set."""
    return len(rng(tau)) == tau.arity


def decompose_replacements(tau, spare=None):
    """Writes a non-surjective ``tau`` as a composition of replacements.

    The result ``[(i_1, j_1), ..., (i_m, j_m)]`` satisfies ``[i_1/j_1] o ... o [i_m/j_m] = tau``.
    Read as a program on the identity sequence, step ``(i, j)`` copies the value held at ``j``
    into ``i``. Cycles of ``tau`` are rotated first through the ``spare`` slot, the remaining
    positions are then filled in ascending order, each as soon as its current value is no longer
    needed elsewhere. At most ``n + n // 2`` steps are produced.

    Args:
        tau (Transformation): a member of the non-surjective transformations.
        spare (int): the slot used to break cycles, any index outside the range of ``tau``.
            Defaults to the least such index.

    Returns:
        list: the index pairs, leftmost factor first.

    Raises:
        NotNonSurjective: if ``tau`` is a permutation.
        InvalidTransformation: if ``spare`` lies in the range of ``tau``.

    """
    if is_permutation(tau):
        raise NotNonSurjective(tau)
    arity = tau.arity
    missing = [index for index in range(arity) if index not in rng(tau)]
    if spare is None:
        spare = missing[0]
    elif spare not in missing:
        raise InvalidTransformation(tau.images, f'spare slot {spare} lies in the range')
    current = list(range(arity))
    steps = []

    def copy(target, source):
        steps.append((target, source))
        current[target] = current[source]

    for cycle in _cycles(tau):
        copy(spare, cycle[0])
        for position, following in zip(cycle, cycle[1:]):
            copy(position, following)
        copy(cycle[-1], spare)
    while True:
        pending = [index for index in range(arity) if current[index] != tau.images[index]]
        if not pending:
            break
        target = next(index for index in pending if _overwritable(index, current, pending, tau))
        wanted = tau.images[target]
        source = min(index for index in range(arity) if index != target and current[index] == wanted)
        copy(target, source)
    return steps


def _cycles(tau):
    """The cycles of length two or more of ``tau``, each starting at its least member."""
    seen = set()
    cycles = []
    for start in range(tau.arity):
        if start in seen:
            continue
        walk = [start]
        position = tau.images[start]
        while position not in walk and position not in seen:
            walk.append(position)
            position = tau.images[position]
        seen.update(walk)
        if position in walk:
            cycle = walk[walk.index(position):]
            if len(cycle) > 1:
                smallest = cycle.index(min(cycle))
                cycles.append(cycle[smallest:] + cycle[:smallest])
    return cycles


def _overwritable(index, current, pending, tau):
    value = current[index]
    needed = any(tau.images[other] == value for other in pending if other != index)
    duplicated = any(current[other] == value for other in range(len(current)) if other != index)
    return not needed or duplicated


def recompose(pairs, arity):
    """Composes the replacements ``[i_1/j_1] o ... o [i_m/j_m]`` back into one transformation."""
    result = identity(arity)
    for i, j in pairs:
        result = compose(result, replacement(arity, i, j))
    return result


def enumerate_transformations(arity, kind='all'):
    """Lists a family of transformations in lexicographic order of their images.

    Args:
        arity (int): the size n of the index set, at least 2.
        kind (str): ``all`` for every map, ``omega`` for the non-surjective ones and
            ``permutations`` for the bijections.

    Returns:
        list: the transformations of the requested family.

    Raises:
        InvalidTransformation: if ``arity`` is below 2 or ``kind`` is unknown.

    """
    if arity < 2:
        raise InvalidTransformation((), f'arity {arity} is below 2')
    if kind not in KINDS:
        raise InvalidTransformation((), f'unknown family "{kind}"')
    family = [Transformation(images) for images in product(range(arity), repeat=arity)]
    if kind == 'omega':
        return [tau for tau in family if not is_permutation(tau)]
    if kind == 'permutations':
        return [tau for tau in family if is_permutation(tau)]
    return family


def permutation_chain(arity):
    """Enumerates the permutations breadth first from the identity along transpositions.

    Every entry after the first is ``entries[parent].permutation o [k,l]`` for an earlier parent;
    generators ``(k, l)`` are tried in lexicographic order and the first discovery wins.

    Raises:
        InvalidTransformation: if ``arity`` is below 2.

    """
    if arity < 2:
        raise InvalidTransformation((), f'arity {arity} is below 2')
    generators = list(combinations(range(arity), 2))
    start = identity(arity)
    entries = [ChainEntry(start)]
    position = {start: 0}
    queue = deque([start])
    while queue:
        permutation = queue.popleft()
        for k, l in generators:
            reached = compose(permutation, transposition(arity, k, l))
            if reached in position:
                continue
            position[reached] = len(entries)
            entries.append(ChainEntry(reached, position[permutation], (k, l)))
            queue.append(reached)
    LOGGER.debug('permutation chain for n=%s has %s entries', arity, len(entries))
    return PermutationChain(arity, tuple(entries))


def omega(arity) -> List[Transformation]:
    """The non-surjective transformations of ``arity`` indices."""
    return enumerate_transformations(arity, 'omega')
