#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: network.py
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
Pre-networks, the network conditions, zigzags and mosaics.

A pre-network keeps its node set and a labelling of edges, the n-tuples of nodes, by atoms. Edge
labels are kept in insertion order, which is the order every deterministic walk over the edges
follows.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Tuple

from ..cylrepexceptions import AxiomViolation, MergeConflict, MosaicError, NotAChain
from .algebra import Klass, p_elem, t_atom, tau_atom
from .report import Report
from .transform import apply_to_sequence, enumerate_transformations, permutation_chain, replacement

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.network'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


class PreNetwork:
    """A finite set of nodes with a partial labelling of its n-tuples by atoms."""

    def __init__(self, nodes=None, labels=None):
        self.nodes = set(nodes or ())
        self.labels = {}
        for edge, atom in (labels or {}).items():
            self.add_edge(edge, atom)

    @property
    def edges(self):
        """The labelled tuples in insertion order."""
        return list(self.labels)

    def label(self, edge):
        """The atom on ``edge``, None for an unlabelled tuple."""
        return self.labels.get(tuple(edge))

    def add_edge(self, edge, atom):
        """Labels ``edge`` with ``atom``, adding its nodes.

        Returns:
            bool: True when the edge is new.

        Raises:
            MergeConflict: if the edge already carries a different atom.

        """
        edge = tuple(edge)
        current = self.labels.get(edge)
        if current is not None:
            if current != atom:
                raise MergeConflict(edge, current, atom)
            return False
        self.labels[edge] = atom
        self.nodes.update(edge)
        return True

    def copy(self):
        """A copy that can grow independently."""
        network = PreNetwork(self.nodes)
        network.labels = dict(self.labels)
        return network

    def __contains__(self, edge):
        return tuple(edge) in self.labels

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, PreNetwork):
            return NotImplemented
        return self.nodes == other.nodes and self.labels == other.labels

    def __repr__(self):
        return f'PreNetwork(nodes={len(self.nodes)}, edges={len(self.labels)})'


@dataclass(frozen=True)
class Zigzag:
    """Edges ``h_0 .. h_m`` where ``h_t`` and ``h_{t+1}`` differ at ``step_indices[t]`` only."""

    path: Tuple[Tuple[Any, ...], ...]
    step_indices: Tuple[int, ...]

    @property
    def length(self):
        """The number of steps."""
        return len(self.step_indices)


def edge_key(edge):
    """Sort key putting integer nodes before named ones."""
    return tuple((isinstance(node, str), node) for node in edge)


def same_except(edge, index):
    """The bucket key of edges that agree with ``edge`` outside ``index``."""
    return index, edge[:index] + edge[index + 1:]


def cylinder_buckets(edges, dimension):
    """Groups edges by ``same_except`` for every index."""
    buckets = defaultdict(list)
    for edge in edges:
        for index in range(dimension):
            buckets[same_except(edge, index)].append(edge)
    return buckets


@lru_cache(maxsize=16)
def _family(dimension, kind):
    return tuple(enumerate_transformations(dimension, kind))


def condition_b(structure, network):
    """Checks that the label of every edge records exactly its coordinate equalities.

    Returns:
        Report: violations carry the offending edge.

    """
    report = Report('condition-b')
    dimension = structure.dimension
    for edge, atom in network.labels.items():
        if len(edge) != dimension:
            report.add('condition-b', f'edge {edge} does not have {dimension} nodes', edge)
            continue
        if not 0 <= atom < structure.atom_count:
            report.add('condition-b', f'edge {edge} is labelled with unknown atom {atom}', edge)
            continue
        for i in range(dimension):
            broken = next((j for j in range(dimension)
                           if (atom in structure.diag(i, j)) != (edge[i] == edge[j])), None)
            if broken is not None:
                report.add('condition-b', f'edge {edge} with atom {structure.name(atom)} breaks d_{i}{broken}', edge)
                break
    return report


def closure_check(network, klass):
    """Checks that the edges are closed under the transformations ``klass`` demands.

    No closure for RC, the non-surjective maps for the diagonalizable classes and every map for the
    permutable ones.

    Returns:
        Report: violations carry the missing edge.

    """
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    report = Report('closure')
    if not klass.diagonalizable or not network.labels:
        return report
    dimension = len(next(iter(network.labels)))
    family = _family(dimension, 'all' if klass.permutable else 'omega')
    for edge in network.edges:
        for tau in family:
            image = apply_to_sequence(edge, tau)
            if image not in network.labels:
                report.add('closure', f'{edge} composed with {tau} is not an edge', image)
                break
    return report


def _neighbours(structure, network, buckets, edge, allowed):
    atom = network.labels[edge]
    for index in range(structure.dimension):
        images = structure.cyl_images[index]
        for other in sorted(buckets.get(same_except(edge, index), ()), key=edge_key):
            if other != edge and other in allowed and images[network.labels[other]] == images[atom]:
                yield index, other


def zigzag_search(structure, network, first, last):
    """Finds a shortest zigzag from ``first`` to ``last``.

    Only edges whose range contains the common range of ``first`` and ``last`` are visited and
    neighbours are expanded in canonical tuple order.

    Returns:
        Zigzag: the zigzag, or None when there is none.

    """
    first, last = tuple(first), tuple(last)
    if first == last:
        return Zigzag((first,), ())
    common = set(first) & set(last)
    allowed = {edge for edge in network.labels if common <= set(edge)}
    buckets = cylinder_buckets(allowed, structure.dimension)
    parents = {first: None}
    queue = deque([first])
    while queue:
        edge = queue.popleft()
        for index, other in _neighbours(structure, network, buckets, edge, allowed):
            if other in parents:
                continue
            parents[other] = (edge, index)
            if other == last:
                return _unwind(parents, last)
            queue.append(other)
    return None


def _unwind(parents, last):
    path, steps = [last], []
    while parents[path[-1]] is not None:
        previous, index = parents[path[-1]]
        path.append(previous)
        steps.append(index)
    return Zigzag(tuple(reversed(path)), tuple(reversed(steps)))


def _components(structure, network, common):
    allowed = {edge for edge in network.labels if common <= set(edge)}
    buckets = cylinder_buckets(allowed, structure.dimension)
    component = {}
    for start in sorted(allowed, key=edge_key):
        if start in component:
            continue
        component[start] = start
        queue = deque([start])
        while queue:
            edge = queue.popleft()
            for _, other in _neighbours(structure, network, buckets, edge, allowed):
                if other not in component:
                    component[other] = start
                    queue.append(other)
    return component


def zigzag_check(structure, network):
    """Checks that every two edges sharing between 1 and n-1 nodes are joined by a zigzag."""
    report = Report('zigzag')
    dimension = structure.dimension
    components = {}
    edges = network.edges
    for position, first in enumerate(edges):
        for last in edges[position + 1:]:
            common = frozenset(first) & frozenset(last)
            if not 0 < len(common) < dimension:
                continue
            if common not in components:
                components[common] = _components(structure, network, common)
            component = components[common]
            if component.get(first) != component.get(last):
                report.add('zigzag', f'no zigzag from {first} to {last}', (first, last))
    return report


def is_network(structure, network, klass):
    """Checks closure, the diagonal condition and zigzag connectivity.

    Returns:
        Report: named ``network``, empty when ``network`` is a network for ``klass``.

    """
    report = Report('network')
    report.extend(closure_check(network, klass))
    report.extend(condition_b(structure, network))
    if report.passed:
        report.extend(zigzag_check(structure, network))
    return report


def replacement_check(structure, network):
    """Checks that ``f o [i/j]``, whenever it is an edge, is labelled ``t^i_j`` of the label of ``f``."""
    report = Report('replacement')
    dimension = structure.dimension
    for edge, atom in network.labels.items():
        for i in range(dimension):
            for j in range(dimension):
                if i == j:
                    continue
                image = apply_to_sequence(edge, replacement(dimension, i, j))
                if image not in network.labels:
                    continue
                try:
                    expected = t_atom(structure, i, j, atom)
                except AxiomViolation as error:
                    report.add('replacement', error.message, (edge, i, j))
                    continue
                if network.labels[image] != expected:
                    report.add('replacement', f'{image} is labelled {network.labels[image]}, '
                                              f't^{i}_{j} of {edge} gives {expected}', (edge, i, j))
    return report


def is_modified_network(structure, network, klass):
    """Checks closure, the diagonal condition and the replacement labelling, without zigzags."""
    report = Report('modified-network')
    report.extend(closure_check(network, klass))
    report.extend(condition_b(structure, network))
    if report.passed:
        report.extend(replacement_check(structure, network))
    return report


def check_network(structure, network, klass):
    """The network check that fits ``klass``: modified networks for the classes without Ax7."""
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    if klass.modified:
        return is_modified_network(structure, network, klass)
    return is_network(structure, network, klass)


def tauclosed_check(structure, network, klass):
    """Checks the label propagation properties every network enjoys.

    Equivalent edges have labels in the same cylinder class, replacements act on labels through
    ``t^i_j`` and, for the diagonalizable classes, ``f o tau`` is labelled ``tau`` of the label of
    ``f`` for every non-surjective ``tau``.
    """
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    report = Report('tauclosed')
    dimension = structure.dimension
    buckets = cylinder_buckets(network.edges, dimension)
    for (index, _), edges in buckets.items():
        classes = {structure.cyl_images[index][network.labels[edge]] for edge in edges}
        if len(classes) > 1:
            report.add('cylinder', f'edges {edges} are {index}-equivalent with labels in distinct classes',
                       tuple(edges))
    report.extend(replacement_check(structure, network))
    if klass.diagonalizable:
        for edge, atom in network.labels.items():
            for tau in _family(dimension, 'omega'):
                image = apply_to_sequence(edge, tau)
                if image not in network.labels:
                    continue
                try:
                    expected = tau_atom(structure, tau, atom)
                except AxiomViolation as error:
                    report.add('transformation', error.message, (edge, str(tau)))
                    continue
                if network.labels[image] != expected:
                    report.add('transformation', f'{image} is not labelled {tau} of the label of {edge}',
                               (edge, str(tau)))
    return report


def _check_generator(structure, edge, atom):
    dimension = structure.dimension
    if len(edge) != dimension:
        raise MosaicError(f'generator {edge} does not have {dimension} nodes')
    structure.check_atom(atom)
    for i in range(dimension):
        for j in range(dimension):
            if (edge[i] == edge[j]) != (atom in structure.diag(i, j)):
                raise MosaicError(f'generator {edge} does not follow the diagonal pattern of atom '
                                  f'{structure.name(atom)} at ({i},{j})')


def mosaic_check(structure, mosaic):
    """Checks the labels of a mosaic on their own.

    Every edge must record the diagonals of its label and every label must lie in each of its own
    cylinder classes.

    Returns:
        Report: violations carry the offending edge.

    """
    report = condition_b(structure, mosaic)
    if not report.passed:
        return report
    for edge, atom in mosaic.labels.items():
        broken = next((index for index in range(structure.dimension)
                       if atom not in structure.cyl_images[index][atom]), None)
        if broken is not None:
            report.add('cylinder', f'atom {structure.name(atom)} on {edge} is not below c_{broken} of itself', edge)
    return report


def _put(network, edge, atom):
    try:
        network.add_edge(edge, atom)
    except MergeConflict as error:
        raise MosaicError(f'mosaic labels disagree: {error.message}') from None


def _omega_label(structure, tau, atom):
    try:
        label = tau_atom(structure, tau, atom)
    except AxiomViolation as error:
        raise MosaicError(error.message) from None
    if label is None:
        raise MosaicError(f'{tau} sends atom {structure.name(atom)} to zero')
    return label


def build_mosaic(structure, edge, atom, klass):
    """Builds the mosaic generated by ``edge`` and ``atom``.

    RC mosaics hold the generator only. Diagonalizable mosaics add ``edge o tau`` labelled
    ``tau`` of ``atom`` for every non-surjective ``tau``. Permutable mosaics over a repetition free
    generator also label ``edge o pi`` for every permutation ``pi``, walking the permutation chain
    and picking the least atom below ``p_kl`` of the parent label. Edges are added generator first,
    then along the non-surjective maps in lexicographic order, then along the chain.

    Raises:
        MosaicError: if the generator does not follow the diagonal pattern of ``atom``, a label
            is zero, two constructions disagree on an edge, a label breaks the diagonals or its own
            cylinder classes, or a replacement label is off.

    """
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    edge = tuple(edge)
    _check_generator(structure, edge, atom)
    dimension = structure.dimension
    mosaic = PreNetwork()
    mosaic.add_edge(edge, atom)
    if klass.diagonalizable:
        for tau in _family(dimension, 'omega'):
            _put(mosaic, apply_to_sequence(edge, tau), _omega_label(structure, tau, atom))
        if klass.permutable and len(set(edge)) == dimension:
            chain = permutation_chain(dimension)
            edges = [edge]
            for entry in list(chain)[1:]:
                parent = edges[entry.parent_index]
                k, l = entry.transposition
                image = apply_to_sequence(edge, entry.permutation)
                candidates = p_elem(structure, k, l, {mosaic.labels[parent]})
                if not candidates:
                    raise MosaicError(f'p_{k}{l} of atom {structure.name(mosaic.labels[parent])} is zero')
                _put(mosaic, image, min(candidates))
                edges.append(image)
    violations = mosaic_check(structure, mosaic)
    if violations.passed:
        violations = replacement_check(structure, mosaic)
    if not violations.passed:
        raise MosaicError(f'mosaic of {edge} and atom {structure.name(atom)}: {violations.violations[0].detail}')
    LOGGER.debug('mosaic of %s and atom %s has %s edges', edge, structure.name(atom), len(mosaic))
    return mosaic


def merge(left, right):
    """The union of two pre-networks.

    Raises:
        MergeConflict: if a shared edge carries two different atoms.

    """
    merged = left.copy()
    merged.nodes.update(right.nodes)
    for edge, atom in right.labels.items():
        merged.add_edge(edge, atom)
    return merged


def extends(smaller, larger):
    """Tells whether ``larger`` contains the nodes and the labelled edges of ``smaller``."""
    return smaller.nodes <= larger.nodes and all(larger.labels.get(edge) == atom
                                                 for edge, atom in smaller.labels.items())


def chain_union(networks):
    """The union of an increasing sequence of pre-networks.

    Raises:
        NotAChain: if some member does not extend its predecessor.

    """
    union = PreNetwork()
    previous = None
    for position, network in enumerate(networks):
        if previous is not None and not extends(previous, network):
            raise NotAChain(position)
        union = merge(union, network)
        previous = network
    return union


def network_to_dict(network):
    """The replay format ``{"nodes": [...], "edges": [{"tuple": [...], "atom": a}]}``."""
    return {'nodes': sorted(network.nodes, key=lambda node: edge_key((node,))),
            'edges': [{'tuple': list(edge), 'atom': atom} for edge, atom in network.labels.items()]}


def network_from_dict(data):
    """Builds a pre-network from the replay format, keeping the edge order."""
    network = PreNetwork(data.get('nodes', ()))
    for entry in data.get('edges', ()):
        network.add_edge(tuple(entry['tuple']), entry['atom'])
    return network
