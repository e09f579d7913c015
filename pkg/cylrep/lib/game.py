#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: game.py
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
The representation game played to saturation.

The player demanding witnesses is replaced by a fair schedule: every obligation is queued in a fixed
order and answered in turn by the strategy of the player building the network. A play stops when
nothing is left to witness or when a budget runs out.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging
import os
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Any, Deque, Dict, List, Tuple

from ..cylrepexceptions import MergeConflict, StrategyError
from .algebra import Klass
from .network import PreNetwork, build_mosaic, check_network, same_except

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.game'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

TRANSCRIPT_LOGGER = logging.getLogger('''cylrep.transcript''')
TRANSCRIPT_LOGGER.addHandler(logging.NullHandler())

MAX_ROUNDS = 10000
MAX_NODES = 5000
TRANSCRIPT_ENV = 'CYLREP_LOG'
TRANSCRIPT_LEVELS = ('off', 'info', 'trace')

SATURATED = 'saturated'
BOUNDED = 'bounded'


def transcript_level():
    """The transcript level set through ``CYLREP_LOG``, ``off`` when unset or unknown."""
    level = os.environ.get(TRANSCRIPT_ENV, 'off').strip().lower()
    if level not in TRANSCRIPT_LEVELS:
        LOGGER.warning('ignoring %s=%s, expected one of %s', TRANSCRIPT_ENV, level, ', '.join(TRANSCRIPT_LEVELS))
        return 'off'
    return level


@dataclass(frozen=True)
class AtomWitness:
    """Some edge must carry ``atom``."""

    atom: int

    def to_dict(self):
        """Plain representation for transcripts."""
        return {'kind': 'atom', 'atom': self.atom}

    def __str__(self):
        return f'atom {self.atom}'


@dataclass(frozen=True)
class CylWitness:
    """Some edge ``edge(index/u)`` must carry ``atom``."""

    edge: Tuple[Any, ...]
    index: int
    atom: int

    def to_dict(self):
        """Plain representation for transcripts."""
        return {'kind': 'cylinder', 'edge': list(self.edge), 'index': self.index, 'atom': self.atom}

    def __str__(self):
        return f'cylinder {self.edge} at {self.index} with atom {self.atom}'


@dataclass(frozen=True)
class Limits:
    """The budgets of a play."""

    max_rounds: int = MAX_ROUNDS
    max_nodes: int = MAX_NODES


class WitnessIndex:
    """For every edge and index, the atoms labelling the edges that differ from it at that index only."""

    def __init__(self, dimension):
        self.dimension = dimension
        self._atoms = defaultdict(set)
        self._labelled = set()

    def add(self, edge, atom):
        """Registers a labelled edge."""
        self._labelled.add(atom)
        for index in range(self.dimension):
            self._atoms[same_except(edge, index)].add(atom)

    def has_atom(self, atom):
        """Tells whether some edge carries ``atom``."""
        return atom in self._labelled

    def has_witness(self, edge, index, atom):
        """Tells whether some ``edge(index/u)`` carries ``atom``."""
        return atom in self._atoms.get(same_except(edge, index), ())

    @classmethod
    def of(cls, network, dimension):
        """The index of every edge of ``network``."""
        index = cls(dimension)
        for edge, atom in network.labels.items():
            index.add(edge, atom)
        return index


def _cylinder_obligations(structure, edge, atom, witnesses):
    for index in range(structure.dimension):
        for other in sorted(structure.cyl_images[index][atom]):
            if not witnesses.has_witness(edge, index, other):
                yield CylWitness(edge, index, other)


def is_met(witnesses, obligation):
    """Tells whether ``obligation`` already has its witness."""
    if isinstance(obligation, AtomWitness):
        return witnesses.has_atom(obligation.atom)
    return witnesses.has_witness(obligation.edge, obligation.index, obligation.atom)


def pending_obligations(structure, network, klass=None):
    """Lists the unmet obligations of a network.

    Atoms that label no edge come first in ascending order, then for every edge in insertion order,
    every index ascending and every atom of the cylinder class ascending, the cylinder witnesses
    that are missing.

    Args:
        structure (AtomStructure): the algebra being represented.
        network (PreNetwork): the current network.
        klass (Klass): unused by the enumeration, accepted for symmetry with the strategy.

    """
    witnesses = WitnessIndex.of(network, structure.dimension)
    obligations = [AtomWitness(atom) for atom in structure.atoms if not witnesses.has_atom(atom)]
    for edge, atom in network.labels.items():
        obligations.extend(_cylinder_obligations(structure, edge, atom, witnesses))
    return obligations


@dataclass
class PlayState:
    """Everything a play owns between two rounds."""

    structure: Any
    klass: Klass
    limits: Limits = field(default_factory=Limits)
    network: PreNetwork = field(default_factory=PreNetwork)
    round: int = 0
    next_node: int = 0
    queue: Deque[Any] = field(default_factory=deque)
    witnesses: Any = None
    record: bool = False
    history: List[Dict[str, Any]] = field(default_factory=list)
    last_move: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.witnesses is None:
            self.witnesses = WitnessIndex.of(self.network, self.structure.dimension)
        if self.network.nodes:
            self.next_node = max((node + 1 for node in self.network.nodes if isinstance(node, int)),
                                 default=self.next_node)

    @classmethod
    def start(cls, structure, klass, limits=None, record=False):
        """A state with an empty network and every atom obligation queued.

        Moves are kept in ``history`` only when ``record`` is set.
        """
        klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
        state = cls(structure, klass, limits or Limits(), record=record)
        state.queue.extend(pending_obligations(structure, state.network, klass))
        return state

    def fresh_node(self):
        """Allocates a node that has not been used yet."""
        node = self.next_node
        self.next_node += 1
        return node

    def unmet(self):
        """The queued obligations that still lack a witness."""
        return [obligation for obligation in self.queue if not is_met(self.witnesses, obligation)]


def _generator_for(structure, state, atom):
    """Fresh nodes following the diagonal pattern of ``atom``."""
    nodes = []
    for i in range(structure.dimension):
        equal = next((j for j in range(i) if atom in structure.diag(i, j)), None)
        nodes.append(nodes[equal] if equal is not None else state.fresh_node())
    return tuple(nodes)


def _absorb(state, mosaic, obligation):
    """Adds the mosaic to the network, queueing the obligations of the new edges."""
    structure = state.structure
    nodes_before = set(state.network.nodes)
    added = []
    for edge, atom in mosaic.labels.items():
        try:
            is_new = state.network.add_edge(edge, atom)
        except MergeConflict:
            LOGGER.warning('strategy met a label conflict while answering %s', obligation)
            raise
        if is_new:
            added.append(edge)
            state.witnesses.add(edge, atom)
    for edge in added:
        state.queue.extend(_cylinder_obligations(structure, edge, state.network.labels[edge], state.witnesses))
    return sorted(state.network.nodes - nodes_before, key=str), added


def exists_move(state, obligation):
    """Answers one obligation with the strategy, growing ``state`` in place.

    An atom obligation is met by a mosaic on brand new nodes whose equalities follow the diagonals
    of the atom. A cylinder obligation ``(f, i, b)`` is met by the mosaic generated by ``b`` and
    ``f(i/f_j)`` for the least ``j != i`` with ``b <= d_ij``, or ``f(i/u)`` for a brand new node
    ``u`` when there is no such ``j``. Obligations that are already met leave the state unchanged.

    Returns:
        PlayState: the same state, grown.

    Raises:
        StrategyError: when ``f(i/f_j)`` is an edge with a label other than ``b``.
        MergeConflict: when the mosaic disagrees with the network on a shared edge.
        MosaicError: when the mosaic cannot be built.

    """
    structure, klass = state.structure, state.klass
    if is_met(state.witnesses, obligation):
        return state
    if isinstance(obligation, AtomWitness):
        generator, atom = _generator_for(structure, state, obligation.atom), obligation.atom
        branch = 'fresh nodes'
    else:
        edge, index, atom = obligation.edge, obligation.index, obligation.atom
        target = next((j for j in range(structure.dimension) if j != index and atom in structure.diag(index, j)), None)
        if target is not None:
            generator = edge[:index] + (edge[target],) + edge[index + 1:]
            current = state.network.label(generator)
            if current is not None and current != atom:
                raise StrategyError(f'{generator} is labelled {current} while {obligation} asks for {atom}')
            branch = f'reuse node of index {target}'
        else:
            generator = edge[:index] + (state.fresh_node(),) + edge[index + 1:]
            branch = 'fresh node'
    LOGGER.debug('answering %s with %s (%s)', obligation, generator, branch)
    mosaic = build_mosaic(structure, generator, atom, klass)
    nodes_added, edges_added = _absorb(state, mosaic, obligation)
    state.round += 1
    state.last_move = {'round': state.round,
                       'obligation': obligation.to_dict(),
                       'nodes_added': nodes_added,
                       'edges_added': [{'tuple': list(edge), 'atom': state.network.labels[edge]}
                                       for edge in edges_added]}
    if state.record:
        state.history.append(state.last_move)
    return state


@dataclass
class PlayOutcome:
    """How a play ended.

    Attributes:
        status (str): ``saturated`` or ``bounded``.
        network (PreNetwork): the final network.
        pending (list): the unmet obligations of a bounded play.
        transcript (list): one entry per round when requested.
        rounds (int): the number of moves made.

    """

    status: str
    network: PreNetwork
    pending: List[Any] = field(default_factory=list)
    transcript: List[Dict[str, Any]] = field(default_factory=list)
    rounds: int = 0

    @property
    def saturated(self):
        """True when every obligation was met."""
        return self.status == SATURATED


def _emit(entry, level, queue_size):
    if level == 'off':
        return
    TRANSCRIPT_LOGGER.info(json.dumps(entry, sort_keys=True, default=str))
    if level == 'trace':
        TRANSCRIPT_LOGGER.debug('queue holds %s obligations after round %s', queue_size, entry['round'])


def run_to_saturation(structure, klass, limits=None, debug=False, transcript=False):
    """Plays the game until nothing is left to witness or a budget runs out.

    Args:
        structure (AtomStructure): the algebra, expected to validate as ``klass``.
        klass (Klass): the class whose networks are built.
        limits (Limits): the round and node budgets.
        debug (bool): check the network conditions after every round.
        transcript (bool): keep the per-round transcript on the outcome.

    Returns:
        PlayOutcome: ``saturated`` with no pending obligations, or ``bounded`` with the unmet ones.

    Raises:
        StrategyError: when the strategy or, with ``debug``, a network check fails.
        MergeConflict: when a mosaic disagrees with the network.
        MosaicError: when a mosaic cannot be built.

    """
    state = PlayState.start(structure, klass, limits, record=transcript)
    level = transcript_level()
    limits = state.limits
    status = None
    while status is None:
        while state.queue:
            obligation = state.queue[0]
            if is_met(state.witnesses, obligation):
                state.queue.popleft()
                continue
            if state.round >= limits.max_rounds or len(state.network.nodes) >= limits.max_nodes:
                status = BOUNDED
                break
            state.queue.popleft()
            exists_move(state, obligation)
            _emit(state.last_move, level, len(state.queue))
            if debug:
                report = check_network(structure, state.network, state.klass)
                if not report.passed:
                    raise StrategyError(f'round {state.round} left no network: {report.violations[0].detail}')
        if status is None:
            missed = pending_obligations(structure, state.network, state.klass)
            if level == 'trace':
                TRANSCRIPT_LOGGER.debug('re-scan found %s obligations', len(missed))
            if missed:
                state.queue.extend(missed)
            else:
                status = SATURATED
    pending = state.unmet() if status == BOUNDED else []
    LOGGER.info('play %s after %s rounds with %s nodes and %s edges', status, state.round,
                len(state.network.nodes), len(state.network))
    return PlayOutcome(status, state.network, pending, state.history, state.round)
