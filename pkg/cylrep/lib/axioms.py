#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: axioms.py
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
Axiom terms, the two inequality checkers and the axiom catalogs.

Axioms are written as inequalities between terms; an equation is stored as two of them. Each
catalog entry declares whether its left side is additive in every variable and its right side
monotone, in which case checking single-atom assignments decides the inequality.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import chain, combinations, product
from typing import Any, Dict, List, Optional, Tuple

from ..cylrepexceptions import AtomwiseNotDeclared, OracleBoundExceeded, UnboundVariable
from .algebra import Klass, complement, cyl, s_subst, structural, t_subst, wellformed
from .report import Report, plain
from .transform import compose, identity, replacement

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cylrep.axioms'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

AX7_DEPTH = 3
AX7_MODE = 'include_t0'
AX7_MODES = ('include_t0', 'skip_t0')
EXHAUSTIVE_ATOM_BOUND = 10


class Term:
    """Base of the term syntax tree."""

    def evaluate(self, structure, env):
        """Evaluates the term in ``structure`` under the variable assignment ``env``."""
        raise NotImplementedError

    def variables(self):
        """The variable names occurring in the term."""
        return frozenset()


@dataclass(frozen=True)
class Var(Term):
    """A named variable."""

    name: str

    def evaluate(self, structure, env):
        try:
            return env[self.name]
        except KeyError:
            raise UnboundVariable(self.name) from None

    def variables(self):
        return frozenset({self.name})

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Zero(Term):
    """The constant 0."""

    def evaluate(self, structure, env):
        return frozenset()

    def __str__(self):
        return '0'


@dataclass(frozen=True)
class One(Term):
    """The constant 1."""

    def evaluate(self, structure, env):
        return structure.top

    def __str__(self):
        return '1'


@dataclass(frozen=True)
class Diag(Term):
    """The diagonal constant ``d_ij``."""

    i: int
    j: int

    def evaluate(self, structure, env):
        return structure.diag(self.i, self.j)

    def __str__(self):
        return f'd{self.i}{self.j}'


@dataclass(frozen=True)
class Neg(Term):
    """Boolean complement."""

    operand: Term

    def evaluate(self, structure, env):
        return complement(structure, self.operand.evaluate(structure, env))

    def variables(self):
        return self.operand.variables()

    def __str__(self):
        return f'-{self.operand}'


@dataclass(frozen=True)
class Cyl(Term):
    """Cylindrification ``c_i``."""

    i: int
    operand: Term

    def evaluate(self, structure, env):
        return cyl(structure, self.i, self.operand.evaluate(structure, env))

    def variables(self):
        return self.operand.variables()

    def __str__(self):
        return f'c{self.i} {self.operand}'


@dataclass(frozen=True)
class Subst(Term):
    """Substitution ``s^i_j``."""

    i: int
    j: int
    operand: Term

    def evaluate(self, structure, env):
        return s_subst(structure, self.i, self.j, self.operand.evaluate(structure, env))

    def variables(self):
        return self.operand.variables()

    def __str__(self):
        return f's{self.i}{self.j} {self.operand}'


@dataclass(frozen=True)
class Tsub(Term):
    """``t^i_j``, that is ``c_i x . d_ij``."""

    i: int
    j: int
    operand: Term

    def evaluate(self, structure, env):
        return t_subst(structure, self.i, self.j, self.operand.evaluate(structure, env))

    def variables(self):
        return self.operand.variables()

    def __str__(self):
        return f't{self.i}{self.j} {self.operand}'


@dataclass(frozen=True)
class Join(Term):
    """Binary join ``+``."""

    left: Term
    right: Term

    def evaluate(self, structure, env):
        return self.left.evaluate(structure, env) | self.right.evaluate(structure, env)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return f'({self.left} + {self.right})'


@dataclass(frozen=True)
class Meet(Term):
    """Binary meet ``.``."""

    left: Term
    right: Term

    def evaluate(self, structure, env):
        return self.left.evaluate(structure, env) & self.right.evaluate(structure, env)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return f'({self.left} . {self.right})'


def meet_all(terms):
    """Folds terms into a left-nested meet, 1 for no terms."""
    terms = list(terms)
    if not terms:
        return One()
    return reduce(Meet, terms)


@dataclass(frozen=True)
class Inequality:
    """``lhs <= rhs`` tagged with the axiom it instantiates.

    Attributes:
        axiom (str): the axiom name, ``Ax1`` up to ``Ax12``.
        label (str): the instance, for example the indices it was generated for.
        lhs (Term): the left side.
        rhs (Term): the right side.
        atomwise_valid (bool): the left side is additive in every variable and the right side is
            monotone, so single-atom assignments decide the inequality.

    """

    axiom: str
    label: str
    lhs: Term
    rhs: Term
    atomwise_valid: bool = True

    def variables(self):
        """Sorted variable names of both sides."""
        return sorted(self.lhs.variables() | self.rhs.variables())

    def __str__(self):
        return f'{self.axiom}[{self.label}]: {self.lhs} <= {self.rhs}'


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker; falsy with a counterexample assignment when the inequality fails."""

    holds: bool
    counterexample: Optional[Dict[str, Any]] = None

    def __bool__(self):
        return self.holds


def eval_term(structure, term, env=None):
    """Evaluates ``term`` in ``structure``.

    Raises:
        UnboundVariable: if a variable of the term has no value in ``env``.
        InvalidIndex: if an index in the term is not below the dimension.

    """
    return term.evaluate(structure, env or {})


def holds_atomwise(structure, inequality):
    """Checks an inequality on every assignment of single atoms to its variables.

    Raises:
        AtomwiseNotDeclared: when the inequality does not carry the atomwise declaration.

    """
    if not inequality.atomwise_valid:
        raise AtomwiseNotDeclared(inequality)
    names = inequality.variables()
    singletons = [frozenset({atom}) for atom in structure.atoms]
    return _search(structure, inequality, names, singletons)


def holds_exhaustive(structure, inequality, bound=EXHAUSTIVE_ATOM_BOUND):
    """Checks an inequality on every assignment of elements to its variables.

    Raises:
        OracleBoundExceeded: when the structure has more than ``bound`` atoms.

    """
    if structure.atom_count > bound:
        raise OracleBoundExceeded(structure.atom_count, bound)
    names = inequality.variables()
    atoms = list(structure.atoms)
    elements = [frozenset(subset)
                for subset in chain.from_iterable(combinations(atoms, size) for size in range(len(atoms) + 1))]
    return _search(structure, inequality, names, elements)


def _search(structure, inequality, names, values):
    for assignment in product(values, repeat=len(names)):
        env = dict(zip(names, assignment))
        if not inequality.lhs.evaluate(structure, env) <= inequality.rhs.evaluate(structure, env):
            return Verdict(False, env)
    return Verdict(True)


def _others(dimension, *excluded):
    return [k for k in range(dimension) if k not in excluded]


def _equation(axiom, label, left, right):
    return [Inequality(axiom, f'{label} <=', left, right),
            Inequality(axiom, f'{label} >=', right, left)]


def base_catalog(dimension):
    """The inequalities of Ax1 up to Ax6."""
    x, y = Var('x'), Var('y')
    inequalities = []
    indices = range(dimension)
    for i in indices:
        inequalities.extend(_equation('Ax1', f'i={i}', Cyl(i, Zero()), Zero()))
    for i in indices:
        inequalities.append(Inequality('Ax2', f'i={i}', x, Cyl(i, x)))
    for i in indices:
        inequalities.extend(_equation('Ax3', f'i={i}', Cyl(i, Meet(x, Cyl(i, y))), Meet(Cyl(i, x), Cyl(i, y))))
    for i in indices:
        inequalities.extend(_equation('Ax4', f'i={i}', Diag(i, i), One()))
    for i, j in product(indices, repeat=2):
        for k in _others(dimension, i, j):
            label = f'i={i},j={j},k={k}'
            inequalities.append(Inequality('Ax5', label, Meet(Diag(i, k), Diag(k, j)), Diag(i, j)))
            inequalities.extend(_equation('Ax5', label, Diag(i, j), Diag(j, i)))
            inequalities.extend(_equation('Ax5', label, Diag(j, i), Cyl(k, Diag(j, i))))
    for i, j in product(indices, repeat=2):
        if i != j:
            inequalities.append(Inequality('Ax6', f'i={i},j={j}',
                                           Meet(Cyl(i, Meet(x, Diag(i, j))), Diag(i, j)), x))
    return inequalities


def diagonal_catalog(dimension):
    """The inequalities of Ax8 up to Ax10."""
    x = Var('x')
    inequalities = []
    indices = range(dimension)
    for i, j in product(indices, repeat=2):
        for k in _others(dimension, i, j):
            inequalities.append(Inequality('Ax8', f'i={i},j={j},k={k}',
                                           Meet(Cyl(j, Cyl(i, x)), Diag(j, k)), Cyl(i, Cyl(j, x))))
    for i, j in product(indices, repeat=2):
        for k in _others(dimension, i, j):
            inequalities.extend(_equation('Ax9', f'i={i},j={j},k={k}',
                                          Diag(i, j), Cyl(k, Meet(Diag(i, k), Diag(k, j)))))
    for i, j in product(indices, repeat=2):
        for m in _others(dimension, i, j):
            for k in _others(dimension, i, j, m):
                left = Subst(k, i, Subst(i, j, Subst(j, m, Subst(m, k, Cyl(k, x)))))
                right = Subst(k, m, Subst(m, i, Subst(i, j, Subst(j, k, Cyl(k, x)))))
                inequalities.extend(_equation('Ax10', f'i={i},j={j},k={k},m={m}', left, right))
    return inequalities


def permutable_catalog(dimension):
    """Ax11 when the dimension is 2, Ax12 otherwise."""
    x = Var('x')
    if dimension == 2:
        off_diagonal = Neg(Diag(0, 1))
        inner = meet_all([off_diagonal, Subst(0, 1, Cyl(1, x)), Subst(1, 0, Cyl(0, x))])
        return [Inequality('Ax11', 'n=2', Meet(x, off_diagonal), Cyl(0, Cyl(1, inner)))]
    inequalities = []
    for i, j in product(range(dimension), repeat=2):
        factors = [Subst(i, j, Cyl(j, x)), Subst(j, i, Cyl(i, x))]
        factors.extend(Subst(k, i, Subst(i, j, Subst(j, k, Cyl(k, x)))) for k in _others(dimension, i, j))
        inequalities.append(Inequality('Ax12', f'i={i},j={j}', x, Cyl(i, Cyl(j, meet_all(factors)))))
    return inequalities


@dataclass(frozen=True)
class Catalog:
    """The finite part of an axiom system plus whether the Ax7 schema belongs to it."""

    klass: Klass
    dimension: int
    inequalities: Tuple[Inequality, ...]
    uses_ax7: bool

    def __iter__(self):
        return iter(self.inequalities)

    def __len__(self):
        return len(self.inequalities)

    def axioms(self):
        """The axiom names in catalog order."""
        return list(dict.fromkeys(inequality.axiom for inequality in self.inequalities))


def catalog(klass, dimension):
    """The axiom catalog of a class.

    Args:
        klass (Klass): the class, a Klass or its name.
        dimension (int): the size n of the index set.

    Raises:
        ValueError: if ``dimension`` is below 2 or the class is unknown.

    """
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    if dimension < 2:
        raise ValueError(f'dimension {dimension} is below 2')
    inequalities = base_catalog(dimension)
    if klass is not Klass.RC:
        inequalities.extend(diagonal_catalog(dimension))
    if klass.permutable:
        inequalities.extend(permutable_catalog(dimension))
    return Catalog(klass, dimension, tuple(inequalities), not klass.modified)


@dataclass(frozen=True)
class Ax7Instance:
    """One instance of the Ax7 schema.

    ``tau`` is ``[i_m/j_m] o ... o [i_1/j_1]`` and ``diagonal_indices`` is
    ``{i_1, ..., i_m, k_1, ..., k_m}`` without the target index ``i``.
    """

    dimension: int
    i_seq: Tuple[int, ...]
    j_seq: Tuple[int, ...]
    k_seq: Tuple[int, ...]
    target: int
    tau: Any = field(compare=False)
    diagonal_indices: Tuple[int, ...] = field(compare=False)

    @property
    def length(self):
        """The number ``m`` of substitution steps."""
        return len(self.i_seq)

    def inequality(self):
        """Compiles the instance into an inequality in the variable ``x``."""
        x = Var('x')
        term = x
        for i, j, k in zip(self.i_seq, self.j_seq, self.k_seq):
            term = Subst(i, j, Cyl(k, term))
        diagonals = [Diag(index, self.tau(index)) for index in self.diagonal_indices]
        if diagonals:
            term = Meet(term, meet_all(diagonals))
        label = f'i={list(self.i_seq)},j={list(self.j_seq)},k={list(self.k_seq)},target={self.target}'
        return Inequality('Ax7', label, term, Cyl(self.target, x))


def _ax7_instance(dimension, i_seq, j_seq, k_seq, target, mode):
    first = 0 if mode == 'include_t0' else 1
    indices = (set(i_seq) | set(k_seq)) - {target}
    tau = identity(dimension)
    for step, (i, j) in enumerate(zip(i_seq, j_seq)):
        if first <= step < len(i_seq) and k_seq[step] in {tau(index) for index in indices}:
            return None
        tau = compose(replacement(dimension, i, j), tau)
    return Ax7Instance(dimension, tuple(i_seq), tuple(j_seq), tuple(k_seq), target, tau, tuple(sorted(indices)))


@lru_cache(maxsize=32)
def _ax7_instances(dimension, m_max, mode):
    instances = []
    indices = range(dimension)
    for length in range(1, m_max + 1):
        for i_seq, j_seq, k_seq in product(product(indices, repeat=length), repeat=3):
            for target in indices:
                instance = _ax7_instance(dimension, i_seq, j_seq, k_seq, target, mode)
                if instance is not None:
                    instances.append(instance)
    LOGGER.debug('generated %s Ax7 instances for n=%s, depth %s, mode %s', len(instances), dimension, m_max, mode)
    return tuple(instances)


def ax7_instances(dimension, m_max, mode=AX7_MODE):
    """Enumerates the Ax7 instances of length 1 up to ``m_max`` whose side condition holds.

    The side condition ``k_{t+1}`` not in the image of the diagonal indices under
    ``[i_t/j_t] o ... o [i_1/j_1]`` is demanded for ``t`` from 0 under ``include_t0`` and from 1
    under ``skip_t0``. Instances are listed by length, then by the index sequences in
    lexicographic order, then by target index.

    Raises:
        ValueError: for an unknown mode.

    """
    if mode not in AX7_MODES:
        raise ValueError(f'unknown Ax7 mode "{mode}", expected one of {AX7_MODES}')
    return list(_ax7_instances(dimension, max(0, m_max), mode))


@lru_cache(maxsize=32)
def ax7_inequalities(dimension, m_max, mode=AX7_MODE):
    """The distinct inequalities compiled from :func:`ax7_instances`."""
    unique, seen = [], set()
    for inequality in (instance.inequality() for instance in ax7_instances(dimension, m_max, mode)):
        if (inequality.lhs, inequality.rhs) not in seen:
            seen.add((inequality.lhs, inequality.rhs))
            unique.append(inequality)
    return tuple(unique)


@dataclass(frozen=True)
class AxiomResult:
    """The verdict of one inequality."""

    inequality: Inequality
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def axiom(self):
        """The axiom the inequality instantiates."""
        return self.inequality.axiom

    def to_dict(self):
        """Plain representation for JSON output."""
        return {'axiom': self.axiom,
                'label': self.inequality.label,
                'inequality': str(self.inequality),
                'passed': self.passed,
                'counterexample': plain(self.counterexample)}


@dataclass
class ValidationReport:
    """Everything :func:`validate` found out about a structure."""

    klass: Klass
    wellformed: Report
    results: List[AxiomResult] = field(default_factory=list)
    ax7_instances: int = 0
    notes: Report = field(default_factory=lambda: Report('notes'))

    @property
    def passed(self):
        """True when the structure is wellformed and every checked inequality holds."""
        return self.wellformed.passed and self.notes.passed and all(result.passed for result in self.results)

    def failures(self):
        """The failed inequality results."""
        return [result for result in self.results if not result.passed]

    def failed_axioms(self):
        """The names of the failed axioms, in catalog order."""
        return list(dict.fromkeys(result.axiom for result in self.failures()))

    def first_failure(self, axiom):
        """The first failed result of ``axiom``, or None."""
        return next((result for result in self.failures() if result.axiom == axiom), None)

    def summary(self):
        """Per axiom, whether every instance passed."""
        verdicts = {}
        for result in self.results:
            verdicts[result.axiom] = verdicts.get(result.axiom, True) and result.passed
        return verdicts

    def to_dict(self):
        """Plain representation for JSON output."""
        return {'class': str(self.klass),
                'passed': self.passed,
                'wellformed': self.wellformed.to_dict(),
                'axioms': self.summary(),
                'ax7_instances': self.ax7_instances,
                'failures': [result.to_dict() for result in self.failures()],
                'notes': self.notes.to_dict()}

    def __bool__(self):
        return self.passed


def validate(structure, klass, ax7_depth=AX7_DEPTH, ax7_mode=AX7_MODE, use_oracle=False,
             oracle_bound=EXHAUSTIVE_ATOM_BOUND):
    """Validates a structure against the axioms of ``klass``.

    Args:
        structure (AtomStructure): the structure to check.
        klass (Klass): the class, a Klass or its name.
        ax7_depth (int): the longest Ax7 instance checked.
        ax7_mode (str): the Ax7 side-condition reading, ``include_t0`` or ``skip_t0``.
        use_oracle (bool): cross-check every verdict with the exhaustive checker; a disagreement is
            recorded as a failure. Skipped with a warning above ``oracle_bound`` atoms.
        oracle_bound (int): the atom bound of the exhaustive checker.

    Returns:
        ValidationReport: the verdicts, never raises on semantic failure.

    """
    klass = Klass.from_name(klass) if not isinstance(klass, Klass) else klass
    report = ValidationReport(klass, wellformed(structure))
    if not structural(structure):
        LOGGER.warning('structure is not loadable as a %s algebra: %s', klass, ', '.join(report.wellformed.checks()))
        return report
    axioms = catalog(klass, structure.dimension)
    inequalities = list(axioms)
    if axioms.uses_ax7:
        extra = ax7_inequalities(structure.dimension, ax7_depth, ax7_mode)
        report.ax7_instances = len(extra)
        inequalities.extend(extra)
    if use_oracle and structure.atom_count > oracle_bound:
        LOGGER.warning('skipping the exhaustive cross-check, %s atoms exceed the bound of %s',
                       structure.atom_count, oracle_bound)
        use_oracle = False
    for inequality in inequalities:
        verdict = holds_atomwise(structure, inequality)
        if use_oracle:
            oracle = holds_exhaustive(structure, inequality, oracle_bound)
            if oracle.holds != verdict.holds:
                report.notes.add('oracle', f'checkers disagree on {inequality}',
                                 oracle.counterexample or verdict.counterexample)
        report.results.append(AxiomResult(inequality, verdict.holds, verdict.counterexample))
    if report.passed:
        LOGGER.info('structure validates as %s (%s inequalities)', klass, len(report.results))
    else:
        LOGGER.info('structure fails %s at %s', klass, ', '.join(report.failed_axioms() or report.wellformed.checks()))
    return report
