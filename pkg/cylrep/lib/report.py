#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: report.py
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
Verdict containers shared by the checkers.

Checkers never raise on a semantic failure, they collect violations instead.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

from dataclasses import dataclass, field
from typing import Any, List

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


@dataclass(frozen=True)
class Violation:
    """A single failed check with its witness."""

    check: str
    detail: str
    witness: Any = None

    def to_dict(self):
        """Plain representation for JSON output."""
        return {'check': self.check, 'detail': self.detail, 'witness': plain(self.witness)}


@dataclass
class Report:
    """An ordered collection of violations for one named check run."""

    name: str
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self):
        """True when nothing was violated."""
        return not self.violations

    def add(self, check, detail, witness=None):
        """Records a violation."""
        self.violations.append(Violation(check, detail, witness))

    def extend(self, other):
        """Copies the violations of another report into this one."""
        self.violations.extend(other.violations)

    def checks(self):
        """The names of the failed checks, in order of first failure."""
        return list(dict.fromkeys(violation.check for violation in self.violations))

    def to_dict(self):
        """Plain representation for JSON output."""
        return {'name': self.name,
                'passed': self.passed,
                'violations': [violation.to_dict() for violation in self.violations]}

    def __bool__(self):
        return self.passed


def plain(value):
    """JSON-ready copy of ``value``, sets sorted into lists and unknown objects turned into strings."""
    if isinstance(value, (set, frozenset)):
        return sorted(plain(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if value is None or isinstance(value, (int, str, float, bool)):
        return value
    return str(value)
