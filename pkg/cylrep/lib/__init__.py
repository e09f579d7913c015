#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
Import all parts from cylrep.lib here.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from .algebra import AtomStructure, Klass, cyl, p_elem, s_subst, t_atom, tau_atom, wellformed
from .axioms import ax7_instances, catalog, eval_term, holds_atomwise, holds_exhaustive, validate
from .game import Limits, exists_move, pending_obligations, run_to_saturation
from .helpers import load_algebra, load_network, load_representation, load_unit, write_json
from .network import PreNetwork, build_mosaic, is_modified_network, is_network, merge, zigzag_search
from .represent import (ConcreteUnit,
                        Representation,
                        build_representation,
                        close_unit,
                        import_unit,
                        psi,
                        verify_embedding)
from .transform import Transformation, compose, decompose_replacements, enumerate_transformations

__author__ = '''The cylrep authors'''
__docformat__ = '''google'''
__date__ = '''18-10-2020'''
__copyright__ = '''Copyright 2020, The cylrep authors'''
__license__ = '''MIT'''
__maintainer__ = '''The cylrep authors'''
__email__ = '''<cylrep@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

assert AtomStructure
assert Klass
assert cyl
assert p_elem
assert s_subst
assert t_atom
assert tau_atom
assert wellformed
assert ax7_instances
assert catalog
assert eval_term
assert holds_atomwise
assert holds_exhaustive
assert validate
assert Limits
assert exists_move
assert pending_obligations
assert run_to_saturation
assert load_algebra
assert load_network
assert load_representation
assert load_unit
assert write_json
assert PreNetwork
assert build_mosaic
assert is_modified_network
assert is_network
assert merge
assert zigzag_search
assert ConcreteUnit
assert Representation
assert build_representation
assert close_unit
assert import_unit
assert psi
assert verify_embedding
assert Transformation
assert compose
assert decompose_replacements
assert enumerate_transformations
