#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: qclusterlibexceptions.py
#
# Copyright 2026 qclusterlib developers
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
Custom exception code for qclusterlib.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class LabelError(KeyError):
    """A label is not part of the index set it was looked up in."""


class StructuralMismatch(ValueError):
    """Elements over different parameter sets or index sets were combined."""


class DivisionByZeroElement(ZeroDivisionError):
    """Left division by the zero element of a quantum torus."""


class NotLeftDivisible(ArithmeticError):
    """The exact left division left a nonzero remainder or did not terminate within its bound."""


class FrozenIndexError(ValueError):
    """Mutation was requested at an index that is not exchangeable."""


class InternalInconsistency(RuntimeError):
    """A mutation produced an element that violates the exchange relation or the Laurent phenomenon."""


class NotDefined(ArithmeticError):
    """A morphism was applied to an element on which it is not defined."""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated."""


class InvalidSeedFile(ValueError):
    """The data provided could not be validated or built into a seed, morphism or configuration."""
