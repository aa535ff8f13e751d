#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: schemas.py
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
Schemas for seed files, morphism files and configuration of qclusterlib.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

from schema import Schema, And, Or, Optional

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

SEED_FILE_SCHEMA_VERSION = 1


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _is_int_list(value):
    return isinstance(value, list) and all(_is_int(item) for item in value)


def _is_label(value):
    if isinstance(value, str):
        return bool(value)
    if isinstance(value, list):
        return bool(value) and _is_int_list(value)
    return _is_int(value)


def _is_coefficient(value):
    return isinstance(value, list) and all(isinstance(term, list) and len(term) == 2 and _is_int(term[0])
                                           and _is_int_list(term[1]) for term in value)


def _is_r_entry(value):
    return (isinstance(value, list) and len(value) == 4 and _is_label(value[0]) and _is_label(value[1])
            and _is_int(value[2]) and _is_int_list(value[3]))


def _is_b_entry(value):
    return isinstance(value, list) and len(value) == 3 and _is_label(value[0]) and _is_label(value[1]) \
        and _is_int(value[2])


def _is_g_row(value):
    return isinstance(value, list) and len(value) == 2 and _is_label(value[0]) and _is_int_list(value[1])


def _is_name_entry(value):
    return isinstance(value, list) and len(value) == 2 and _is_label(value[0]) and isinstance(value[1], str)


def _is_exponent_entry(value):
    return isinstance(value, list) and len(value) == 2 and _is_label(value[0]) and _is_int(value[1])


FRAME_TERM_SCHEMA = Schema({'exponents': [_is_exponent_entry],
                            'coefficient': _is_coefficient})

FRAME_ENTRY_SCHEMA = And(list,
                         lambda value: len(value) == 2 and _is_label(value[0]),
                         lambda value: isinstance(value[1], list) and all(FRAME_TERM_SCHEMA.is_valid(term)
                                                                          for term in value[1]))

SEED_FILE_SCHEMA = Schema({'schema_version': SEED_FILE_SCHEMA_VERSION,
                           Optional('params', default=['q']): [And(str, len)],
                           'labels': [_is_label],
                           Optional('ex', default=[]): [_is_label],
                           Optional('inv', default=[]): [_is_label],
                           Optional('r', default=[]): [_is_r_entry],
                           Optional('B', default=[]): [_is_b_entry],
                           Optional('G', default=[]): [_is_g_row],
                           Optional('names', default=[]): [_is_name_entry],
                           Optional('frame'): [FRAME_ENTRY_SCHEMA],
                           Optional('ambient_labels'): [_is_label],
                           Optional('ambient_r'): [_is_r_entry],
                           Optional('ambient_G'): [_is_g_row]})

MORPHISM_TARGET_SCHEMA = Schema(Or(_is_label, {'scalar': _is_coefficient}))

MORPHISM_FILE_SCHEMA = Schema({'schema_version': SEED_FILE_SCHEMA_VERSION,
                               'map': [And(list,
                                           lambda value: len(value) == 2 and _is_label(value[0]),
                                           lambda value: MORPHISM_TARGET_SCHEMA.is_valid(value[1]))],
                               Optional('degree_embedding'): [And(int, lambda n: n >= 0)]})

CONFIGURATION_SCHEMA = Schema({Optional('division_iteration_cap', default=10000): And(int, lambda n: n > 0),
                               Optional('symmetrizer_bound', default=64): And(int, lambda n: n > 0),
                               Optional('cm3_depth', default=4): And(int, lambda n: n >= 0),
                               Optional('max_seeds', default=5000): And(int, lambda n: n > 0),
                               Optional('max_workers', default=8): And(int, lambda n: 0 < n < 257),
                               Optional('verify_exchange', default=True): bool})
