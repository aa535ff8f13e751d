#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: seedfile.py
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
Reading and writing seed files and morphism files.

Both are JSON documents carrying ``schema_version``. Grid labels are written as
JSON arrays and read back as tuples, scalar exponents are written doubled.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging

from schema import SchemaError

from .morphism import MorphismSpec
from .qclusterlibexceptions import InvalidSeedFile, LabelError, StructuralMismatch
from .schemas import SEED_FILE_SCHEMA, MORPHISM_FILE_SCHEMA, SEED_FILE_SCHEMA_VERSION
from .seed import ExchangeMatrix, Seed
from .torus import CoeffPoly, ExponentVector, ParamSet, ScalarMonomial, SkewExpMatrix, TorusElement

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''qclusterlib'''
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.seedfile')
LOGGER.addHandler(logging.NullHandler())


def _label(value):
    return tuple(value) if isinstance(value, list) else value


def _json_label(label):
    return list(label) if isinstance(label, tuple) else label


def _exponents(params, exponents, owner):
    if len(exponents) != len(params.names):
        raise InvalidSeedFile(f'{owner} has {len(exponents)} exponents but there are '
                              f'{len(params.names)} parameters')
    return tuple(exponents)


def _coefficient(params, terms, owner):
    total = CoeffPoly()
    for value, exponents in terms:
        total = total + CoeffPoly({_exponents(params, exponents, owner): value})
    return total


def _r_matrix(params, labels, entries):
    return SkewExpMatrix(params, labels,
                         {(_label(first), _label(second)):
                          ScalarMonomial(coefficient, _exponents(params, exponents, f'r[{first},{second}]'))
                          for first, second, coefficient, exponents in entries})


def seed_from_dict(data):
    """Builds a seed from the parsed contents of a seed file.

    Raises:
        InvalidSeedFile: If the data does not follow the seed file schema or does not describe a seed.

    """
    try:
        data = SEED_FILE_SCHEMA.validate(data)
    except SchemaError as error:
        raise InvalidSeedFile(f'Seed file does not follow the schema: {error}') from None
    try:
        params = ParamSet(tuple(data['params']))
        labels = [_label(label) for label in data['labels']]
        r = _r_matrix(params, labels, data['r'])
        r.violations.extend(_duplicate_entries(data['r']))
        b = ExchangeMatrix(labels, [_label(label) for label in data['ex']],
                           {(_label(row), _label(column)): value for row, column, value in data['B']})
        grading = {_label(label): tuple(row) for label, row in data['G']}
        names = {_label(label): name for label, name in data['names']}
        frame, ambient_r, ambient_grading = None, None, None
        if 'frame' in data:
            ambient_labels = [_label(label) for label in data.get('ambient_labels', data['labels'])]
            ambient_r = _r_matrix(params, ambient_labels, data.get('ambient_r', []))
            frame = {_label(label): _element(params, terms) for label, terms in data['frame']}
            if 'ambient_G' in data:
                ambient_grading = {_label(label): tuple(row) for label, row in data['ambient_G']}
        return Seed(r=r, b=b, grading=grading, invertible=[_label(label) for label in data['inv']],
                    frame=frame, ambient_r=ambient_r, ambient_grading=ambient_grading, names=names)
    except (LabelError, StructuralMismatch, ValueError, TypeError) as error:
        raise InvalidSeedFile(f'Seed file does not describe a seed: {error}') from None


def _duplicate_entries(entries):
    seen, duplicates = set(), []
    for first, second, *_ in entries:
        key = (_label(first), _label(second))
        if key in seen:
            duplicates.append((_label(first), _label(second), 'entry is given more than once'))
        seen.add(key)
    return duplicates


def _element(params, terms):
    return TorusElement(params, {ExponentVector({_label(label): value for label, value in term['exponents']}):
                                 _coefficient(params, term['coefficient'], 'frame coefficient')
                                 for term in terms})


def _r_entries(r):
    entries = []
    for (first, second), value in sorted(r.entries().items(), key=lambda item: (r.rank(item[0][0]),
                                                                              r.rank(item[0][1]))):
        entries.append([_json_label(first), _json_label(second), value.coefficient, list(value.exponents)])
    return entries


def _terms(r, element):
    terms = []
    for exponents, coefficient in sorted(element.items(),
                                         key=lambda item: [item[0].get(label) for label in r.labels]):
        terms.append({'exponents': [[_json_label(label), exponents.get(label)] for label in r.labels
                                    if exponents.get(label)],
                      'coefficient': [[value, list(scalar)] for scalar, value in sorted(coefficient.items())]})
    return terms


def seed_to_dict(seed):
    """The canonical seed file contents of a seed."""
    labels = seed.labels
    data = {'schema_version': SEED_FILE_SCHEMA_VERSION,
            'params': list(seed.params.names),
            'labels': [_json_label(label) for label in labels],
            'ex': [_json_label(label) for label in labels if label in seed.exchangeable],
            'inv': [_json_label(label) for label in labels if label in seed.invertible],
            'r': _r_entries(seed.r),
            'B': [[_json_label(row), _json_label(column), seed.b.get(row, column)]
                  for row in labels for column in labels if seed.b.get(row, column)],
            'G': [[_json_label(label), list(seed.grading[label])] for label in labels],
            'names': [[_json_label(label), seed.names[label]] for label in labels if label in seed.names]}
    if not seed.is_rooted:
        ambient = seed.ambient_r
        data['frame'] = [[_json_label(label), _terms(ambient, seed.frame[label])] for label in labels]
        data['ambient_labels'] = [_json_label(label) for label in ambient.labels]
        data['ambient_r'] = _r_entries(ambient)
        data['ambient_G'] = [[_json_label(label), list(seed.ambient_grading[label])] for label in ambient.labels]
    return data


def dumps_seed(seed):
    """Canonical JSON text of a seed."""
    return json.dumps(seed_to_dict(seed), indent=2, sort_keys=True) + '\n'


def _read_json(path):
    try:
        with open(path, 'r') as input_file:
            return json.load(input_file)
    except (OSError, json.JSONDecodeError) as error:
        raise InvalidSeedFile(f'Could not read {path}: {error}') from None


def load_seed(path):
    """Reads a seed file.

    Raises:
        InvalidSeedFile: If the file cannot be read or does not describe a seed.

    """
    seed = seed_from_dict(_read_json(path))
    LOGGER.debug('Loaded %r from %s', seed, path)
    return seed


def save_seed(seed, path):
    """Writes the canonical seed file of a seed."""
    with open(path, 'w') as output_file:
        output_file.write(dumps_seed(seed))
    LOGGER.debug('Saved %r to %s', seed, path)


def morphism_from_dict(data, source, target):
    """Builds a morphism from the parsed contents of a morphism file.

    Raises:
        InvalidSeedFile: If the data does not follow the morphism file schema.

    """
    try:
        data = MORPHISM_FILE_SCHEMA.validate(data)
    except SchemaError as error:
        raise InvalidSeedFile(f'Morphism file does not follow the schema: {error}') from None
    var_map = {}
    for label, image in data['map']:
        if isinstance(image, dict):
            var_map[_label(label)] = _coefficient(target.params, image['scalar'], f'Scalar image of {label}')
        else:
            var_map[_label(label)] = _label(image)
    return MorphismSpec(source, target, var_map, data.get('degree_embedding'))


def morphism_to_dict(morphism):
    """The morphism file contents of a morphism."""
    entries = []
    for label in morphism.source.labels:
        image = morphism.var_map.get(label)
        if image is None:
            continue
        if isinstance(image, CoeffPoly):
            image = {'scalar': [[value, list(scalar)] for scalar, value in sorted(image.items())]}
        else:
            image = _json_label(image)
        entries.append([_json_label(label), image])
    data = {'schema_version': SEED_FILE_SCHEMA_VERSION, 'map': entries}
    if morphism.degree_embedding is not None:
        data['degree_embedding'] = list(morphism.degree_embedding)
    return data


def load_morphism(path, source, target):
    """Reads a morphism file between two already loaded seeds."""
    return morphism_from_dict(_read_json(path), source, target)
