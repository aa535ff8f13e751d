#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_seedfile.py
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
test_seedfile
----------------------------------
Tests for the `seedfile` and `configuration` modules.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import os
import tempfile
import unittest

from qclusterlib.configuration import DEFAULT_CONFIGURATION, load_configuration
from qclusterlib.grassmannian import build_gr_seed
from qclusterlib.qclusterlibexceptions import InvalidSeedFile
from qclusterlib.seed import mutate_along, validate_seed
from qclusterlib.seedfile import (dumps_seed,
                                  load_morphism,
                                  load_seed,
                                  morphism_from_dict,
                                  morphism_to_dict,
                                  save_seed,
                                  seed_from_dict,
                                  seed_to_dict)
from qclusterlib.torus import CoeffPoly

from .seeds import example_morphism, example_seed, example_target, fixture

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestSeedFiles(unittest.TestCase):

    def test_example(self):
        self.assertEqual(load_seed(fixture('example_seed.json')), example_seed())
        target = load_seed(fixture('example_target.json'))
        self.assertEqual(target, example_target())
        self.assertEqual(target.names[1], 'y1')

    def test_empty_seed(self):
        seed = load_seed(fixture('empty_seed.json'))
        self.assertEqual(seed.rank, 0)
        self.assertTrue(validate_seed(seed).passed)

    def test_canonical_text_is_stable(self):
        text = dumps_seed(load_seed(fixture('example_seed.json')))
        self.assertEqual(dumps_seed(seed_from_dict(json.loads(text))), text)

    def test_mutated_seeds_survive_a_round_trip(self):
        for seed, sequence in ((example_seed(), (2,)), (build_gr_seed(2, 5), ((1, 1), (1, 2), (1, 1)))):
            mutated = mutate_along(seed, sequence)
            loaded = seed_from_dict(json.loads(dumps_seed(mutated)))
            self.assertEqual(loaded, mutated)
            self.assertEqual(loaded.names, mutated.names)

    def test_save(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'seed.json')
            save_seed(example_seed(), path)
            self.assertEqual(load_seed(path), example_seed())

    def test_corrupted_r(self):
        report = validate_seed(load_seed(fixture('corrupted_r.json')))
        self.assertEqual({check for check, _ in report.failures}, {'r_matrix'})

    def test_repeated_entry(self):
        data = seed_to_dict(example_seed())
        data['r'].append(list(data['r'][0]))
        report = validate_seed(seed_from_dict(data))
        self.assertIn('r_matrix', {check for check, _ in report.failures})

    def test_schema_violations(self):
        for data in ({'labels': [1]},
                     {'schema_version': 2, 'labels': [1]},
                     {'schema_version': 1, 'labels': [1], 'B': [[1, 1]]},
                     {'schema_version': 1, 'labels': [True]}):
            with self.assertRaises(InvalidSeedFile):
                seed_from_dict(data)

    def test_exponents_must_match_the_parameters(self):
        with self.assertRaises(InvalidSeedFile):
            load_seed(fixture('wrong_exponents.json'))
        data = seed_to_dict(example_seed())
        data['r'][0][3] = []
        with self.assertRaises(InvalidSeedFile):
            seed_from_dict(data)

    def test_frame_exponents_must_match_the_parameters(self):
        data = seed_to_dict(mutate_along(example_seed(), (2,)))
        data['frame'][1][1][0]['coefficient'][0][1] = [0, 0]
        with self.assertRaises(InvalidSeedFile):
            seed_from_dict(data)

    def test_not_a_seed(self):
        with self.assertRaises(InvalidSeedFile):
            load_seed(fixture('not_a_seed.json'))

    def test_missing_file(self):
        with self.assertRaises(InvalidSeedFile):
            load_seed(fixture('missing.json'))


class TestMorphismFiles(unittest.TestCase):

    def test_example(self):
        morphism = load_morphism(fixture('example_morphism.json'), example_seed(), example_target())
        self.assertEqual(morphism.var_map, example_morphism().var_map)
        self.assertIsNone(morphism.degree_embedding)

    def test_round_trip(self):
        morphism = example_morphism()
        loaded = morphism_from_dict(json.loads(json.dumps(morphism_to_dict(morphism))),
                                    morphism.source, morphism.target)
        self.assertEqual(loaded.var_map, morphism.var_map)

    def test_scalar_with_wrong_parameters(self):
        data = {'schema_version': 1, 'map': [[1, 1], [2, 2], [3, {'scalar': [[1, [0, 0]]]}]]}
        with self.assertRaises(InvalidSeedFile):
            morphism_from_dict(data, example_seed(), example_target())

    def test_repeated_scalar_terms_add_up(self):
        data = {'schema_version': 1, 'map': [[1, 1], [2, 2], [3, {'scalar': [[1, [0]], [2, [0]], [1, [2]]]}]]}
        scalar = morphism_from_dict(data, example_seed(), example_target()).var_map[3]
        self.assertEqual(scalar, CoeffPoly({(0,): 3, (2,): 1}))


class TestConfiguration(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(load_configuration(environment={}), DEFAULT_CONFIGURATION)

    def test_file(self):
        configuration = load_configuration(fixture('configuration.json'), environment={})
        self.assertEqual(configuration['cm3_depth'], 2)
        self.assertEqual(configuration['max_workers'], 2)
        self.assertEqual(configuration['max_seeds'], DEFAULT_CONFIGURATION['max_seeds'])

    def test_environment(self):
        configuration = load_configuration(fixture('configuration.json'),
                                           environment={'QCLUSTER_MAX_WORKERS': '4',
                                                        'QCLUSTER_VERIFY_EXCHANGE': 'False'})
        self.assertEqual(configuration['max_workers'], 4)
        self.assertFalse(configuration['verify_exchange'])

    def test_invalid_values(self):
        for environment in ({'QCLUSTER_MAX_WORKERS': '0'}, {'QCLUSTER_CM3_DEPTH': 'deep'}):
            with self.assertRaises(InvalidSeedFile):
                load_configuration(environment=environment)

    def test_unreadable_file(self):
        with self.assertRaises(InvalidSeedFile):
            load_configuration(fixture('missing.json'), environment={})
