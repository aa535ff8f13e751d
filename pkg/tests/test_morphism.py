#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_morphism.py
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
test_morphism
----------------------------------
Tests for the `morphism` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from qclusterlib.grassmannian import build_gr_seed, build_iota
from qclusterlib.morphism import (INFINITY,
                                  MorphismSpec,
                                  apply_hom,
                                  biadmissible_steps,
                                  check_structural,
                                  compose,
                                  identity_morphism,
                                  specialize,
                                  verify_cm3,
                                  verify_morphism)
from qclusterlib.qclusterlibexceptions import NotDefined, PreconditionError, StructuralMismatch
from qclusterlib.seed import mutate_seed
from qclusterlib.torus import CoeffPoly, ExponentVector, TorusElement, render_element, torus_mul

from .seeds import Q, example_morphism, example_seed, example_target

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def checks_of(result):
    return {check for check, _, _ in result.failures}


class TestStructuralChecks(unittest.TestCase):

    def test_example_passes(self):
        result = check_structural(example_morphism())
        self.assertTrue(result.passed, result.lines())

    def test_index_map(self):
        morphism = example_morphism()
        self.assertEqual(morphism.induced_index_map(), {1: 1, 2: 2, 3: INFINITY})
        self.assertEqual(morphism.infinity_fiber(), frozenset({3}))

    def test_exchangeable_sent_to_scalar(self):
        one = CoeffPoly.constant(1, Q)
        morphism = MorphismSpec(example_seed(), example_target(), {1: 1, 2: one, 3: one})
        self.assertIn('centrality', checks_of(check_structural(morphism)))

    def test_swapped_variables(self):
        morphism = MorphismSpec(example_seed(), example_target(), {1: 2, 2: 1, 3: CoeffPoly.constant(1, Q)})
        self.assertIn('quasi_commutation', checks_of(check_structural(morphism)))

    def test_missing_image(self):
        morphism = MorphismSpec(example_seed(), example_target(), {1: 1, 2: 2})
        self.assertIn('CM1', checks_of(check_structural(morphism)))

    def test_unrooted_source(self):
        morphism = MorphismSpec(mutate_seed(example_seed(), 2), example_target(),
                                {1: 1, 2: 2, 3: CoeffPoly.constant(1, Q)})
        self.assertIn('rooted', checks_of(check_structural(morphism)))


class TestApplyHom(unittest.TestCase):

    def setUp(self):
        self.morphism = example_morphism()
        self.source = example_seed()

    def test_product_of_generators(self):
        element = torus_mul(self.source.r, TorusElement.generator(Q, 1), TorusElement.generator(Q, 3))
        self.assertEqual(apply_hom(self.morphism, element), TorusElement.generator(Q, 1))

    def test_mutated_variable(self):
        image = apply_hom(self.morphism, mutate_seed(self.source, 2).frame[2])
        target = example_target()
        self.assertEqual(image, mutate_seed(target, 2).frame[2])
        self.assertEqual(render_element(target.r, image, target.names), 'q*y1*y2^-1 + y2^-1')

    def test_homogeneous_elements_keep_their_degree(self):
        target = example_target()
        mutated = mutate_seed(self.source, 2).frame[2]
        self.assertEqual(self.source.degree(mutated), (-1,))
        self.assertEqual(target.degree(apply_hom(self.morphism, mutated)), (-1,))
        for exponents in ({1: 1, 2: 1}, {2: -2, 3: 5}, {1: 3, 2: -1, 3: -1}):
            element = TorusElement.monomial(Q, exponents)
            image = apply_hom(self.morphism, element)
            self.assertEqual(target.degree(image), self.source.degree(element))

    def test_negative_power_of_non_invertible_scalar(self):
        morphism = MorphismSpec(self.source, example_target(), {1: 1, 2: 2, 3: CoeffPoly.constant(2, Q)})
        with self.assertRaises(NotDefined):
            apply_hom(morphism, TorusElement.monomial(Q, ExponentVector.unit(3, -1)))


class TestMutationCheck(unittest.TestCase):

    def test_example_to_depth_four(self):
        result = verify_cm3(example_morphism(), depth=4)
        self.assertTrue(result.passed, result.lines())
        self.assertEqual(result.depth_checked, 4)
        self.assertEqual(result.sequences_checked, 5)

    def test_first_step(self):
        morphism = example_morphism()
        self.assertEqual(biadmissible_steps(morphism, morphism.source, morphism.target), [(2, 2)])

    def test_zero_depth(self):
        result = verify_cm3(example_morphism(), depth=0)
        self.assertTrue(result.passed)
        self.assertEqual(result.depth_checked, 0)

    def test_verify_stops_at_structural_failures(self):
        morphism = MorphismSpec(example_seed(), example_target(), {1: 2, 2: 1, 3: CoeffPoly.constant(1, Q)})
        result = verify_morphism(morphism, depth=4)
        self.assertFalse(result.passed)
        self.assertEqual(result.sequences_checked, 0)


class TestCategory(unittest.TestCase):

    def test_identity(self):
        seed = example_seed()
        self.assertTrue(verify_morphism(identity_morphism(seed), depth=3).passed)

    def test_composition_with_identity(self):
        morphism = example_morphism()
        composite = compose(identity_morphism(morphism.source), compose(morphism, identity_morphism(morphism.target)))
        self.assertEqual(composite.var_map, morphism.var_map)

    def test_composite_of_inclusions(self):
        composite = compose(build_iota(2, 5), build_iota(2, 6))
        self.assertEqual(composite.target, build_gr_seed(2, 7))
        self.assertEqual(composite.var_map, {label: label for label in composite.source.labels})
        self.assertTrue(check_structural(composite).passed)
        result = verify_cm3(composite, depth=3)
        self.assertTrue(result.passed, result.lines())
        self.assertGreater(result.sequences_checked, 1)

    def test_composition_mismatch(self):
        with self.assertRaises(StructuralMismatch):
            compose(example_morphism(), example_morphism())


class TestSpecialize(unittest.TestCase):

    def test_central_frozen_label(self):
        quotient, projection = specialize(example_seed(), {3})
        self.assertEqual(quotient.labels, (1, 2))
        self.assertTrue(verify_morphism(projection, depth=4).passed)

    def test_nothing_to_specialize(self):
        seed = example_seed()
        quotient, projection = specialize(seed, set())
        self.assertEqual(quotient, seed)
        self.assertEqual(projection.var_map, identity_morphism(seed).var_map)
        self.assertTrue(check_structural(projection).passed)

    def test_exchangeable_label(self):
        with self.assertRaises(PreconditionError):
            specialize(example_seed(), {2})

    def test_label_that_is_not_central(self):
        with self.assertRaises(PreconditionError):
            specialize(example_seed(), {1})
