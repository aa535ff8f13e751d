#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_grassmannian.py
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
test_grassmannian
----------------------------------
Tests for the `grassmannian` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import unittest

from qclusterlib.grassmannian import (CORNER,
                                      NOT_QUASI_COMMUTING,
                                      ONE,
                                      Q,
                                      Q_INVERSE,
                                      QMatrixWord,
                                      build_gr_seed,
                                      build_iota,
                                      frozen_plucker_labels,
                                      gr_exchange_matrix,
                                      gr_exchangeable,
                                      gr_infinity_generator,
                                      gr_labels,
                                      gr_restriction,
                                      plucker_index,
                                      qmatrix_normal_form,
                                      quantum_minor,
                                      scott_exponent)
from qclusterlib.morphism import check_structural, verify_cm3
from qclusterlib.qclusterlibexceptions import LabelError, PreconditionError
from qclusterlib.seed import classical, mutate_seed, mutation_closure, validate_seed
from qclusterlib.structure import check_mutations_commute, is_full_subseed_by_coefficients

from .seeds import seeded_random

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestGrid(unittest.TestCase):

    def test_plucker_index(self):
        self.assertEqual(plucker_index(3, 0, 0), (1, 2, 3))
        self.assertEqual(plucker_index(3, 1, 1), (1, 2, 4))
        self.assertEqual(plucker_index(3, 3, 4, 7), (5, 6, 7))

    def test_plucker_index_size(self):
        for i, j in gr_labels(3, 8):
            self.assertEqual(len(set(plucker_index(3, i, j))), 3)

    def test_out_of_range(self):
        with self.assertRaises(LabelError):
            plucker_index(3, 4, 1)
        with self.assertRaises(LabelError):
            plucker_index(3, 1, 5, 7)

    def test_grid_sizes(self):
        b = gr_exchange_matrix(3, 7)
        self.assertEqual(len(b.labels), 13)
        self.assertEqual(len(b.exchangeable), 6)
        b = gr_exchange_matrix(2, 3)
        self.assertEqual(len(b.labels), 3)
        self.assertFalse(b.exchangeable)
        b = gr_exchange_matrix(3, 8)
        self.assertEqual(len(b.labels) - len(b.exchangeable), 8)

    def test_dimensions(self):
        with self.assertRaises(PreconditionError):
            gr_exchange_matrix(4, 4)

    def test_restriction_of_the_larger_grid(self):
        larger = gr_exchange_matrix(3, 8)
        self.assertEqual(larger.restrict(gr_labels(3, 7), gr_exchangeable(3, 7)), gr_exchange_matrix(3, 7))

    def test_frozen_labels(self):
        self.assertEqual(frozen_plucker_labels(3, 7),
                         {(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (5, 6, 7), (1, 6, 7), (1, 2, 7)})
        for n in range(4, 9):
            self.assertEqual(len(frozen_plucker_labels(3, n)), n)

    def test_mutable_labels_avoid_the_last_column(self):
        for label in gr_exchangeable(3, 7):
            self.assertNotIn(7, plucker_index(3, *label))

    def test_balanced_vertices(self):
        b = gr_exchange_matrix(3, 7)
        for label in b.exchangeable:
            self.assertEqual(sum(value for _, value in b.column(label).items()), 0)


class TestQuantumMatrices(unittest.TestCase):

    def test_same_row(self):
        self.assertEqual(qmatrix_normal_form([(1, 2), (1, 1)]), QMatrixWord({((1, 1), (1, 2)): Q_INVERSE}))

    def test_unit(self):
        self.assertEqual(qmatrix_normal_form([(1, 1)]) * QMatrixWord.one(), QMatrixWord.generator(1, 1))

    def test_diagonal_straightening(self):
        difference = qmatrix_normal_form([(1, 1), (2, 2)]) - qmatrix_normal_form([(2, 2), (1, 1)])
        self.assertEqual(difference, QMatrixWord({((1, 2), (2, 1)): Q - Q_INVERSE}))

    def test_associativity(self):
        generator = seeded_random()
        letters = [(row, column) for row in (1, 2) for column in (1, 2, 3)]
        for _ in range(20):
            words = [[generator.choice(letters) for _ in range(3)] for _ in range(3)]
            first, second, third = (qmatrix_normal_form(word) for word in words)
            self.assertEqual((first * second) * third, first * (second * third))
            self.assertEqual(first * second, qmatrix_normal_form(words[0] + words[1]))

    def test_minors(self):
        self.assertEqual(quantum_minor((1,), (3,)), QMatrixWord.generator(1, 3))
        self.assertEqual(quantum_minor((1, 2), (1, 2)), QMatrixWord({((1, 1), (2, 2)): ONE, ((1, 2), (2, 1)): -Q}))
        self.assertEqual(quantum_minor((1, 2), (1, 3)), QMatrixWord({((1, 1), (2, 3)): ONE, ((1, 3), (2, 1)): -Q}))

    def test_minor_size_mismatch(self):
        with self.assertRaises(PreconditionError):
            quantum_minor((1, 2), (1,))

    def test_scott_exponent(self):
        self.assertEqual(scott_exponent((1, 2), (1, 2)), 0)
        self.assertIs(scott_exponent((1, 3), (2, 4)), NOT_QUASI_COMMUTING)
        self.assertNotEqual(scott_exponent((1, 2), (1, 3)), 0)

    def test_scott_exponent_antisymmetry(self):
        for first, second in itertools.combinations(itertools.combinations(range(1, 5), 2), 2):
            forward, backward = scott_exponent(first, second), scott_exponent(second, first)
            if forward is NOT_QUASI_COMMUTING:
                self.assertIs(backward, NOT_QUASI_COMMUTING)
            else:
                self.assertEqual(forward, -backward)


class TestSeeds(unittest.TestCase):

    def test_compatible_pairs(self):
        for k, n in ((2, 4), (2, 5), (3, 6), (3, 7)):
            report = validate_seed(build_gr_seed(k, n))
            self.assertTrue(report.passed, report.lines())

    def test_names(self):
        seed = build_gr_seed(3, 7)
        self.assertEqual(seed.names[CORNER], '123')
        self.assertEqual(seed.names[(1, 1)], '124')
        self.assertEqual(seed.render((3, 4)), '567')

    def test_closures(self):
        for n, expected in ((4, 6), (5, 10)):
            seed = build_gr_seed(2, n)
            quantum, commutative = mutation_closure(seed), mutation_closure(classical(seed))
            self.assertTrue(quantum.complete)
            self.assertEqual(len(quantum.variables), expected)
            self.assertEqual(len(commutative.variables), expected)

    def test_all_frozen(self):
        seed = build_gr_seed(2, 3)
        self.assertFalse(seed.exchangeable)
        self.assertEqual(mutation_closure(seed).seeds, 1)

    def test_sequences_up_to_five(self):
        start = build_gr_seed(2, 5)
        level = [start]
        for _ in range(5):
            following = []
            for seed in level:
                for label in seed.b.ordered_exchangeable():
                    mutated = mutate_seed(seed, label)
                    for other in mutated.labels:
                        self.assertEqual(mutated.degree(mutated.frame[other]), mutated.grading[other])
                    failures = {check for check, _ in validate_seed(mutated).failures}
                    self.assertFalse(failures & {'grading', 'homogeneity', 'compatibility'})
                    following.append(mutated)
            level = following
        self.assertEqual(len(level), 2 ** 5)


class TestInclusions(unittest.TestCase):

    def test_new_labels(self):
        iota = build_iota(3, 7)
        images = {plucker_index(3, *iota.var_map[label]) for label in iota.source.labels}
        fresh = {plucker_index(3, *label) for label in iota.target.labels} - images
        self.assertEqual(fresh, {(1, 2, 8), (1, 7, 8), (6, 7, 8)})

    def test_inclusions_are_full_subseeds(self):
        for n in (6, 7):
            iota = build_iota(3, n)
            self.assertTrue(check_structural(iota).passed)
            result = is_full_subseed_by_coefficients(iota.source, iota.target)
            self.assertTrue(result.passed, result.lines())

    def test_mutations_commute(self):
        for n in (6, 7):
            result = check_mutations_commute(build_gr_seed(3, n), build_gr_seed(3, n + 1), depth=2)
            self.assertTrue(result.passed, result.lines())

    def test_inclusion_commutes_with_mutation(self):
        result = verify_cm3(build_iota(2, 6), depth=3)
        self.assertTrue(result.passed, result.lines())
        self.assertEqual(result.depth_checked, 3)

    def test_generator_restriction(self):
        generator = gr_infinity_generator(3)
        self.assertEqual(gr_restriction(generator, 3, 7), build_gr_seed(3, 7))

    def test_generator_without_exchangeable_labels(self):
        generator = gr_infinity_generator(1)
        self.assertFalse(any(generator.ex_test(label) for label in itertools.islice(generator.labels(), 10)))
