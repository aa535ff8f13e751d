#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_torus.py
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
test_torus
----------------------------------
Tests for the `torus` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from qclusterlib.qclusterlibexceptions import (DivisionByZeroElement,
                                               LabelError,
                                               NotLeftDivisible,
                                               StructuralMismatch)
from qclusterlib.torus import (CoeffPoly,
                               ExponentVector,
                               ParamSet,
                               ScalarMonomial,
                               SkewExpMatrix,
                               TorusElement,
                               omega,
                               s_norm,
                               render_element,
                               torus_left_divide,
                               torus_mul,
                               torus_power)

from .seeds import Q, example_seed, seeded_random

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

E1 = ExponentVector.unit(1)
E2 = ExponentVector.unit(2)
E3 = ExponentVector.unit(3)


def q_power(doubled):
    return ScalarMonomial(1, (doubled,))


class TestScalars(unittest.TestCase):

    def test_render(self):
        self.assertEqual(q_power(2).render(Q), 'q')
        self.assertEqual(q_power(1).render(Q), 'q^(1/2)')
        self.assertEqual(ScalarMonomial(-1, (4,)).render(Q), '-q^2')
        self.assertEqual(ScalarMonomial(3, (0,)).render(Q), '3')

    def test_inverse_of_non_unit(self):
        with self.assertRaises(NotLeftDivisible):
            ScalarMonomial(2, (2,)).inverse()

    def test_exact_division(self):
        q_minus = CoeffPoly({(2,): 1, (-2,): -1})
        dividend = CoeffPoly({(4,): 1, (-4,): -1})
        self.assertEqual(dividend.divide_exact(q_minus), CoeffPoly({(2,): 1, (-2,): 1}))

    def test_inexact_division(self):
        with self.assertRaises(NotLeftDivisible):
            CoeffPoly({(0,): 1}).divide_exact(CoeffPoly({(0,): 2}))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZeroElement):
            CoeffPoly({(0,): 1}).divide_exact(CoeffPoly())

    def test_zero_comparison(self):
        self.assertEqual(CoeffPoly({(2,): 1}) - CoeffPoly({(2,): 1}), 0)

    def test_param_set_halves(self):
        params = ParamSet(('q', 'p'))
        self.assertEqual(params.exponents(p=1), (0, 1))
        with self.assertRaises(LabelError):
            params.exponents(t=2)

    def test_param_set_merge(self):
        self.assertEqual(ParamSet(('q',)).merge(ParamSet(('p', 'q'))).names, ('q', 'p'))


class TestSkewExpMatrix(unittest.TestCase):

    def test_transpose_is_inverse(self):
        r = SkewExpMatrix(Q, (1, 2, 3), {(1, 2): 2})
        self.assertEqual(r.exponent(2, 1), (-2,))
        self.assertEqual(r.exponent(2, 2), (0,))
        self.assertFalse(r.violations)

    def test_inconsistent_transpose_is_recorded(self):
        r = SkewExpMatrix(Q, (1, 2), {(1, 2): 2, (2, 1): 2})
        self.assertEqual(len(r.violations), 1)

    def test_nontrivial_diagonal_is_recorded(self):
        r = SkewExpMatrix(Q, (1, 2), {(1, 1): 2})
        self.assertEqual(len(r.violations), 1)

    def test_unknown_label(self):
        with self.assertRaises(LabelError):
            SkewExpMatrix(Q, (1, 2), {(1, 5): 2})

    def test_central_labels(self):
        r = example_seed().r
        self.assertTrue(r.is_central(3))
        self.assertFalse(r.is_central(1))

    def test_stored_trivial_entries_do_not_matter(self):
        self.assertEqual(SkewExpMatrix(Q, (1, 2), {(1, 2): 0}), SkewExpMatrix(Q, (1, 2)))


class TestBasedTorus(unittest.TestCase):

    def setUp(self):
        self.r = example_seed().r

    def test_omega(self):
        self.assertEqual(omega(self.r, E1, E2), q_power(2))
        self.assertEqual(omega(self.r, E1 + E3, E2), q_power(2))
        self.assertEqual(omega(self.r, E2, E1), q_power(-2))

    def test_omega_is_a_bicharacter(self):
        params = ParamSet(('q', 't'))
        labels = ('a', 'b', 'c', 'd')
        generator = seeded_random(11)
        r = SkewExpMatrix(params, labels,
                          {(first, second): ScalarMonomial(1, (generator.randint(-3, 3), generator.randint(-3, 3)))
                           for index, first in enumerate(labels) for second in labels[index + 1:]})
        for _ in range(200):
            first, second, third = (ExponentVector({label: generator.randint(-3, 3) for label in labels})
                                    for _ in range(3))
            self.assertEqual(omega(r, first + second, third), omega(r, first, third) * omega(r, second, third))
            self.assertEqual(omega(r, first, second + third), omega(r, first, second) * omega(r, first, third))
            self.assertTrue((omega(r, first, second) * omega(r, second, first)).is_one)
            self.assertTrue(omega(r, first, first).is_one)

    def test_s_norm(self):
        self.assertEqual(s_norm(self.r, E1 - E2 + E3), q_power(2))
        self.assertEqual(s_norm(self.r, E1 + E2), q_power(-2))
        self.assertTrue(s_norm(self.r, E1 * 3).is_one)

    def test_generator_product(self):
        product = torus_mul(self.r, TorusElement.generator(Q, 1), TorusElement.generator(Q, 2))
        self.assertEqual(product, TorusElement.monomial(Q, E1 + E2, q_power(2)))

    def test_generators_quasi_commute(self):
        first, second = TorusElement.generator(Q, 1), TorusElement.generator(Q, 2)
        self.assertEqual(torus_mul(self.r, first, second),
                         torus_mul(self.r, second, first).scale(q_power(4)))

    def test_associativity(self):
        generator = seeded_random()
        for _ in range(20):
            elements = [self._random_element(generator) for _ in range(3)]
            left = torus_mul(self.r, torus_mul(self.r, elements[0], elements[1]), elements[2])
            right = torus_mul(self.r, elements[0], torus_mul(self.r, elements[1], elements[2]))
            self.assertEqual(left, right)

    def test_negative_power(self):
        element = TorusElement.monomial(Q, E1 + E2 * 2)
        inverse = torus_power(self.r, element, -1)
        self.assertEqual(torus_mul(self.r, element, inverse), TorusElement.one(Q))

    def test_left_division(self):
        divisor = TorusElement.generator(Q, 2)
        dividend = TorusElement(Q, {E1 + E3: q_power(-2), ExponentVector(): 1})
        quotient = torus_left_divide(self.r, divisor, dividend)
        self.assertEqual(quotient, TorusElement(Q, {E1 - E2 + E3: 1, -E2: 1}))
        self.assertEqual(torus_mul(self.r, divisor, quotient), dividend)

    def test_left_division_of_random_products(self):
        generator = seeded_random(7)
        for _ in range(200):
            divisor, quotient = self._random_element(generator), self._random_element(generator)
            product = torus_mul(self.r, divisor, quotient)
            self.assertEqual(torus_left_divide(self.r, divisor, product), quotient)

    def test_left_division_without_quotient(self):
        divisor = TorusElement(Q, {E1: 1, ExponentVector(): 1})
        with self.assertRaises(NotLeftDivisible):
            torus_left_divide(self.r, divisor, TorusElement.generator(Q, 2), iteration_cap=20)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZeroElement):
            torus_left_divide(self.r, TorusElement.zero(Q), TorusElement.one(Q))

    def test_foreign_parameters(self):
        other = TorusElement.generator(ParamSet(('p',)), 1)
        with self.assertRaises(StructuralMismatch):
            torus_mul(self.r, other, other)

    def test_foreign_labels(self):
        with self.assertRaises(StructuralMismatch):
            torus_mul(self.r, TorusElement.generator(Q, 9), TorusElement.one(Q))

    def test_render(self):
        element = TorusElement(Q, {E1 - E2 + E3: 1, -E2: 1})
        self.assertEqual(render_element(self.r, element), 'q*x1*x2^-1*x3 + x2^-1')
        self.assertEqual(render_element(self.r, -TorusElement.generator(Q, 3)), '-x3')
        self.assertEqual(render_element(self.r, TorusElement.zero(Q)), '0')

    def _random_element(self, generator):
        terms = {}
        for _ in range(generator.randint(1, 3)):
            exponents = ExponentVector({label: generator.randint(-2, 2) for label in (1, 2, 3)})
            terms[exponents] = ScalarMonomial(generator.choice((1, -1, 2)), (generator.randint(-4, 4),))
        element = TorusElement(Q, terms)
        return element if not element.is_zero else TorusElement.one(Q)
