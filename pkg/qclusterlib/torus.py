#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: torus.py
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
Quantum torus arithmetic.

Scalars are integer Laurent polynomials in the half powers of a finite set of
parameters. Every scalar exponent is stored doubled so that ``q^(1/2)`` is the
integer exponent ``1``. A quasi-commutation matrix ``r`` over an ordered label
set defines the based torus where the normalized monomials multiply as
``Y^(a) Y^(b) = omega_r(a, b) Y^(a + b)``.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .configuration import DIVISION_ITERATION_CAP
from .qclusterlibexceptions import (LabelError,
                                    StructuralMismatch,
                                    DivisionByZeroElement,
                                    NotLeftDivisible)

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.torus')
LOGGER.addHandler(logging.NullHandler())


def _add_exponents(first, second):
    return tuple(left + right for left, right in zip(first, second))


def _scale_exponents(exponents, factor):
    return tuple(value * factor for value in exponents)


@dataclass(frozen=True)
class ParamSet:
    """An ordered set of named scalar parameters."""

    names: tuple = ('q',)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError('A parameter set needs at least one parameter.')
        if len(set(names)) != len(names):
            raise ValueError(f'Parameter names should be unique, got {names}')
        object.__setattr__(self, 'names', names)

    def __len__(self):
        return len(self.names)

    @property
    def zero(self):
        """The doubled exponent tuple of the unit scalar."""
        return (0,) * len(self.names)

    def exponents(self, **halves):
        """Builds a doubled exponent tuple from keyword arguments given in half steps.

        ``exponents(q=2)`` is ``q`` itself and ``exponents(q=1)`` is ``q^(1/2)``.
        """
        unknown = set(halves) - set(self.names)
        if unknown:
            raise LabelError(f'Unknown parameters {sorted(unknown)}')
        return tuple(halves.get(name, 0) for name in self.names)

    def merge(self, other):
        """Returns a parameter set holding the names of both, own names first."""
        return ParamSet(self.names + tuple(name for name in other.names if name not in self.names))

    def remap(self, exponents, target):
        """Moves a doubled exponent tuple onto the names of a larger parameter set."""
        values = dict(zip(self.names, exponents))
        missing = set(values) - set(target.names)
        if missing:
            raise StructuralMismatch(f'Parameters {sorted(missing)} do not exist in {target.names}')
        return tuple(values.get(name, 0) for name in target.names)


@dataclass(frozen=True)
class ScalarMonomial:
    """A signed integer times a product of half powers of the parameters."""

    coefficient: int
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, 'exponents', tuple(self.exponents))
        if not self.coefficient:
            object.__setattr__(self, 'exponents', (0,) * len(self.exponents))

    @classmethod
    def one(cls, params):
        """The unit scalar."""
        return cls(1, params.zero)

    @property
    def is_one(self):
        """True for the unit scalar."""
        return self.coefficient == 1 and not any(self.exponents)

    @property
    def is_unit(self):
        """True when the monomial is invertible over the integers."""
        return self.coefficient in (1, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return ScalarMonomial(self.coefficient * other, self.exponents)
        return ScalarMonomial(self.coefficient * other.coefficient,
                              _add_exponents(self.exponents, other.exponents))

    __rmul__ = __mul__

    def inverse(self):
        """Inverts a monomial with coefficient one or minus one."""
        if not self.is_unit:
            raise NotLeftDivisible(f'Scalar with coefficient {self.coefficient} has no inverse')
        return ScalarMonomial(self.coefficient, _scale_exponents(self.exponents, -1))

    def __pow__(self, power):
        if power < 0:
            return self.inverse() ** -power
        return ScalarMonomial(self.coefficient ** power, _scale_exponents(self.exponents, power))

    def render(self, params):
        """Human readable form, e.g. ``-q^(1/2)``."""
        powers = [_render_power(name, value) for name, value in zip(params.names, self.exponents) if value]
        if not powers:
            return str(self.coefficient)
        prefix = {1: '', -1: '-'}.get(self.coefficient, f'{self.coefficient}*')
        return prefix + '*'.join(powers)


def _render_power(name, doubled):
    power = Fraction(doubled, 2)
    if power == 1:
        return name
    if power.denominator == 1:
        return f'{name}^{power.numerator}'
    return f'{name}^({power})'


class CoeffPoly:
    """An integer Laurent polynomial in half powers of the parameters.

    Instances are immutable and hashable. Zero coefficients are never stored.
    """

    __slots__ = ('_terms', '_key')

    def __init__(self, terms=None):
        cleaned = {}
        for exponents, coefficient in dict(terms or {}).items():
            exponents = tuple(exponents)
            cleaned[exponents] = cleaned.get(exponents, 0) + coefficient
        self._terms = {exponents: coefficient for exponents, coefficient in cleaned.items() if coefficient}
        self._key = tuple(sorted(self._terms.items()))

    @classmethod
    def from_monomial(cls, monomial):
        """Wraps a single scalar monomial."""
        return cls({monomial.exponents: monomial.coefficient})

    @classmethod
    def constant(cls, value, params):
        """An integer constant."""
        return cls({params.zero: value})

    @classmethod
    def coerce(cls, value, params):
        """Turns integers and monomials into polynomials, passes polynomials through."""
        if isinstance(value, CoeffPoly):
            return value
        if isinstance(value, ScalarMonomial):
            return cls.from_monomial(value)
        if isinstance(value, int):
            return cls.constant(value, params)
        raise TypeError(f'Cannot use {value!r} as a coefficient')

    @property
    def terms(self):
        """The monomials in decreasing order."""
        return tuple(ScalarMonomial(coefficient, exponents)
                     for exponents, coefficient in sorted(self._terms.items(), key=_scalar_order, reverse=True))

    @property
    def is_zero(self):
        """True for the zero polynomial."""
        return not self._terms

    @property
    def is_monomial(self):
        """True when exactly one term is present."""
        return len(self._terms) == 1

    def as_monomial(self):
        """Returns the single term, raises ValueError otherwise."""
        if not self.is_monomial:
            raise ValueError(f'{self!r} is not a monomial')
        (exponents, coefficient), = self._terms.items()
        return ScalarMonomial(coefficient, exponents)

    def items(self):
        """Exponent tuple and coefficient pairs."""
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and not other:
            return self.is_zero
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __neg__(self):
        return CoeffPoly({exponents: -coefficient for exponents, coefficient in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int) and not other:
            return self
        if isinstance(other, ScalarMonomial):
            other = CoeffPoly.from_monomial(other)
        terms = dict(self._terms)
        for exponents, coefficient in other.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return CoeffPoly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ScalarMonomial):
            other = CoeffPoly.from_monomial(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CoeffPoly({exponents: coefficient * other for exponents, coefficient in self._terms.items()})
        if isinstance(other, ScalarMonomial):
            return CoeffPoly({_add_exponents(exponents, other.exponents): coefficient * other.coefficient
                              for exponents, coefficient in self._terms.items()})
        terms = {}
        for left_exponents, left in self._terms.items():
            for right_exponents, right in other.items():
                exponents = _add_exponents(left_exponents, right_exponents)
                terms[exponents] = terms.get(exponents, 0) + left * right
        return CoeffPoly(terms)

    __rmul__ = __mul__

    def leading(self):
        """The largest exponent tuple and its coefficient."""
        return max(self._terms.items(), key=_scalar_order)

    def divide_exact(self, divisor, iteration_cap=DIVISION_ITERATION_CAP):
        """Divides exactly by another scalar.

        Raises:
            DivisionByZeroElement: If the divisor is zero.
            NotLeftDivisible: If the quotient is not an integer Laurent polynomial.

        """
        divisor = CoeffPoly.from_monomial(divisor) if isinstance(divisor, ScalarMonomial) else divisor
        if divisor.is_zero:
            raise DivisionByZeroElement('Division of a scalar by zero')
        if divisor.is_monomial and divisor.as_monomial().is_unit:
            return self * divisor.as_monomial().inverse()
        lead_exponents, lead_coefficient = divisor.leading()
        quotient = {}
        remainder = self
        for _ in range(len(self) * len(divisor) + iteration_cap):
            if remainder.is_zero:
                return CoeffPoly(quotient)
            exponents, coefficient = remainder.leading()
            if coefficient % lead_coefficient:
                break
            shift = tuple(left - right for left, right in zip(exponents, lead_exponents))
            factor = ScalarMonomial(coefficient // lead_coefficient, shift)
            quotient[shift] = quotient.get(shift, 0) + factor.coefficient
            remainder = remainder - divisor * factor
        raise NotLeftDivisible(f'Scalar {self!r} is not divisible by {divisor!r}')

    def render(self, params):
        """Human readable form with the largest term first."""
        if self.is_zero:
            return '0'
        text = ''
        for index, monomial in enumerate(self.terms):
            rendered = monomial.render(params)
            if index and rendered.startswith('-'):
                text += f' - {rendered[1:]}'
            elif index:
                text += f' + {rendered}'
            else:
                text = rendered
        return text

    def __repr__(self):
        return f'CoeffPoly({self._terms!r})'


def _scalar_order(item):
    exponents, _ = item
    return sum(exponents), exponents


class ExponentVector:
    """A finitely supported integer vector indexed by labels.

    Zero entries are dropped so that equal vectors compare and hash equal
    regardless of how they were built.
    """

    __slots__ = ('_entries', '_key')

    def __init__(self, entries=None):
        self._entries = {label: value for label, value in dict(entries or {}).items() if value}
        self._key = frozenset(self._entries.items())

    @classmethod
    def unit(cls, label, value=1):
        """The vector ``value * e_label``."""
        return cls({label: value})

    def get(self, label):
        """The entry at a label, zero when absent."""
        return self._entries.get(label, 0)

    def __getitem__(self, label):
        return self.get(label)

    @property
    def support(self):
        """Labels with a nonzero entry."""
        return frozenset(self._entries)

    def items(self):
        """Label and value pairs of the nonzero entries."""
        return self._entries.items()

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, ExponentVector):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        entries = dict(self._entries)
        for label, value in other.items():
            entries[label] = entries.get(label, 0) + value
        return ExponentVector(entries)

    def __neg__(self):
        return ExponentVector({label: -value for label, value in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        return ExponentVector({label: value * factor for label, value in self._entries.items()})

    __rmul__ = __mul__

    def relabel(self, mapping):
        """Renames the labels through a mapping."""
        return ExponentVector({mapping[label]: value for label, value in self._entries.items()})

    def __repr__(self):
        return f'ExponentVector({self._entries!r})'


class SkewExpMatrix:
    """A quasi-commutation matrix with monomial entries.

    Only one triangle is stored, in the fixed label order, as doubled exponent
    tuples. The entry at ``(j, i)`` is the inverse of the entry at ``(i, j)``
    and the diagonal is one. Entries given in violation of these rules are
    kept in ``violations`` for validation to report.
    """

    def __init__(self, params, labels, entries=None):
        self._params = params
        self._labels = tuple(labels)
        self._rank = {label: index for index, label in enumerate(self._labels)}
        if len(self._rank) != len(self._labels):
            raise StructuralMismatch(f'Duplicate labels in {self._labels}')
        self._upper = {}
        self.violations = []
        for (first, second), value in dict(entries or {}).items():
            self._store(first, second, self._coerce(value))
        self._key = (self._params, self._labels, frozenset(self._upper.items()))

    def _coerce(self, value):
        if isinstance(value, ScalarMonomial):
            return value
        if isinstance(value, int):
            return ScalarMonomial(1, (value,) + (0,) * (len(self._params) - 1))
        return ScalarMonomial(1, tuple(value))

    def _store(self, first, second, value):
        for label in (first, second):
            if label not in self._rank:
                raise LabelError(f'Label {label!r} is not part of {self._labels}')
        if value.coefficient != 1:
            self.violations.append((first, second, f'coefficient {value.coefficient} is not one'))
        if first == second:
            if any(value.exponents):
                self.violations.append((first, second, 'diagonal entry is not one'))
            return
        if self._rank[first] < self._rank[second]:
            key, exponents = (first, second), value.exponents
        else:
            key, exponents = (second, first), _scale_exponents(value.exponents, -1)
        existing = self._upper.get(key)
        if existing is not None and existing != exponents:
            self.violations.append((first, second, 'entry is not the inverse of its transpose'))
            return
        self._upper[key] = exponents

    @property
    def params(self):
        """The parameter set of the entries."""
        return self._params

    @property
    def labels(self):
        """The ordered labels."""
        return self._labels

    def rank(self, label):
        """Position of a label in the fixed order."""
        try:
            return self._rank[label]
        except KeyError:
            raise LabelError(f'Label {label!r} is not part of {self._labels}') from None

    def __contains__(self, label):
        return label in self._rank

    def exponent(self, first, second):
        """Doubled exponent tuple of the entry at ``(first, second)``."""
        first_rank, second_rank = self.rank(first), self.rank(second)
        if first_rank == second_rank:
            return self._params.zero
        if first_rank < second_rank:
            return self._upper.get((first, second), self._params.zero)
        return _scale_exponents(self._upper.get((second, first), self._params.zero), -1)

    def value(self, first, second):
        """The entry at ``(first, second)`` as a scalar monomial."""
        return ScalarMonomial(1, self.exponent(first, second))

    def entries(self):
        """Upper triangle entries with a nontrivial value."""
        return {key: ScalarMonomial(1, value) for key, value in self._upper.items() if any(value)}

    def is_central(self, label):
        """True when the label commutes with every other label."""
        return not any(self.exponent(label, other) != self._params.zero for other in self._labels)

    def restrict(self, labels):
        """Keeps the given labels, in this matrix's order."""
        wanted = set(labels)
        missing = wanted - set(self._labels)
        if missing:
            raise LabelError(f'Labels {missing} are not part of {self._labels}')
        kept = tuple(label for label in self._labels if label in wanted)
        return SkewExpMatrix(self._params, kept, {key: value for key, value in self._upper.items()
                                                  if key[0] in wanted and key[1] in wanted})

    def relabel(self, mapping, params=None):
        """Renames the labels, optionally moving the entries onto a larger parameter set."""
        params = params or self._params
        return SkewExpMatrix(params,
                             [mapping[label] for label in self._labels],
                             {(mapping[first], mapping[second]): self._params.remap(value, params)
                              for (first, second), value in self._upper.items()})

    def updated(self, entries):
        """A copy with the given entries replaced."""
        upper = dict(self._upper)
        for (first, second), value in entries.items():
            if self.rank(first) > self.rank(second):
                first, second, value = second, first, _scale_exponents(tuple(value), -1)
            upper[(first, second)] = tuple(value)
        return SkewExpMatrix(self._params, self._labels, upper)

    def __eq__(self, other):
        if not isinstance(other, SkewExpMatrix):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    @property
    def canonical_key(self):
        """Hashable form ignoring stored trivial entries."""
        return (self._params, self._labels,
                frozenset((key, value) for key, value in self._upper.items() if any(value)))

    def __hash__(self):
        return hash(self.canonical_key)

    def __repr__(self):
        return f'SkewExpMatrix(labels={self._labels!r}, entries={self.entries()!r})'


def omega(r, first, second):
    """The scalar ``prod r_kj^(a_k b_j)`` over all label pairs."""
    total = list(r.params.zero)
    for label_k, value_k in first.items():
        r.rank(label_k)
        for label_j, value_j in second.items():
            if label_k == label_j:
                continue
            exponents = r.exponent(label_k, label_j)
            weight = value_k * value_j
            for index, exponent in enumerate(exponents):
                total[index] += weight * exponent
    for label in second.support:
        r.rank(label)
    return ScalarMonomial(1, tuple(total))


def s_norm(r, vector):
    """The normalization scalar ``prod_(j<k) r_jk^(-a_j a_k)`` in the fixed label order."""
    ordered = sorted(vector.items(), key=lambda item: r.rank(item[0]))
    total = list(r.params.zero)
    for position, (label_j, value_j) in enumerate(ordered):
        for label_k, value_k in ordered[position + 1:]:
            exponents = r.exponent(label_j, label_k)
            weight = -value_j * value_k
            for index, exponent in enumerate(exponents):
                total[index] += weight * exponent
    return ScalarMonomial(1, tuple(total))


def term_order_key(r, vector):
    """Graded lexicographic key in the label order of ``r``."""
    return sum(value for _, value in vector.items()), tuple(vector.get(label) for label in r.labels)


class TorusElement:
    """A finite sum of based monomials with scalar coefficients.

    Terms map an :class:`ExponentVector` to a nonzero :class:`CoeffPoly`.
    Instances are immutable and hashable.
    """

    __slots__ = ('_params', '_terms', '_key')

    def __init__(self, params, terms=None):
        self._params = params
        cleaned = {}
        for exponents, coefficient in dict(terms or {}).items():
            coefficient = CoeffPoly.coerce(coefficient, params)
            cleaned[exponents] = cleaned[exponents] + coefficient if exponents in cleaned else coefficient
        self._terms = {exponents: coefficient for exponents, coefficient in cleaned.items()
                       if not coefficient.is_zero}
        self._key = frozenset(self._terms.items())

    @classmethod
    def zero(cls, params):
        """The zero element."""
        return cls(params)

    @classmethod
    def one(cls, params):
        """The unit element."""
        return cls(params, {ExponentVector(): 1})

    @classmethod
    def monomial(cls, params, exponents, coefficient=1):
        """``coefficient * Y^(exponents)``."""
        if not isinstance(exponents, ExponentVector):
            exponents = ExponentVector(exponents)
        return cls(params, {exponents: coefficient})

    @classmethod
    def generator(cls, params, label):
        """The based generator ``Y^(e_label)``."""
        return cls.monomial(params, ExponentVector.unit(label))

    @property
    def params(self):
        """The parameter set of the coefficients."""
        return self._params

    @property
    def is_zero(self):
        """True for the zero element."""
        return not self._terms

    def items(self):
        """Exponent vector and coefficient pairs."""
        return self._terms.items()

    def coefficient(self, exponents):
        """The coefficient at an exponent vector, zero when absent."""
        return self._terms.get(exponents, CoeffPoly())

    @property
    def support_labels(self):
        """Every label that appears in some term."""
        labels = set()
        for exponents in self._terms:
            labels.update(exponents.support)
        return frozenset(labels)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def _check(self, other):
        if not isinstance(other, TorusElement):
            raise TypeError(f'Cannot combine {type(other).__name__} with a torus element')
        if other.params != self._params:
            raise StructuralMismatch(f'Parameter sets {self._params.names} and {other.params.names} differ')

    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for exponents, coefficient in other.items():
            terms[exponents] = terms[exponents] + coefficient if exponents in terms else coefficient
        return TorusElement(self._params, terms)

    def __neg__(self):
        return TorusElement(self._params, {exponents: -coefficient for exponents, coefficient in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """Multiplies every coefficient by a central scalar."""
        return TorusElement(self._params, {exponents: coefficient * scalar
                                           for exponents, coefficient in self._terms.items()})

    def relabel(self, mapping, params=None):
        """Renames labels and optionally moves the coefficients onto a larger parameter set."""
        params = params or self._params
        terms = {}
        for exponents, coefficient in self._terms.items():
            moved = CoeffPoly({self._params.remap(scalar, params): value for scalar, value in coefficient.items()})
            terms[exponents.relabel(mapping)] = moved
        return TorusElement(params, terms)

    def __repr__(self):
        return f'TorusElement({self._terms!r})'


def _check_operands(r, *elements):
    for element in elements:
        if element.params != r.params:
            raise StructuralMismatch(f'Element over {element.params.names} used with matrix over {r.params.names}')
        foreign = element.support_labels - set(r.labels)
        if foreign:
            raise StructuralMismatch(f'Labels {sorted(map(str, foreign))} are not part of the torus')


def torus_mul(r, first, second):
    """Multiplies two elements of the based torus of ``r``.

    Raises:
        StructuralMismatch: If an element uses labels or parameters the torus does not have.

    """
    _check_operands(r, first, second)
    terms = {}
    for left_exponents, left in first.items():
        for right_exponents, right in second.items():
            exponents = left_exponents + right_exponents
            product = left * right * omega(r, left_exponents, right_exponents)
            terms[exponents] = terms[exponents] + product if exponents in terms else product
    return TorusElement(r.params, terms)


def torus_power(r, element, power):
    """Raises a based monomial to an integer power, or any element to a natural power."""
    if power < 0:
        if len(element) != 1:
            raise NotLeftDivisible('Only monomials have negative powers')
        (exponents, coefficient), = element.items()
        if not coefficient.is_monomial or not coefficient.as_monomial().is_unit:
            raise NotLeftDivisible(f'Coefficient {coefficient!r} is not invertible')
        element = TorusElement(r.params, {-exponents: coefficient.as_monomial().inverse()})
        power = -power
    result = TorusElement.one(r.params)
    for _ in range(power):
        result = torus_mul(r, result, element)
    return result


def leading_term(r, element):
    """The term of ``element`` that is largest in the graded lexicographic order."""
    return max(element.items(), key=lambda item: term_order_key(r, item[0]))


def torus_left_divide(r, divisor, dividend, iteration_cap=DIVISION_ITERATION_CAP):
    """Finds ``t`` with ``divisor * t == dividend`` by leading term elimination.

    Args:
        r (SkewExpMatrix): The quasi-commutation matrix of the torus.
        divisor (TorusElement): The left factor.
        dividend (TorusElement): The product to divide.
        iteration_cap (int): Extra elimination steps allowed on top of the product of the term counts.

    Returns:
        TorusElement: The unique left quotient.

    Raises:
        DivisionByZeroElement: If the divisor is zero.
        NotLeftDivisible: If no Laurent polynomial quotient exists.

    """
    _check_operands(r, divisor, dividend)
    if divisor.is_zero:
        raise DivisionByZeroElement('Left division by the zero element')
    lead_exponents, lead_coefficient = leading_term(r, divisor)
    quotient = {}
    remainder = dividend
    for _ in range(len(dividend) * len(divisor) + iteration_cap):
        if remainder.is_zero:
            return TorusElement(r.params, quotient)
        exponents, coefficient = leading_term(r, remainder)
        shift = exponents - lead_exponents
        factor = lead_coefficient * omega(r, lead_exponents, shift)
        try:
            step = coefficient.divide_exact(factor, iteration_cap)
        except NotLeftDivisible:
            raise NotLeftDivisible(f'Leading coefficient {coefficient!r} is not divisible by {factor!r}') from None
        quotient[shift] = quotient[shift] + step if shift in quotient else step
        remainder = remainder - torus_mul(r, divisor, TorusElement(r.params, {shift: step}))
    LOGGER.debug('Division gave up with %s terms left in the remainder', len(remainder))
    raise NotLeftDivisible('Leading term elimination did not terminate within the iteration cap')


def _render_label(label, names):
    if names and label in names:
        return names[label]
    if isinstance(label, tuple):
        return 'x' + ''.join(str(part) for part in label) if all(0 <= part < 10 for part in label) \
            else 'x(' + ','.join(str(part) for part in label) + ')'
    return f'x{label}'


def render_monomial(r, exponents, names=None):
    """Ordered product of labelled variables, e.g. ``x1*x2^-1``."""
    factors = []
    for label in r.labels:
        power = exponents.get(label)
        if not power:
            continue
        symbol = _render_label(label, names)
        factors.append(symbol if power == 1 else f'{symbol}^{power}')
    return '*'.join(factors)


def render_element(r, element, names=None):
    """Renders an element as ordered monomials in the labelled variables.

    The based monomial ``Y^(a)`` equals ``s_norm(a)`` times the ordered product
    of the variables, so each displayed coefficient carries that factor. Terms
    appear largest first.
    """
    if element.is_zero:
        return '0'
    pieces = []
    for exponents, coefficient in sorted(element.items(), key=lambda item: term_order_key(r, item[0]),
                                         reverse=True):
        scalar = coefficient * s_norm(r, exponents)
        monomial = render_monomial(r, exponents, names)
        negative = False
        if scalar.is_monomial:
            single = scalar.as_monomial()
            negative = single.coefficient < 0
            text = (single * (-1 if negative else 1)).render(r.params)
        else:
            text = f'({scalar.render(r.params)})'
        if monomial:
            text = monomial if text == '1' else f'{text}*{monomial}'
        pieces.append((negative, text))
    rendered = ('-' if pieces[0][0] else '') + pieces[0][1]
    for negative, text in pieces[1:]:
        rendered += f' - {text}' if negative else f' + {text}'
    return rendered
