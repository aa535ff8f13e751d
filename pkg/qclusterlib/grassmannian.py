#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: grassmannian.py
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
Quantum Grassmannian seeds.

The initial seed of the quantized coordinate ring of Gr(k, n) lives on the grid
``([1, k] x [1, n - k]) + {(0, 0)}``. Its quasi-commutation exponents are not
tabulated anywhere in this package: they are derived by multiplying quantum
minors in the quantized coordinate ring of matrices, whose defining relations
are the ones below.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import functools
import itertools
import logging

from .qclusterlibexceptions import InternalInconsistency, LabelError, PreconditionError
from .morphism import MorphismSpec
from .seed import ExchangeMatrix, Seed
from .structure import SeedGenerator
from .torus import CoeffPoly, ParamSet, ScalarMonomial, SkewExpMatrix

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.grassmannian')
LOGGER.addHandler(logging.NullHandler())

CORNER = (0, 0)
Q_PARAMS = ParamSet(('q',))

ONE = CoeffPoly.constant(1, Q_PARAMS)
Q = CoeffPoly.from_monomial(ScalarMonomial(1, (2,)))
Q_INVERSE = CoeffPoly.from_monomial(ScalarMonomial(1, (-2,)))

# Straightening relations of the quantized matrix ring. Generators are (row, column)
# pairs in lexicographic normal order, each rule rewrites ``later * earlier``.
SAME_ROW_FACTOR = Q_INVERSE        # x_ad x_ab = q^-1 x_ab x_ad for b < d
SAME_COLUMN_FACTOR = Q_INVERSE     # x_cb x_ab = q^-1 x_ab x_cb for a < c
ANTI_DIAGONAL_FACTOR = ONE         # x_cb x_ad = x_ad x_cb for a < c, b < d
DIAGONAL_CORRECTION = -(Q - Q_INVERSE)  # x_cd x_ab = x_ab x_cd - (q - q^-1) x_ad x_cb for a < c, b < d
MINOR_SIGN = -1                    # quantum minors weight a permutation of length l by (-q)^l


class _NotQuasiCommuting:  # pylint: disable=too-few-public-methods
    """Marker for quantum minors without a uniform commutation power."""

    def __repr__(self):
        return 'NOT_QUASI_COMMUTING'


NOT_QUASI_COMMUTING = _NotQuasiCommuting()


def plucker_index(k, i, j, n=None):
    """The k-subset ``[1, k - i] + [k + j - i + 1, k + j]`` of the grid index ``(i, j)``.

    Raises:
        LabelError: If ``(i, j)`` lies outside the grid.

    """
    if (i, j) != CORNER and not (1 <= i <= k and j >= 1 and (n is None or j <= n - k)):
        raise LabelError(f'({i}, {j}) is not a grid index for k={k}' + (f', n={n}' if n else ''))
    return tuple(range(1, k - i + 1)) + tuple(range(k + j - i + 1, k + j + 1))


def plucker_name(index_set):
    """Display name of a k-subset, ``124`` or ``1,10,11`` once an entry exceeds 9."""
    if all(entry < 10 for entry in index_set):
        return ''.join(str(entry) for entry in index_set)
    return ','.join(str(entry) for entry in index_set)


def _check_dimensions(k, n):
    if not 1 <= k < n:
        raise PreconditionError(f'Grassmannian Gr({k}, {n}) needs 1 <= k < n')


def gr_labels(k, n):
    """Grid labels in row major order after the corner."""
    _check_dimensions(k, n)
    return (CORNER,) + tuple((i, j) for i in range(1, k + 1) for j in range(1, n - k + 1))


def gr_exchangeable(k, n):
    """The mutable labels ``[1, k - 1] x [1, n - k - 1]``."""
    return frozenset((i, j) for i in range(1, k) for j in range(1, n - k))


def frozen_plucker_labels(k, n):
    """Plucker labels of the frozen variables of the initial seed."""
    exchangeable = gr_exchangeable(k, n)
    return frozenset(plucker_index(k, *label) for label in gr_labels(k, n) if label not in exchangeable)


def _in_grid(k, label, columns):
    i, j = label
    return label == CORNER or (1 <= i <= k and 1 <= j and (columns is None or j <= columns))


def _heads(k, label, columns=None):
    if not _in_grid(k, label, columns):
        return ()
    i, j = label
    candidates = [(i + 1, j), (i, j + 1)]
    if label == CORNER:
        candidates = [(1, 1)]
    elif i > 1 and j > 1:
        candidates.append((i - 1, j - 1))
    return tuple(head for head in candidates if head != CORNER and _in_grid(k, head, columns))


def _row(k, label, columns=None):
    entries = {}
    for head in _heads(k, label, columns):
        entries[head] = entries.get(head, 0) + 1
    i, j = label
    for tail in (CORNER, (i - 1, j), (i, j - 1), (i + 1, j + 1)):
        if tail != label and label in _heads(k, tail, columns):
            entries[tail] = entries.get(tail, 0) - 1
    return {other: value for other, value in entries.items() if value}


def gr_exchange_matrix(k, n):
    """Exchange matrix of the quiver on the grid of Gr(k, n)."""
    labels = gr_labels(k, n)
    columns = n - k
    entries = {(label, other): value for label in labels for other, value in _row(k, label, columns).items()}
    return ExchangeMatrix(labels, gr_exchangeable(k, n), entries)


class QMatrixWord:
    """An element of the quantized coordinate ring of matrices in normal form.

    Terms map tuples of ``(row, column)`` generators in lexicographic order to
    coefficients in ``q``.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for word, coefficient in dict(terms or {}).items():
            cleaned[word] = cleaned[word] + coefficient if word in cleaned else coefficient
        self._terms = {word: coefficient for word, coefficient in cleaned.items() if not coefficient.is_zero}

    @classmethod
    def one(cls):
        """The unit."""
        return cls({(): ONE})

    @classmethod
    def generator(cls, row, column):
        """The generator ``x_(row, column)``."""
        return cls({((row, column),): ONE})

    def items(self):
        """Word and coefficient pairs."""
        return self._terms.items()

    def __eq__(self, other):
        if not isinstance(other, QMatrixWord):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        terms = dict(self._terms)
        for word, coefficient in other.items():
            terms[word] = terms[word] + coefficient if word in terms else coefficient
        return QMatrixWord(terms)

    def __neg__(self):
        return QMatrixWord({word: -coefficient for word, coefficient in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """Multiplies every coefficient by a scalar in ``q``."""
        return QMatrixWord({word: coefficient * scalar for word, coefficient in self._terms.items()})

    def __mul__(self, other):
        result = {}
        for left_word, left in self._terms.items():
            for right_word, right in other.items():
                partial = {left_word: left * right}
                for letter in right_word:
                    partial = _times_letter(partial, letter)
                for word, coefficient in partial.items():
                    result[word] = result[word] + coefficient if word in result else coefficient
        return QMatrixWord(result)

    def render(self):
        """Human readable form."""
        if not self._terms:
            return '0'
        pieces = []
        for word, coefficient in sorted(self._terms.items()):
            monomial = '*'.join(f'x{row}{column}' for row, column in word) or '1'
            pieces.append(f'({coefficient.render(Q_PARAMS)})*{monomial}')
        return ' + '.join(pieces)

    def __repr__(self):
        return f'QMatrixWord({self.render()})'


@functools.lru_cache(maxsize=None)
def _swap(later, earlier):
    (row_later, column_later), (row_earlier, column_earlier) = later, earlier
    if row_later == row_earlier:
        return ((SAME_ROW_FACTOR, (earlier, later)),)
    if column_later == column_earlier:
        return ((SAME_COLUMN_FACTOR, (earlier, later)),)
    if column_later < column_earlier:
        return ((ANTI_DIAGONAL_FACTOR, (earlier, later)),)
    return ((ONE, (earlier, later)),
            (DIAGONAL_CORRECTION, ((row_earlier, column_later), (row_later, column_earlier))))


@functools.lru_cache(maxsize=None)
def _mul_word(word, letter):
    if not word or word[-1] <= letter:
        return ((word + (letter,), ONE),)
    head, last = word[:-1], word[-1]
    result = {}
    for coefficient, pair in _swap(last, letter):
        partial = {head: coefficient}
        for generator in pair:
            partial = _times_letter(partial, generator)
        for product, value in partial.items():
            result[product] = result[product] + value if product in result else value
    return tuple((product, value) for product, value in result.items() if not value.is_zero)


def _times_letter(terms, letter):
    result = {}
    for word, coefficient in terms.items():
        for product, value in _mul_word(word, letter):
            scaled = coefficient * value
            result[product] = result[product] + scaled if product in result else scaled
    return result


def qmatrix_normal_form(word):
    """Normal form of a product of generators given as ``(row, column)`` pairs."""
    terms = {(): ONE}
    for letter in word:
        terms = _times_letter(terms, tuple(letter))
    return QMatrixWord(terms)


def _inversions(permutation):
    return sum(1 for first, second in itertools.combinations(permutation, 2) if first > second)


def quantum_minor(rows, columns):
    """The quantum minor on ``rows`` and ``columns`` as an alternating sum over permutations.

    Raises:
        PreconditionError: If the numbers of rows and columns differ.

    """
    rows, columns = tuple(rows), tuple(columns)
    if len(rows) != len(columns):
        raise PreconditionError(f'Minor needs as many rows as columns, got {rows} and {columns}')
    return _quantum_minor(rows, columns)


@functools.lru_cache(maxsize=None)
def _quantum_minor(rows, columns):
    minor = QMatrixWord()
    for permutation in itertools.permutations(range(len(columns))):
        length = _inversions(permutation)
        weight = CoeffPoly.from_monomial(ScalarMonomial(MINOR_SIGN ** length, (2 * length,)))
        word = tuple((row, columns[position]) for row, position in zip(rows, permutation))
        minor = minor + qmatrix_normal_form(word).scale(weight)
    return minor


def plucker_coordinate(index_set):
    """The quantum minor on the first ``len(index_set)`` rows and the given columns."""
    return quantum_minor(tuple(range(1, len(index_set) + 1)), tuple(index_set))


@functools.lru_cache(maxsize=None)
def scott_exponent(first, second):
    """Finds ``c`` with ``D_first * D_second = q^c * D_second * D_first``.

    Returns:
        int: The exponent of ``q``, or ``NOT_QUASI_COMMUTING`` when no single power works.

    """
    first, second = tuple(first), tuple(second)
    if first == second:
        return 0
    left = plucker_coordinate(first) * plucker_coordinate(second)
    right = plucker_coordinate(second) * plucker_coordinate(first)
    terms = dict(right.items())
    if not terms:
        return NOT_QUASI_COMMUTING
    word, coefficient = next(iter(terms.items()))
    candidate = dict(left.items()).get(word)
    if candidate is None or not coefficient.is_monomial or not candidate.is_monomial:
        return NOT_QUASI_COMMUTING
    ratio = candidate.as_monomial() * coefficient.as_monomial().inverse()
    if ratio.coefficient != 1 or ratio.exponents[0] % 2 or left != right.scale(ratio):
        return NOT_QUASI_COMMUTING
    LOGGER.debug('Plucker coordinates %s and %s commute up to q^%s', first, second, ratio.exponents[0] // 2)
    return ratio.exponents[0] // 2


def _r_entry(k, first, second):
    exponent = scott_exponent(plucker_index(k, *first), plucker_index(k, *second))
    if exponent is NOT_QUASI_COMMUTING:
        raise InternalInconsistency(f'Initial Plucker coordinates at {first} and {second} do not quasi-commute')
    return ScalarMonomial(1, (exponent,))


@functools.lru_cache(maxsize=None)
def build_gr_seed(k, n, quantum=True):
    """The initial graded seed of Gr(k, n), or its classical counterpart when ``quantum`` is off.

    Every variable has degree one and no variable is invertible.
    """
    labels = gr_labels(k, n)
    r_entries = {}
    if quantum:
        for first, second in itertools.combinations(labels, 2):
            entry = _r_entry(k, first, second)
            if any(entry.exponents):
                r_entries[(first, second)] = entry
    LOGGER.debug('Built the Gr(%s, %s) seed on %s labels', k, n, len(labels))
    return Seed(r=SkewExpMatrix(Q_PARAMS, labels, r_entries),
                b=gr_exchange_matrix(k, n),
                grading={label: (1,) for label in labels},
                names={label: plucker_name(plucker_index(k, *label)) for label in labels})


def build_iota(k, n):
    """The inclusion of the Gr(k, n) seed into the Gr(k, n + 1) seed matching Plucker labels."""
    source, target = build_gr_seed(k, n), build_gr_seed(k, n + 1)
    by_plucker = {plucker_index(k, *label): label for label in target.labels}
    return MorphismSpec(source, target, {label: by_plucker[plucker_index(k, *label)] for label in source.labels})


def gr_infinity_generator(k):
    """Lazy description of the seed of Gr(k, infinity) on ``([1, k] x [1, oo)) + {(0, 0)}``."""
    if k < 1:
        raise PreconditionError(f'Gr({k}, infinity) needs k >= 1')

    def labels():
        yield CORNER
        for j in itertools.count(1):
            for i in range(1, k + 1):
                yield i, j

    def check(label):
        if not _in_grid(k, label, None):
            raise LabelError(f'{label!r} is not a grid index for k={k}')
        return label

    return SeedGenerator(labels=labels,
                         neighbors=lambda label: tuple(_row(k, check(label)).items()),
                         r_of=lambda first, second: _r_entry(k, check(first), check(second)),
                         g_of=lambda label: (1,),
                         ex_test=lambda label: 1 <= check(label)[0] <= k - 1,
                         params=Q_PARAMS,
                         names_of=lambda label: plucker_name(plucker_index(k, *label)))


def gr_restriction(generator, k, n):
    """The restriction of a Gr(k, infinity) generator to the grid of Gr(k, n)."""
    return generator.materialize(gr_labels(k, n), exchangeable=gr_exchangeable(k, n), invertible=())
