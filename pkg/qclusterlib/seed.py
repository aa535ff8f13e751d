#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: seed.py
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
Graded quantum seeds and their mutation.

A seed keeps its exchange matrix, quasi-commutation matrix and grading in the
order of its labels, together with the expression of each of its cluster
variables in the torus of the initial seed it was reached from.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import concurrent.futures
import dataclasses
import itertools
import logging
from collections import deque
from fractions import Fraction
from math import lcm

import numpy as np

from .configuration import (DIVISION_ITERATION_CAP,
                            SYMMETRIZER_BOUND,
                            MAX_SEEDS,
                            MAX_WORKERS,
                            VERIFY_EXCHANGE)
from .qclusterlibexceptions import (LabelError,
                                    FrozenIndexError,
                                    InternalInconsistency,
                                    NotLeftDivisible,
                                    PreconditionError)
from .torus import (ParamSet,
                    ExponentVector,
                    SkewExpMatrix,
                    TorusElement,
                    omega,
                    s_norm,
                    torus_mul,
                    torus_left_divide,
                    render_element)

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.seed')
LOGGER.addHandler(logging.NullHandler())


class ExchangeMatrix:
    """A sparse integer matrix indexed by the labels of a seed.

    Only nonzero entries are stored. The exchangeable labels are the columns
    mutation is allowed at.
    """

    def __init__(self, labels, exchangeable=(), entries=None):
        self._labels = tuple(labels)
        self._rank = {label: index for index, label in enumerate(self._labels)}
        self._exchangeable = frozenset(exchangeable)
        unknown = self._exchangeable - set(self._labels)
        if unknown:
            raise LabelError(f'Exchangeable labels {sorted(map(str, unknown))} are not part of the seed')
        self._entries = {}
        for (row, column), value in dict(entries or {}).items():
            if row not in self._rank or column not in self._rank:
                raise LabelError(f'Entry ({row!r}, {column!r}) uses a label outside {self._labels}')
            if value:
                self._entries[(row, column)] = int(value)

    @property
    def labels(self):
        """The ordered labels."""
        return self._labels

    @property
    def exchangeable(self):
        """The labels mutation is allowed at."""
        return self._exchangeable

    def ordered_exchangeable(self):
        """The exchangeable labels in label order."""
        return tuple(label for label in self._labels if label in self._exchangeable)

    def get(self, row, column):
        """The entry at ``(row, column)``, zero when absent."""
        return self._entries.get((row, column), 0)

    def entries(self):
        """A copy of the nonzero entries."""
        return dict(self._entries)

    def column(self, label):
        """Column ``label`` as an exponent vector."""
        return ExponentVector({row: value for (row, column), value in self._entries.items() if column == label})

    def neighbors(self, label):
        """Labels connected to ``label`` by a nonzero entry in either direction."""
        return frozenset(column if row == label else row
                         for row, column in self._entries if label in (row, column) and row != column)

    def as_array(self):
        """Dense form in label order."""
        matrix = np.zeros((len(self._labels), len(self._labels)), dtype=np.int64)
        for (row, column), value in self._entries.items():
            matrix[self._rank[row], self._rank[column]] = value
        return matrix

    @classmethod
    def from_array(cls, labels, exchangeable, matrix):
        """Builds the sparse form of a dense matrix in label order."""
        labels = tuple(labels)
        rows, columns = np.nonzero(matrix)
        return cls(labels, exchangeable, {(labels[row], labels[column]): int(matrix[row, column])
                                          for row, column in zip(rows, columns)})

    def restrict(self, labels, exchangeable=None):
        """Keeps the entries between the given labels."""
        wanted = set(labels)
        kept = tuple(label for label in self._labels if label in wanted)
        exchangeable = self._exchangeable & wanted if exchangeable is None else exchangeable
        return ExchangeMatrix(kept, exchangeable, {key: value for key, value in self._entries.items()
                                                   if key[0] in wanted and key[1] in wanted})

    def relabel(self, mapping):
        """Renames the labels."""
        return ExchangeMatrix([mapping[label] for label in self._labels],
                              {mapping[label] for label in self._exchangeable},
                              {(mapping[row], mapping[column]): value
                               for (row, column), value in self._entries.items()})

    def sign_skew_violations(self):
        """Pairs breaking ``b_ij * b_ji < 0`` whenever one of them is nonzero."""
        violations = []
        seen = set()
        for (row, column), value in self._entries.items():
            pair = frozenset((row, column))
            if pair in seen:
                continue
            seen.add(pair)
            if row == column or value * self.get(column, row) >= 0:
                violations.append((row, column))
        return violations

    @property
    def canonical_key(self):
        """Hashable form of the matrix."""
        return self._labels, self._exchangeable, frozenset(self._entries.items())

    def __eq__(self, other):
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self):
        return hash(self.canonical_key)

    def __repr__(self):
        return f'ExchangeMatrix(labels={self._labels!r}, entries={self._entries!r})'


def _require_exchangeable(b, label):
    if label not in b.labels:
        raise LabelError(f'Label {label!r} is not part of the seed')
    if label not in b.exchangeable:
        raise FrozenIndexError(f'Label {label!r} is frozen and cannot be mutated')


def negative_part(b, label):
    """``[b^k]_-``: absolute values of the negative entries of column ``label``."""
    return ExponentVector({row: -value for row, value in b.column(label).items() if value < 0 and row != label})


def positive_part(b, label):
    """``[b^k]_+``: the positive entries of column ``label``."""
    return ExponentVector({row: value for row, value in b.column(label).items() if value > 0 and row != label})


def mutated_column(b, label):
    """Column ``label`` of E, the only column that differs from the identity."""
    return ExponentVector.unit(label, -1) + negative_part(b, label)


def build_ef(b, label):
    """The matrices E and F of a mutation, as dense arrays in label order.

    Raises:
        FrozenIndexError: If ``label`` is not exchangeable.

    """
    _require_exchangeable(b, label)
    size = len(b.labels)
    position = b.labels.index(label)
    e_matrix = np.identity(size, dtype=np.int64)
    f_matrix = np.identity(size, dtype=np.int64)
    for index, other in enumerate(b.labels):
        if index == position:
            continue
        e_matrix[index, position] = max(0, -b.get(other, label))
        f_matrix[position, index] = max(0, b.get(label, other))
    e_matrix[position, position] = -1
    f_matrix[position, position] = -1
    return e_matrix, f_matrix


def mutate_exchange(b, label):
    """Mutates an exchange matrix with the entrywise rule.

    Raises:
        FrozenIndexError: If ``label`` is not exchangeable.

    """
    _require_exchangeable(b, label)
    column = {row: value for (row, other), value in b.entries().items() if other == label}
    row = {other: value for (first, other), value in b.entries().items() if first == label}
    entries = {}
    for (first, second), value in b.entries().items():
        if label in (first, second):
            entries[(first, second)] = -value
        else:
            entries[(first, second)] = value
    for first, b_ik in column.items():
        if first == label:
            continue
        for second, b_kj in row.items():
            if second == label:
                continue
            correction = (abs(b_ik) * b_kj + b_ik * abs(b_kj)) // 2
            if correction:
                entries[(first, second)] = entries.get((first, second), 0) + correction
    return ExchangeMatrix(b.labels, b.exchangeable, entries)


def mutate_exchange_ebf(b, label):
    """Mutates an exchange matrix as the product ``E B F``."""
    e_matrix, f_matrix = build_ef(b, label)
    return ExchangeMatrix.from_array(b.labels, b.exchangeable, e_matrix @ b.as_array() @ f_matrix)


def mutate_r(r, b, label):
    """Mutates a quasi-commutation matrix by conjugating with E.

    Only the row and column of ``label`` change.

    Raises:
        FrozenIndexError: If ``label`` is not exchangeable.

    """
    _require_exchangeable(b, label)
    column = mutated_column(b, label)
    changes = {(label, other): omega(r, column, ExponentVector.unit(other)).exponents
               for other in r.labels if other != label}
    return r.updated(changes)


def mutate_grading(grading, b, label):
    """Mutates a grading, only row ``label`` changes.

    Raises:
        FrozenIndexError: If ``label`` is not exchangeable.

    """
    _require_exchangeable(b, label)
    row = [-value for value in grading[label]]
    for other, weight in negative_part(b, label).items():
        row = [value + weight * extra for value, extra in zip(row, grading[other])]
    mutated = dict(grading)
    mutated[label] = tuple(row)
    return mutated


@dataclasses.dataclass(frozen=True, eq=False)
class Seed:  # pylint: disable=too-many-instance-attributes
    """A graded quantum seed.

    Args:
        r (SkewExpMatrix): Quasi-commutation matrix, its label order is the seed's label order.
        b (ExchangeMatrix): Exchange matrix carrying the exchangeable labels.
        grading (dict): Label to degree tuple, missing labels get degree zero.
        invertible (frozenset): Frozen labels whose inverses belong to the algebra.
        frame (dict): Label to cluster variable in the initial torus, generators when omitted.
        ambient_r (SkewExpMatrix): Quasi-commutation matrix of the initial torus.
        ambient_grading (dict): Grading of the initial seed, used to compute degrees.
        names (dict): Optional display names of the initial variables.

    """

    r: SkewExpMatrix
    b: ExchangeMatrix
    grading: dict = None
    invertible: frozenset = frozenset()
    frame: dict = None
    ambient_r: SkewExpMatrix = None
    ambient_grading: dict = None
    names: dict = None

    def __post_init__(self):
        labels = self.r.labels
        if set(self.b.labels) != set(labels):
            raise LabelError(f'Exchange matrix labels {self.b.labels} differ from {labels}')
        if self.b.labels != labels:
            object.__setattr__(self, 'b', self.b.restrict(labels, self.b.exchangeable))
        object.__setattr__(self, 'invertible', frozenset(self.invertible))
        unknown = self.invertible - set(labels)
        if unknown:
            raise LabelError(f'Invertible labels {sorted(map(str, unknown))} are not part of the seed')
        object.__setattr__(self, 'grading', _normalize_grading(labels, self.grading))
        ambient_r = self.ambient_r if self.ambient_r is not None else self.r
        object.__setattr__(self, 'ambient_r', ambient_r)
        frame = self.frame if self.frame is not None else {label: TorusElement.generator(self.r.params, label)
                                                           for label in labels}
        missing = set(labels) - set(frame)
        if missing:
            raise LabelError(f'Frame has no value for {sorted(map(str, missing))}')
        object.__setattr__(self, 'frame', {label: frame[label] for label in labels})
        ambient_grading = self.ambient_grading if self.ambient_grading is not None else self.grading
        object.__setattr__(self, 'ambient_grading', _normalize_grading(ambient_r.labels, ambient_grading))
        object.__setattr__(self, 'names', dict(self.names or {}))

    @classmethod
    def initial(cls, labels, exchangeable=(), invertible=(), r_entries=None,  # pylint: disable=too-many-arguments
                b_entries=None, grading=None, params=None, names=None):
        """Builds a rooted seed whose cluster is the generators of its own torus."""
        params = params or ParamSet()
        r = SkewExpMatrix(params, labels, r_entries)
        b = ExchangeMatrix(labels, exchangeable, b_entries)
        return cls(r=r, b=b, grading=grading, invertible=invertible, names=names)

    @property
    def params(self):
        """The parameter set of the seed."""
        return self.r.params

    @property
    def labels(self):
        """The ordered labels."""
        return self.r.labels

    @property
    def exchangeable(self):
        """The mutable labels."""
        return self.b.exchangeable

    @property
    def frozen(self):
        """Labels that are not exchangeable."""
        return frozenset(self.labels) - self.exchangeable

    @property
    def rank(self):
        """Number of cluster variables."""
        return len(self.labels)

    @property
    def grading_rank(self):
        """Length of the degree vectors."""
        return len(next(iter(self.grading.values()))) if self.grading else 0

    @property
    def is_rooted(self):
        """True when the cluster is the set of generators of the seed's own torus."""
        return self.ambient_r == self.r and all(value == TorusElement.generator(self.params, label)
                                                for label, value in self.frame.items())

    def cluster(self):
        """Label to cluster variable."""
        return dict(self.frame)

    def exchangeable_cluster(self):
        """Label to cluster variable, exchangeable labels only."""
        return {label: value for label, value in self.frame.items() if label in self.exchangeable}

    def frame_monomial(self, exponents):
        """The value of the toric frame at a nonnegative exponent vector."""
        if any(value < 0 for _, value in exponents.items()):
            raise NotLeftDivisible('Frame values are only expanded at nonnegative exponent vectors')
        result = TorusElement.one(self.params)
        for label in self.labels:
            for _ in range(exponents.get(label)):
                result = torus_mul(self.ambient_r, result, self.frame[label])
        return result.scale(s_norm(self.r, exponents))

    def degree(self, element):
        """Degree of a homogeneous element of the initial torus, None if it is not homogeneous."""
        degrees = set()
        for exponents, _ in element.items():
            degree = [0] * len(next(iter(self.ambient_grading.values()), ()))
            for label, value in exponents.items():
                degree = [total + value * entry for total, entry in zip(degree, self.ambient_grading[label])]
            degrees.add(tuple(degree))
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else tuple(0 for _ in range(self.grading_rank))

    def render(self, label):
        """Cluster variable at ``label`` as ordered monomials in the initial variables."""
        return render_element(self.ambient_r, self.frame[label], self.names)

    @property
    def canonical_key(self):
        """Hashable form used for equality and deduplication."""
        return (self.r.canonical_key,
                self.b.canonical_key,
                tuple(self.grading[label] for label in self.labels),
                self.invertible,
                tuple(self.frame[label] for label in self.labels),
                self.ambient_r.canonical_key)

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self):
        return hash(self.canonical_key)

    def __repr__(self):
        return f'Seed(labels={self.labels!r}, exchangeable={self.b.ordered_exchangeable()!r})'


def _normalize_grading(labels, grading):
    grading = {label: tuple(row) for label, row in dict(grading or {}).items()}
    unknown = set(grading) - set(labels)
    if unknown:
        raise LabelError(f'Grading rows {sorted(map(str, unknown))} are not part of the seed')
    rank = len(next(iter(grading.values()), ()))
    if any(len(row) != rank for row in grading.values()):
        raise ValueError('Grading rows should all have the same length')
    return {label: grading.get(label, (0,) * rank) for label in labels}


@dataclasses.dataclass
class ValidationReport:
    """Outcome of seed validation, one entry per check."""

    checks: list = dataclasses.field(default_factory=list)
    failures: list = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        """True when no check failed."""
        return not self.failures

    def record(self, check, problems):
        """Registers a check and its problem descriptions."""
        self.checks.append(check)
        self.failures.extend((check, problem) for problem in problems)

    def lines(self):
        """Human readable summary."""
        failed = {check for check, _ in self.failures}
        output = [f'{"FAIL" if check in failed else "ok  "} {check}' for check in self.checks]
        output.extend(f'     {check}: {problem}' for check, problem in self.failures)
        return output


def compatibility_matrix(seed):
    """``t_kj = omega_r(b^k, e_j)`` for exchangeable ``k`` and every ``j``."""
    return {(column, label): omega(seed.r, seed.b.column(column), ExponentVector.unit(label))
            for column in seed.b.ordered_exchangeable() for label in seed.labels}


def skew_symmetrizer(b, labels=None, bound=SYMMETRIZER_BOUND):
    """Finds positive integers ``d`` with ``d_i b_ij = -d_j b_ji`` on the given labels.

    Returns:
        dict: Label to symmetrizer entry, or None when there is none within the bound.

    """
    labels = tuple(b.ordered_exchangeable() if labels is None else labels)
    wanted = set(labels)
    ratios = {}
    for start in labels:
        if start in ratios:
            continue
        ratios[start] = Fraction(1)
        pending = [start]
        while pending:
            current = pending.pop()
            for other in b.neighbors(current) & wanted:
                forward, backward = b.get(current, other), b.get(other, current)
                if not forward or not backward or forward * backward > 0:
                    return None
                ratio = ratios[current] * Fraction(forward, -backward)
                if other in ratios:
                    if ratios[other] != ratio:
                        return None
                    continue
                ratios[other] = ratio
                pending.append(other)
    if not ratios:
        return {}
    scale = lcm(*(ratio.denominator for ratio in ratios.values()))
    symmetrizer = {label: int(ratio * scale) for label, ratio in ratios.items()}
    if max(symmetrizer.values()) > bound:
        return None
    return symmetrizer


def _check_index_sets(seed):
    if seed.invertible & seed.exchangeable:
        return [f'invertible labels {sorted(map(str, seed.invertible & seed.exchangeable))} are exchangeable']
    return []


def _check_compatibility(seed):
    problems = []
    for (column, label), value in compatibility_matrix(seed).items():
        if column == label and not any(value.exponents):
            problems.append(f't[{column!r},{label!r}] is trivial')
        elif column != label and any(value.exponents):
            problems.append(f't[{column!r},{label!r}] = {value.render(seed.params)} is not one')
    return problems


def _check_grading(seed):
    problems = []
    for column in seed.b.ordered_exchangeable():
        total = [0] * seed.grading_rank
        for row, value in seed.b.column(column).items():
            total = [entry + value * extra for entry, extra in zip(total, seed.grading[row])]
        if any(total):
            problems.append(f'column {column!r} of the transposed exchange matrix times G is {tuple(total)}')
    return problems


def _check_frame(seed):
    problems = []
    labels = seed.labels
    for position, first in enumerate(labels):
        for second in labels[position + 1:]:
            left = torus_mul(seed.ambient_r, seed.frame[first], seed.frame[second])
            right = torus_mul(seed.ambient_r, seed.frame[second], seed.frame[first])
            factor = seed.r.value(first, second) ** 2
            if left != right.scale(factor):
                problems.append(f'variables {first!r} and {second!r} do not quasi-commute as r prescribes')
    return problems


def _check_homogeneity(seed):
    problems = []
    for label, value in seed.frame.items():
        degree = seed.degree(value)
        if degree != seed.grading[label]:
            problems.append(f'variable {label!r} has degree {degree} instead of {seed.grading[label]}')
    return problems


def validate_seed(seed, symmetrizer_bound=SYMMETRIZER_BOUND):
    """Runs every validity check on a seed.

    Returns:
        ValidationReport: The report, ``passed`` is true when every check holds.

    """
    report = ValidationReport()
    report.record('index_sets', _check_index_sets(seed))
    report.record('r_matrix', [f'r[{first!r},{second!r}]: {reason}'
                               for first, second, reason in seed.r.violations])
    report.record('sign_skew_symmetric', [f'b[{row!r},{column!r}] = {seed.b.get(row, column)} against '
                                          f'b[{column!r},{row!r}] = {seed.b.get(column, row)}'
                                          for row, column in seed.b.sign_skew_violations()])
    report.record('compatibility', _check_compatibility(seed))
    report.record('skew_symmetrizable', [] if skew_symmetrizer(seed.b, bound=symmetrizer_bound) is not None
                  else ['no positive diagonal symmetrizer within the bound'])
    report.record('grading', _check_grading(seed))
    report.record('frame_quasi_commutation', _check_frame(seed))
    report.record('homogeneity', _check_homogeneity(seed))
    LOGGER.debug('Validated %r, %s failures', seed, len(report.failures))
    return report


def exchange_product(seed, label):
    """``x_k`` times its mutation: the sum of the two exchange monomials, left multiplied by ``x_k``."""
    generator = ExponentVector.unit(label)
    total = TorusElement.zero(seed.params)
    for part in (positive_part(seed.b, label), negative_part(seed.b, label)):
        total = total + seed.frame_monomial(part).scale(omega(seed.r, generator, part))
    return total


def mutate_seed(seed, label, verify_exchange=VERIFY_EXCHANGE, iteration_cap=DIVISION_ITERATION_CAP):
    """Mutates a seed at an exchangeable label.

    Raises:
        FrozenIndexError: If ``label`` is not exchangeable.
        InternalInconsistency: If the new variable is not a Laurent polynomial or fails the multiply-back check.

    """
    _require_exchangeable(seed.b, label)
    product = exchange_product(seed, label)
    try:
        variable = torus_left_divide(seed.ambient_r, seed.frame[label], product, iteration_cap)
    except NotLeftDivisible as error:
        raise InternalInconsistency(f'Exchange relation at {label!r} is not divisible: {error}') from None
    if verify_exchange and torus_mul(seed.ambient_r, seed.frame[label], variable) != product:
        raise InternalInconsistency(f'Multiply-back check failed for the exchange relation at {label!r}')
    frame = seed.cluster()
    frame[label] = variable
    LOGGER.debug('Mutated %r at %r, new variable has %s terms', seed, label, len(variable))
    return dataclasses.replace(seed,
                               r=mutate_r(seed.r, seed.b, label),
                               b=mutate_exchange(seed.b, label),
                               grading=mutate_grading(seed.grading, seed.b, label),
                               frame=frame)


def mutate_along(seed, sequence, **kwargs):
    """Mutates along a sequence of labels, left to right."""
    for label in sequence:
        seed = mutate_seed(seed, label, **kwargs)
    return seed


def enumerate_admissible(seed, depth):
    """Yields every sequence of exchangeable labels up to ``depth``, shortest first."""
    exchangeable = seed.b.ordered_exchangeable()
    for length in range(depth + 1):
        yield from itertools.product(exchangeable, repeat=length)


def classical(seed):
    """The same rooted seed over trivial quasi-commutation."""
    if not seed.is_rooted:
        raise PreconditionError('Only rooted seeds have a classical counterpart')
    trivial = SkewExpMatrix(seed.params, seed.labels)
    return dataclasses.replace(seed, r=trivial, ambient_r=trivial)


@dataclasses.dataclass
class ClosureReport:
    """Outcome of a mutation closure search."""

    seeds: int
    variables: frozenset
    complete: bool


def mutation_closure(seed, max_seeds=MAX_SEEDS, max_workers=MAX_WORKERS, **kwargs):
    """Breadth first search over all seeds reachable by mutation.

    Returns:
        ClosureReport: The number of distinct seeds, the distinct cluster variables and whether the
            search finished before reaching ``max_seeds``.

    """
    visited = {seed}
    variables = set(seed.frame.values())
    queue = deque([seed])
    complete = True
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        while queue:
            current = queue.popleft()
            futures = [executor.submit(mutate_seed, current, label, **kwargs)
                       for label in current.b.ordered_exchangeable()]
            for future in futures:
                mutated = future.result()
                if mutated in visited:
                    continue
                if len(visited) >= max_seeds:
                    complete = False
                    break
                visited.add(mutated)
                variables.update(mutated.frame.values())
                queue.append(mutated)
            if not complete:
                LOGGER.warning('Mutation closure stopped at %s seeds', max_seeds)
                break
    return ClosureReport(seeds=len(visited), variables=frozenset(variables), complete=complete)


def restrict(seed, labels, exchangeable=None, invertible=None):
    """The rooted seed on a subset of the labels.

    Exchangeable and invertible labels default to the kept labels that are
    exchangeable, respectively invertible, in ``seed``.

    Raises:
        PreconditionError: If the seed is not rooted or the subsets do not fit.

    """
    if not seed.is_rooted:
        raise PreconditionError('Only rooted seeds can be restricted')
    kept = [label for label in seed.labels if label in set(labels)]
    missing = set(labels) - set(seed.labels)
    if missing:
        raise LabelError(f'Labels {sorted(map(str, missing))} are not part of the seed')
    exchangeable = seed.exchangeable & set(kept) if exchangeable is None else frozenset(exchangeable)
    invertible = seed.invertible & set(kept) if invertible is None else frozenset(invertible)
    if not exchangeable <= set(kept) or not invertible <= set(kept):
        raise PreconditionError('Exchangeable and invertible labels should be among the kept labels')
    return Seed(r=seed.r.restrict(kept),
                b=seed.b.restrict(kept, exchangeable),
                grading={label: seed.grading[label] for label in kept},
                invertible=invertible,
                names={label: name for label, name in seed.names.items() if label in set(kept)})
