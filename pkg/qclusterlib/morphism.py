#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: morphism.py
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
Rooted cluster morphisms between rooted seeds.

A morphism sends every initial cluster variable of its source either to an
initial cluster variable of its target or to a scalar. Structural conditions
are checked exactly, commutation with mutation is checked along every
biadmissible sequence up to a bounded depth.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import concurrent.futures
import dataclasses
import logging

from .configuration import CM3_DEPTH, MAX_WORKERS, DIVISION_ITERATION_CAP
from .qclusterlibexceptions import NotDefined, PreconditionError, StructuralMismatch
from .seed import mutate_seed, restrict
from .torus import (CoeffPoly,
                    ExponentVector,
                    ScalarMonomial,
                    TorusElement,
                    s_norm,
                    torus_mul)

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.morphism')
LOGGER.addHandler(logging.NullHandler())


class _Infinity:  # pylint: disable=too-few-public-methods
    """Index image of the variables sent to scalars."""

    def __repr__(self):
        return 'INFINITY'


INFINITY = _Infinity()


@dataclasses.dataclass(frozen=True, eq=False)
class MorphismSpec:
    """An assignment of the initial variables of ``source`` to variables or scalars of ``target``.

    Args:
        source (Seed): The rooted source seed.
        target (Seed): The rooted target seed.
        var_map (dict): Source label to target label, or to a :class:`CoeffPoly` scalar over the target parameters.
        degree_embedding (tuple): Target grading column of each source grading column, None when both
            gradings share one index set.

    """

    source: object
    target: object
    var_map: dict
    degree_embedding: tuple = None

    def __post_init__(self):
        var_map = {label: CoeffPoly.from_monomial(image) if isinstance(image, ScalarMonomial) else image
                   for label, image in dict(self.var_map).items()}
        object.__setattr__(self, 'var_map', var_map)
        if self.degree_embedding is not None:
            object.__setattr__(self, 'degree_embedding', tuple(self.degree_embedding))

    def induced_index_map(self):
        """Source label to target label, ``INFINITY`` for scalar images."""
        return {label: INFINITY if isinstance(image, CoeffPoly) else image for label, image in self.var_map.items()}

    def infinity_fiber(self):
        """Source labels sent to scalars."""
        return frozenset(label for label, image in self.var_map.items() if isinstance(image, CoeffPoly))

    def transport_degree(self, degree):
        """Moves a source degree into the target grading index set."""
        if self.degree_embedding is None:
            return tuple(degree)
        moved = [0] * self.target.grading_rank
        for column, value in zip(self.degree_embedding, degree):
            moved[column] += value
        return tuple(moved)


@dataclasses.dataclass
class VerificationResult:
    """Outcome of a morphism check.

    Failures are ``(check, witness sequence, details)`` triples.
    """

    depth_checked: int = 0
    failures: list = dataclasses.field(default_factory=list)
    sequences_checked: int = 0

    @property
    def passed(self):
        """True when no failure was recorded."""
        return not self.failures

    def merge(self, other):
        """Folds another result into this one."""
        self.depth_checked = max(self.depth_checked, other.depth_checked)
        self.failures.extend(other.failures)
        self.sequences_checked += other.sequences_checked
        return self

    def lines(self):
        """Human readable summary."""
        head = (f'{"PASS" if self.passed else "FAIL"} depth {self.depth_checked}, '
                f'{self.sequences_checked} sequences')
        return [head] + [f'     {check} {list(witness)}: {details}' for check, witness, details in self.failures]


def identity_morphism(seed):
    """The identity of a rooted seed."""
    return MorphismSpec(seed, seed, {label: label for label in seed.labels})


def compose(first, second):
    """The morphism ``second`` after ``first``.

    Raises:
        StructuralMismatch: If the target of ``first`` is not the source of ``second``.

    """
    if first.target != second.source:
        raise StructuralMismatch('Target of the first morphism is not the source of the second')
    var_map = {}
    for label, image in first.var_map.items():
        if isinstance(image, CoeffPoly):
            var_map[label] = _move_scalar(image, first.target.params, second.target.params)
        else:
            var_map[label] = second.var_map[image]
    embedding = None
    if first.degree_embedding is not None or second.degree_embedding is not None:
        inner = first.degree_embedding or tuple(range(first.source.grading_rank))
        outer = second.degree_embedding or tuple(range(second.source.grading_rank))
        embedding = tuple(outer[column] for column in inner)
    return MorphismSpec(first.source, second.target, var_map, embedding)


def _move_scalar(scalar, source_params, target_params):
    return CoeffPoly({source_params.remap(exponents, target_params): value for exponents, value in scalar.items()})


def _check_shape(morphism):
    source, target = morphism.source, morphism.target
    problems = []
    if not source.is_rooted or not target.is_rooted:
        problems.append(('rooted', 'morphisms are defined between rooted seeds'))
    missing = set(source.labels) - set(morphism.var_map)
    if missing:
        problems.append(('CM1', f'labels {sorted(map(str, missing))} have no image'))
    for label, image in morphism.var_map.items():
        if label not in source.labels:
            problems.append(('CM1', f'{label!r} is not a source label'))
        elif isinstance(image, CoeffPoly):
            if image.is_zero:
                problems.append(('CM1', f'{label!r} is sent to zero'))
            if label in source.exchangeable:
                problems.append(('CM2', f'exchangeable {label!r} is sent to a scalar'))
        elif image not in target.labels:
            problems.append(('CM1', f'{label!r} is sent to {image!r} which is not a target label'))
        elif label in source.exchangeable and image not in target.exchangeable:
            problems.append(('CM2', f'exchangeable {label!r} is sent to frozen {image!r}'))
    return problems


def _check_degrees(morphism):
    source, target = morphism.source, morphism.target
    problems = []
    if morphism.degree_embedding is None and source.grading_rank != target.grading_rank \
            and source.labels and target.labels:
        return [('grading', 'source and target gradings use different index sets')]
    for label, image in morphism.var_map.items():
        if label not in source.labels:
            continue
        degree = morphism.transport_degree(source.grading[label])
        if isinstance(image, CoeffPoly):
            if any(degree):
                problems.append(('grading', f'{label!r} is sent to a scalar but has degree {source.grading[label]}'))
        elif image in target.labels and degree != target.grading[image]:
            problems.append(('grading', f'{label!r} has degree {degree}, its image {image!r} has '
                                        f'{target.grading[image]}'))
    return problems


def _check_quasi_commutation(morphism):
    source, target = morphism.source, morphism.target
    index_map = {label: image for label, image in morphism.induced_index_map().items()
                 if image is not INFINITY and label in source.labels and image in target.labels}
    labels = [label for label in source.labels if label in index_map]
    problems = []
    for position, first in enumerate(labels):
        for second in labels[position + 1:]:
            try:
                expected = source.params.remap(source.r.exponent(first, second), target.params)
            except StructuralMismatch as error:
                return [('quasi_commutation', str(error))]
            if target.r.exponent(index_map[first], index_map[second]) != expected:
                problems.append(('quasi_commutation', f'r[{first!r},{second!r}] differs from the target entry '
                                                      f'r[{index_map[first]!r},{index_map[second]!r}]'))
    return problems


def _check_fiber(morphism):
    source = morphism.source
    problems = []
    for label in morphism.infinity_fiber():
        if label not in source.labels:
            continue
        if label in source.exchangeable:
            problems.append(('centrality', f'{label!r} is sent to a scalar but is exchangeable'))
        if not source.r.is_central(label):
            problems.append(('centrality', f'{label!r} is sent to a scalar but is not r-central'))
    return problems


def check_structural(morphism):
    """Checks everything about a morphism that does not involve mutation.

    Returns:
        VerificationResult: Failures are tagged with the check that found them.

    """
    result = VerificationResult()
    for check in (_check_shape, _check_degrees, _check_quasi_commutation, _check_fiber):
        result.failures.extend((name, (), details) for name, details in check(morphism))
    return result


def _scalar_power(scalar, power, label, params):
    if power >= 0:
        result = CoeffPoly.constant(1, params)
        for _ in range(power):
            result = result * scalar
        return result
    if not scalar.is_monomial or not scalar.as_monomial().is_unit:
        raise NotDefined(f'Negative power of {label!r} whose image {scalar!r} is not invertible')
    return CoeffPoly.from_monomial(scalar.as_monomial() ** power)


def apply_hom(morphism, element):
    """Extends a morphism to an algebra map on the initial torus of its source.

    Raises:
        NotDefined: For a negative power of a variable sent to a non-invertible scalar.

    """
    source, target = morphism.source, morphism.target
    result = TorusElement.zero(target.params)
    for exponents, coefficient in element.items():
        scalar = _move_scalar(coefficient * s_norm(source.r, exponents), source.params, target.params)
        factor = TorusElement.one(target.params)
        for label in source.labels:
            power = exponents.get(label)
            if not power:
                continue
            value = morphism.var_map[label]
            if isinstance(value, CoeffPoly):
                scalar = scalar * _scalar_power(value, power, label, target.params)
            else:
                factor = torus_mul(target.ambient_r, factor,
                                   TorusElement.monomial(target.params, ExponentVector.unit(value, power)))
        result = result + factor.scale(scalar)
    return result


def _mismatches(morphism, source, target, sequence):
    problems = []
    for label, image in morphism.var_map.items():
        try:
            mapped = apply_hom(morphism, source.frame[label])
        except NotDefined as error:
            problems.append(('CM3', sequence, f'image of {label!r} is not defined: {error}'))
            continue
        expected = (TorusElement.monomial(target.params, ExponentVector(), image) if isinstance(image, CoeffPoly)
                    else target.frame[image])
        if mapped != expected:
            problems.append(('CM3', sequence, f'image of the variable at {label!r} differs from the target '
                                              f'variable at {image!r}'))
    return problems


def biadmissible_steps(morphism, source, target):
    """Source labels whose current variable is sent to a current exchangeable target variable.

    Returns:
        list: ``(source label, target label)`` pairs in source label order.

    """
    exchangeable_images = {value: label for label, value in target.exchangeable_cluster().items()}
    steps = []
    for label in source.b.ordered_exchangeable():
        image = morphism.var_map.get(label)
        if image is None or isinstance(image, CoeffPoly):
            continue
        try:
            mapped = apply_hom(morphism, source.frame[label])
        except NotDefined:
            continue
        if mapped in exchangeable_images:
            steps.append((label, exchangeable_images[mapped]))
    return steps


def _explore(morphism, source, target, sequence, depth, options):
    result = VerificationResult(depth_checked=len(sequence), sequences_checked=1)
    result.failures.extend(_mismatches(morphism, source, target, sequence))
    if result.failures or len(sequence) >= depth:
        return result
    for label, image in biadmissible_steps(morphism, source, target):
        mutated_source = mutate_seed(source, label, **options)
        mutated_target = mutate_seed(target, image, **options)
        result.merge(_explore(morphism, mutated_source, mutated_target, sequence + (label,), depth, options))
    return result


def verify_cm3(morphism, depth=CM3_DEPTH, max_workers=MAX_WORKERS, iteration_cap=DIVISION_ITERATION_CAP):
    """Checks that the morphism commutes with mutation along biadmissible sequences up to ``depth``.

    The branches below the first step are explored in parallel.

    Returns:
        VerificationResult: ``depth_checked`` is the longest sequence explored.

    """
    options = {'iteration_cap': iteration_cap}
    source, target = morphism.source, morphism.target
    result = VerificationResult(sequences_checked=1)
    result.failures.extend(_mismatches(morphism, source, target, ()))
    if result.failures or not depth:
        return result
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(_explore, morphism, mutate_seed(source, label, **options),
                                   mutate_seed(target, image, **options), (label,), depth, options)
                   for label, image in biadmissible_steps(morphism, source, target)]
        for future in futures:
            result.merge(future.result())
    LOGGER.debug('Checked %s biadmissible sequences up to depth %s', result.sequences_checked, depth)
    return result


def verify_morphism(morphism, depth=CM3_DEPTH, **kwargs):
    """Structural checks followed by the bounded mutation check when they pass."""
    result = check_structural(morphism)
    if not result.passed:
        return result
    return verify_cm3(morphism, depth, **kwargs)


def specialize(seed, labels):
    """Sets an r-central set of degree zero frozen variables to one.

    Returns:
        tuple: The seed on the remaining labels and the surjective morphism onto it.

    Raises:
        PreconditionError: If a label is exchangeable, not r-central or of nonzero degree.

    """
    labels = frozenset(labels)
    if not labels:
        return seed, identity_morphism(seed)
    for label in labels:
        if label not in seed.labels:
            raise PreconditionError(f'{label!r} is not a label of the seed')
        if label in seed.exchangeable:
            raise PreconditionError(f'{label!r} is exchangeable')
        if not seed.r.is_central(label):
            raise PreconditionError(f'{label!r} is not r-central')
        if any(seed.grading[label]):
            raise PreconditionError(f'{label!r} has degree {seed.grading[label]}')
    kept = [label for label in seed.labels if label not in labels]
    quotient = restrict(seed, kept, invertible=seed.invertible - labels)
    var_map = {label: label for label in kept}
    var_map.update({label: CoeffPoly.constant(1, seed.params) for label in labels})
    return quotient, MorphismSpec(seed, quotient, var_map)
