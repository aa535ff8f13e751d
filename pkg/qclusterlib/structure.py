#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: structure.py
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
Structural operations on seeds.

Coproducts, connected components, full subseeds and the filtration of a
possibly infinite seed by finite full subseeds. Infinite seeds are only ever
described through a :class:`SeedGenerator`; finite restrictions of it are
materialized on demand.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import concurrent.futures
import dataclasses
import itertools
import logging
from collections.abc import Callable, Sized

from .configuration import MAX_WORKERS
from .morphism import MorphismSpec, compose, identity_morphism
from .qclusterlibexceptions import PreconditionError, LabelError
from .seed import (ExchangeMatrix,
                   Seed,
                   enumerate_admissible,
                   mutate_along,
                   validate_seed)
from .torus import ParamSet, ScalarMonomial, SkewExpMatrix

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.structure')
LOGGER.addHandler(logging.NullHandler())


@dataclasses.dataclass
class CheckResult:
    """Outcome of a structural check.

    Failures are ``(check, witness, details)`` triples, ``flags`` holds
    named properties that are reported without failing the check.
    """

    failures: list = dataclasses.field(default_factory=list)
    flags: dict = dataclasses.field(default_factory=dict)
    checked: int = 0

    @property
    def passed(self):
        """True when no failure was recorded."""
        return not self.failures

    def merge(self, other):
        """Folds another result into this one."""
        self.failures.extend(other.failures)
        self.checked += other.checked
        for name, value in other.flags.items():
            self.flags[name] = self.flags.get(name, True) and value
        return self

    def lines(self):
        """Human readable summary."""
        output = [f'{"PASS" if self.passed else "FAIL"} {self.checked} checks']
        output.extend(f'     {name}: {value}' for name, value in sorted(self.flags.items()))
        output.extend(f'     {check} {witness}: {details}' for check, witness, details in self.failures)
        return output


def _block_labels(seeds):
    labels = [label for seed in seeds for label in seed.labels]
    if len(set(labels)) == len(labels):
        return [{label: label for label in seed.labels} for seed in seeds]
    return [{label: (block, label) for label in seed.labels} for block, seed in enumerate(seeds)]


def coproduct(seeds, shared_grading=False):
    """The disjoint union of rooted seeds and its canonical inclusions.

    Labels are tagged with their block index when two seeds share a label.
    Gradings are placed on the disjoint union of the grading index sets unless
    ``shared_grading`` is set, in which case every seed must use the same one.

    Returns:
        tuple: The coproduct seed and the list of inclusions, one per block.

    """
    seeds = list(seeds)
    if len(seeds) == 1:
        return seeds[0], [identity_morphism(seeds[0])]
    if any(not seed.is_rooted for seed in seeds):
        raise PreconditionError('Coproducts are taken of rooted seeds')
    params = ParamSet()
    if seeds:
        params = seeds[0].params
        for seed in seeds[1:]:
            params = params.merge(seed.params)
    if shared_grading and len({seed.grading_rank for seed in seeds}) > 1:
        raise PreconditionError('Seeds with a shared grading should use the same grading index set')
    mappings = _block_labels(seeds)
    labels, exchangeable, invertible = [], set(), set()
    r_entries, b_entries, grading, names, embeddings = {}, {}, {}, {}, []
    offset = 0
    total_rank = 0 if shared_grading else sum(seed.grading_rank for seed in seeds)
    for seed, mapping in zip(seeds, mappings):
        relabelled = seed.r.relabel(mapping, params)
        labels.extend(relabelled.labels)
        r_entries.update(relabelled.entries())
        b_entries.update(seed.b.relabel(mapping).entries())
        exchangeable.update(mapping[label] for label in seed.exchangeable)
        invertible.update(mapping[label] for label in seed.invertible)
        names.update({mapping[label]: name for label, name in seed.names.items()})
        if shared_grading:
            grading.update({mapping[label]: row for label, row in seed.grading.items()})
            embeddings.append(None)
            continue
        for label, row in seed.grading.items():
            padded = [0] * total_rank
            padded[offset:offset + len(row)] = row
            grading[mapping[label]] = tuple(padded)
        embeddings.append(tuple(range(offset, offset + seed.grading_rank)))
        offset += seed.grading_rank
    result = Seed(r=SkewExpMatrix(params, labels, r_entries),
                  b=ExchangeMatrix(labels, exchangeable, b_entries),
                  grading=grading,
                  invertible=invertible,
                  names=names)
    inclusions = [MorphismSpec(seed, result, mapping, embedding)
                  for seed, mapping, embedding in zip(seeds, mappings, embeddings)]
    LOGGER.debug('Built a coproduct of %s seeds with %s labels', len(seeds), len(labels))
    return result, inclusions


def components(seed):
    """Connected components of the support graph of the exchange matrix, in label order."""
    remaining = list(seed.labels)
    seen = set()
    parts = []
    for start in remaining:
        if start in seen:
            continue
        part = {start}
        pending = [start]
        while pending:
            for other in seed.b.neighbors(pending.pop()):
                if other not in part:
                    part.add(other)
                    pending.append(other)
        seen |= part
        parts.append(frozenset(part))
    return parts


def is_connected(seed):
    """True when the seed has at most one connected component."""
    return len(components(seed)) <= 1


def is_full_subseed(sub, sup):
    """Checks that ``sub`` is a full subseed of ``sup``.

    The flag ``connected_only_by_coefficients`` tells whether no exchangeable
    label of ``sub`` has an entry towards a label outside of it.

    Returns:
        CheckResult: The outcome, with the flag set.

    """
    result = CheckResult(checked=1)
    labels = set(sub.labels)

    def fail(check, details):
        result.failures.append((check, (), details))

    if not labels <= set(sup.labels):
        fail('labels', f'{sorted(map(str, labels - set(sup.labels)))} are not labels of the larger seed')
        result.flags['connected_only_by_coefficients'] = False
        return result
    if not sub.exchangeable <= sup.exchangeable:
        fail('exchangeable', f'{sorted(map(str, sub.exchangeable - sup.exchangeable))} are not exchangeable above')
    if not sub.invertible <= sup.invertible:
        fail('invertible', f'{sorted(map(str, sub.invertible - sup.invertible))} are not invertible above')
    if sub.params != sup.params:
        fail('params', f'parameters {sub.params.names} differ from {sup.params.names}')
        result.flags['connected_only_by_coefficients'] = False
        return result
    for column in sub.exchangeable:
        for row in sub.labels:
            for first, second in ((row, column), (column, row)):
                if sub.b.get(first, second) != sup.b.get(first, second):
                    fail('exchange_matrix', f'entry ({first!r}, {second!r}) differs')
    for position, first in enumerate(sub.labels):
        for second in sub.labels[position + 1:]:
            if sub.r.exponent(first, second) != sup.r.exponent(first, second):
                fail('r_matrix', f'entry ({first!r}, {second!r}) differs')
    ambient = set(sub.ambient_r.labels)
    if not ambient <= set(sup.ambient_r.labels) or sub.ambient_r != sup.ambient_r.restrict(ambient):
        fail('frame', 'initial tori differ')
    else:
        for label in sub.labels:
            if sub.frame[label] != sup.frame[label]:
                fail('frame', f'variables at {label!r} differ')
    if sub.grading_rank != sup.grading_rank and sub.labels:
        fail('grading', 'grading index sets differ')
    else:
        for label in sub.labels:
            if sub.grading[label] != sup.grading[label]:
                fail('grading', f'degree of {label!r} differs')
    outside = [(label, other) for label in sub.exchangeable for other in sup.b.neighbors(label)
               if other not in labels]
    result.flags['connected_only_by_coefficients'] = not outside
    return result


def is_full_subseed_by_coefficients(sub, sup):
    """Full subseed check that also fails when the seeds are connected by exchangeable labels."""
    result = is_full_subseed(sub, sup)
    if not result.flags['connected_only_by_coefficients']:
        result.failures.append(('connected_only_by_coefficients', (), 'an exchangeable label has an entry '
                                                                      'towards a label outside the subseed'))
    return result


def check_mutation_commutes(sub, sup, sequence, **kwargs):
    """Mutates both seeds along ``sequence`` and checks the subseed relation survives.

    Raises:
        PreconditionError: If ``sub`` is not a full subseed connected only by coefficients, or the
            sequence is not admissible in ``sub``.

    """
    sequence = tuple(sequence)
    if not is_full_subseed_by_coefficients(sub, sup).passed:
        raise PreconditionError('The smaller seed is not a full subseed connected only by coefficients')
    if any(label not in sub.exchangeable for label in sequence):
        raise PreconditionError(f'Sequence {sequence} is not admissible in the smaller seed')
    result = is_full_subseed_by_coefficients(mutate_along(sub, sequence, **kwargs),
                                             mutate_along(sup, sequence, **kwargs))
    result.failures = [(check, sequence, details) for check, _, details in result.failures]
    return result


def check_mutations_commute(sub, sup, depth, max_workers=MAX_WORKERS, **kwargs):
    """Runs :func:`check_mutation_commutes` on every admissible sequence up to ``depth``."""
    result = CheckResult()
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(check_mutation_commutes, sub, sup, sequence, **kwargs)
                   for sequence in enumerate_admissible(sub, depth)]
        for future in futures:
            result.merge(future.result())
    return result


@dataclasses.dataclass(frozen=True)
class SeedGenerator:  # pylint: disable=too-many-instance-attributes
    """A lazily described seed with possibly infinitely many labels.

    Args:
        labels (Callable): Returns an iterator over every label.
        neighbors (Callable): Label to the finitely many ``(other, b[label, other])`` nonzero entries of its row.
        r_of (Callable): Pair of labels to the scalar monomial ``r[first, second]``.
        g_of (Callable): Label to its degree tuple.
        ex_test (Callable): True for exchangeable labels.
        inv_test (Callable): True for invertible labels.
        params (ParamSet): Parameters of the ``r`` entries.
        names_of (Callable): Optional display name of a label.
        order_key (Callable): Sort key fixing the label order of materialized seeds.

    """

    labels: Callable
    neighbors: Callable
    r_of: Callable
    g_of: Callable
    ex_test: Callable
    inv_test: Callable = lambda label: False
    params: ParamSet = ParamSet()
    names_of: Callable = None
    order_key: Callable = None

    def neighbor_labels(self, label):
        """Labels sharing a nonzero exchange entry with ``label``."""
        return frozenset(other for other, value in self.neighbors(label) if value and other != label)

    def local_finiteness_violations(self, labels):
        """Labels whose row is not a finite collection or whose column support differs from the row support.

        Returns:
            list: ``(label, description)`` pairs, empty when the rows of ``labels`` are locally finite.

        """
        problems = []
        for label in labels:
            row = self.neighbors(label)
            if not isinstance(row, Sized):
                problems.append((label, 'row is not a finite collection'))
                continue
            for other, value in row:
                if value and other != label and label not in self.neighbor_labels(other):
                    problems.append((label, f'b[{label!r},{other!r}] is nonzero but row {other!r} misses {label!r}'))
        return problems

    def materialize(self, labels, exchangeable=None, invertible=None):
        """The rooted finite seed on ``labels``.

        Exchangeable and invertible labels default to the kept labels passing the tests.
        """
        ordered = sorted(set(labels), key=self.order_key)
        wanted = set(ordered)
        if exchangeable is None:
            exchangeable = {label for label in ordered if self.ex_test(label)}
        if invertible is None:
            invertible = {label for label in ordered if self.inv_test(label)}
        b_entries = {(label, other): value for label in ordered for other, value in self.neighbors(label)
                     if other in wanted}
        r_entries = {}
        for position, first in enumerate(ordered):
            for second in ordered[position + 1:]:
                value = self.r_of(first, second)
                if any(value.exponents):
                    r_entries[(first, second)] = value
        names = {label: self.names_of(label) for label in ordered} if self.names_of else None
        return Seed(r=SkewExpMatrix(self.params, ordered, r_entries),
                    b=ExchangeMatrix(ordered, exchangeable, b_entries),
                    grading={label: tuple(self.g_of(label)) for label in ordered},
                    invertible=invertible,
                    names=names)


def seed_generator_from_seed(seed):
    """A finite rooted seed seen as a generator."""
    if not seed.is_rooted:
        raise PreconditionError('Only rooted seeds can be turned into generators')
    rows = {label: [] for label in seed.labels}
    for (row, column), value in seed.b.entries().items():
        rows[row].append((column, value))
    order = {label: position for position, label in enumerate(seed.labels)}

    def check(label):
        if label not in order:
            raise LabelError(f'{label!r} is not a label of the seed')
        return label

    return SeedGenerator(labels=lambda: iter(seed.labels),
                         neighbors=lambda label: tuple(rows[check(label)]),
                         r_of=lambda first, second: seed.r.value(check(first), check(second)),
                         g_of=lambda label: seed.grading[check(label)],
                         ex_test=lambda label: check(label) in seed.exchangeable,
                         inv_test=lambda label: check(label) in seed.invertible,
                         params=seed.params,
                         names_of=(lambda label: seed.names.get(label, f'x{label}')) if seed.names else None,
                         order_key=order.__getitem__)


def path_generator(params=None):
    """The doubly infinite path ``... -> -1 -> 0 -> 1 -> ...`` with the vertex 0 frozen.

    ``r[i, j]`` is ``q`` when ``j - i`` is odd and positive, ``q^-1`` when odd and negative
    and one otherwise, which makes every finite interval around 0 a valid graded seed
    with every variable of degree one.
    """
    params = params or ParamSet()
    unit = params.exponents(**{params.names[0]: 2})

    def labels():
        yield 0
        for step in itertools.count(1):
            yield step
            yield -step

    def r_of(first, second):
        difference = second - first
        if difference % 2 == 0:
            return ScalarMonomial.one(params)
        return ScalarMonomial(1, unit if difference > 0 else tuple(-value for value in unit))

    return SeedGenerator(labels=labels,
                         neighbors=lambda label: ((label + 1, 1), (label - 1, -1)),
                         r_of=r_of,
                         g_of=lambda label: (1,),
                         ex_test=lambda label: label != 0,
                         params=params)


@dataclasses.dataclass
class Filtration:
    """A chain of finite full subseeds and the inclusions between consecutive ones."""

    stages: list
    inclusions: list
    generator: SeedGenerator = None

    def inclusion(self, first, second):
        """The inclusion of stage ``first`` into stage ``second``."""
        if first > second:
            raise PreconditionError(f'No inclusion from stage {first} into the smaller stage {second}')
        morphism = identity_morphism(self.stages[first])
        for index in range(first, second):
            morphism = compose(morphism, self.inclusions[index])
        return morphism

    def check_invariants(self):
        """Monotonicity, full subseeds connected only by coefficients and the linear system laws."""
        result = CheckResult()
        for index, (smaller, larger) in enumerate(zip(self.stages, self.stages[1:])):
            result.checked += 1
            for name, low, high in (('labels', set(smaller.labels), set(larger.labels)),
                                    ('exchangeable', smaller.exchangeable, larger.exchangeable),
                                    ('invertible', smaller.invertible, larger.invertible)):
                if not low <= high:
                    result.failures.append(('monotonicity', (index,), f'{name} shrink after stage {index}'))
            subseed = is_full_subseed_by_coefficients(smaller, larger)
            result.failures.extend((check, (index,), details) for check, _, details in subseed.failures)
        for first in range(len(self.stages)):
            if self.inclusion(first, first).var_map != identity_morphism(self.stages[first]).var_map:
                result.failures.append(('identity', (first,), 'inclusion of a stage into itself is not the identity'))
            for second in range(first, len(self.stages)):
                for third in range(second, len(self.stages)):
                    result.checked += 1
                    composite = compose(self.inclusion(first, second), self.inclusion(second, third))
                    if composite.var_map != self.inclusion(first, third).var_map:
                        result.failures.append(('composition', (first, second, third),
                                                'inclusions do not compose'))
        return result


def build_filtration(generator, seed_label, stages):
    """Grows nested finite seeds from a frozen label by repeatedly adding neighbors.

    Stage 0 holds ``seed_label`` alone. Stage ``i + 1`` adds every neighbor of
    stage ``i`` and makes exchangeable the exchangeable labels of stage ``i``.

    Raises:
        PreconditionError: If ``seed_label`` is exchangeable or a row met on the way is not locally finite.

    """
    if generator.ex_test(seed_label):
        raise PreconditionError(f'The filtration has to start at a frozen label, {seed_label!r} is exchangeable')
    current = {seed_label}
    exchangeable = set()
    invertible = {seed_label} if generator.inv_test(seed_label) else set()
    seeds = []
    checked = set()
    for _ in range(stages):
        problems = generator.local_finiteness_violations(current - checked)
        if problems:
            raise PreconditionError(f'The generator is not locally finite: {problems}')
        checked |= current
        seeds.append(generator.materialize(current, exchangeable, invertible))
        grown = set(current)
        for label in current:
            grown |= generator.neighbor_labels(label)
        exchangeable = {label for label in current if generator.ex_test(label)}
        invertible = {label for label in current if generator.inv_test(label)}
        current = grown
    inclusions = [MorphismSpec(smaller, larger, {label: label for label in smaller.labels})
                  for smaller, larger in zip(seeds, seeds[1:])]
    LOGGER.debug('Built %s filtration stages of sizes %s', len(seeds), [seed.rank for seed in seeds])
    return Filtration(stages=seeds, inclusions=inclusions, generator=generator)


def _stage_variables(seed, depth, **kwargs):
    variables = {}
    for sequence in enumerate_admissible(seed, depth):
        mutated = mutate_along(seed, sequence, **kwargs)
        variables[sequence] = mutated.frame
    return variables


def _compare_stages(index, smaller, larger, depth, **kwargs):
    result = CheckResult(checked=1)
    report = validate_seed(larger)
    result.failures.extend(('validation', (index + 1,), f'{check}: {details}') for check, details in report.failures)
    subseed = is_full_subseed_by_coefficients(smaller, larger)
    result.failures.extend((check, (index,), details) for check, _, details in subseed.failures)
    if not result.passed:
        return result
    small = _stage_variables(smaller, depth, **kwargs)
    for sequence, frame in small.items():
        result.checked += 1
        mutated = mutate_along(larger, sequence, **kwargs)
        for label, variable in frame.items():
            if mutated.frame[label] != variable:
                result.failures.append(('stabilization', (index,) + sequence,
                                        f'variable at {label!r} changes between stages {index} and {index + 1}'))
    return result


def _compare_union(filtration, depth, **kwargs):
    last = filtration.stages[-1]
    reference = filtration.generator.materialize(last.labels, last.exchangeable, last.invertible)
    union = set()
    for stage in filtration.stages:
        for frame in _stage_variables(stage, depth, **kwargs).values():
            union.update(frame.values())
    expected = {variable for frame in _stage_variables(reference, depth, **kwargs).values()
                for variable in frame.values()}
    result = CheckResult(checked=1)
    if union != expected:
        result.failures.append(('colimit', (len(filtration.stages) - 1,),
                                f'{len(union - expected)} stage variables are not reached on the explored labels '
                                f'and {len(expected - union)} variables there are missed by every stage'))
    return result


def verify_colimit_consistency(filtration, depth, max_workers=MAX_WORKERS, **kwargs):
    """Checks that every variable reached in a stage is reached identically in the next one.

    When the stages agree and the filtration knows its generator, the variables
    reached from all stages together are compared with those reached from the
    generator restricted to the labels of the last stage.

    Witnesses are the stage index followed by the mutation sequence.
    """
    result = CheckResult()
    if filtration.stages:
        report = validate_seed(filtration.stages[0])
        result.failures.extend(('validation', (0,), f'{check}: {details}') for check, details in report.failures)
    pairs = list(enumerate(zip(filtration.stages, filtration.stages[1:])))
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(_compare_stages, index, smaller, larger, depth, **kwargs)
                   for index, (smaller, larger) in pairs]
        for future in futures:
            result.merge(future.result())
    if result.passed and filtration.generator is not None and filtration.stages:
        result.merge(_compare_union(filtration, depth, **kwargs))
    return result

