#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
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
The ``qcluster`` command line tool.

Exit codes are 0 when every check passes, 1 when a check fails and 2 for
usage errors and files that cannot be parsed.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import cmd
import logging
import os
import sys

from graphviz import Digraph

from .configuration import load_configuration
from .grassmannian import build_gr_seed, gr_infinity_generator, CORNER
from .morphism import verify_morphism
from .qclusterlibexceptions import (InvalidSeedFile,
                                    LabelError,
                                    FrozenIndexError,
                                    PreconditionError,
                                    InternalInconsistency)
from .seed import classical, mutate_seed, mutation_closure, validate_seed
from .seedfile import dumps_seed, load_morphism, load_seed, save_seed
from .structure import build_filtration, path_generator, verify_colimit_consistency

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.cli')
LOGGER.addHandler(logging.NullHandler())

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

LOGGING_LEVELS = ('debug', 'info', 'warning', 'error', 'critical')


def setup_logging(level):
    """Installs colored logging at ``level``, plain stream logging when coloredlogs is missing."""
    try:
        import coloredlogs  # pylint: disable=import-outside-toplevel
        coloredlogs.install(level=level.upper())
    except ImportError:
        root = logging.getLogger()
        handler = logging.StreamHandler()
        handler.setLevel(level.upper())
        formatter = logging.Formatter(('%(asctime)s - '
                                       '%(name)s - '
                                       '%(levelname)s - '
                                       '%(message)s'))
        handler.setFormatter(formatter)
        root.addHandler(handler)
        root.setLevel(level.upper())


def parse_label(token):
    """Turns a command line token into a label, ``1,1`` becomes the tuple ``(1, 1)``."""
    token = token.strip()
    if ',' in token:
        return tuple(int(part) for part in token.strip('()').split(','))
    try:
        return int(token)
    except ValueError:
        return token


def _mutation_options(configuration):
    return {'verify_exchange': configuration['verify_exchange'],
            'iteration_cap': configuration['division_iteration_cap']}


def _print_variables(seed):
    for label in seed.labels:
        print(f'{_display_label(label)}: {seed.render(label)}')


def _display_label(label):
    return ','.join(str(part) for part in label) if isinstance(label, tuple) else str(label)


def cmd_check(arguments, configuration):
    """Validates a seed file."""
    seed = load_seed(arguments.seed)
    report = validate_seed(seed, configuration['symmetrizer_bound'])
    for line in report.lines():
        print(line)
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def cmd_mutate(arguments, configuration):
    """Mutates a seed along a sequence and prints its cluster."""
    seed = load_seed(arguments.seed)
    for label in (parse_label(token) for token in arguments.sequence):
        seed = mutate_seed(seed, label, **_mutation_options(configuration))
    _print_variables(seed)
    if arguments.out:
        save_seed(seed, arguments.out)
    return EXIT_PASS


def cmd_closure(arguments, configuration):
    """Explores every seed reachable by mutation."""
    seed = load_seed(arguments.seed)
    if arguments.classical:
        seed = classical(seed)
    report = mutation_closure(seed,
                              max_seeds=arguments.max_seeds or configuration['max_seeds'],
                              max_workers=configuration['max_workers'],
                              **_mutation_options(configuration))
    print(f'seeds: {report.seeds}')
    print(f'variables: {len(report.variables)}')
    print(f'complete: {str(report.complete).lower()}')
    return EXIT_PASS if report.complete else EXIT_CHECK_FAILED


def cmd_morphism(arguments, configuration):
    """Verifies a rooted cluster morphism up to a depth."""
    source, target = load_seed(arguments.source), load_seed(arguments.target)
    morphism = load_morphism(arguments.map, source, target)
    depth = configuration['cm3_depth'] if arguments.depth is None else arguments.depth
    result = verify_morphism(morphism, depth,
                             max_workers=configuration['max_workers'],
                             iteration_cap=configuration['division_iteration_cap'])
    for line in result.lines():
        print(line)
    return EXIT_PASS if result.passed else EXIT_CHECK_FAILED


def _run_filtration(generator, root, arguments, configuration):
    filtration = build_filtration(generator, root, arguments.stages)
    result = filtration.check_invariants()
    result.merge(verify_colimit_consistency(filtration, arguments.depth,
                                            max_workers=configuration['max_workers'],
                                            **_mutation_options(configuration)))
    print('stages: ' + ' '.join(str(seed.rank) for seed in filtration.stages))
    for line in result.lines():
        print(line)
    return EXIT_PASS if result.passed else EXIT_CHECK_FAILED


def cmd_grassmannian(arguments, configuration):
    """Builds the Gr(k, n) seed, or checks the Gr(k, infinity) filtration when ``n`` is ``inf``."""
    if arguments.n == 'inf':
        return _run_filtration(gr_infinity_generator(arguments.k), CORNER, arguments, configuration)
    try:
        n = int(arguments.n)
    except ValueError:
        raise PreconditionError(f'n should be an integer or "inf", got {arguments.n}') from None
    seed = build_gr_seed(arguments.k, n)
    report = validate_seed(seed, configuration['symmetrizer_bound'])
    print(f'Gr({arguments.k},{n}): {seed.rank} variables, {len(seed.exchangeable)} exchangeable')
    for line in report.lines():
        print(line)
    if arguments.out:
        save_seed(seed, arguments.out)
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def cmd_filtration(arguments, configuration):
    """Builds and checks the filtration of a named generator."""
    name = arguments.generator
    if name == 'path':
        generator, root = path_generator(), 0
    elif name.startswith('gr:'):
        generator, root = gr_infinity_generator(int(name[3:])), CORNER
    else:
        raise PreconditionError(f'Unknown generator {name}, expected "path" or "gr:K"')
    if arguments.root is not None:
        root = parse_label(arguments.root)
    return _run_filtration(generator, root, arguments, configuration)


def seed_to_dot(seed):
    """Graphviz rendering of the quiver, frozen vertices boxed, degrees in the vertex labels."""
    quiver = Digraph('seed')
    identifiers = {label: f'v{position}' for position, label in enumerate(seed.labels)}
    for label in seed.labels:
        name = seed.names.get(label, _display_label(label))
        degree = ','.join(str(value) for value in seed.grading[label])
        quiver.node(identifiers[label],
                    label=f'{name}\\n[{degree}]',
                    shape='plain' if label in seed.exchangeable else 'box')
    for row in seed.labels:
        for column in seed.labels:
            value = seed.b.get(row, column)
            if value > 1:
                quiver.edge(identifiers[row], identifiers[column], label=str(value))
            elif value == 1:
                quiver.edge(identifiers[row], identifiers[column])
    return quiver.source


def cmd_dot(arguments, configuration):  # pylint: disable=unused-argument
    """Exports the quiver of a seed in DOT format."""
    text = seed_to_dot(load_seed(arguments.seed))
    if arguments.out:
        with open(arguments.out, 'w') as output_file:
            output_file.write(text)
    else:
        print(text, end='')
    return EXIT_PASS


class SeedShell(cmd.Cmd):
    """Interactive step by step mutation of a seed."""

    intro = 'Type help or ? to list commands.'
    prompt = 'qcluster> '

    def __init__(self, seed, configuration, stdout=None):
        super().__init__(stdout=stdout)
        self._logger = logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')
        self.seed = seed
        self._options = _mutation_options(configuration)
        self._history = []

    def _write(self, text):
        self.stdout.write(f'{text}\n')

    def do_mutate(self, argument):
        """mutate LABEL: mutates the current seed at LABEL."""
        try:
            label = parse_label(argument)
            mutated = mutate_seed(self.seed, label, **self._options)
        except (LabelError, FrozenIndexError, InternalInconsistency) as error:
            self._write(f'error: {error}')
            return
        self._history.append((label, self.seed))
        self.seed = mutated
        self._write(f'{_display_label(label)}: {self.seed.render(label)}')

    def do_show(self, argument):
        """show var [LABEL] | show seed: prints cluster variables or the seed file."""
        words = argument.split()
        if words and words[0] == 'seed':
            self._write(dumps_seed(self.seed).rstrip())
            return
        if not words or words[0] != 'var':
            self._write('usage: show var [LABEL] | show seed')
            return
        labels = [parse_label(words[1])] if len(words) > 1 else list(self.seed.labels)
        for label in labels:
            if label not in self.seed.labels:
                self._write(f'error: unknown label {argument}')
                return
            self._write(f'{_display_label(label)}: {self.seed.render(label)}')

    def do_undo(self, argument):  # pylint: disable=unused-argument
        """undo: reverts the last mutation."""
        if not self._history:
            self._write('nothing to undo')
            return
        label, previous = self._history.pop()
        restored = mutate_seed(self.seed, label, **self._options)
        if restored != previous:
            self._logger.error('Mutating twice at %s did not restore the seed, using the stored one', label)
            restored = previous
        self.seed = restored
        self._write(f'undid mutation at {_display_label(label)}')

    def do_export(self, argument):
        """export [PATH]: writes the current seed file, to the screen without PATH."""
        if argument.strip():
            save_seed(self.seed, argument.strip())
            self._write(f'saved to {argument.strip()}')
        else:
            self._write(dumps_seed(self.seed).rstrip())

    def do_quit(self, argument):  # pylint: disable=unused-argument
        """quit: leaves the shell."""
        return True

    do_EOF = do_quit


def cmd_repl(arguments, configuration):
    """Starts the interactive shell."""
    SeedShell(load_seed(arguments.seed), configuration).cmdloop()
    return EXIT_PASS


def get_arguments(arguments=None):
    """Parses the command line."""
    parser = argparse.ArgumentParser(prog='qcluster',
                                     description='Graded quantum cluster algebra seeds, mutations and morphisms')
    parser.add_argument('--log-level', choices=LOGGING_LEVELS,
                        default=os.environ.get('QCLUSTER_LOGGING_LEVEL', 'info').lower(),
                        help='Logging level, defaults to $QCLUSTER_LOGGING_LEVEL or info')
    parser.add_argument('--config', help='JSON configuration file')
    commands = parser.add_subparsers(dest='command', required=True)

    check = commands.add_parser('check', help='Validate a seed file')
    check.add_argument('seed')
    check.set_defaults(function=cmd_check)

    mutate = commands.add_parser('mutate', help='Mutate a seed along a sequence of labels')
    mutate.add_argument('seed')
    mutate.add_argument('sequence', nargs='*', help='Labels, grid labels written as 1,1')
    mutate.add_argument('--out', help='Write the mutated seed file here')
    mutate.set_defaults(function=cmd_mutate)

    closure = commands.add_parser('closure', help='Explore every seed reachable by mutation')
    closure.add_argument('seed')
    closure.add_argument('--max-seeds', type=int, help='Stop after this many seeds')
    closure.add_argument('--classical', action='store_true', help='Use trivial quasi-commutation')
    closure.set_defaults(function=cmd_closure)

    morphism = commands.add_parser('morphism', help='Verify a rooted cluster morphism')
    morphism.add_argument('source')
    morphism.add_argument('target')
    morphism.add_argument('map')
    morphism.add_argument('--depth', type=int, help='Longest mutation sequence to check')
    morphism.set_defaults(function=cmd_morphism)

    grassmannian = commands.add_parser('grassmannian', help='Build Gr(k,n) or check the Gr(k,inf) filtration')
    grassmannian.add_argument('k', type=int)
    grassmannian.add_argument('n', help='An integer or "inf"')
    grassmannian.add_argument('--out', help='Write the seed file here')
    grassmannian.add_argument('--stages', type=int, default=4)
    grassmannian.add_argument('--depth', type=int, default=2)
    grassmannian.set_defaults(function=cmd_grassmannian)

    filtration = commands.add_parser('filtration', help='Build and check a filtration by finite seeds')
    filtration.add_argument('generator', help='"path" or "gr:K"')
    filtration.add_argument('--root', help='Frozen label to start from')
    filtration.add_argument('--stages', type=int, default=4)
    filtration.add_argument('--depth', type=int, default=2)
    filtration.set_defaults(function=cmd_filtration)

    dot = commands.add_parser('dot', help='Export the quiver of a seed in DOT format')
    dot.add_argument('seed')
    dot.add_argument('--out', help='Write the DOT file here')
    dot.set_defaults(function=cmd_dot)

    repl = commands.add_parser('repl', help='Mutate a seed interactively')
    repl.add_argument('seed')
    repl.set_defaults(function=cmd_repl)
    return parser.parse_args(arguments)


def main(arguments=None):
    """Entry point of the ``qcluster`` console script."""
    arguments = get_arguments(arguments)
    setup_logging(arguments.log_level)
    try:
        configuration = load_configuration(arguments.config)
        code = arguments.function(arguments, configuration)
    except (InvalidSeedFile, LabelError, FrozenIndexError, PreconditionError) as error:
        LOGGER.error('%s', error)
        code = EXIT_USAGE
    except InternalInconsistency as error:
        LOGGER.error('%s', error)
        code = EXIT_CHECK_FAILED
    raise SystemExit(code)


if __name__ == '__main__':
    main(sys.argv[1:])
