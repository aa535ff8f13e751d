#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: configuration.py
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
Runtime configuration of qclusterlib.

Defaults live in the module level constants below. A JSON configuration file and
``QCLUSTER_<KEY>`` environment variables can override any of them; environment
variables win over the file.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging
import os

from schema import SchemaError

from .qclusterlibexceptions import InvalidSeedFile
from .schemas import CONFIGURATION_SCHEMA

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
LOGGER = logging.getLogger(f'{LOGGER_BASENAME}.configuration')
LOGGER.addHandler(logging.NullHandler())

DIVISION_ITERATION_CAP = 10000
SYMMETRIZER_BOUND = 64
CM3_DEPTH = 4
MAX_SEEDS = 5000
MAX_WORKERS = 8
VERIFY_EXCHANGE = True

ENVIRONMENT_PREFIX = 'QCLUSTER_'
CONFIGURATION_KEYS = ('division_iteration_cap',
                      'symmetrizer_bound',
                      'cm3_depth',
                      'max_seeds',
                      'max_workers',
                      'verify_exchange')


def _environment_overrides(environment):
    overrides = {}
    for key in CONFIGURATION_KEYS:
        variable = f'{ENVIRONMENT_PREFIX}{key.upper()}'
        if variable not in environment:
            continue
        raw = environment[variable]
        try:
            overrides[key] = json.loads(raw.lower() if raw.lower() in ('true', 'false') else raw)
        except json.JSONDecodeError:
            raise InvalidSeedFile(f'Environment variable {variable} holds "{raw}" which is not valid') from None
        LOGGER.debug('Overriding "%s" from the environment with %s', key, overrides[key])
    return overrides


def load_configuration(path=None, environment=None):
    """Loads the runtime configuration.

    Args:
        path (str): Optional path to a JSON configuration file.
        environment (dict): The environment to read overrides from, defaults to ``os.environ``.

    Returns:
        dict: The validated configuration with every key populated.

    Raises:
        InvalidSeedFile: If the file cannot be parsed or a value is out of range.

    """
    data = {}
    if path:
        try:
            with open(path, 'r') as configuration_file:
                data = json.load(configuration_file)
        except (OSError, json.JSONDecodeError) as error:
            raise InvalidSeedFile(f'Could not read configuration file {path}: {error}') from None
        if not isinstance(data, dict):
            raise InvalidSeedFile(f'Configuration file {path} does not hold a JSON object.')
    data.update(_environment_overrides(os.environ if environment is None else environment))
    try:
        configuration = CONFIGURATION_SCHEMA.validate(data)
    except SchemaError as error:
        raise InvalidSeedFile(f'Invalid configuration: {error}') from None
    LOGGER.debug('Loaded configuration %s', configuration)
    return configuration


DEFAULT_CONFIGURATION = {'division_iteration_cap': DIVISION_ITERATION_CAP,
                         'symmetrizer_bound': SYMMETRIZER_BOUND,
                         'cm3_depth': CM3_DEPTH,
                         'max_seeds': MAX_SEEDS,
                         'max_workers': MAX_WORKERS,
                         'verify_exchange': VERIFY_EXCHANGE}
