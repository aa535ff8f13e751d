#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
qclusterlib package.

Graded quantum cluster algebra seeds, mutations, rooted morphisms and
Grassmannian examples.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from ._version import __version__
from .torus import (ParamSet,
                    ScalarMonomial,
                    CoeffPoly,
                    ExponentVector,
                    SkewExpMatrix,
                    TorusElement,
                    omega,
                    s_norm,
                    torus_mul,
                    torus_left_divide,
                    render_element)
from .seed import (ExchangeMatrix,
                   Seed,
                   validate_seed,
                   mutate_seed,
                   mutate_along,
                   enumerate_admissible,
                   mutation_closure,
                   classical,
                   restrict)
from .morphism import (MorphismSpec,
                       apply_hom,
                       check_structural,
                       verify_cm3,
                       verify_morphism,
                       identity_morphism,
                       compose,
                       specialize)
from .structure import (coproduct,
                        is_full_subseed,
                        is_full_subseed_by_coefficients,
                        check_mutations_commute,
                        SeedGenerator,
                        path_generator,
                        build_filtration,
                        verify_colimit_consistency)
from .grassmannian import (build_gr_seed,
                           build_iota,
                           gr_infinity_generator,
                           quantum_minor,
                           scott_exponent)
from .seedfile import (load_seed,
                       save_seed,
                       load_morphism)

__author__ = '''qclusterlib developers <qclusterlib@users.noreply.github.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, qclusterlib developers'''
__credits__ = ["qclusterlib developers"]
__license__ = '''MIT'''
__maintainer__ = '''qclusterlib developers'''
__email__ = '''<qclusterlib@users.noreply.github.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is to 'use' the module(s), so lint doesn't complain
assert __version__
assert ParamSet
assert ScalarMonomial
assert CoeffPoly
assert ExponentVector
assert SkewExpMatrix
assert TorusElement
assert omega
assert s_norm
assert torus_mul
assert torus_left_divide
assert render_element
assert ExchangeMatrix
assert Seed
assert validate_seed
assert mutate_seed
assert mutate_along
assert enumerate_admissible
assert mutation_closure
assert classical
assert restrict
assert MorphismSpec
assert apply_hom
assert check_structural
assert verify_cm3
assert verify_morphism
assert identity_morphism
assert compose
assert specialize
assert coproduct
assert is_full_subseed
assert is_full_subseed_by_coefficients
assert check_mutations_commute
assert SeedGenerator
assert path_generator
assert build_filtration
assert verify_colimit_consistency
assert build_gr_seed
assert build_iota
assert gr_infinity_generator
assert quantum_minor
assert scott_exponent
assert load_seed
assert save_seed
assert load_morphism
