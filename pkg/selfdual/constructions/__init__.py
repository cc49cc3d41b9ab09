# Copyright 2024 The selfdual Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generator-matrix constructions of Hermitian self-dual codes.

Each construction lives in a module named after its tag and exposes a
`Construction` class; `get_construction` loads it by tag.
"""

import importlib
import logging

from .. import graymap
from ..errors import ConfigInvalid, MixedRings
from ..generator import GeneratorMatrix
from ..ring import F4, F4U
from . import building_up as _building_up
from . import thm1, thm2, thm3

TAGS = ('thm1', 'thm2', 'thm3', 'building_up')

Theorem1Params = thm1.Theorem1Params
Theorem2Params = thm2.Theorem2Params
Theorem3Params = thm3.Theorem3Params
BuildingUpParams = _building_up.BuildingUpParams

thm1_conditions = thm1.conditions
thm1_build = thm1.build
thm2_conditions = thm2.conditions
thm2_build = thm2.build
thm3_conditions = thm3.conditions
thm3_build = thm3.build
building_up_extend = _building_up.building_up


def get_construction(tag):
    if tag not in TAGS:
        raise ConfigInvalid('unknown construction "{}", expected one of {}'
                            .format(tag, ', '.join(TAGS)))
    module = 'selfdual.constructions.{}'.format(tag)
    try:
        return importlib.import_module(module).Construction
    except ImportError:
        logging.fatal('Could not load construction: %s', module)
        raise


def search_field_size(tag, ring, n, k=1, **context):
    """Number of parameter tuples a random search over `tag` draws from."""
    return get_construction(tag)(ring, n, k, **context).search_field_size()


def gray_generator(g):
    """F4 generator of the Gray image of a code over F4U."""
    if g.ring != F4U:
        raise MixedRings("gray_generator expects an F4U generator")
    return GeneratorMatrix(F4, graymap.gray_generator(g.entries))


def as_f4(g):
    """`g` itself over F4, its Gray image generator over F4U."""
    return gray_generator(g) if g.ring == F4U else g
