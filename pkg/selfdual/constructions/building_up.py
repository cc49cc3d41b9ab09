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

"""Extending a Hermitian self-dual [2n, n] code to a [2n+2, n+1] code.

Given a unitary epsilon and a vector delta with <delta, delta>_H = 1, the new
generator has first row (1, 0, delta) and, for every row r_i of the base
generator, the row (gamma_i, epsilon * gamma_i, r_i) with gamma_i = <r_i, delta>_H.
The base generator may be in any basis.
"""

from collections import namedtuple
import logging
import numpy as np

from .. import ring as rng
from ..errors import BadDelta, BadEpsilon, ConfigInvalid, InputNotSelfDual
from ..generator import GeneratorMatrix
from ..ring import MUL, ONE_CODE, negate
from .construction import ConstructionBase, as_element, fields

BuildingUpParams = namedtuple('BuildingUpParams',
                              ['ring', 'base', 'epsilon', 'delta'])


def make_params(base, epsilon, delta):
    return BuildingUpParams(base.ring, base, as_element(base.ring, epsilon),
                            rng.as_codes(delta, base.ring))


def delta_mask(delta):
    return rng.hermitian_product(delta, delta) == ONE_CODE


def check_base(base):
    if base.n != 2 * base.k:
        raise InputNotSelfDual('base code is [{}, {}], not [2n, n]'.format(
            base.n, base.k))
    if np.any(base.hermitian_gram()):
        raise InputNotSelfDual('base rows are not Hermitian orthogonal')
    if base.free_rank() != base.k:
        raise InputNotSelfDual('base rows are not free of rank {}'.format(base.k))


def validate(p, check_input=False):
    if not rng.is_unitary_code(p.epsilon.code):
        raise BadEpsilon('epsilon * conj(epsilon) != 1 for epsilon={}'.format(
            rng.encode(p.epsilon)))
    if len(p.delta) != p.base.n:
        raise BadDelta('delta has length {}, base code has length {}'.format(
            len(p.delta), p.base.n))
    if not delta_mask(p.delta):
        raise BadDelta('<delta, delta>_H != 1 for delta={}'.format(
            rng.encode_vector(p.delta, p.ring)))
    if check_input:
        check_base(p.base)


def conditions(p):
    return (bool(rng.is_unitary_code(p.epsilon.code)) and
            len(p.delta) == p.base.n and bool(delta_mask(p.delta)))


def build(p, check_input=False):
    validate(p, check_input)
    rows = p.base.entries
    gamma = negate(rng.hermitian_product(rows, p.delta[None, :]))
    first = np.concatenate([[ONE_CODE, 0], p.delta]).astype(np.uint8)
    rest = np.hstack([gamma[:, None], negate(MUL[p.epsilon.code, gamma])[:, None],
                      rows])
    return GeneratorMatrix(p.ring, np.vstack([first, rest]))


def building_up(g, delta, epsilon, check_input=False):
    return build(make_params(g, epsilon, delta), check_input)


class Construction(ConstructionBase):

    tag = 'building_up'

    def __init__(self, ring, n, k=1, lambdas=None, mus=None, unitary_table=None,
                 base=None, base_id=None):
        if base is None:
            raise ConfigInvalid('building_up needs a base code')
        super(Construction, self).__init__(base.ring, base.n, k, lambdas, mus)
        check_base(base)
        self.base = base
        self.base_id = base_id
        logging.info('Building up from %s, a [%d, %d] code over %s', base_id,
                     base.n, base.k, base.ring.name)

    @property
    def length(self):
        return self.base.n + 2

    def conditions(self, params):
        return conditions(params)

    def build(self, params):
        return build(params)

    def draw_batch(self, gen, size):
        return {
            'epsilon': self.choose(gen, self.lambdas, size),
            'delta': self.random_vectors(gen, (size, self.base.n)),
        }

    def conditions_batch(self, batch):
        return delta_mask(batch['delta'])

    def params_at(self, batch, i):
        return make_params(self.base, int(batch['epsilon'][i]), batch['delta'][i])

    def params_to_fields(self, params):
        return fields(('base', self.base_id),
                      ('epsilon', rng.encode(params.epsilon)),
                      ('delta', rng.encode_vector(params.delta, self.ring)))

    def params_from_fields(self, record_fields):
        if record_fields['base'] != self.base_id:
            raise ConfigInvalid('record built on {}, construction holds {}'.format(
                record_fields['base'], self.base_id))
        return make_params(self.base, record_fields['epsilon'],
                           rng.decode_vector(record_fields['delta'], self.ring))

    def search_field_size(self):
        return self.ring.order ** self.base.n * len(rng.unitary_codes(self.ring))
