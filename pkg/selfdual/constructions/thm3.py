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

"""Bordered block circulant codes: G = (I_{kn+1} | X) with

    X = [[x1, x2 ... x2],
         [x3,          ],
         [ :     Y     ],
         [x3,          ]]

and Y = circ(A_0, ..., A_{k-1}) a block circulant of plain circulants.
"""

from collections import namedtuple
import numpy as np

from .. import ring as rng
from ..errors import ConditionsNotMet
from ..ring import CONJ, MUL, ONE_CODE, xor_sum
from . import thm2
from .construction import (ConstructionBase, as_element, fields, parse_vectors,
                           standard_generator, vectors_field)

Theorem3Params = namedtuple('Theorem3Params',
                            ['ring', 'n', 'k', 'x1', 'x2', 'x3', 'blocks'])


def make_params(ring, x1, x2, x3, blocks):
    inner = thm2.make_params(ring, ONE_CODE, ONE_CODE, blocks)
    return Theorem3Params(ring, inner.n, inner.k, as_element(ring, x1),
                          as_element(ring, x2), as_element(ring, x3),
                          inner.blocks)


def conditions_mask(blocks, x1, x2, x3):
    k, n = blocks.shape[-2:]
    x1, x2, x3 = (np.asarray(x, dtype=np.uint8) for x in (x1, x2, x3))
    # kn * x2 * conj(x2), with kn acting as an integer scalar
    border = ONE_CODE ^ MUL[x1, CONJ[x1]]
    if (k * n) % 2:
        border = border ^ MUL[x2, CONJ[x2]]
    ok = border == 0
    coefficient_sum = xor_sum(xor_sum(blocks, axis=-1), axis=-1)
    ok = ok & ((MUL[x1, CONJ[x3]] ^ MUL[x2, CONJ[coefficient_sum]]) == 0)
    return ok & thm2.conditions_mask(blocks, ONE_CODE, ONE_CODE,
                                     offset=MUL[x3, CONJ[x3]])


def conditions(p):
    return bool(conditions_mask(p.blocks, p.x1.code, p.x2.code, p.x3.code))


def x_matrix(p):
    size = p.k * p.n + 1
    x = np.zeros((size, size), dtype=np.uint8)
    x[0, 0] = p.x1.code
    x[0, 1:] = p.x2.code
    x[1:, 0] = p.x3.code
    x[1:, 1:] = thm2.block_circulant(p.blocks, ONE_CODE, ONE_CODE)
    return x


def build(p):
    if not conditions(p):
        raise ConditionsNotMet('border and blocks do not satisfy the conditions')
    return standard_generator(p.ring, x_matrix(p))


class Construction(ConstructionBase):

    tag = 'thm3'

    def __init__(self, ring, n, k=1, lambdas=None, mus=None, unitary_table=None):
        super(Construction, self).__init__(ring, n, k, lambdas, mus)

    @property
    def length(self):
        return 2 * (self.k * self.n + 1)

    def conditions(self, params):
        return conditions(params)

    def build(self, params):
        return build(params)

    def draw_batch(self, gen, size):
        return {
            'x1': self.random_vectors(gen, size),
            'x2': self.random_vectors(gen, size),
            'x3': self.random_vectors(gen, size),
            'blocks': self.random_vectors(gen, (size, self.k, self.n)),
        }

    def conditions_batch(self, batch):
        return conditions_mask(batch['blocks'], batch['x1'], batch['x2'],
                               batch['x3'])

    def params_at(self, batch, i):
        return make_params(self.ring, int(batch['x1'][i]), int(batch['x2'][i]),
                           int(batch['x3'][i]), batch['blocks'][i])

    def params_to_fields(self, params):
        return fields(('lambda', '1'), ('mu', '1'),
                      ('x1', rng.encode(params.x1)),
                      ('x2', rng.encode(params.x2)),
                      ('x3', rng.encode(params.x3)),
                      ('vectors', vectors_field(params.blocks, self.ring)))

    def params_from_fields(self, record_fields):
        return make_params(self.ring, record_fields['x1'], record_fields['x2'],
                           record_fields['x3'],
                           parse_vectors(record_fields['vectors'], self.ring))

    def search_field_size(self):
        return self.ring.order ** (self.k * self.n + 3)
