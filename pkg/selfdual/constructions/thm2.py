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

"""Block lambda-circulant codes whose blocks are mu-circulant.

X = sigma_lambda(A_0, ..., A_{k-1}) with A_i = sigma_mu(a_i): block (r, c)
of X is A_{[c-r]_k}, multiplied by lambda when c < r. `layout` is the single
description of that arrangement; the builder and the Theta sums both use it.
"""

from collections import namedtuple
import numpy as np

from .. import circulant as circ
from .. import ring as rng
from ..errors import ConditionsNotMet, DimensionMismatch
from ..ring import CONJ, MUL, ONE_CODE
from .construction import (ConstructionBase, as_element, check_unitary, fields,
                           parse_vectors, standard_generator, vectors_field)

Theorem2Params = namedtuple('Theorem2Params',
                            ['ring', 'n', 'k', 'lam', 'mu', 'blocks'])


def make_params(ring, lam, mu, blocks):
    blocks = np.array([rng.as_codes(b, ring) for b in blocks], dtype=np.uint8)
    if blocks.ndim != 2:
        raise DimensionMismatch('all blocks must have the same length')
    k, n = blocks.shape
    return Theorem2Params(ring, n, k, as_element(ring, lam),
                          as_element(ring, mu), blocks)


def layout(r, c, k):
    """(source block index, wrapped) for block (r, c) of a block lambda-circulant."""
    return int(circ.cyclic_index(c - r, k)), c < r


def block_sum(blocks, j, t, lam, mu):
    """Generating entry t of block (0, j) of X * conj(X)^T.

    sum_c conj(lam)^[wrapped] * Theta(a_c, conj(a_src), t)[conj(mu)], with
    (src, wrapped) = layout(j, c). `blocks` is (..., k, n); `lam` and `mu`
    broadcast against the leading axes.
    """
    k = blocks.shape[-2]
    lam_bar = CONJ[np.asarray(lam, dtype=np.uint8)]
    mu_bar = CONJ[np.asarray(mu, dtype=np.uint8)]
    total = 0
    for c in range(k):
        src, wrapped = layout(j, c, k)
        g = circ.theta_codes(blocks[..., c, :], CONJ[blocks[..., src, :]], t,
                             mu_bar)
        total = total ^ (MUL[lam_bar, g] if wrapped else g)
    return total


def conditions_mask(blocks, lam, mu, offset=0):
    """The three families of block sums; `offset` is the common value they must
    take off the diagonal (0 here, x3*conj(x3) for the bordered variant)."""
    k, n = blocks.shape[-2:]
    offset = np.asarray(offset, dtype=np.uint8)
    ok = block_sum(blocks, 0, 0, lam, mu) == (ONE_CODE ^ offset)
    for t in range(1, n // 2 + 1):
        ok = ok & (block_sum(blocks, 0, t, lam, mu) == offset)
    for j in range(1, k // 2 + 1):
        ok = ok & (block_sum(blocks, j, 0, lam, mu) == offset)
    for j in range(1, k):
        for t in range(1, n // 2 + 1):
            ok = ok & (block_sum(blocks, j, t, lam, mu) == offset)
    return ok


def conditions(p):
    check_unitary(lam=p.lam, mu=p.mu)
    return bool(conditions_mask(p.blocks, p.lam.code, p.mu.code))


def block_circulant(blocks, lam, mu):
    k, n = blocks.shape
    circulants = [circ.circulant_codes(b, mu) for b in blocks]
    lam = rng.code_of(lam)
    rows = []
    for r in range(k):
        row = []
        for c in range(k):
            src, wrapped = layout(r, c, k)
            row.append(MUL[lam, circulants[src]] if wrapped else circulants[src])
        rows.append(row)
    return np.block(rows)


def x_matrix(p):
    return block_circulant(p.blocks, p.lam, p.mu)


def build(p):
    if not conditions(p):
        raise ConditionsNotMet('blocks do not satisfy the conditions')
    return standard_generator(p.ring, x_matrix(p))


class Construction(ConstructionBase):

    tag = 'thm2'

    def __init__(self, ring, n, k=2, lambdas=None, mus=None, unitary_table=None):
        super(Construction, self).__init__(ring, n, k, lambdas, mus)

    @property
    def length(self):
        return 2 * self.k * self.n

    def conditions(self, params):
        return conditions(params)

    def build(self, params):
        return build(params)

    def draw_batch(self, gen, size):
        return {
            'lam': self.choose(gen, self.lambdas, size),
            'mu': self.choose(gen, self.mus, size),
            'blocks': self.random_vectors(gen, (size, self.k, self.n)),
        }

    def conditions_batch(self, batch):
        return conditions_mask(batch['blocks'], batch['lam'],
                               batch['mu'])

    def params_at(self, batch, i):
        return make_params(self.ring, int(batch['lam'][i]), int(batch['mu'][i]),
                           batch['blocks'][i])

    def params_to_fields(self, params):
        return fields(('lambda', rng.encode(params.lam)),
                      ('mu', rng.encode(params.mu)),
                      ('vectors', vectors_field(params.blocks, self.ring)))

    def params_from_fields(self, record_fields):
        return make_params(self.ring, record_fields['lambda'], record_fields['mu'],
                           parse_vectors(record_fields['vectors'], self.ring))

    def search_field_size(self):
        unitary = len(rng.unitary_codes(self.ring))
        return self.ring.order ** (self.k * self.n) * unitary ** 2
