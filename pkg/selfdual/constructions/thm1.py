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

"""Double circulant codes with a unitary twist: G = (I_2n | X) with

    X = [[-A^T C J, -conj(B)],
         [ B^T C J, -conj(A)]]

where A = sigma_lambda(a), B = sigma_lambda(b) and C = sigma_mu(c) is unitary.
The code is Hermitian self-dual exactly when the Theta sums of a and b over
j <= floor(n/2) equal the identity profile and C * conj(C)^T = I.
"""

from collections import namedtuple
import numpy as np

from .. import circulant as circ
from .. import ring as rng
from ..errors import ConditionsNotMet, ConfigInvalid, DimensionMismatch
from ..ring import CONJ, ONE_CODE, negate
from .construction import (ConstructionBase, as_element, check_unitary, fields,
                           parse_vectors, standard_generator, vectors_field)

Theorem1Params = namedtuple('Theorem1Params',
                            ['ring', 'n', 'lam', 'mu', 'a', 'b', 'c'])


def make_params(ring, lam, mu, a, b, c):
    a, b, c = (rng.as_codes(v, ring) for v in (a, b, c))
    if not len(a) == len(b) == len(c):
        raise DimensionMismatch('a, b and c must have the same length')
    return Theorem1Params(ring, len(a), as_element(ring, lam),
                          as_element(ring, mu), a, b, c)


def ab_mask(a, b, lam):
    """Theta(a, conj(a), j) + Theta(b, conj(b), j) under conj(lam) is 1 at j = 0
    and 0 for j in [1, floor(n/2)]. Broadcasts over a leading batch axis."""
    lam_bar = CONJ[np.asarray(lam, dtype=np.uint8)]
    a_bar, b_bar = CONJ[a], CONJ[b]

    def total(j):
        return (circ.theta_codes(a, a_bar, j, lam_bar) ^
                circ.theta_codes(b, b_bar, j, lam_bar))

    ok = total(0) == ONE_CODE
    for j in range(1, a.shape[-1] // 2 + 1):
        ok = ok & (total(j) == 0)
    return ok


def is_dense_unitary(c):
    gram = circ.matmul(c, circ.hermitian_transpose(c))
    return gram == circ.identity(c.ring, c.rows)


def conditions(p, dense_c=None):
    """`dense_c` replaces sigma_mu(c) by an arbitrary n x n matrix."""
    check_unitary(lam=p.lam, mu=p.mu)
    if not bool(ab_mask(p.a, p.b, p.lam.code)):
        return False
    if dense_c is not None:
        if dense_c.shape != (p.n, p.n):
            raise DimensionMismatch('C must be {0}x{0}'.format(p.n))
        return is_dense_unitary(dense_c)
    return bool(circ.hermitian_unitary_mask(p.c, p.mu.code))


def x_matrix(p, dense_c=None):
    a_mat = circ.circulant_codes(p.a, p.lam)
    b_mat = circ.circulant_codes(p.b, p.lam)
    if dense_c is not None:
        c_mat = dense_c.entries
    else:
        c_mat = circ.circulant_codes(p.c, p.mu)
    act_j = circ.matmul_codes(a_mat.T, c_mat)[:, ::-1]
    bct_j = circ.matmul_codes(b_mat.T, c_mat)[:, ::-1]
    return np.block([[negate(act_j), negate(CONJ[b_mat])],
                     [bct_j, negate(CONJ[a_mat])]])


def build(p, dense_c=None):
    if not conditions(p, dense_c):
        raise ConditionsNotMet('a, b and c do not satisfy the conditions')
    return standard_generator(p.ring, x_matrix(p, dense_c))


class Construction(ConstructionBase):

    tag = 'thm1'

    def __init__(self, ring, n, k=1, lambdas=None, mus=None, unitary_table=None):
        super(Construction, self).__init__(ring, n, k, lambdas, mus)
        self.unitary_table = unitary_table

    @property
    def length(self):
        return 4 * self.n

    def conditions(self, params):
        return conditions(params)

    def build(self, params):
        return build(params)

    def _table(self):
        if self.unitary_table is None:
            raise ConfigInvalid('thm1 needs a unitary circulant table')
        return self.unitary_table

    def draw_batch(self, gen, size):
        table = self._table()
        mus = np.array([m for m in self.mus if len(table.vectors_for(m))],
                       dtype=np.uint8)
        if not len(mus):
            raise ConfigInvalid('no unitary {}-circulants of length {} for mu in {}'
                                .format(self.ring.name, self.n, list(self.mus)))
        batch = {
            'lam': self.choose(gen, self.lambdas, size),
            'mu': self.choose(gen, mus, size),
            'a': self.random_vectors(gen, (size, self.n)),
            'b': self.random_vectors(gen, (size, self.n)),
            'c': np.zeros((size, self.n), dtype=np.uint8),
        }
        for m in mus:
            chosen = np.nonzero(batch['mu'] == m)[0]
            vectors = table.vectors_for(m)
            batch['c'][chosen] = vectors[gen.integers(0, len(vectors), len(chosen))]
        return batch

    def conditions_batch(self, batch):
        # c is drawn from the unitary table
        return ab_mask(batch['a'], batch['b'], batch['lam'])

    def params_at(self, batch, i):
        return make_params(self.ring, int(batch['lam'][i]), int(batch['mu'][i]),
                           batch['a'][i], batch['b'][i], batch['c'][i])

    def params_to_fields(self, params):
        return fields(('lambda', rng.encode(params.lam)),
                      ('mu', rng.encode(params.mu)),
                      ('vectors', vectors_field([params.a, params.b, params.c],
                                                self.ring)))

    def params_from_fields(self, record_fields):
        a, b, c = parse_vectors(record_fields['vectors'], self.ring)
        return make_params(self.ring, record_fields['lambda'], record_fields['mu'],
                           a, b, c)

    def search_field_size(self):
        unitary = len(rng.unitary_codes(self.ring))
        return self.ring.order ** (2 * self.n) * unitary * self._table().total
