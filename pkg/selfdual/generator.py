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

"""Generator matrices of linear codes over F4 and F4U."""

import numpy as np

from . import ring as rng
from .errors import DimensionMismatch
from .ring import CONJ, INV, IS_UNIT, MUL, ONE_CODE


def eliminate(entries, column_order=None):
    """Gauss-Jordan elimination with unit pivots only.

    Columns are tried in `column_order` (default: left to right). Returns the
    reduced matrix and the list of (row, column) pivots; each pivot column is a
    unit vector in the result. Rows without a unit pivot are left at the bottom.
    """
    m = np.array(entries, dtype=np.uint8)
    rows, cols = m.shape
    order = range(cols) if column_order is None else column_order
    pivots = []
    r = 0
    for c in order:
        if r == rows:
            break
        candidates = np.nonzero(IS_UNIT[m[r:, c]])[0]
        if not len(candidates):
            continue
        p = r + candidates[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = MUL[INV[m[r, c]], m[r]]
        factors = m[:, c].copy()
        factors[r] = 0
        m ^= MUL[factors[:, None], m[r][None, :]]
        pivots.append((r, c))
        r += 1
    return m, pivots


class GeneratorMatrix(object):
    """A k x n generator matrix; the rows need not be in standard form."""

    def __init__(self, ring, entries):
        entries = np.array(entries, dtype=np.uint8, ndmin=2)
        if entries.ndim != 2:
            raise DimensionMismatch('generator entries must be two dimensional')
        rng.check_codes(entries, ring)
        self.ring = ring
        self.entries = entries

    @staticmethod
    def from_blocks(ring, x):
        """(I_k | X)."""
        x = np.asarray(x, dtype=np.uint8)
        k = x.shape[0]
        return GeneratorMatrix(ring, np.hstack([np.eye(k, dtype=np.uint8), x]))

    @property
    def k(self):
        return self.entries.shape[0]

    @property
    def n(self):
        return self.entries.shape[1]

    @property
    def x_block(self):
        return self.entries[:, self.k:]

    def is_standard_form(self):
        return (self.n >= self.k and
                np.array_equal(self.entries[:, :self.k],
                               np.eye(self.k, dtype=np.uint8)))

    def hermitian_gram(self):
        """G * conj(G)^T."""
        g = self.entries
        prods = MUL[g[:, None, :], CONJ[g][None, :, :]]
        return rng.xor_sum(prods, axis=-1)

    def free_rank(self):
        """Number of unit pivots; equals k exactly when the rows are free of full rank."""
        return len(eliminate(self.entries)[1])

    def __eq__(self, other):
        return (isinstance(other, GeneratorMatrix) and self.ring == other.ring
                and np.array_equal(self.entries, other.entries))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'GeneratorMatrix({}, k={}, n={})'.format(self.ring.name, self.k,
                                                        self.n)

    def __str__(self):
        return '\n'.join(rng.encode_vector(r, self.ring) for r in self.entries)


def is_identity(entries):
    entries = np.asarray(entries)
    return (entries.shape[0] == entries.shape[1] and
            np.array_equal(entries, ONE_CODE * np.eye(len(entries), dtype=np.uint8)))