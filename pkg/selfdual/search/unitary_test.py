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

import unittest

import numpy as np
import pytest

from .. import circulant as circ
from .. import ring as rng
from ..errors import BudgetExceeded
from ..generator import is_identity
from ..ring import CONJ, F4, F4U
from .unitary import (UnitaryCirculantTable, all_vectors,
                      enumerate_unitary_circulants, table_filename)


def dense_count(ring, n, mu):
    count = 0
    for c in all_vectors(ring, n, 0, ring.order ** n):
        m = circ.circulant_codes(c, mu)
        count += is_identity(circ.matmul_codes(m, CONJ[m].T))
    return count


class UnitaryTableTest(unittest.TestCase):

    def test_order_one(self):
        table = enumerate_unitary_circulants(F4, 1)
        self.assertEqual(9, table.total)
        for mu in rng.unitary_codes(F4):
            np.testing.assert_array_equal([[1], [2], [3]], table.vectors_for(mu))

    def test_matches_dense(self):
        for ring, n in ((F4, 2), (F4, 3), (F4, 4), (F4U, 2)):
            table = enumerate_unitary_circulants(ring, n)
            for mu in rng.unitary_codes(ring):
                self.assertEqual(dense_count(ring, n, mu),
                                 len(table.vectors_for(mu)))

    def test_every_vector_is_unitary(self):
        table = enumerate_unitary_circulants(F4U, 3)
        for mu, vectors in table.vectors.items():
            self.assertTrue(np.all(circ.hermitian_unitary_mask(vectors, mu)))

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            enumerate_unitary_circulants(F4U, 8, budget=16 ** 7)

    def test_missing_mu(self):
        table = UnitaryCirculantTable(F4, 2, {1: np.zeros((0, 2))})
        self.assertEqual((0, 2), table.vectors_for(3).shape)


def test_cache_round_trip(tmp_path):
    table = enumerate_unitary_circulants(F4, 4, cache_dir=str(tmp_path))
    path = tmp_path / table_filename(F4, 4)
    assert path.read_text().startswith('# selfdual-unitary v1 ring=f4 n=4\n')
    cached = enumerate_unitary_circulants(F4, 4, cache_dir=str(tmp_path))
    assert cached.counts() == table.counts()
    for mu in table.vectors:
        np.testing.assert_array_equal(table.vectors_for(mu),
                                      cached.vectors_for(mu))


def test_stale_cache_is_rebuilt(tmp_path):
    (tmp_path / table_filename(F4, 3)).write_text('# selfdual-unitary v0\n')
    table = enumerate_unitary_circulants(F4, 3, cache_dir=str(tmp_path))
    assert table.total == sum(dense_count(F4, 3, mu)
                              for mu in rng.unitary_codes(F4))


def test_order_ten_over_f4():
    assert enumerate_unitary_circulants(F4, 10).total == 4320


@pytest.mark.slow
def test_order_five_over_f4u():
    assert enumerate_unitary_circulants(F4U, 5).total == 8640


if __name__ == '__main__':
    unittest.main()
