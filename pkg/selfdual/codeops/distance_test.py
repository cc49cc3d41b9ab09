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

from ..constructions import thm1
from ..errors import NoProgress
from ..generator import GeneratorMatrix
from ..ring import F4, F4U
from . import distance
from .weights import weight_distribution_exhaustive

HEXACODE = GeneratorMatrix.from_blocks(F4, [[1, 2, 2], [2, 1, 2], [2, 2, 1]])


def table_26_1_row_1():
    return thm1.build(thm1.make_params(F4, 1, 1, '(000333)', '(110101)',
                                       '(311023)'))


class InformationSetTest(unittest.TestCase):

    def test_new_pivots_are_disjoint(self):
        g = table_26_1_row_1()
        matrices = distance.information_sets(g)
        self.assertEqual(g.n, sum(r for _, r in matrices))
        self.assertEqual(12, matrices[0][1])
        for reduced, _ in matrices:
            self.assertEqual((g.k, g.n), reduced.shape)

    def test_level_count(self):
        self.assertEqual(12, distance.level_count(12, 1))
        self.assertEqual(66 * 3, distance.level_count(12, 2))


class MinDistanceTest(unittest.TestCase):

    def test_small_codes(self):
        self.assertEqual(2, distance.min_distance(GeneratorMatrix(F4, [[1, 1]])))
        self.assertEqual(4, distance.min_distance(HEXACODE))
        identity_pair = GeneratorMatrix.from_blocks(F4, np.eye(5, dtype=np.uint8))
        self.assertEqual(2, distance.min_distance(identity_pair))

    def test_lee_distance_over_f4u(self):
        g = GeneratorMatrix(F4U, [[1, 5]])
        self.assertEqual(2, distance.min_distance(g))
        self.assertEqual(2, distance.min_distance(g, method='exhaustive'))

    def test_matches_exhaustive(self):
        gen = np.random.default_rng(40)
        checked = 0
        while checked < 12:
            k = int(gen.integers(2, 8))
            g = GeneratorMatrix(F4, gen.integers(0, 4, (k, 2 * k + 1)))
            if g.free_rank() < k:
                continue
            expected = weight_distribution_exhaustive(g).min_weight
            self.assertEqual(expected, distance.info_set_distance(g))
            checked += 1

    def test_table_code(self):
        self.assertEqual(8, distance.min_distance(table_26_1_row_1()))

    def test_stop_below(self):
        d = distance.info_set_distance(table_26_1_row_1(), stop_below=20)
        self.assertTrue(8 <= d < 20)

    def test_no_progress(self):
        with self.assertRaises(NoProgress) as ctx:
            distance.info_set_distance(table_26_1_row_1(), level_budget=30)
        # two information sets of 12 pivots each
        self.assertEqual(4, ctx.exception.lower)
        self.assertGreaterEqual(ctx.exception.upper, 8)

    def test_stalled_levels_fall_back(self):
        g = table_26_1_row_1()
        self.assertEqual(8, distance.min_distance(g, level_budget=30))
        with self.assertRaises(NoProgress):
            distance.min_distance(g, level_budget=30, budget=4 ** 10)

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            distance.min_distance(HEXACODE, method='random')


@pytest.mark.slow
def test_table_code_exhaustively():
    g = table_26_1_row_1()
    assert distance.min_distance(g, method='exhaustive') == 8


if __name__ == '__main__':
    unittest.main()
