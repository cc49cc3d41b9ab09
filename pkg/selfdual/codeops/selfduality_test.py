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

from ..constructions import thm2
from ..errors import NotStandardForm
from ..generator import GeneratorMatrix
from ..ring import F4
from .record import CodeRecord, is_extremal, within_bound
from .selfduality import standard_form, verify_hermitian_self_dual


class StandardFormTest(unittest.TestCase):

    def test_permutes_pivot_columns_forward(self):
        g = GeneratorMatrix(F4, [[1, 1, 0, 0], [0, 0, 1, 1]])
        s, perm = standard_form(g)
        np.testing.assert_array_equal([0, 2, 1, 3], perm)
        np.testing.assert_array_equal([[1, 0, 1, 0], [0, 1, 0, 1]], s.entries)
        self.assertTrue(s.is_standard_form())

    def test_dependent_rows(self):
        with self.assertRaises(NotStandardForm):
            standard_form(GeneratorMatrix(F4, [[1, 2], [2, 3]]))


class SelfDualityTest(unittest.TestCase):

    def test_self_dual_codes(self):
        self.assertTrue(verify_hermitian_self_dual(
            GeneratorMatrix.from_blocks(F4, [[1, 2, 2], [2, 1, 2], [2, 2, 1]])))
        self.assertTrue(verify_hermitian_self_dual(
            GeneratorMatrix(F4, [[1, 1, 0, 0], [0, 0, 1, 1]])))
        g = thm2.build(thm2.make_params(F4, 1, 3, ['(3212220310)',
                                                   '(2302200133)']))
        self.assertTrue(verify_hermitian_self_dual(g))

    def test_not_self_dual(self):
        self.assertFalse(verify_hermitian_self_dual(
            GeneratorMatrix.from_blocks(F4, np.zeros((2, 2), dtype=np.uint8))))
        self.assertFalse(verify_hermitian_self_dual(
            GeneratorMatrix(F4, [[1, 1, 0]])))


class CodeRecordTest(unittest.TestCase):

    def record(self, length, d):
        return CodeRecord('thm1', 'f4', length, length // 2, {}, d, None, 1, None)

    def test_bounds(self):
        self.assertTrue(is_extremal(self.record(24, 10)))
        self.assertFalse(is_extremal(self.record(26, 8)))
        self.assertTrue(within_bound(self.record(26, 8)))
        self.assertFalse(within_bound(self.record(26, 12)))


if __name__ == '__main__':
    unittest.main()
