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

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from . import circulant as circ
from . import ring
from .errors import DimensionMismatch, IndexOutOfRange, NotUnitaryLambda
from .ring import F4, F4U


def random_vector(gen, r, n):
    return gen.integers(0, r.order, n).astype(np.uint8)


def random_unitary(gen, r):
    return ring.element(r, gen.choice(ring.unitary_codes(r)))


def dense_gram(a, b=None):
    """B * conj(A)^T computed entry by entry."""
    b = a if b is None else b
    return circ.matmul(b, circ.hermitian_transpose(a))


class MaterializeTest(unittest.TestCase):

    def test_omega_circulant(self):
        spec = circ.spec_from_hex(F4, '2', '(102)')
        np.testing.assert_array_equal(
            [[1, 0, 2], [3, 1, 0], [0, 3, 1]], circ.materialize(spec).entries)

    def test_unit_vector_is_identity(self):
        spec = circ.spec_from_hex(F4, '1', '(100000)')
        self.assertEqual(circ.identity(F4, 6), circ.materialize(spec))

    def test_first_column(self):
        spec = circ.spec_from_hex(F4, '1', '(311023)')
        np.testing.assert_array_equal(
            [3, 3, 2, 0, 1, 1], circ.materialize(spec).entries[:, 0])

    def test_rows_shift_right(self):
        gen = np.random.default_rng(1)
        for r in (F4, F4U):
            lam = ring.element(r, gen.integers(1, r.order))
            spec = circ.make_spec(r, lam, random_vector(gen, r, 7))
            m = circ.materialize(spec).entries
            for i in range(1, 7):
                np.testing.assert_array_equal(m[i - 1][:-1], m[i][1:])
                self.assertEqual(ring.MUL[lam.code, m[i - 1][-1]], m[i][0])

    def test_p_lambda_power(self):
        for r in (F4, F4U):
            for lam in range(1, r.order):
                p = circ.p_lambda(r, 5, lam)
                power = circ.identity(r, 5)
                for _ in range(5):
                    power = circ.matmul(power, p)
                np.testing.assert_array_equal(
                    ring.MUL[lam, np.eye(5, dtype=np.uint8)], power.entries)


class MatrixAlgebraTest(unittest.TestCase):

    def test_exchange_is_involution(self):
        j = circ.exchange(F4, 5)
        self.assertEqual(circ.identity(F4, 5), circ.matrix_algebra('mul', j, j))
        self.assertEqual(j, circ.matrix_algebra('transpose', j))

    def test_exchange_mul(self):
        a = circ.DenseMatrix(F4, [[0, 1, 2], [3, 0, 1], [2, 3, 0]])
        j = circ.exchange(F4, 3)
        np.testing.assert_array_equal(
            a.entries[::-1], circ.matrix_algebra('exchange_mul', j, a).entries)
        np.testing.assert_array_equal(
            a.entries[:, ::-1], circ.matrix_algebra('exchange_mul', a, j).entries)
        self.assertEqual(circ.matmul(j, a), circ.exchange_mul(j, a))
        self.assertEqual(circ.matmul(a, j), circ.exchange_mul(a, j))

    def test_transpose_and_conj_commute(self):
        gen = np.random.default_rng(2)
        a = circ.DenseMatrix(F4U, gen.integers(0, 16, (4, 6)))
        self.assertEqual(
            circ.matrix_algebra('conj', circ.matrix_algebra('transpose', a)),
            circ.matrix_algebra('transpose', circ.matrix_algebra('conj', a)))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            circ.matmul(circ.identity(F4, 3), circ.identity(F4, 4))
        with self.assertRaises(DimensionMismatch):
            circ.matadd(circ.identity(F4, 3), circ.identity(F4, 4))

    def test_circulants_closed_under_sum_and_product(self):
        gen = np.random.default_rng(3)
        for r in (F4, F4U):
            for _ in range(20):
                lam = ring.element(r, gen.integers(0, r.order))
                a = circ.materialize(circ.make_spec(r, lam, random_vector(gen, r, 6)))
                b = circ.materialize(circ.make_spec(r, lam, random_vector(gen, r, 6)))
                self.assertTrue(circ.is_lambda_circulant(circ.matadd(a, b), lam))
                self.assertTrue(circ.is_lambda_circulant(circ.matmul(a, b), lam))
                self.assertEqual(circ.matmul(a, b), circ.matmul(b, a))


class ThetaTest(unittest.TestCase):

    def test_direct_evaluation(self):
        w = ring.element(F4, ring.OMEGA_CODE)
        self.assertEqual(w, circ.theta([1, 2, 0], [0, 1, 1], 1, w))

    def test_j_zero_is_dot_product(self):
        gen = np.random.default_rng(4)
        x, y = random_vector(gen, F4U, 9), random_vector(gen, F4U, 9)
        dot = ring.xor_sum(ring.MUL[x, y])
        for lam in ring.elements(F4U):
            self.assertEqual(dot, circ.theta(x, y, 0, lam).code)

    def test_zero_vector(self):
        x = np.arange(1, 7, dtype=np.uint8)
        for j in range(6):
            for lam in ring.elements(F4U):
                self.assertEqual(ring.zero(F4U),
                                 circ.theta(x, np.zeros(6, np.uint8), j, lam))

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            circ.theta([1, 0, 0], [1, 0, 0], 3, ring.one(F4))
        with self.assertRaises(IndexOutOfRange):
            circ.theta([1, 0, 0], [1, 0, 0], -1, ring.one(F4))

    def test_batch_matches_scalar(self):
        gen = np.random.default_rng(5)
        xs = gen.integers(0, 16, (50, 7)).astype(np.uint8)
        ys = gen.integers(0, 16, (50, 7)).astype(np.uint8)
        lams = gen.integers(0, 16, 50).astype(np.uint8)
        batch = circ.theta_codes(xs, ys, 3, lams)
        for i in range(50):
            self.assertEqual(batch[i], circ.theta_codes(xs[i], ys[i], 3, lams[i]))


class ThetaProductTest(unittest.TestCase):

    def test_identity(self):
        e = np.zeros(5, np.uint8)
        e[0] = 1
        np.testing.assert_array_equal(e, circ.theta_product(e, e, ring.one(F4)))

    def test_matches_dense_product(self):
        gen = np.random.default_rng(6)
        for r in (F4, F4U):
            for n in range(1, 9):
                for _ in range(15):
                    lam = random_unitary(gen, r)
                    a, b = random_vector(gen, r, n), random_vector(gen, r, n)
                    v = circ.theta_product(b, a, lam)
                    dense = dense_gram(circ.materialize(circ.make_spec(r, lam, a)),
                                       circ.materialize(circ.make_spec(r, lam, b)))
                    self.assertEqual(
                        dense, circ.materialize(circ.make_spec(r, lam, v)))

    def test_self_profile_fold(self):
        gen = np.random.default_rng(7)
        for r in (F4, F4U):
            for n in range(1, 10):
                lam = random_unitary(gen, r)
                a = random_vector(gen, r, n)
                full = circ.theta_product(a, a, lam)
                np.testing.assert_array_equal(full, circ.self_theta_profile(a, lam))
                for j in range(1, n):
                    self.assertEqual(
                        full[j], ring.CONJ[ring.MUL[lam.code, full[n - j]]])

    def test_requires_unitary_lambda(self):
        with self.assertRaises(NotUnitaryLambda):
            circ.theta_product([1, 0], [1, 0], ring.decode('4', F4U))
        with self.assertRaises(NotUnitaryLambda):
            circ.theta_product([1, 0], [1, 0], ring.zero(F4))


class HermitianUnitaryTest(unittest.TestCase):

    def test_identity(self):
        spec = circ.spec_from_hex(F4, '1', '(1000000)')
        self.assertTrue(circ.is_hermitian_unitary(spec, 'plus_one'))
        self.assertTrue(circ.is_hermitian_unitary(spec, 'minus_one'))

    def test_table_row_c_vector(self):
        spec = circ.spec_from_hex(F4, '1', '(311023)')
        self.assertTrue(circ.is_hermitian_unitary(spec, 'plus_one'))

    def test_agrees_with_dense_check(self):
        gen = np.random.default_rng(8)
        hits = 0
        for _ in range(1000):
            r = (F4, F4U)[gen.integers(0, 2)]
            n = int(gen.integers(1, 9))
            lam = random_unitary(gen, r)
            spec = circ.make_spec(r, lam, random_vector(gen, r, n))
            a = circ.materialize(spec)
            expected = dense_gram(a) == circ.identity(r, n)
            hits += expected
            self.assertEqual(expected, circ.is_hermitian_unitary(spec, 'plus_one'))
        self.assertGreater(hits, 0)

    def test_batch_mask(self):
        gen = np.random.default_rng(9)
        gens = gen.integers(0, 4, (400, 4)).astype(np.uint8)
        lams = gen.choice(ring.unitary_codes(F4), 400).astype(np.uint8)
        mask = circ.hermitian_unitary_mask(gens, lams)
        for i in range(400):
            spec = circ.make_spec(F4, int(lams[i]), gens[i])
            self.assertEqual(circ.is_hermitian_unitary(spec, 'plus_one'), mask[i])


class SpecTransformTest(unittest.TestCase):

    def test_transpose_spec(self):
        gen = np.random.default_rng(10)
        for r in (F4, F4U):
            units = [x for x in ring.elements(r) if x.is_unit]
            for _ in range(30):
                lam = units[gen.integers(0, len(units))]
                spec = circ.make_spec(r, lam, random_vector(gen, r, 6))
                t = circ.transpose_spec(spec)
                self.assertEqual(lam.inv(), t.lam)
                self.assertEqual(circ.transpose(circ.materialize(spec)),
                                 circ.materialize(t))

    def test_conj_spec(self):
        spec = circ.spec_from_hex(F4U, 'A', '(9C33)')
        self.assertEqual(circ.conjugate(circ.materialize(spec)),
                         circ.materialize(circ.conj_spec(spec)))


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=6), st.data())
def test_theta_reflection(n, data):
    r = data.draw(st.sampled_from([F4, F4U]))
    codes = st.integers(min_value=0, max_value=r.order - 1)
    x = np.array(data.draw(st.lists(codes, min_size=n, max_size=n)), np.uint8)
    y = np.array(data.draw(st.lists(codes, min_size=n, max_size=n)), np.uint8)
    lam = ring.element(r, data.draw(st.sampled_from(ring.unitary_codes(r))))
    for j in range(1, n):
        assert circ.theta(x, y, j, lam) == lam * circ.theta(y, x, n - j, lam.conj())


@pytest.mark.parametrize('r', [F4, F4U])
def test_block_reflection(r):
    gen = np.random.default_rng(11)
    k, n = 3, 5
    for _ in range(20):
        blocks = gen.integers(0, r.order, (k, n)).astype(np.uint8)
        mu = random_unitary(gen, r)
        mu_bar = mu.conj()
        for j in range(k):
            for i in range(k):
                mirror = (k - j, int(circ.cyclic_index(i + j, k)))
                assert circ.block_theta(blocks, j, i, 0, mu_bar) == \
                    circ.block_theta(blocks, mirror[0], mirror[1], 0, mu_bar).conj()
                for t in range(1, n):
                    other = circ.block_theta(blocks, mirror[0], mirror[1], n - t,
                                             mu_bar)
                    assert circ.block_theta(blocks, j, i, t, mu_bar) == \
                        (mu * other).conj()


if __name__ == '__main__':
    unittest.main()
