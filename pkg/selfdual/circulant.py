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

"""Lambda-circulant matrices and the Theta mapping.

A lambda-circulant matrix is stored as a `CirculantSpec`: its first row
(`gen`) and the constant `lam` that multiplies every entry wrapping around
the right edge. Theta evaluates entries of products B * conj(A)^T of such
matrices straight from the generating vectors; `DenseMatrix` exists for
the final generator assembly and for brute-force cross checks.

All vectors are uint8 arrays of element codes (see `ring`). Functions whose
name ends in `_codes` broadcast over leading axes so that a whole batch of
search candidates is evaluated at once.
"""

from collections import namedtuple
import numpy as np

from . import ring as rng
from .errors import DimensionMismatch, IndexOutOfRange, MixedRings, NotUnitaryLambda
from .ring import CONJ, MUL, ONE_CODE, xor_sum


def cyclic_index(i, n):
    """[i]_n, the least non-negative residue of i modulo n."""
    return np.mod(i, n)


def shift_left(x, j):
    """x_{[i+j]_n} along the last axis."""
    n = x.shape[-1]
    return x[..., cyclic_index(np.arange(n) + j, n)]


class DenseMatrix(object):

    def __init__(self, ring, entries):
        entries = np.array(entries, dtype=np.uint8, ndmin=2)
        if entries.ndim != 2:
            raise DimensionMismatch('matrix entries must be two dimensional')
        rng.check_codes(entries, ring)
        self.ring = ring
        self.entries = entries

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.ring == other.ring
                and np.array_equal(self.entries, other.entries))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'DenseMatrix({}, {}x{})'.format(self.ring.name, self.rows,
                                               self.cols)

    def __str__(self):
        return '\n'.join(rng.encode_vector(r, self.ring) for r in self.entries)


def identity(ring, n):
    return DenseMatrix(ring, np.eye(n, dtype=np.uint8))


def zeros(ring, rows, cols):
    return DenseMatrix(ring, np.zeros((rows, cols), dtype=np.uint8))


def exchange(ring, n):
    """J_n, the anti-diagonal permutation matrix."""
    return DenseMatrix(ring, np.eye(n, dtype=np.uint8)[::-1])


def p_lambda(ring, n, lam):
    """P_lambda = [[0, I_{n-1}], [lambda, 0]]; P_lambda^n = lambda * I_n."""
    entries = np.zeros((n, n), dtype=np.uint8)
    entries[np.arange(n - 1), np.arange(1, n)] = ONE_CODE
    entries[n - 1, 0] = rng.code_of(lam)
    return DenseMatrix(ring, entries)


def _same_ring(*mats):
    ring = mats[0].ring
    for m in mats[1:]:
        if m.ring != ring:
            raise MixedRings('matrices over {} and {}'.format(
                ring.name, m.ring.name))
    return ring


def matmul_codes(a, b):
    """Matrix product of two code arrays (no shape checks)."""
    return xor_sum(MUL[a[:, :, None], b[None, :, :]], axis=1)


def matmul(a, b):
    ring = _same_ring(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch('cannot multiply {}x{} by {}x{}'.format(
            a.rows, a.cols, b.rows, b.cols))
    return DenseMatrix(ring, matmul_codes(a.entries, b.entries))


def matadd(a, b):
    ring = _same_ring(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch('cannot add {} and {}'.format(a.shape, b.shape))
    return DenseMatrix(ring, a.entries ^ b.entries)


def transpose(a):
    return DenseMatrix(a.ring, a.entries.T)


def conjugate(a):
    return DenseMatrix(a.ring, CONJ[a.entries])


def hermitian_transpose(a):
    return DenseMatrix(a.ring, CONJ[a.entries.T])


def is_exchange(a):
    return (a.rows == a.cols and
            np.array_equal(a.entries, np.eye(a.rows, dtype=np.uint8)[::-1]))


def exchange_mul(left, right):
    """J * A reverses the rows of A; A * J reverses its columns."""
    ring = _same_ring(left, right)
    if left.cols != right.rows:
        raise DimensionMismatch('cannot multiply {}x{} by {}x{}'.format(
            left.rows, left.cols, right.rows, right.cols))
    if is_exchange(left):
        return DenseMatrix(ring, right.entries[::-1, :])
    elif is_exchange(right):
        return DenseMatrix(ring, left.entries[:, ::-1])
    raise ValueError('exchange_mul needs an exchange matrix on one side')


_MATRIX_OPS = {
    'mul': matmul,
    'add': matadd,
    'transpose': transpose,
    'conj': conjugate,
    'exchange_mul': exchange_mul,
}


def matrix_algebra(op, *args, **kwargs):
    try:
        fn = _MATRIX_OPS[op]
    except KeyError:
        raise ValueError('unknown matrix operation: {}'.format(op))
    return fn(*args, **kwargs)


CirculantSpec = namedtuple('CirculantSpec', ['ring', 'n', 'lam', 'gen'])


def make_spec(ring, lam, gen):
    gen = rng.as_codes(gen, ring)
    if not isinstance(lam, rng.RingElement):
        lam = rng.RingElement(ring, rng.code_of(lam))
    elif lam.ring != ring:
        raise MixedRings('lambda from {} for a {} matrix'.format(
            lam.ring.name, ring.name))
    return CirculantSpec(ring, len(gen), lam, gen)


def spec_from_hex(ring, lam_symbol, gen_text):
    return make_spec(ring, rng.decode(lam_symbol, ring),
                     rng.decode_vector(gen_text, ring))


def circulant_codes(gen, lam):
    """Entries of sigma_lam(gen): (i, j) -> gen[j-i] if j >= i else lam*gen[n+j-i]."""
    gen = np.asarray(gen, dtype=np.uint8)
    n = gen.shape[-1]
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    entries = gen[cyclic_index(cols - rows, n)]
    return np.where(cols < rows, MUL[rng.code_of(lam), entries], entries)


def materialize(spec):
    return DenseMatrix(spec.ring, circulant_codes(spec.gen, spec.lam))


def read_spec(matrix, lam):
    """The spec with the given lambda whose first row matches `matrix`."""
    return make_spec(matrix.ring, lam, matrix.entries[0])


def is_lambda_circulant(matrix, lam):
    if matrix.rows != matrix.cols:
        return False
    return materialize(read_spec(matrix, lam)) == matrix


def transpose_spec(spec):
    """A^T as a lambda^-1-circulant: first row (a_0, lam*a_{n-1}, ..., lam*a_1)."""
    lam_inv = spec.lam.inv()
    gen = spec.gen.copy()
    if spec.n > 1:
        gen[1:] = MUL[spec.lam.code, spec.gen[1:][::-1]]
    return CirculantSpec(spec.ring, spec.n, lam_inv, gen)


def conj_spec(spec):
    return CirculantSpec(spec.ring, spec.n, spec.lam.conj(), CONJ[spec.gen])


def _check_index(j, n):
    if not 0 <= j < n:
        raise IndexOutOfRange('index {} outside [0, {}]'.format(j, n - 1))


def theta_codes(x, y, j, lam):
    """Theta(x, y, j)[lam] over the last axis; broadcasts over batches.

    sum_{i < n-j} x_{[i+j]_n} y_i  +  lam * sum_{i >= n-j} x_{[i+j]_n} y_i
    """
    x = np.asarray(x, dtype=np.uint8)
    y = np.asarray(y, dtype=np.uint8)
    n = x.shape[-1]
    _check_index(j, n)
    if j == 0:
        return xor_sum(MUL[x, y])
    prods = MUL[shift_left(x, j), y]
    aligned = xor_sum(prods[..., :n - j])
    wrapped = xor_sum(prods[..., n - j:])
    lam = np.asarray(rng.code_of(lam) if np.ndim(lam) == 0 else lam,
                     dtype=np.uint8)
    return aligned ^ MUL[lam, wrapped]


def theta(x, y, j, lam):
    ring = lam.ring
    x = rng.as_codes(x, ring)
    y = rng.as_codes(y, ring)
    if len(x) != len(y):
        raise DimensionMismatch('theta of vectors of lengths {} and {}'.format(
            len(x), len(y)))
    return rng.RingElement(ring, theta_codes(x, y, j, lam.code))


def _check_unitary(lam):
    if not rng.is_unitary_code(rng.code_of(lam)):
        raise NotUnitaryLambda('{!r} is not unitary (lambda*conj(lambda) != 1)'
                               .format(lam))


def theta_product(b, a, lam):
    """Generating vector v of B * conj(A)^T where A = sigma_lam(a), B = sigma_lam(b).

    v_j = Theta(b, conj(a), j)[conj(lam)].
    """
    _check_unitary(lam)
    ring = lam.ring
    a = rng.as_codes(a, ring)
    b = rng.as_codes(b, ring)
    lam_bar = CONJ[lam.code]
    return np.array([theta_codes(b, CONJ[a], j, lam_bar) for j in range(len(a))],
                    dtype=np.uint8)


def self_theta_profile(a, lam):
    """theta_product(a, a, lam) from the first floor(n/2)+1 values.

    The rest follow from v_j = conj(lam * v_{n-j}).
    """
    _check_unitary(lam)
    a = rng.as_codes(a, lam.ring)
    n = len(a)
    lam_bar = CONJ[lam.code]
    v = np.zeros(n, dtype=np.uint8)
    for j in range(n // 2 + 1):
        v[j] = theta_codes(a, CONJ[a], j, lam_bar)
    for j in range(n // 2 + 1, n):
        v[j] = CONJ[MUL[lam.code, v[n - j]]]
    return v


def hermitian_unitary_mask(gens, lam):
    """For each row c of `gens`: does sigma_lam(c) * conj(sigma_lam(c))^T = I hold?

    `lam` is a code or an array of codes broadcasting against the batch axis.
    Only Theta(c, conj(c), j)[conj(lam)] for j <= floor(n/2) is evaluated.
    """
    gens = np.asarray(gens, dtype=np.uint8)
    n = gens.shape[-1]
    lam_bar = CONJ[np.asarray(lam, dtype=np.uint8)]
    conj_gens = CONJ[gens]
    ok = theta_codes(gens, conj_gens, 0, lam_bar) == ONE_CODE
    for j in range(1, n // 2 + 1):
        ok &= theta_codes(gens, conj_gens, j, lam_bar) == 0
    return ok


def is_hermitian_unitary(spec, target='plus_one'):
    """Tests A * conj(A)^T = target * I_n from half of the Theta profile.

    `target` is 'plus_one' or 'minus_one'; they coincide in characteristic 2.
    """
    if target not in ('plus_one', 'minus_one'):
        raise ValueError('target must be "plus_one" or "minus_one"')
    _check_unitary(spec.lam)
    return bool(hermitian_unitary_mask(spec.gen, spec.lam.code))


def block_theta(blocks, j, i, t, lam):
    """g(j, i, t) = Theta(a_{[i+j]_k}, conj(a_i), t)[lam] for a stack of k blocks."""
    blocks = rng.as_codes(np.asarray(blocks).ravel(), lam.ring).reshape(
        np.shape(blocks))
    k = blocks.shape[0]
    return rng.RingElement(
        lam.ring,
        theta_codes(blocks[cyclic_index(i + j, k)], CONJ[blocks[i]], t, lam.code))
