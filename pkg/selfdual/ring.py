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

"""Exact arithmetic over GF(4) and GF(4)+uGF(4).

Elements are stored as small integer codes equal to their hexadecimal symbol:
the low two bits hold the GF(4) coordinate `a` over the basis {1, w} and the
high two bits hold `b` in `a + b*u`. GF(4) is the subset of codes 0-3, so one
set of 16x16 tables serves both rings and vectors are plain uint8 arrays.

Both rings have characteristic 2, so negation is the identity and every
"-1" that appears in a self-duality condition is implemented as 1.
"""

from collections import namedtuple
import numpy as np
import six

from .errors import BadSymbol, MixedRings, NotAUnit


Ring = namedtuple('Ring', ['name', 'order', 'symbols'])

F4 = Ring('f4', 4, '0123')
F4U = Ring('f4u', 16, '0123456789ABCDEF')

RINGS = {F4.name: F4, F4U.name: F4U}

ZERO_CODE = 0
ONE_CODE = 1
OMEGA_CODE = 2
U_CODE = 4


def ring_by_name(name):
    try:
        return RINGS[six.ensure_text(name).strip().lower()]
    except KeyError:
        raise BadSymbol('unknown ring "{}", expected one of {}'.format(
            name, sorted(RINGS)))


def _f4_mul(x, y):
    x0, x1 = x & 1, x >> 1
    y0, y1 = y & 1, y >> 1
    # w^2 = 1 + w
    const = (x0 & y0) ^ (x1 & y1)
    omega = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1)
    return const | (omega << 1)


def _f4_conj(x):
    # a + b*w  ->  a + b*w^2 = (a + b) + b*w
    x0, x1 = x & 1, x >> 1
    return (x0 ^ x1) | (x1 << 1)


def _build_tables():
    mul = np.zeros((16, 16), dtype=np.uint8)
    for x in range(16):
        a, b = x & 3, x >> 2
        for y in range(16):
            c, d = y & 3, y >> 2
            mul[x, y] = _f4_mul(a, c) | ((_f4_mul(a, d) ^ _f4_mul(b, c)) << 2)
    conj = np.array([_f4_conj(x & 3) | (_f4_conj(x >> 2) << 2)
                     for x in range(16)], dtype=np.uint8)
    inv = np.zeros(16, dtype=np.uint8)
    is_unit = np.zeros(16, dtype=bool)
    for x in range(16):
        for y in range(16):
            if mul[x, y] == ONE_CODE:
                inv[x] = y
                is_unit[x] = True
                break
    for table in (mul, conj, inv, is_unit):
        table.setflags(write=False)
    return mul, conj, inv, is_unit


MUL, CONJ, INV, IS_UNIT = _build_tables()


class RingElement(object):
    """An element of F4 or F4U together with the ring it belongs to."""

    __slots__ = ('ring', 'code')

    def __init__(self, ring, code):
        code = int(code)
        if not 0 <= code < ring.order:
            raise BadSymbol('code {} is not an element of {}'.format(
                code, ring.name))
        self.ring = ring
        self.code = code

    def _check(self, other):
        if not isinstance(other, RingElement):
            raise TypeError('expected RingElement, got {!r}'.format(other))
        if other.ring != self.ring:
            raise MixedRings('cannot combine {} and {} elements'.format(
                self.ring.name, other.ring.name))

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, self.code ^ other.code)

    # Characteristic 2.
    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, MUL[self.code, other.code])

    def __eq__(self, other):
        return (isinstance(other, RingElement) and other.ring == self.ring
                and other.code == self.code)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring.name, self.code))

    def __int__(self):
        return self.code

    def __index__(self):
        return self.code

    def __repr__(self):
        return 'RingElement({}, {})'.format(self.ring.name, encode(self))

    def __str__(self):
        return encode(self)

    @property
    def is_unit(self):
        return bool(IS_UNIT[self.code])

    def conj(self):
        return RingElement(self.ring, CONJ[self.code])

    def inv(self):
        if not self.is_unit:
            raise NotAUnit('{} is not a unit of {}'.format(encode(self),
                                                           self.ring.name))
        return RingElement(self.ring, INV[self.code])


def element(ring, code):
    return RingElement(ring, code)


def zero(ring):
    return RingElement(ring, ZERO_CODE)


def one(ring):
    return RingElement(ring, ONE_CODE)


def code_of(x):
    """Integer code of a RingElement, or of an int passed through."""
    if isinstance(x, RingElement):
        return x.code
    return int(x)


def arith(op, x, y=None):
    """Ring arithmetic: op is one of 'add', 'mul' or 'inv'."""
    if op == 'add':
        return x + y
    elif op == 'mul':
        return x * y
    elif op == 'inv':
        return x.inv()
    raise ValueError('unknown ring operation: {}'.format(op))


def negate(x):
    """Additive inverse; the identity map in characteristic 2."""
    return x


def conj(x):
    """Hermitian involution: a -> a^2 on F4, a + bu -> a^2 + b^2 u on F4U."""
    return x.conj()


def decode(sym, ring):
    sym = six.ensure_text(sym).strip().upper()
    if len(sym) != 1 or sym not in ring.symbols:
        raise BadSymbol('"{}" is not a {} symbol (expected one of {})'.format(
            sym, ring.name, ring.symbols))
    return RingElement(ring, ring.symbols.index(sym))


def encode(x):
    return x.ring.symbols[x.code]


def hex_codec(direction, sym, ring=None):
    if direction == 'decode':
        return decode(sym, ring)
    elif direction == 'encode':
        return encode(sym)
    raise ValueError('direction must be "encode" or "decode"')


def decode_vector(text, ring):
    """Parse the parenthesized hex form used in the tables, e.g. `(000333)`."""
    text = six.ensure_text(text).strip()
    if text.startswith('(') and text.endswith(')'):
        text = text[1:-1]
    if not text:
        raise BadSymbol('empty vector')
    return np.array([decode(s, ring).code for s in text], dtype=np.uint8)


def encode_vector(codes, ring=F4U):
    codes = np.asarray(codes, dtype=np.uint8)
    return '(' + ''.join(ring.symbols[int(c)] for c in codes) + ')'


def as_codes(values, ring):
    """Convert a sequence of RingElements, ints or a hex string to codes."""
    if isinstance(values, six.string_types):
        return decode_vector(values, ring)
    codes = []
    for v in values:
        if isinstance(v, RingElement) and v.ring != ring:
            raise MixedRings('{} element in a {} vector'.format(
                v.ring.name, ring.name))
        codes.append(code_of(v))
    codes = np.asarray(codes, dtype=np.uint8)
    check_codes(codes, ring)
    return codes


def check_codes(codes, ring):
    codes = np.asarray(codes)
    if codes.size and int(codes.max()) >= ring.order:
        raise BadSymbol('vector has entries outside {}'.format(ring.name))
    return codes


def elements(ring):
    return [RingElement(ring, c) for c in range(ring.order)]


def unitary_elements(ring):
    """U' = {x : x * conj(x) = 1}, found by testing every element."""
    return frozenset(x for x in elements(ring) if x * x.conj() == one(ring))


def unitary_codes(ring):
    return tuple(sorted(x.code for x in unitary_elements(ring)))


def is_unitary_code(code):
    return MUL[code, CONJ[code]] == ONE_CODE


def xor_sum(values, axis=-1):
    """Ring sum along an axis (ring addition is XOR of codes)."""
    return np.bitwise_xor.reduce(np.asarray(values, dtype=np.uint8), axis=axis)


def hermitian_product(x, y):
    """<x, y>_H = sum x_i conj(y_i) along the last axis."""
    x = np.asarray(x, dtype=np.uint8)
    y = np.asarray(y, dtype=np.uint8)
    return xor_sum(MUL[x, CONJ[y]])
