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

"""Bit-sliced F4 vectors.

A vector of length n <= 64 is held as two uint64 words: bit i of `lo` is the
coefficient of 1 in coordinate i and bit i of `hi` the coefficient of w.
Addition is XOR of both words and the Hamming weight is popcount(lo | hi).
"""

import numpy as np

from ..errors import DimensionMismatch

MAX_LENGTH = 64


def pack(entries):
    """(lo, hi) words for the last axis of an array of F4 codes."""
    entries = np.asarray(entries, dtype=np.uint8)
    n = entries.shape[-1]
    if n > MAX_LENGTH:
        raise DimensionMismatch('cannot pack vectors longer than {}'.format(
            MAX_LENGTH))
    bits = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    lo = ((entries & 1).astype(np.uint64) * bits).sum(axis=-1, dtype=np.uint64)
    hi = ((entries >> 1).astype(np.uint64) * bits).sum(axis=-1, dtype=np.uint64)
    return lo, hi


def unpack(lo, hi, n):
    shifts = np.arange(n, dtype=np.uint64)
    lo_bits = (np.asarray(lo, dtype=np.uint64)[..., None] >> shifts) & np.uint64(1)
    hi_bits = (np.asarray(hi, dtype=np.uint64)[..., None] >> shifts) & np.uint64(1)
    return (lo_bits | (hi_bits << np.uint64(1))).astype(np.uint8)


def scale(lo, hi, s):
    """s * v for s in {0, 1, w, w^2} given as codes 0-3."""
    if s == 0:
        return np.zeros_like(lo), np.zeros_like(hi)
    elif s == 1:
        return lo, hi
    elif s == 2:
        # w(a + bw) = b + (a + b)w
        return hi, lo ^ hi
    elif s == 3:
        # w^2(a + bw) = (a + b) + aw
        return lo ^ hi, lo
    raise ValueError('{} is not an F4 code'.format(s))


def scaled_rows(lo, hi):
    """(4, k) tables of every scalar multiple of every row."""
    out_lo = np.zeros((4,) + np.shape(lo), dtype=np.uint64)
    out_hi = np.zeros_like(out_lo)
    for s in range(1, 4):
        out_lo[s], out_hi[s] = scale(lo, hi, s)
    return out_lo, out_hi


def weight(lo, hi):
    return np.bitwise_count(lo | hi)


def span(lo, hi):
    """Every F4 combination of the given rows, 4^m words."""
    span_lo = np.zeros(1, dtype=np.uint64)
    span_hi = np.zeros(1, dtype=np.uint64)
    for r_lo, r_hi in zip(lo, hi):
        parts_lo, parts_hi = [], []
        for s in range(4):
            s_lo, s_hi = scale(r_lo, r_hi, s)
            parts_lo.append(span_lo ^ s_lo)
            parts_hi.append(span_hi ^ s_hi)
        span_lo = np.concatenate(parts_lo)
        span_hi = np.concatenate(parts_hi)
    return span_lo, span_hi
