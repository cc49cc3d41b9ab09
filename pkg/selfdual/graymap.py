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

"""The Gray map from GF(4)+uGF(4) to GF(4)^2 and the Lee weight."""

import numpy as np

from . import ring as rng
from .ring import F4U, MUL, U_CODE


def split(v):
    """(a, b) with v = a + b*u componentwise."""
    v = np.asarray(v, dtype=np.uint8)
    return v & 3, v >> 2


def gray_map(v):
    """a + bu -> (b, a + b) in block form: the b-vector followed by the (a+b)-vector."""
    a, b = split(rng.check_codes(v, F4U))
    return np.concatenate([b, a ^ b], axis=-1)


def lee_weight(v):
    """n1 + 2*n2 where n2 counts components with a != b and b != 0.

    n1 counts the remaining nonzero components; the zero component has weight 0.
    """
    a, b = split(v)
    n2 = np.count_nonzero((a != b) & (b != 0), axis=-1)
    n1 = np.count_nonzero((a | b) != 0, axis=-1) - n2
    return n1 + 2 * n2


def gray_generator(entries):
    """Rows phi(r) and phi(u*r) for every row r of an F4U generator.

    The result spans the Gray image over F4 (dimension twice the F4U rank).
    """
    entries = np.asarray(entries, dtype=np.uint8)
    rows = []
    for r in entries:
        rows.append(gray_map(r))
        rows.append(gray_map(MUL[U_CODE, r]))
    return np.array(rows, dtype=np.uint8)
