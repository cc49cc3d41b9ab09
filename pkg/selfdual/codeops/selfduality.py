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

import numpy as np

from ..errors import NotStandardForm
from ..generator import GeneratorMatrix, eliminate


def standard_form(g):
    """(I_k | X) for a column permutation of the code generated by `g`.

    Returns the new generator and the permutation `perm`, so that column i
    of the result is column perm[i] of `g`.
    """
    reduced, pivots = eliminate(g.entries)
    if len(pivots) < g.k:
        raise NotStandardForm('rows of the {} generator are not free of rank {}'
                              .format(g.ring.name, g.k))
    pivot_cols = [c for _, c in pivots]
    rest = [c for c in range(g.n) if c not in set(pivot_cols)]
    perm = np.array(pivot_cols + rest, dtype=np.intp)
    return GeneratorMatrix(g.ring, reduced[:, perm]), perm


def verify_hermitian_self_dual(g):
    """Rows pairwise Hermitian orthogonal, free of rank k, and n = 2k."""
    if not g.is_standard_form():
        g, _ = standard_form(g)
    return g.n == 2 * g.k and not np.any(g.hermitian_gram())
