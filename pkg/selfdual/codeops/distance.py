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

"""Minimum distance by enumeration over several information sets.

Systematic generators are found greedily, each elimination preferring columns
not yet used as pivots; matrix j contributes r_j new pivot columns. After all
messages of weight <= w have been tried on every matrix, any codeword not yet
seen has weight at least sum_j max(0, w + 1 - (k - r_j)). Enumeration stops
once that lower bound meets the lightest codeword found.
"""

import itertools
import logging
import math

import numpy as np

from ..constructions import as_f4
from ..errors import NoProgress, NotStandardForm
from ..generator import eliminate
from . import packing
from .weights import DEFAULT_BUDGET, weight_distribution_exhaustive

DEFAULT_LEVEL_BUDGET = 400000000
DEFAULT_CHUNK = 1 << 20


def information_sets(g):
    """[(reduced rows, r_j)] with pairwise disjoint sets of new pivot columns."""
    used = set()
    matrices = []
    while len(used) < g.n:
        order = ([c for c in range(g.n) if c not in used] +
                 [c for c in range(g.n) if c in used])
        reduced, pivots = eliminate(g.entries, order)
        if len(pivots) < g.k:
            raise NotStandardForm('generator rows are not free of rank {}'.format(
                g.k))
        new = [c for _, c in pivots if c not in used]
        if not new:
            break
        matrices.append((reduced[:g.k], len(new)))
        used.update(new)
    return matrices


def _patterns(w):
    """Coefficient tuples of length w over {1, w, w^2} with the first fixed to 1."""
    tails = itertools.product((1, 2, 3), repeat=w - 1)
    return np.array([(1,) + t for t in tails], dtype=np.intp).reshape(-1, w)


def level_count(k, w):
    return math.comb(k, w) * 3 ** (w - 1)


def _level_min(table_lo, table_hi, k, w, chunk):
    """Lightest codeword among messages of Hamming weight exactly w."""
    patterns = _patterns(w)
    per_chunk = max(1, chunk // len(patterns))
    combos = itertools.combinations(range(k), w)
    best = None
    while True:
        block = np.array(list(itertools.islice(combos, per_chunk)), dtype=np.intp)
        if not len(block):
            return best
        lo = np.zeros((len(block), len(patterns)), dtype=np.uint64)
        hi = np.zeros_like(lo)
        for i in range(w):
            rows = block[:, None, i]
            scalars = patterns[None, :, i]
            lo ^= table_lo[scalars, rows]
            hi ^= table_hi[scalars, rows]
        found = int(packing.weight(lo, hi).min())
        best = found if best is None else min(best, found)


def info_set_distance(g, stop_below=None, level_budget=DEFAULT_LEVEL_BUDGET,
                      chunk=DEFAULT_CHUNK):
    """Exact minimum distance of an F4 code.

    If `stop_below` is given, returns as soon as a codeword lighter than it is
    found (the result is then only an upper bound).
    """
    matrices = information_sets(g)
    ranks = [r for _, r in matrices]
    tables = []
    for reduced, _ in matrices:
        tables.append(packing.scaled_rows(*packing.pack(reduced)))
    logging.debug('Information sets for [%d, %d]: new pivots %s', g.n, g.k, ranks)
    upper = g.n + 1
    lower = 1
    for w in range(1, g.k + 1):
        cost = level_count(g.k, w) * len(tables)
        if cost > level_budget:
            raise NoProgress('level {} needs {} codewords, budget is {}'.format(
                w, cost, level_budget), lower, upper)
        for table_lo, table_hi in tables:
            found = _level_min(table_lo, table_hi, g.k, w, chunk)
            if found is not None and found < upper:
                upper = found
                if stop_below is not None and upper < stop_below:
                    return upper
        lower = max(lower, sum(max(0, w + 1 - (g.k - r)) for r in ranks))
        logging.debug('w=%d: %d <= d <= %d', w, lower, upper)
        if lower >= upper:
            return upper
    return upper


def min_distance(g, method='info_set', budget=DEFAULT_BUDGET, stop_below=None,
                 level_budget=DEFAULT_LEVEL_BUDGET, workers=1):
    """Minimum Hamming distance (Lee distance for F4U codes, via the Gray image)."""
    g = as_f4(g)
    if method == 'exhaustive':
        return weight_distribution_exhaustive(g, budget=budget,
                                              workers=workers).min_weight
    elif method == 'info_set':
        try:
            return info_set_distance(g, stop_below=stop_below,
                                     level_budget=level_budget)
        except NoProgress as err:
            if 4 ** g.k > budget:
                raise
            logging.info('Information sets stalled at %d <= d <= %d, '
                         'enumerating all 4^%d codewords', err.lower, err.upper,
                         g.k)
            return weight_distribution_exhaustive(g, budget=budget,
                                                  workers=workers).min_weight
    raise ValueError('unknown method "{}"'.format(method))
