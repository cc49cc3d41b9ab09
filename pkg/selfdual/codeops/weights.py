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

"""Exhaustive weight distributions and the alpha parameter.

All 4^k messages are visited: the span of the first `inner_rows` rows is
built once as an array, and the F2-basis {r, w*r} of the remaining rows is
walked in binary Gray-code order, so each step XORs a single basis vector
into the offset that is added to the whole inner span.
"""

from collections import OrderedDict
import concurrent.futures
import logging

import numpy as np
from pkg_resources import resource_filename
import yaml

from ..constructions import as_f4
from ..errors import BudgetExceeded, UnknownEnumeratorLength
from . import packing

DEFAULT_BUDGET = 4 ** 14
DEFAULT_INNER_ROWS = 8
PARTITION_BITS = 6


class WeightDistribution(object):
    """Counts A_w of codewords by weight; truncated above `cutoff` if given."""

    def __init__(self, length, counts, cutoff=None):
        self.length = length
        self.cutoff = cutoff
        self.counts = OrderedDict(
            (int(w), int(c)) for w, c in sorted(dict(counts).items())
            if c and (cutoff is None or w <= cutoff))

    @property
    def complete(self):
        return self.cutoff is None

    def __getitem__(self, w):
        return self.counts.get(w, 0)

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def min_weight(self):
        nonzero = [w for w in self.counts if w > 0]
        return min(nonzero) if nonzero else None

    def __eq__(self, other):
        return (isinstance(other, WeightDistribution) and
                self.length == other.length and self.cutoff == other.cutoff and
                self.counts == other.counts)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def to_text(self):
        return ' '.join('{}:{}'.format(w, c) for w, c in self.counts.items())

    def __repr__(self):
        return 'WeightDistribution(n={}, {})'.format(self.length, self.to_text())


def is_type_iv(distribution):
    return all(w % 2 == 0 for w in distribution.counts)


def _count_partition(task):
    """Weight histogram of one partition of the outer Gray walk."""
    inner_lo, inner_hi, basis_lo, basis_hi, prefix, free_bits, length = task
    off_lo = np.uint64(0)
    off_hi = np.uint64(0)
    for bit in range(len(basis_lo) - free_bits):
        if (prefix >> bit) & 1:
            off_lo ^= basis_lo[free_bits + bit]
            off_hi ^= basis_hi[free_bits + bit]
    counts = np.zeros(length + 1, dtype=np.int64)
    counts += np.bincount(packing.weight(inner_lo ^ off_lo, inner_hi ^ off_hi),
                          minlength=length + 1)
    for step in range(1, 1 << free_bits):
        bit = (step & -step).bit_length() - 1
        off_lo ^= basis_lo[bit]
        off_hi ^= basis_hi[bit]
        counts += np.bincount(
            packing.weight(inner_lo ^ off_lo, inner_hi ^ off_hi),
            minlength=length + 1)
    return counts


def _partition_tasks(g, inner_rows):
    lo, hi = packing.pack(g.entries)
    m = min(inner_rows, g.k)
    inner_lo, inner_hi = packing.span(lo[:m], hi[:m])
    basis_lo, basis_hi = [], []
    for r_lo, r_hi in zip(lo[m:], hi[m:]):
        for s in (1, 2):
            s_lo, s_hi = packing.scale(r_lo, r_hi, s)
            basis_lo.append(np.uint64(s_lo))
            basis_hi.append(np.uint64(s_hi))
    bits = len(basis_lo)
    fixed = min(PARTITION_BITS, bits)
    free_bits = bits - fixed
    return [(inner_lo, inner_hi, basis_lo, basis_hi, prefix, free_bits, g.n)
            for prefix in range(1 << fixed)]


def check_budget(k, budget):
    if 4 ** k > budget:
        raise BudgetExceeded(
            'enumerating 4^{} messages exceeds the budget of {}'.format(k, budget),
            required=4 ** k, budget=budget)


def weight_distribution_exhaustive(g, cutoff=None, budget=DEFAULT_BUDGET,
                                   workers=1, inner_rows=DEFAULT_INNER_ROWS):
    """Exact A_w of the code generated by `g` (over F4U: of its Gray image)."""
    g = as_f4(g)
    check_budget(g.k, budget)
    tasks = _partition_tasks(g, inner_rows)
    logging.debug('Enumerating 4^%d codewords of length %d in %d partitions',
                  g.k, g.n, len(tasks))
    counts = np.zeros(g.n + 1, dtype=np.int64)
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_count_partition, tasks):
                counts += part
    else:
        for i, task in enumerate(tasks):
            counts += _count_partition(task)
            logging.debug('Partition %d/%d done', i + 1, len(tasks))
    return WeightDistribution(g.n, dict(enumerate(counts)), cutoff)


_ENUMERATORS = {}


def enumerators():
    """Leading weight-enumerator data keyed by code length."""
    if not _ENUMERATORS:
        path = resource_filename('selfdual.data', 'enumerators.yaml')
        with open(path) as f:
            _ENUMERATORS.update(yaml.safe_load(f))
    return _ENUMERATORS


def enumerator(length):
    try:
        return enumerators()[length]
    except KeyError:
        raise UnknownEnumeratorLength(
            'no weight enumerator known for length {} (known: {})'.format(
                length, sorted(enumerators())))


def alpha_weight(length):
    return enumerator(length)['weight']


def alpha_weight_or(length, d):
    """The enumerator weight for known lengths, otherwise d."""
    try:
        return alpha_weight(length)
    except UnknownEnumeratorLength:
        return d


def second_coefficient(length, alpha):
    """A_{w+2} implied by alpha."""
    e = enumerator(length)
    return e['second_constant'] - e['second_slope'] * alpha


def classify_alpha(length, alpha):
    """'new', 'known' or 'unlisted' against the published alpha values."""
    e = enumerator(length)
    z, rem = divmod(alpha, e['multiplier'])
    if not rem and z in e['new']:
        return 'new'
    if not rem and z in e['known']:
        return 'known'
    return 'unlisted'


def alpha_distribution(g, weight=None, budget=DEFAULT_BUDGET, workers=1,
                       inner_rows=DEFAULT_INNER_ROWS):
    """(alpha, truncated distribution up to weight + 2)."""
    g = as_f4(g)
    if weight is None:
        weight = alpha_weight(g.n)
    dist = weight_distribution_exhaustive(g, cutoff=weight + 2, budget=budget,
                                          workers=workers, inner_rows=inner_rows)
    return dist[weight], dist


def alpha_of(g, weight=None, budget=DEFAULT_BUDGET, workers=1,
             inner_rows=DEFAULT_INNER_ROWS):
    return alpha_distribution(g, weight, budget, workers, inner_rows)[0]


def extremal_bound(length):
    return 2 * (length // 6) + 2
