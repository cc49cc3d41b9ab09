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

"""Pre-enumerated unitary mu-circulant matrices.

Theorem 1 searches draw C = sigma_mu(c) from this table instead of testing
random c. Tables are cached as `unitary_<ring>_<n>.tbl`: a version header
followed by one `<mu> <c>` line per vector, both in hex notation.
"""

from collections import OrderedDict
import logging
import os

import numpy as np

from .. import circulant as circ
from .. import ring as rng
from ..errors import BudgetExceeded, ConfigInvalid

TABLE_HEADER = '# selfdual-unitary v1'
DEFAULT_BUDGET = 16 ** 7
CHUNK = 1 << 16


class UnitaryCirculantTable(object):
    """Generating vectors c with sigma_mu(c) * conj(sigma_mu(c))^T = I, per mu."""

    def __init__(self, ring, n, vectors):
        self.ring = ring
        self.n = n
        self.vectors = OrderedDict(
            (int(mu), np.asarray(v, dtype=np.uint8).reshape(-1, n))
            for mu, v in sorted(vectors.items()))

    def vectors_for(self, mu):
        empty = np.zeros((0, self.n), dtype=np.uint8)
        return self.vectors.get(rng.code_of(mu), empty)

    def counts(self):
        return OrderedDict((mu, len(v)) for mu, v in self.vectors.items())

    @property
    def total(self):
        return sum(len(v) for v in self.vectors.values())

    def write(self, path):
        with open(path, 'w') as f:
            f.write('{} ring={} n={}\n'.format(TABLE_HEADER, self.ring.name,
                                                self.n))
            for mu, vectors in self.vectors.items():
                mu_text = rng.encode(rng.element(self.ring, mu))
                for v in vectors:
                    f.write('{} {}\n'.format(mu_text,
                                             rng.encode_vector(v, self.ring)))

    @staticmethod
    def read(path, ring, n):
        with open(path) as f:
            header = f.readline().strip()
            expected = '{} ring={} n={}'.format(TABLE_HEADER, ring.name, n)
            if header != expected:
                raise ConfigInvalid('{} has header "{}", expected "{}"'.format(
                    path, header, expected))
            vectors = OrderedDict(
                (int(mu), []) for mu in rng.unitary_codes(ring))
            for line in f:
                mu_text, v_text = line.split()
                vectors[rng.decode(mu_text, ring).code].append(
                    rng.decode_vector(v_text, ring))
        return UnitaryCirculantTable(ring, n, dict(
            (mu, np.array(v, dtype=np.uint8)) for mu, v in vectors.items()))


def table_filename(ring, n):
    return 'unitary_{}_{}.tbl'.format(ring.name, n)


def all_vectors(ring, n, start, stop):
    """Vectors number start..stop-1 of ring^n, coordinate i being base-|R| digit i."""
    index = np.arange(start, stop, dtype=np.int64)
    powers = ring.order ** np.arange(n, dtype=np.int64)
    return ((index[:, None] // powers) % ring.order).astype(np.uint8)


def enumerate_unitary_circulants(ring, n, budget=DEFAULT_BUDGET, cache_dir=None):
    """Every unitary mu-circulant of order n for each unitary mu, optionally cached."""
    size = ring.order ** n
    if size > budget:
        raise BudgetExceeded(
            'testing {}^{} generating vectors exceeds the budget of {}'.format(
                ring.order, n, budget), required=size, budget=budget)
    path = None
    if cache_dir is not None:
        path = os.path.join(cache_dir, table_filename(ring, n))
        if os.path.exists(path):
            try:
                table = UnitaryCirculantTable.read(path, ring, n)
                logging.info('Read %d unitary circulants from %s', table.total,
                             path)
                return table
            except (ConfigInvalid, ValueError) as err:
                logging.warning('Ignoring unreadable cache %s: %s', path, err)

    found = OrderedDict((int(mu), []) for mu in rng.unitary_codes(ring))
    for start in range(0, size, CHUNK):
        gens = all_vectors(ring, n, start, min(size, start + CHUNK))
        for mu in found:
            found[mu].append(gens[circ.hermitian_unitary_mask(gens, mu)])
    table = UnitaryCirculantTable(ring, n, dict(
        (mu, np.concatenate(parts)) for mu, parts in found.items()))
    logging.info('Found %d unitary circulants of order %d over %s: %s',
                 table.total, n, ring.name, dict(table.counts()))

    if path is not None:
        if not os.path.isdir(cache_dir):
            os.makedirs(cache_dir)
        table.write(path)
        logging.info('Cached unitary table at %s', path)
    return table
