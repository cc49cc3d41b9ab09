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

"""Seeded random search over construction parameters.

Candidates are drawn in batches, rejected with the vectorized Theta
conditions, and the survivors are built. The minimum distance is computed
first (stopping early below the target) and alpha only for codes that meet
the target and fit the enumeration budget. Each worker draws from its own
stream spawned from the seed, so a run is reproducible for a fixed number
of workers.
"""

from collections import namedtuple
import concurrent.futures
import datetime
import logging

import numpy as np
import pytz
import six

from common.run_config import RunConfig
from .. import constructions
from .. import ring as rng
from ..codeops import (CodeRecord, alpha_of, alpha_weight_or, min_distance,
                       verify_hermitian_self_dual)
from ..constructions import as_f4
from ..constructions.construction import parse_vectors
from ..errors import BudgetExceeded, ConfigInvalid, NoProgress
from . import tables
from .unitary import enumerate_unitary_circulants

SearchConfig = namedtuple('SearchConfig', [
    'construction', 'ring', 'n', 'k', 'target_d', 'budget', 'seed', 'lambdas',
    'mus', 'base', 'workers', 'extended', 'batch_size', 'max_records'
])

DEFAULT_K = {'thm1': 1, 'thm2': 2, 'thm3': 1, 'building_up': 1}


def _codes(values, ring):
    if not values:
        return None
    return tuple(rng.decode(v, ring).code if isinstance(v, six.string_types)
                 else rng.code_of(v) for v in values)


def make_search_config(construction, ring, n=None, k=None, target_d=None,
                       budget=10 ** 6, seed=0, lambdas=None, mus=None, base=None,
                       workers=1, extended=False, batch_size=4096,
                       max_records=None):
    """Validated SearchConfig; `lambdas` and `mus` restrict the unitary sets."""
    if construction not in constructions.TAGS:
        raise ConfigInvalid('unknown construction "{}", expected one of {}'
                            .format(construction, ', '.join(constructions.TAGS)))
    if isinstance(ring, six.string_types):
        ring = rng.ring_by_name(ring)
    if construction == 'building_up':
        if not base:
            raise ConfigInvalid('building_up needs --base <table>:<row>')
    elif not n or n < 1:
        raise ConfigInvalid('n must be a positive integer')
    if k is None:
        k = DEFAULT_K[construction]
    if k < 1:
        raise ConfigInvalid('k must be a positive integer')
    for name, value in (('budget', budget), ('workers', workers),
                        ('batch_size', batch_size)):
        if value is None or value < 1:
            raise ConfigInvalid('{} must be at least 1'.format(name))
    if max_records is not None and max_records < 1:
        raise ConfigInvalid('max_records must be at least 1')
    return SearchConfig(construction, ring, n, k, target_d, int(budget),
                        int(seed), _codes(lambdas, ring), _codes(mus, ring),
                        base, int(workers), bool(extended), int(batch_size),
                        max_records)


def make_construction(cfg, run_config):
    cls = constructions.get_construction(cfg.construction)
    if cfg.construction == 'building_up':
        base = tables.load_base(cfg.base)
        return cls(base.ring, base.n, cfg.k, cfg.lambdas, cfg.mus, base=base,
                   base_id=cfg.base)
    table = None
    if cfg.construction == 'thm1':
        table = enumerate_unitary_circulants(cfg.ring, cfg.n,
                                             budget=run_config.unitary_budget,
                                             cache_dir=run_config.cache_dir)
    return cls(cfg.ring, cfg.n, cfg.k, cfg.lambdas, cfg.mus, unitary_table=table)


def measure(g, target_d, run_config, extended=False, workers=1):
    """(d, alpha) of a built code; d is only an upper bound when below target_d."""
    f4 = as_f4(g)
    d = min_distance(f4, stop_below=target_d,
                     level_budget=run_config.info_set_budget)
    if target_d is not None and d < target_d:
        return d, None
    alpha = None
    try:
        alpha = alpha_of(f4, weight=alpha_weight_or(f4.n, d),
                         budget=run_config.budget(extended), workers=workers,
                         inner_rows=run_config.inner_rows)
    except BudgetExceeded:
        logging.debug('Skipping alpha of a [%d, %d] code', f4.n, f4.k)
    return d, alpha


def _quotas(budget, workers):
    share, extra = divmod(budget, workers)
    return [share + (1 if i < extra else 0) for i in range(workers)]


def search_stream(construction, cfg, run_config, gen, budget):
    """Records found by one worker drawing `budget` candidates from `gen`."""
    drawn = 0
    accepted = 0
    emitted = 0
    while drawn < budget:
        size = min(cfg.batch_size, budget - drawn)
        batch = construction.draw_batch(gen, size)
        drawn += size
        for i in np.nonzero(construction.conditions_batch(batch))[0]:
            params = construction.params_at(batch, i)
            if not construction.conditions(params):
                continue
            accepted += 1
            g = construction.build(params)
            try:
                d, alpha = measure(g, cfg.target_d, run_config, cfg.extended)
            except NoProgress as err:
                logging.warning('Distance undecided (%d <= d <= %d), skipping',
                                err.lower, err.upper)
                continue
            logging.debug('Candidate %d: d=%d', accepted, d)
            if cfg.target_d is not None and d < cfg.target_d:
                continue
            f4 = as_f4(g)
            record = CodeRecord(construction.tag, construction.ring.name, f4.n,
                                f4.k, construction.params_to_fields(params), d,
                                alpha, cfg.seed, datetime.datetime.now(pytz.utc))
            emitted += 1
            logging.info('Found [%d, %d, %d] code, alpha=%s', f4.n, f4.k, d,
                         alpha)
            yield record
            if cfg.max_records is not None and emitted >= cfg.max_records:
                return
    logging.info('Drew %d candidates, %d satisfied the conditions, %d emitted',
                 drawn, accepted, emitted)


def _run_worker(task):
    construction, cfg, run_config, seed_seq, budget = task
    gen = np.random.default_rng(seed_seq)
    return list(search_stream(construction, cfg, run_config, gen, budget))


def run_search(cfg, run_config=None):
    """Generator of CodeRecords; single-worker runs are fully deterministic."""
    if run_config is None:
        run_config = RunConfig.make_default()
    construction = make_construction(cfg, run_config)
    logging.info('Searching %s over %s: length %d, %d candidates of %d, seed %d',
                 cfg.construction, construction.ring.name, construction.length,
                 cfg.budget, construction.search_field_size(), cfg.seed)
    streams = np.random.SeedSequence(cfg.seed).spawn(cfg.workers)
    quotas = _quotas(cfg.budget, cfg.workers)
    if cfg.workers == 1:
        gen = np.random.default_rng(streams[0])
        for record in search_stream(construction, cfg, run_config, gen,
                                    quotas[0]):
            yield record
        return
    tasks = [(construction, cfg, run_config, s, q)
             for s, q in zip(streams, quotas)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as ex:
        futures = [ex.submit(_run_worker, t) for t in tasks]
        for future in concurrent.futures.as_completed(futures):
            for record in future.result():
                yield record


def construction_for_record(record):
    ring = rng.ring_by_name(record.ring)
    cls = constructions.get_construction(record.construction)
    if record.construction == 'building_up':
        base = tables.load_base(record.params['base'])
        return cls(base.ring, base.n, base=base, base_id=record.params['base'])
    vectors = parse_vectors(record.params['vectors'], ring)
    k = len(vectors) if record.construction in ('thm2', 'thm3') else 1
    return cls(ring, len(vectors[0]), k)


def reverify_record(record, run_config=None, extended=False):
    """Rebuild a record from its fields and recompute d and alpha.

    Raises ConfigInvalid if the fields no longer describe a self-dual code.
    """
    if run_config is None:
        run_config = RunConfig.make_default()
    construction = construction_for_record(record)
    params = construction.params_from_fields(record.params)
    g = as_f4(construction.build_checked(params))
    if not verify_hermitian_self_dual(g):
        raise ConfigInvalid('record does not describe a self-dual code: {}'
                            .format(dict(record.params)))
    d = min_distance(g, level_budget=run_config.info_set_budget)
    alpha = None
    if record.alpha is not None:
        alpha = alpha_of(g, weight=alpha_weight_or(g.n, d),
                         budget=run_config.budget(extended),
                         inner_rows=run_config.inner_rows)
    return record._replace(length=g.n, rank=g.k, min_distance=d, alpha=alpha,
                           timestamp=datetime.datetime.now(pytz.utc))
