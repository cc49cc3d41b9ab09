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

"""Code tables shipped in `selfdual.data` and their verification.

`tables.yaml` indexes the csv files. Every row is decoded, checked against
its construction's conditions, built, tested for Hermitian self-duality and
compared with the table's minimum distance and alpha.
"""

from collections import OrderedDict, namedtuple
import csv
import hashlib
import logging

from pkg_resources import resource_filename
import yaml

from .. import ring as rng
from ..codeops import (alpha_distribution, alpha_weight_or, extremal_bound,
                       is_type_iv, min_distance, second_coefficient,
                       verify_hermitian_self_dual)
from ..codeops.weights import DEFAULT_BUDGET
from ..constructions import as_f4, building_up, thm1, thm2, thm3
from ..errors import (BudgetExceeded, ChecksumMismatch, ConfigInvalid,
                      NoProgress, SelfDualError, UnknownFixture)

INDEX_FILE = 'tables.yaml'

RowResult = namedtuple('RowResult', [
    'table', 'row', 'self_dual', 'min_distance', 'alpha', 'expected_distance',
    'expected_alpha', 'second_ok', 'passed', 'message'
])


def _data_path(name):
    return resource_filename('selfdual.data', name)


_INDEX = OrderedDict()


def table_index():
    if not _INDEX:
        with open(_data_path(INDEX_FILE)) as f:
            _INDEX.update(yaml.safe_load(f))
    return _INDEX


def table_ids():
    return list(table_index())


def table_info(table_id):
    try:
        return table_index()[table_id]
    except KeyError:
        raise UnknownFixture('no table "{}" (known: {})'.format(
            table_id, ', '.join(table_ids())))


def file_checksum(path):
    digest = hashlib.blake2b()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(1 << 16), b''):
            digest.update(chunk)
    return digest.hexdigest()


def load_table(table_id, check=True):
    """(metadata, rows) where rows are OrderedDicts keyed by the csv header."""
    info = table_info(table_id)
    path = _data_path(info['file'])
    if check:
        found = file_checksum(path)
        if found != info['checksum']:
            raise ChecksumMismatch('{} has checksum {}, index says {}'.format(
                info['file'], found, info['checksum']))
    with open(path) as f:
        reader = csv.DictReader(f)
        rows = [OrderedDict((k, row[k]) for k in reader.fieldnames)
                for row in reader]
    logging.debug('Table %s: %d rows, columns %s', table_id, len(rows),
                  list(rows[0]) if rows else [])
    return info, rows


def find_row(rows, number):
    for row in rows:
        if int(row['row']) == int(number):
            return row
    raise UnknownFixture('no row {}'.format(number))


def _block_columns(row):
    k = int(row['k'])
    return [row['a{}'.format(i + 1)] for i in range(k)]


def row_params(info, row):
    """(Construction, params) described by one table row."""
    tag = info['construction']
    if tag == 'building_up':
        base_id = '{}:{}'.format(info['base_table'], row['base'])
        base = load_base(base_id)
        construction = building_up.Construction(base.ring, base.n, base=base,
                                                base_id=base_id)
        params = building_up.make_params(
            base, row['epsilon'], rng.decode_vector(row['delta'], base.ring))
        return construction, params
    ring = rng.ring_by_name(info['ring'])
    if tag == 'thm1':
        params = thm1.make_params(ring, row['lambda'], row['mu'], row['a'],
                                  row['b'], row['c'])
        return thm1.Construction(ring, params.n), params
    elif tag == 'thm2':
        params = thm2.make_params(ring, row['lambda'], row['mu'],
                                  _block_columns(row))
        return thm2.Construction(ring, params.n, params.k), params
    elif tag == 'thm3':
        params = thm3.make_params(ring, row['x1'], row['x2'], row['x3'],
                                  _block_columns(row))
        return thm3.Construction(ring, params.n, params.k), params
    raise ConfigInvalid('table construction "{}" is not supported'.format(tag))


def load_base(base_id):
    """F4 generator of a table row named `<table>:<row>`.

    Rows of F4U tables give the generator of their Gray image.
    """
    table_id, sep, number = base_id.partition(':')
    if not sep:
        raise ConfigInvalid('base "{}" must look like <table>:<row>'.format(
            base_id))
    info, rows = load_table(table_id)
    construction, params = row_params(info, find_row(rows, number))
    return as_f4(construction.build_checked(params))


def verify_row(table_id, info, row, budget=DEFAULT_BUDGET, info_set_budget=None,
               workers=1, method='info_set'):
    expected_d = info.get('min_distance')
    expected_alpha = int(row['alpha']) if row.get('alpha') else None

    def result(self_dual, d=None, alpha=None, second_ok=None, message=''):
        passed = (self_dual and (expected_d is None or d == expected_d) and
                  (alpha is None or expected_alpha is None or
                   alpha == expected_alpha) and second_ok is not False)
        return RowResult(table_id, int(row['row']), self_dual, d, alpha,
                         expected_d, expected_alpha, second_ok, passed, message)

    try:
        construction, params = row_params(info, row)
        g = as_f4(construction.build_checked(params))
    except SelfDualError as err:
        return result(False, message=str(err))
    if not verify_hermitian_self_dual(g):
        return result(False, message='not Hermitian self-dual')

    kwargs = {} if info_set_budget is None else {'level_budget': info_set_budget}
    try:
        d = min_distance(g, method=method, budget=budget, workers=workers,
                         **kwargs)
    except BudgetExceeded as err:
        return result(True, message=str(err))
    except NoProgress as err:
        return result(True, message='d undecided: {} <= d <= {}'.format(
            err.lower, err.upper))
    if d > extremal_bound(g.n):
        return result(True, d, message='d exceeds the extremal bound')

    alpha = second_ok = None
    message = ''
    if expected_alpha is not None:
        weight = alpha_weight_or(g.n, d)
        try:
            alpha, dist = alpha_distribution(g, weight=weight, budget=budget,
                                             workers=workers)
        except BudgetExceeded as err:
            message = 'alpha skipped: 4^{} messages'.format(g.k)
            logging.debug('%s row %s: %s', table_id, row['row'], err)
        else:
            if not is_type_iv(dist):
                return result(True, d, alpha, message='odd weight codewords')
            try:
                second_ok = dist[weight + 2] == second_coefficient(g.n, alpha)
            except SelfDualError:
                second_ok = None
    return result(True, d, alpha, second_ok, message)


class TableReport(object):

    def __init__(self, table_id, info, results):
        self.table_id = table_id
        self.info = info
        self.results = results

    @property
    def passed(self):
        return sum(1 for r in self.results if r.passed)

    @property
    def all_passed(self):
        return self.passed == len(self.results)

    def summary(self):
        text = '{}/{} pass'.format(self.passed, len(self.results))
        distances = sorted(set(r.min_distance for r in self.results
                               if r.min_distance is not None))
        if len(distances) == 1:
            text += ', d={}'.format(distances[0])
        alphas = [r.alpha for r in self.results if r.alpha is not None]
        if len(self.results) == 1 and alphas:
            text += ', alpha={}'.format(alphas[0])
        return text

    def lines(self):
        for r in self.results:
            yield '{} row {}: {} self_dual={} d={} alpha={}{}'.format(
                r.table, r.row, 'pass' if r.passed else 'FAIL', r.self_dual,
                r.min_distance, '-' if r.alpha is None else r.alpha,
                ' ({})'.format(r.message) if r.message else '')


def verify_table(table_id, rows=None, budget=DEFAULT_BUDGET, info_set_budget=None,
                 workers=1, method='info_set'):
    """Verify every row of a table, or only the row numbers in `rows`.

    `method` picks how d is found; 'exhaustive' counts all 4^k codewords.
    """
    info, table_rows = load_table(table_id)
    if rows is not None:
        table_rows = [find_row(table_rows, r) for r in rows]
    results = []
    for row in table_rows:
        r = verify_row(table_id, info, row, budget, info_set_budget, workers,
                       method)
        logging.info('%s row %s: %s d=%s alpha=%s %s', table_id, r.row,
                     'pass' if r.passed else 'FAIL', r.min_distance, r.alpha,
                     r.message)
        results.append(r)
    return TableReport(table_id, info, results)
