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

"""Text persistence of found codes.

A record file starts with `# selfdual-records v1`; every following line holds
one record as space separated `key=value` pairs:

    construction=thm2 ring=f4 n=40 k=20 lambda=1 mu=3 vectors=(..),(..) d=12 alpha=5760 seed=7

`n` and `k` are the length and dimension over F4 (of the Gray image for
F4U codes). The construction fields between `k` and `d` rebuild the
generator; unknown values are written as `-`.
"""

from collections import OrderedDict
import logging

from ..codeops import CodeRecord
from ..errors import ConfigInvalid

RECORDS_HEADER = '# selfdual-records v1'
MISSING = '-'
_HEAD_KEYS = ('construction', 'ring', 'n', 'k')
_TAIL_KEYS = ('d', 'alpha', 'seed')


def _text(value):
    return MISSING if value is None else str(value)


def _int_or_none(text):
    return None if text == MISSING else int(text)


def format_record(record):
    pairs = [('construction', record.construction), ('ring', record.ring),
             ('n', record.length), ('k', record.rank)]
    pairs.extend(record.params.items())
    pairs.extend([('d', record.min_distance), ('alpha', record.alpha),
                  ('seed', record.seed)])
    return ' '.join('{}={}'.format(k, _text(v)) for k, v in pairs)


def parse_record(line):
    values = OrderedDict()
    for item in line.split():
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigInvalid('malformed record field "{}"'.format(item))
        values[key] = value
    missing = [k for k in _HEAD_KEYS + _TAIL_KEYS if k not in values]
    if missing:
        raise ConfigInvalid('record lacks {}: {}'.format(', '.join(missing),
                                                         line))
    params = OrderedDict((k, v) for k, v in values.items()
                         if k not in _HEAD_KEYS + _TAIL_KEYS)
    return CodeRecord(values['construction'], values['ring'], int(values['n']),
                      int(values['k']), params, _int_or_none(values['d']),
                      _int_or_none(values['alpha']),
                      _int_or_none(values['seed']), None)


def sort_key(record):
    return (record.alpha is None, record.alpha or 0, record.construction,
            tuple(record.params.items()))


def sort_records(records):
    return sorted(records, key=sort_key)


def dedupe_records(records):
    """One record per (length, ring, d, alpha), first occurrence wins."""
    seen = set()
    kept = []
    for r in records:
        key = (r.length, r.ring, r.min_distance, r.alpha)
        if key not in seen:
            seen.add(key)
            kept.append(r)
    return kept


def write_records(path, records):
    records = sort_records(records)
    with open(path, 'w') as f:
        f.write(RECORDS_HEADER + '\n')
        for r in records:
            f.write(format_record(r) + '\n')
    logging.info('Wrote %d records to %s', len(records), path)
    return records


def read_records(path):
    with open(path) as f:
        header = f.readline().strip()
        if header != RECORDS_HEADER:
            raise ConfigInvalid('{} is not a record file (header "{}")'.format(
                path, header))
        return [parse_record(line) for line in f if line.strip()]
