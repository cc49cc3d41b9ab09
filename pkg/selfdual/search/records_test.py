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

from collections import OrderedDict
import unittest

import pytest

from ..codeops import CodeRecord
from ..errors import ConfigInvalid
from .records import (dedupe_records, format_record, parse_record, read_records,
                      write_records)


def make_record(alpha, vectors='(3212220310),(2302200133)', d=12, length=40):
    params = OrderedDict([('lambda', '1'), ('mu', '3'), ('vectors', vectors)])
    return CodeRecord('thm2', 'f4', length, length // 2, params, d, alpha, 7,
                      None)


class RecordFormatTest(unittest.TestCase):

    def test_format(self):
        self.assertEqual(
            'construction=thm2 ring=f4 n=40 k=20 lambda=1 mu=3 '
            'vectors=(3212220310),(2302200133) d=12 alpha=5760 seed=7',
            format_record(make_record(5760)))

    def test_parse(self):
        record = make_record(None)
        parsed = parse_record(format_record(record))
        self.assertEqual(record, parsed)
        self.assertIsNone(parsed.alpha)
        self.assertEqual(['lambda', 'mu', 'vectors'], list(parsed.params))

    def test_malformed(self):
        with self.assertRaises(ConfigInvalid):
            parse_record('construction=thm2 ring')
        with self.assertRaises(ConfigInvalid):
            parse_record('construction=thm2 ring=f4 n=40')


class DedupeTest(unittest.TestCase):

    def test_same_alpha(self):
        records = [make_record(153, '(1)', length=26),
                   make_record(153, '(2)', length=26)]
        self.assertEqual(records[:1], dedupe_records(records))

    def test_distinct_alpha(self):
        records = [make_record(a) for a in (5760, 5910, 6660)]
        self.assertEqual(records, dedupe_records(records))

    def test_keeps_first_occurrence(self):
        records = [make_record(2), make_record(1), make_record(2, '(0)')]
        self.assertEqual(records[:2], dedupe_records(records))


def test_write_sorts_by_alpha(tmp_path):
    path = str(tmp_path / 'found.txt')
    records = [make_record(6660), make_record(None), make_record(5760)]
    write_records(path, records)
    lines = open(path).read().splitlines()
    assert lines[0] == '# selfdual-records v1'
    assert [r.alpha for r in read_records(path)] == [5760, 6660, None]


def test_read_rejects_other_files(tmp_path):
    path = tmp_path / 'other.txt'
    path.write_text('row,lambda\n')
    with pytest.raises(ConfigInvalid):
        read_records(str(path))


if __name__ == '__main__':
    unittest.main()
