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

"""Random search, unitary circulant tables, shipped code tables and records."""

from .engine import (SearchConfig, make_search_config, reverify_record,
                     run_search)
from .records import (dedupe_records, format_record, parse_record, read_records,
                      write_records)
from .tables import TableReport, load_base, load_table, table_ids, verify_table
from .unitary import UnitaryCirculantTable, enumerate_unitary_circulants
