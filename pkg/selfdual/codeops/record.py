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

from collections import namedtuple

from .weights import extremal_bound

# `params` is the ordered mapping of construction fields (hex text) that
# rebuilds the generator; `timestamp` is provenance only and is not persisted.
CodeRecord = namedtuple('CodeRecord', [
    'construction', 'ring', 'length', 'rank', 'params', 'min_distance', 'alpha',
    'seed', 'timestamp'
])


def is_extremal(record):
    return record.min_distance == extremal_bound(record.length)


def within_bound(record):
    return record.min_distance <= extremal_bound(record.length)
