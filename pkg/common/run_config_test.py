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

import os

import pytest

from common.run_config import RunConfig, load_search_config
from selfdual.errors import ConfigInvalid


def write(tmp_path, text):
    path = tmp_path / 'config.yaml'
    path.write_text(text)
    return str(path)


def test_defaults():
    config = RunConfig.make_default()
    assert config.exhaustive_budget == 4 ** 14
    assert config.extended_budget == 4 ** 20
    assert config.budget(extended=True) == 4 ** 20
    assert config.workers == 1
    assert config.cache_dir == os.path.expanduser('~/.cache/selfdual')
    assert config.start_time.tzinfo is not None


def test_overrides(tmp_path):
    path = write(tmp_path, 'workers: 4\ncache_dir: /tmp/sd\nconstruction: thm2\n')
    config = RunConfig.make_from_file(path)
    assert config.workers == 4
    assert config.cache_path('unitary_f4_6.tbl') == '/tmp/sd/unitary_f4_6.tbl'
    assert config.batch_size == 4096


def test_unknown_key(tmp_path):
    with pytest.raises(ConfigInvalid):
        RunConfig.make_from_file(write(tmp_path, 'wokers: 4\n'))


def test_bad_value(tmp_path):
    with pytest.raises(ConfigInvalid):
        RunConfig.make_from_file(write(tmp_path, 'batch_size: 0\n'))


def test_not_a_mapping(tmp_path):
    with pytest.raises(ConfigInvalid):
        RunConfig.make_from_file(write(tmp_path, '- 1\n- 2\n'))


def test_search_config(tmp_path):
    path = write(tmp_path, 'construction: thm1\nn: 6\nseed: 7\nworkers: 2\n')
    assert load_search_config(path) == {'construction': 'thm1', 'n': 6,
                                        'seed': 7, 'workers': 2}
    with pytest.raises(ConfigInvalid):
        load_search_config(write(tmp_path, 'lenght: 26\n'))
