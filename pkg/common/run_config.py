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

import datetime
import logging
import os

from pkg_resources import resource_filename
import pytz
import yaml

from selfdual.errors import ConfigInvalid

DEFAULTS_FILE = 'defaults.yaml'

SEARCH_KEYS = frozenset([
    'construction', 'ring', 'n', 'k', 'seed', 'budget', 'target_d', 'extended',
    'workers', 'out', 'lambdas', 'mus', 'base', 'batch_size'
])


def _read_yaml(path):
    with open(path) as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as err:
            raise ConfigInvalid('could not parse {}: {}'.format(path, err))
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigInvalid('{} must contain a mapping'.format(path))
    return data


class RunConfig(object):
    def __init__(self, start_time, cache_dir, output_dir, exhaustive_budget,
                 extended_budget, unitary_budget, info_set_budget, inner_rows,
                 chunk_size, batch_size, workers):
        self.start_time = start_time
        self.cache_dir = cache_dir
        self.output_dir = output_dir
        self.exhaustive_budget = exhaustive_budget
        self.extended_budget = extended_budget
        self.unitary_budget = unitary_budget
        self.info_set_budget = info_set_budget
        self.inner_rows = inner_rows
        self.chunk_size = chunk_size
        self.batch_size = batch_size
        self.workers = workers

    FIELDS = ('cache_dir', 'output_dir', 'exhaustive_budget', 'extended_budget',
              'unitary_budget', 'info_set_budget', 'inner_rows', 'chunk_size',
              'batch_size', 'workers')

    def budget(self, extended=False):
        return self.extended_budget if extended else self.exhaustive_budget

    def cache_path(self, name):
        return os.path.join(self.cache_dir, name)

    @staticmethod
    def _from_mapping(values):
        unknown = set(values) - set(RunConfig.FIELDS)
        if unknown:
            raise ConfigInvalid('unknown configuration keys: {}'.format(
                ', '.join(sorted(unknown))))
        missing = set(RunConfig.FIELDS) - set(values)
        if missing:
            raise ConfigInvalid('missing configuration keys: {}'.format(
                ', '.join(sorted(missing))))
        kwargs = dict(values)
        for key in RunConfig.FIELDS:
            if key.endswith('_dir'):
                kwargs[key] = os.path.expanduser(str(kwargs[key]))
            elif not isinstance(kwargs[key], int) or kwargs[key] < 1:
                raise ConfigInvalid('{} must be a positive integer'.format(key))
        now = datetime.datetime.now(pytz.utc)
        return RunConfig(now, **kwargs)

    @staticmethod
    def make_default():
        path = resource_filename('selfdual.data', DEFAULTS_FILE)
        return RunConfig._from_mapping(_read_yaml(path))

    @staticmethod
    def make_from_file(path):
        """Overlay the keys of a user YAML file on the packaged defaults."""
        defaults = _read_yaml(resource_filename('selfdual.data', DEFAULTS_FILE))
        overrides = _read_yaml(path)
        unknown = set(overrides) - set(RunConfig.FIELDS) - SEARCH_KEYS
        if unknown:
            raise ConfigInvalid('unknown configuration keys in {}: {}'.format(
                path, ', '.join(sorted(unknown))))
        defaults.update((k, v) for k, v in overrides.items()
                        if k in RunConfig.FIELDS)
        logging.info('Loaded run configuration from %s', path)
        return RunConfig._from_mapping(defaults)


def load_search_config(path):
    """Search settings (same names as the command-line flags) from a YAML file."""
    values = _read_yaml(path)
    unknown = set(values) - SEARCH_KEYS - set(RunConfig.FIELDS)
    if unknown:
        raise ConfigInvalid('unknown search keys in {}: {}'.format(
            path, ', '.join(sorted(unknown))))
    return dict((k, v) for k, v in values.items() if k in SEARCH_KEYS)
