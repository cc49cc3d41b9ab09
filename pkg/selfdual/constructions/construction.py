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

import abc
from collections import OrderedDict
import numpy as np
import six

from .. import ring as rng
from ..errors import ConditionsNotMet, NotUnitaryLambda
from ..generator import GeneratorMatrix


def check_unitary(**constants):
    for name, value in sorted(constants.items()):
        if not rng.is_unitary_code(rng.code_of(value)):
            raise NotUnitaryLambda('{}={} is not unitary'.format(
                name, rng.encode(value) if isinstance(value, rng.RingElement)
                else value))


def as_element(ring, value):
    if isinstance(value, rng.RingElement):
        return value
    if isinstance(value, six.string_types):
        return rng.decode(value, ring)
    return rng.element(ring, value)


def batch_unitary_mask(*codes):
    ok = True
    for c in codes:
        ok = ok & (rng.MUL[c, rng.CONJ[c]] == rng.ONE_CODE)
    return ok


@six.add_metaclass(abc.ABCMeta)
class ConstructionBase(object):
    """A family of Hermitian self-dual codes parameterized by circulant data.

    Subclasses work on single parameter records (`conditions`, `build`) and on
    batches of candidates (`draw_batch`, `conditions_batch`, `params_at`), a
    batch being a dict of uint8 arrays with a leading candidate axis.
    """
    tag = None

    def __init__(self, ring, n, k=1, lambdas=None, mus=None):
        self.ring = ring
        self.n = n
        self.k = k
        unitary = rng.unitary_codes(ring)
        self.lambdas = np.array(lambdas if lambdas else unitary, dtype=np.uint8)
        self.mus = np.array(mus if mus else unitary, dtype=np.uint8)
        for c in np.concatenate([self.lambdas, self.mus]):
            check_unitary(restriction=int(c))

    @property
    def length(self):
        """Length of the codes this construction builds over `ring`."""
        raise NotImplementedError()

    @abc.abstractmethod
    def conditions(self, params):
        pass

    @abc.abstractmethod
    def build(self, params):
        pass

    @abc.abstractmethod
    def draw_batch(self, gen, size):
        pass

    @abc.abstractmethod
    def conditions_batch(self, batch):
        pass

    @abc.abstractmethod
    def params_at(self, batch, i):
        pass

    @abc.abstractmethod
    def params_to_fields(self, params):
        """Ordered (key, text) pairs for the record format."""
        pass

    @abc.abstractmethod
    def params_from_fields(self, fields):
        pass

    @abc.abstractmethod
    def search_field_size(self):
        pass

    def build_checked(self, params):
        if not self.conditions(params):
            raise ConditionsNotMet('{} conditions fail for {}'.format(
                self.tag, dict(self.params_to_fields(params))))
        return self.build(params)

    def random_vectors(self, gen, shape):
        return gen.integers(0, self.ring.order, shape).astype(np.uint8)

    def choose(self, gen, values, size):
        return values[gen.integers(0, len(values), size)]


def vector_field(codes, ring):
    return rng.encode_vector(codes, ring)


def vectors_field(rows, ring):
    return ','.join(rng.encode_vector(r, ring) for r in rows)


def parse_vectors(text, ring):
    return [rng.decode_vector(v, ring) for v in text.split(',')]


def fields(*pairs):
    return OrderedDict(pairs)


def standard_generator(ring, x):
    return GeneratorMatrix.from_blocks(ring, x)
