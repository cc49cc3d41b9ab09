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

"""Exceptions raised across the package.

Everything derives from `SelfDualError`, itself a `ValueError`, so callers that
only care about bad input can keep catching `ValueError`.
"""


class SelfDualError(ValueError):
    pass


class MixedRings(SelfDualError):
    pass


class NotAUnit(SelfDualError):
    pass


class BadSymbol(SelfDualError):
    pass


class DimensionMismatch(SelfDualError):
    pass


class IndexOutOfRange(SelfDualError):
    pass


class NotUnitaryLambda(SelfDualError):
    pass


class ConditionsNotMet(SelfDualError):
    pass


class BadEpsilon(SelfDualError):
    pass


class BadDelta(SelfDualError):
    pass


class InputNotSelfDual(SelfDualError):
    pass


class NotStandardForm(SelfDualError):
    pass


class BudgetExceeded(SelfDualError):

    def __init__(self, message, required=None, budget=None):
        super(BudgetExceeded, self).__init__(message)
        self.required = required
        self.budget = budget


class NoProgress(SelfDualError):
    """Information-set enumeration stalled; `lower` and `upper` bound d."""

    def __init__(self, message, lower, upper):
        super(NoProgress, self).__init__(message)
        self.lower = lower
        self.upper = upper


class UnknownEnumeratorLength(SelfDualError):
    pass


class ConfigInvalid(SelfDualError):
    pass


class UnknownFixture(SelfDualError):
    pass


class ChecksumMismatch(SelfDualError):
    pass
