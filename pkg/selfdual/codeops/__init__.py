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

"""Code-level checks: self-duality, weight distributions, minimum distance."""

from .distance import info_set_distance, information_sets, min_distance
from .record import CodeRecord, is_extremal, within_bound
from .selfduality import standard_form, verify_hermitian_self_dual
from .weights import (WeightDistribution, alpha_distribution, alpha_of,
                      alpha_weight, alpha_weight_or, classify_alpha, enumerator,
                      extremal_bound, is_type_iv, second_coefficient,
                      weight_distribution_exhaustive)
