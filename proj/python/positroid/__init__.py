# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Positroids through ranked essential families of cyclic intervals."""

from ._core import (
    Family,
    NotValidatedError,
    Permutation,
    PositroidError,
    bases,
    codim1_boundaries,
    codim_from_family,
    connected_entries,
    core,
    corners,
    deficient_flats,
    enumerate,
    essential_family,
    excess,
    facet_system,
    h_representation,
    is_positively_realizing,
    is_positroid_rank2,
    length,
    permutation_from_family,
    permutation_from_matrix,
    rank_from_family,
    rank_interval,
    render_diagram,
    retrieve,
    validate,
)

__all__ = [
    "Family",
    "NotValidatedError",
    "Permutation",
    "PositroidError",
    "bases",
    "codim1_boundaries",
    "codim_from_family",
    "connected_entries",
    "core",
    "corners",
    "deficient_flats",
    "enumerate",
    "essential_family",
    "excess",
    "facet_system",
    "h_representation",
    "is_positively_realizing",
    "is_positroid_rank2",
    "length",
    "permutation_from_family",
    "permutation_from_matrix",
    "rank_from_family",
    "rank_interval",
    "render_diagram",
    "retrieve",
    "validate",
]
