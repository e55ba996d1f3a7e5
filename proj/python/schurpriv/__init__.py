# Copyright 2026 The schurpriv Authors
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

"""Schur product channels, correlation matrices and private algebras."""

import json as _json

from ._schurpriv import (
    CapacityError,
    DegenerateUnitError,
    NormalizationError,
    ObstructionError,
    ValidationError,
    apply_channel,
    correlation_from_kraus,
    generate,
    graph_of,
    has_separating_vector,
    identity_submatrix_indices,
    independence_number,
    paired_pauli_algebra,
    private_code,
    quasiorthogonal,
    strong_product,
    unitary_graph_of,
    validate_correlation,
)
from . import _schurpriv


def private_check(c, basis, mode="general", tol=1e-9):
    """Verdict dict with is_private, rho0, max_residual and a failure witness."""
    return _json.loads(_schurpriv.private_check(c, list(basis), mode, tol))


def privacy_report(c, power=2):
    """Graphs, independence data and the necessary/sufficient algebras of C."""
    return _json.loads(_schurpriv.privacy_report(c, power))


__all__ = [
    "CapacityError",
    "DegenerateUnitError",
    "NormalizationError",
    "ObstructionError",
    "ValidationError",
    "apply_channel",
    "correlation_from_kraus",
    "generate",
    "graph_of",
    "has_separating_vector",
    "identity_submatrix_indices",
    "independence_number",
    "paired_pauli_algebra",
    "private_check",
    "private_code",
    "privacy_report",
    "quasiorthogonal",
    "strong_product",
    "unitary_graph_of",
    "validate_correlation",
]
