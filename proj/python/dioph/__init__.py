# Copyright 2026 The dioph Authors
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
"""Negative continued fractions and inhomogeneous approximation constants."""

import json as _json

from ._core import (
    DiophError,
    DigitSeq,
    NcfExpansion,
    QuadSurd,
    c_of,
    digits_of,
    evaluate,
    even_bound,
    exceptional_pairs,
    expand,
    gamma_of,
    homog_bounds,
    m_value,
    rho_lower,
    run,
    scan,
    validate,
)


def report(command, **options):
    """Runs a dioph command and returns its JSON report as a dict."""
    options.setdefault("format", "json")
    _, text = run(command, **options)
    return _json.loads(text)


__all__ = [
    "DiophError",
    "DigitSeq",
    "NcfExpansion",
    "QuadSurd",
    "c_of",
    "digits_of",
    "evaluate",
    "even_bound",
    "exceptional_pairs",
    "expand",
    "gamma_of",
    "homog_bounds",
    "m_value",
    "report",
    "rho_lower",
    "run",
    "scan",
    "validate",
]
