# Copyright 2026 The Tritile Authors
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
"""Exact triangle tilings: validation, stretch analysis and audits.

Coordinates are exact rationals and come back as ``fractions.Fraction``.
Inputs accept ints, Fractions or strings such as ``"433/250"``.
"""

from ._tritile import (
    ExtractionError,
    GeneratorError,
    GeometryError,
    InvalidPatch,
    Patch,
    audit,
    circle_polygon,
    compare_root_sums,
    convex_triangulation,
    epsilon2,
    recursive_split,
    refine,
    reflected_pair,
    render_svg,
    run_cli,
    shared_sides,
    stretches,
    two_scale,
    validate,
)

__all__ = [
    "ExtractionError",
    "GeneratorError",
    "GeometryError",
    "InvalidPatch",
    "Patch",
    "audit",
    "circle_polygon",
    "compare_root_sums",
    "convex_triangulation",
    "epsilon2",
    "failed_checks",
    "recursive_split",
    "refine",
    "reflected_pair",
    "render_svg",
    "run_cli",
    "shared_sides",
    "stretches",
    "two_scale",
    "validate",
]

__version__ = "0.1.0"


def failed_checks(report):
    """Names of the checks in an ``audit`` result whose status is ``fail``."""
    return sorted(name for name, (_, status) in report.items() if status == "fail")
