// Copyright 2026 The Tritile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "tritile/tiling.hpp"

namespace tritile {

struct SvgOptions {
  int width_px = 800;
  bool stretch_overlay = false;
  bool label_long_short = false;
};

// Deterministic SVG drawing: one polygon per tile in tile order, optional
// stretch polylines and l/s labels on the sides of tight stretches.
// Coordinates are printed with 9 significant digits. Overlay and labels need
// a valid patch and throw InvalidPatch otherwise.
std::string render_svg(const TilingPatch& p, const SvgOptions& options = {});

}  // namespace tritile
