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

#include "tritile/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tritile/stretch.hpp"

namespace tritile {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

class Frame {
 public:
  Frame(const TilingPatch& p, int width_px) {
    bool first = true;
    for (const Triangle& t : p.tiles) {
      for (const Point& c : t.corners()) {
        const double x = c.x.get_d();
        const double y = c.y.get_d();
        if (first) {
          xlo_ = xhi_ = x;
          ylo_ = yhi_ = y;
          first = false;
        }
        xlo_ = std::min(xlo_, x);
        xhi_ = std::max(xhi_, x);
        ylo_ = std::min(ylo_, y);
        yhi_ = std::max(yhi_, y);
      }
    }
    const double span = std::max(xhi_ - xlo_, yhi_ - ylo_);
    scale_ = span > 0 ? (width_px - 2 * kPad) / span : 1.0;
    width_ = width_px;
    height_ = static_cast<int>(std::ceil((yhi_ - ylo_) * scale_ + 2 * kPad));
  }

  double x(double v) const { return kPad + (v - xlo_) * scale_; }
  double y(double v) const { return kPad + (yhi_ - v) * scale_; }
  std::string at(const Point& p) const { return num(x(p.x.get_d())) + "," + num(y(p.y.get_d())); }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  static constexpr double kPad = 10.0;
  double xlo_ = 0, xhi_ = 0, ylo_ = 0, yhi_ = 0, scale_ = 1;
  int width_ = 0, height_ = 0;
};

}  // namespace

std::string render_svg(const TilingPatch& p, const SvgOptions& options) {
  const Frame f(p, options.width_px);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height()
      << "\" viewBox=\"0 0 " << f.width() << " " << f.height() << "\">\n";
  out << "<style>.tile{fill:#f4f1e8;stroke:#333;stroke-width:1}"
         ".stretch{fill:none;stroke:#c0392b;stroke-width:2.5;stroke-opacity:0.7}"
         ".label{font:11px sans-serif;fill:#1a5276;text-anchor:middle;dominant-baseline:middle}</style>\n";
  for (std::size_t t = 0; t < p.tiles.size(); ++t) {
    const Triangle& tri = p.tiles[t];
    out << "<polygon class=\"tile\" id=\"t" << t << "\" points=\"" << f.at(tri[0]) << " " << f.at(tri[1]) << " "
        << f.at(tri[2]) << "\"/>\n";
  }
  if (options.stretch_overlay || options.label_long_short) {
    const IncidenceGraph g = build_incidence(p);
    const std::vector<Stretch> stretches = decompose_stretches(g);
    if (options.stretch_overlay) {
      for (const Stretch& s : stretches) {
        out << "<polyline class=\"stretch\" points=\"" << f.at(g.arr.vertices[s.from]) << " "
            << f.at(g.arr.vertices[s.to]) << "\"/>\n";
      }
    }
    if (options.label_long_short) {
      const SideLabels labels = label_sides(g, stretches);
      for (TileId t = 0; t < g.tiles.size(); ++t) {
        const Triangle& tri = g.tiles[t];
        const double cx = (tri[0].x.get_d() + tri[1].x.get_d() + tri[2].x.get_d()) / 3;
        const double cy = (tri[0].y.get_d() + tri[1].y.get_d() + tri[2].y.get_d()) / 3;
        for (int i = 0; i < 3; ++i) {
          const SideLabel l = labels.at({t, i});
          if (l == SideLabel::kNone) continue;
          const Segment s = tri.side(i);
          // Midpoint pulled a quarter of the way toward the centroid.
          const double mx = (s.a.x.get_d() + s.b.x.get_d()) / 2;
          const double my = (s.a.y.get_d() + s.b.y.get_d()) / 2;
          const double lx = mx + 0.25 * (cx - mx);
          const double ly = my + 0.25 * (cy - my);
          out << "<text class=\"label\" x=\"" << num(f.x(lx)) << "\" y=\"" << num(f.y(ly)) << "\">"
              << (l == SideLabel::kLong ? "l" : "s") << "</text>\n";
        }
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tritile
