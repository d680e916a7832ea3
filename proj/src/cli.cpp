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

#include "tritile/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tritile/extract.hpp"
#include "tritile/generators.hpp"
#include "tritile/stretch.hpp"
#include "tritile/svg.hpp"

namespace tritile::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    try {
      out.push_back(parse_rational(std::string_view(text).substr(start, comma - start)));
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad ") + what + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Point> parse_points(const std::string& text, const char* what) {
  const std::vector<Rational> v = parse_list(text, what);
  if (v.size() % 2 != 0) throw UsageError(std::string(what) + " needs an even number of coordinates");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back({v[i], v[i + 1]});
  return out;
}

Rational parse_one(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad ") + what + ": " + e.what());
  }
}

Triangle parse_triangle(const std::string& text, const char* what) {
  const std::vector<Point> pts = parse_points(text, what);
  if (pts.size() != 3) throw UsageError(std::string(what) + " needs 6 coordinates");
  try {
    return Triangle(pts[0], pts[1], pts[2]);
  } catch (const GeometryError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Decimal rendering of x with `digits` fractional digits, rounded down or up.
std::string decimal(const Rational& x, int digits, bool round_up) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = x * scale;
  Integer q;
  if (round_up) {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  const bool negative = q < 0;
  std::string s = Integer(abs(q)).get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + s : s;
}

std::string status_line(bool pass) { return pass ? "pass" : "fail"; }

// Checks switched off by a flag do not count against --require-applicable.
bool data_not_applicable(const AuditRecord& r) {
  return std::any_of(r.lines().begin(), r.lines().end(), [](const AuditLine& l) {
    return l.status == CheckStatus::kNotApplicable && l.value != "unit-perimeter-off";
  });
}

int finish(const AuditRecord& r, bool require_applicable, std::ostream& out) {
  const bool failed = r.count(CheckStatus::kFail) > 0 || (require_applicable && data_not_applicable(r));
  out << r.to_text();
  out << "result = " << status_line(!failed) << "\n";
  return failed ? kExitFailed : kExitOk;
}

struct Options {
  std::string input;
  std::string output;
  // generate recursive
  std::string base = "0,0,1,0,0,1";
  std::string t = "2";
  int depth = 1;
  // generate twoscale
  std::string b = "1";
  std::string h = "1";
  int m = 1;
  int n = 1;
  // generate convex
  int k = 4;
  std::string strategy = "fan";
  std::uint64_t seed = 0;
  std::string vertices;
  int refine = 0;
  // generate pair
  std::string tri = "0,0,4,0,1,3";
  std::string kind = "midpoint";
  // audit
  bool unit_perimeter = false;
  std::string disk;
  bool expect_shared = false;
  bool expect_none = false;
  bool require_applicable = false;
  // stats
  int precision_bits = 64;
  // render
  bool stretch_overlay = false;
  bool labels = false;
  int width = 800;
};

TilingPatch load(const std::string& path) { return parse_tiling(read_file(path)); }

int cmd_validate(const Options& o, std::ostream& out) {
  const ValidationReport report = validate_patch(load(o.input));
  out << report.to_text();
  return report.ok ? kExitOk : kExitFailed;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const TilingPatch p = load(o.input);
  const ValidationReport report = validate_patch(p);
  if (!report.ok) {
    out << report.to_text();
    out << "result = fail\n";
    return kExitFailed;
  }
  const IncidenceGraph g = build_incidence(p, report);
  const std::vector<Stretch> stretches = decompose_stretches(g);
  AuditRecord r;
  r.append(graph_audit(g), "graph.");
  r.append(vertex_audit(g), "vertex.");
  r.append(no_shared_side_conditions(g, stretches).to_record(), "conditions.");
  r.append(accounting_audit(g, stretches), "accounting.");

  const std::vector<SharedSide> shared = shared_side_pairs(g);
  r.value("shared.count", std::to_string(shared.size()));
  for (const SharedSide& s : shared) {
    r.value("shared.pair", std::to_string(s.a) + " " + std::to_string(s.b) + " " + to_string(s.segment.a) + " " +
                               to_string(s.segment.b));
  }
  if (o.expect_shared) r.check("shared.expect_shared", std::to_string(shared.size()), ">0", !shared.empty());
  if (o.expect_none) r.check("shared.expect_none", std::to_string(shared.size()), "0", shared.empty());

  WOptions wo;
  wo.unit_perimeter = o.unit_perimeter;
  const SideLabels labels = label_sides(g, stretches);
  r.append(w_audit(g, stretches, labels, wo).record, "w.");

  if (!o.disk.empty()) {
    const std::vector<Rational> d = parse_list(o.disk, "--disk");
    if (d.size() != 3 || d[2] <= 0) throw UsageError("--disk needs cx,cy,r2 with r2 > 0");
    const Point center{d[0], d[1]};
    try {
      const ExtractionResult ex = extract_patch(p, center, d[2]);
      r.value("disk.coverage_certificate", ex.coverage_certificate ? "true" : "false");
      AsymptoticOptions ao;
      ao.unit_perimeter = o.unit_perimeter;
      ao.r_sq = d[2];
      r.append(asymptotic_audit(p, ex.p, ex.ring, ao), "disk.");
    } catch (const ExtractionError& e) {
      r.check("disk.extraction", e.what(), "ok", false);
    }
  }
  return finish(r, o.require_applicable, out);
}

int cmd_stretches(const Options& o, std::ostream& out) {
  const TilingPatch p = load(o.input);
  const ValidationReport report = validate_patch(p);
  if (!report.ok) {
    out << report.to_text();
    return kExitFailed;
  }
  const IncidenceGraph g = build_incidence(p, report);
  out << stretches_to_text(g, decompose_stretches(g));
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  if (o.precision_bits < 1 || o.precision_bits > 100000) throw UsageError("--precision-bits out of range");
  const TilingPatch p = load(o.input);
  const ValidationReport report = validate_patch(p);
  if (!report.ok) {
    out << report.to_text();
    return kExitFailed;
  }
  const IncidenceGraph g = build_incidence(p, report);
  const std::vector<Stretch> stretches = decompose_stretches(g);
  const StretchTotals totals = stretch_totals(stretches);
  const IncidenceCounts& c = g.counts;
  Rational min_area = p.tiles.front().area();
  Rational max_area = min_area;
  for (const Triangle& t : p.tiles) {
    min_area = std::min(min_area, t.area());
    max_area = std::max(max_area, t.area());
  }
  const SideLengthRange range = side_length_range(p, o.precision_bits);
  const int digits = static_cast<int>(std::ceil(o.precision_bits * 0.30103)) + 2;
  const LengthExpr eps = epsilon2(p.tiles);

  out << "tiles = " << c.t << "\n";
  out << "vertices = " << c.v << "\n";
  out << "edges = " << c.e << "\n";
  out << "v_bd = " << c.v_bd << "\n";
  out << "v_int = " << c.v_int << "\n";
  out << "v_star = " << c.v_star << "\n";
  out << "e_full = " << c.e_full << "\n";
  out << "e_part = " << c.e_part << "\n";
  out << "region_vertices = " << g.region.size() << "\n";
  out << "area = " << to_string(total_area(p)) << "\n";
  out << "min_area = " << to_string(min_area) << "\n";
  out << "max_area = " << to_string(max_area) << "\n";
  out << "min_side = [" << decimal(range.min.lo, digits, false) << ", " << decimal(range.min.hi, digits, true)
      << "]\n";
  out << "max_side = [" << decimal(range.max.lo, digits, false) << ", " << decimal(range.max.hi, digits, true)
      << "]\n";
  out << "epsilon2 = " << eps.to_string() << "\n";
  out << "epsilon2_decimal = " << to_decimal(eps, 20) << "\n";
  out << "shared_sides = " << shared_side_pairs(g).size() << "\n";
  out << "composite_sides = " << composite_sides(g).size() << "\n";
  out << "stretches = " << totals.count << "\n";
  out << "sigma_tight = " << totals.sigma_tight << "\n";
  out << "L_loose = " << totals.loose_total_size << "\n";
  out << "improper = " << totals.improper << "\n";
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream&) {
  if (o.width < 16) throw UsageError("--width must be at least 16");
  SvgOptions so;
  so.width_px = o.width;
  so.stretch_overlay = o.stretch_overlay;
  so.label_long_short = o.labels;
  write_file(o.output, render_svg(load(o.input), so));
  return kExitOk;
}

int cmd_generate(const std::string& which, const Options& o) {
  TilingPatch p;
  if (which == "recursive") {
    RecursiveSplitSpec spec;
    spec.base = parse_triangle(o.base, "--base");
    spec.t = parse_one(o.t, "--t");
    spec.depth = o.depth;
    p = gen_recursive_split(spec);
  } else if (which == "twoscale") {
    TwoScaleSpec spec;
    spec.b = parse_one(o.b, "--b");
    spec.h = parse_one(o.h, "--h");
    spec.m = o.m;
    spec.n = o.n;
    p = gen_two_scale_periodic(spec);
  } else if (which == "convex") {
    std::vector<Point> vertices;
    if (o.vertices.empty()) {
      if (o.k < 3) throw UsageError("--k must be at least 3");
      vertices = rational_circle_polygon(o.k, o.seed);
    } else {
      vertices = parse_points(o.vertices, "--vertices");
    }
    const SplitStrategy strategy = o.strategy == "fan" ? SplitStrategy::kFan : SplitStrategy::kRandomSplit;
    p = gen_convex_triangulation(vertices, strategy, o.seed);
    if (o.refine > 0) p = refine_random(p, o.refine, o.seed);
  } else {
    const PairKind kind = o.kind == "line"       ? PairKind::kLine
                          : o.kind == "midpoint" ? PairKind::kMidpoint
                                                 : PairKind::kBisector;
    p = gen_reflected_pair(parse_triangle(o.tri, "--tri"), kind);
  }
  write_file(o.output, serialize_tiling(p));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact construction, validation and audit of triangle tilings", "tritile"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a generated tiling");
  generate->require_subcommand(1);
  auto* recursive = generate->add_subcommand("recursive", "Nested triangle split with 3N+1 tiles");
  recursive->add_option("--base", o.base, "Base triangle x1,y1,x2,y2,x3,y3")->capture_default_str();
  recursive->add_option("--t", o.t, "Split ratio, greater than 1")->capture_default_str();
  recursive->add_option("--depth", o.depth, "Number of levels")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* twoscale = generate->add_subcommand("twoscale", "Periodic two-scale tiling without shared sides");
  twoscale->set_help_flag("--help", "Print this help message and exit");
  twoscale->add_option("--b", o.b, "Base of the large triangles")->capture_default_str();
  twoscale->add_option("--h", o.h, "Height of the large triangles")->capture_default_str();
  twoscale->add_option("--m", o.m, "Cells along x")->capture_default_str()->check(CLI::PositiveNumber);
  twoscale->add_option("--n", o.n, "Cells along y")->capture_default_str()->check(CLI::PositiveNumber);
  auto* convex = generate->add_subcommand("convex", "Triangulation of a convex polygon");
  convex->add_option("--k", o.k, "Vertex count for a random polygon on the unit circle")->capture_default_str();
  convex->add_option("--vertices", o.vertices, "Explicit polygon x1,y1,...,xk,yk (counterclockwise)");
  convex->add_option("--strategy", o.strategy, "fan or random")
      ->capture_default_str()
      ->check(CLI::IsMember({"fan", "random"}));
  convex->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  convex->add_option("--refine", o.refine, "Random refinement steps")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* pair = generate->add_subcommand("pair", "Triangle and its image under a symmetry of side xy");
  pair->add_option("--tri", o.tri, "Triangle x,y,z as six coordinates")->capture_default_str();
  pair->add_option("--kind", o.kind, "line, midpoint or bisector")
      ->capture_default_str()
      ->check(CLI::IsMember({"line", "midpoint", "bisector"}));
  for (auto* sub : {recursive, twoscale, convex, pair}) sub->add_option("-o,--output", o.output, "Output file")->required();

  auto* validate = app.add_subcommand("validate", "Check that a file is a tiling of its region");
  validate->add_option("file", o.input)->required();

  auto* audit = app.add_subcommand("audit", "Run every identity and inequality check");
  audit->add_option("file", o.input)->required();
  audit->add_flag("--unit-perimeter", o.unit_perimeter, "Require and use unit-perimeter tiles");
  audit->add_option("--disk", o.disk, "Extract the patch around disk cx,cy,r2");
  auto* es = audit->add_flag("--expect-shared", o.expect_shared, "Fail unless some side is shared");
  auto* en = audit->add_flag("--expect-none", o.expect_none, "Fail if any side is shared");
  es->excludes(en);
  audit->add_flag("--require-applicable", o.require_applicable, "Treat n/a checks as failures");

  auto* stretches = app.add_subcommand("stretches", "Print the stretch decomposition");
  stretches->add_option("file", o.input)->required();

  auto* stats = app.add_subcommand("stats", "Print counts and side length enclosures");
  stats->add_option("file", o.input)->required();
  stats->add_option("--precision-bits", o.precision_bits, "Relative precision of the side enclosures")
      ->capture_default_str();

  auto* render = app.add_subcommand("render", "Draw a tiling as SVG");
  render->add_option("file", o.input)->required();
  render->add_option("-o,--output", o.output, "Output SVG")->required();
  render->add_flag("--stretch-overlay", o.stretch_overlay, "Draw stretches");
  render->add_flag("--labels", o.labels, "Mark long and short sides with l and s");
  render->add_option("--width", o.width, "Width in pixels")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      for (auto* sub : {recursive, twoscale, convex, pair}) {
        if (*sub) return cmd_generate(sub->get_name(), o);
      }
    }
    if (*validate) return cmd_validate(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*stretches) return cmd_stretches(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const GeneratorError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const InvalidPatch& e) {
    out << e.report().to_text();
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace tritile::cli
