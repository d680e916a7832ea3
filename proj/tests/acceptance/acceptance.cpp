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

// Acceptance driver: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed below.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../unit/support.hpp"
#include "tritile/cli.hpp"
#include "tritile/extract.hpp"
#include "tritile/generators.hpp"
#include "tritile/stretch.hpp"

using namespace tritile;
using namespace tritile::test;
namespace fs = std::filesystem;

namespace {

constexpr double kCriterion1Seconds = 10.0;
constexpr double kStressSeconds = 5.0;
constexpr double kCriterion7Seconds = 20.0;
constexpr int kStressDepth = 200;
const Rational kTol30 = ratio(1, mpz_class("1000000000000000000000000000000"));
const Rational kTol20 = ratio(1, mpz_class("100000000000000000000"));
const char* const kTwoScaleMinPrefix = "0.999982";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const std::vector<Rational>& split_ratios() {
  static const std::vector<Rational> t{ratio(3, 2), Rational(2), Rational(3)};
  return t;
}

TilingPatch recursive(const Rational& t, int depth) {
  RecursiveSplitSpec spec;
  spec.base = Triangle(pt(0, 0), pt(7, 2), pt(3, 6));
  spec.t = t;
  spec.depth = depth;
  return gen_recursive_split(spec);
}

TilingPatch l_fixture() { return patch_of({tri(0, 0, 2, 0, 0, 2), tri(2, 0, 2, 1, 1, 1)}); }

// Valid patches of every family, with and without shared sides.
std::vector<TilingPatch> corpus() {
  std::vector<TilingPatch> out;
  out.push_back(patch_of({tri(0, 0, 1, 0, 0, 1)}));
  out.push_back(l_fixture());
  for (const Rational& t : split_ratios()) {
    for (int n = 0; n <= 10; ++n) out.push_back(recursive(t, n));
  }
  for (int m = 1; m <= 4; ++m) out.push_back(gen_two_scale_periodic({2, ratio(433, 250), m, 5 - m}));
  const TilingPatch ambient = gen_two_scale_periodic({1, 1, 6, 6});
  for (int i = 0; i < 8; ++i) {
    const Point c{ratio(3 + i, 2), ratio(5 + i % 3, 2)};
    out.push_back(extract_patch(ambient, c, ratio(1 + i, 2)).p.patch);
  }
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    out.push_back(refine_random(recursive(2, 2), 6, seed));
    out.push_back(refine_random(gen_two_scale_periodic({1, 1, 2, 2}), 6, seed));
    out.push_back(gen_convex_triangulation(rational_circle_polygon(4 + static_cast<int>(seed % 5), seed),
                                           SplitStrategy::kRandomSplit, seed));
  }
  return out;
}

bool triangle_conditions(const IncidenceGraph& g, const std::vector<Stretch>& s) {
  const TriangleConditions c = no_shared_side_conditions(g, s);
  return c.applicable && c.no_region_side_subdivided && c.interior_vertices_subdivide && c.stretches_size_three;
}

Outcome criterion1() {
  Outcome o;
  Timer timer;
  long patches = 0;
  auto vertex_identity = [&](const TilingPatch& p, const std::string& what) {
    ++patches;
    const IncidenceGraph g = build_incidence(p);
    const long lhs = g.counts.v_bd + 2 * g.counts.v_int - g.counts.v_star_int;
    o.require(lhs == g.counts.t + 2 && vertex_audit(g).passed("vertex_identity"), what);
  };
  vertex_identity(patch_of({tri(0, 0, 1, 0, 0, 1)}), "single triangle");
  for (int k = 4; k <= 8; ++k) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto poly = rational_circle_polygon(k, seed);
      vertex_identity(gen_convex_triangulation(poly, SplitStrategy::kFan), "fan k=" + std::to_string(k));
      vertex_identity(gen_convex_triangulation(poly, SplitStrategy::kRandomSplit, seed), "random split k=" + std::to_string(k));
    }
  }
  for (const Rational& t : split_ratios()) {
    for (int n = 0; n <= 10; ++n) vertex_identity(recursive(t, n), "recursive t=" + to_string(t) + " N=" + std::to_string(n));
  }
  const double s = timer.seconds();
  o.require(s < kCriterion1Seconds, "runtime " + secs(s));
  if (o.pass) o.detail = "vertex identity exact on " + std::to_string(patches) + " patches in " + secs(s);
  return o;
}

Outcome criterion2() {
  Outcome o;
  long convex = 0, negatives = 0, oracle_runs = 0;
  auto oracle = [&](const TilingPatch& p) {
    ++oracle_runs;
    const IncidenceGraph g = build_incidence(p);
    std::set<std::pair<TileId, TileId>> found;
    for (const SharedSide& s : shared_side_pairs(g)) found.insert({s.a, s.b});
    o.require(found == brute_force_shared(p), "oracle disagreement");
    return found.size();
  };
  for (int k = 4; k <= 11; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto poly = rational_circle_polygon(k, 1000 + seed);
      for (const TilingPatch& p : {gen_convex_triangulation(poly, SplitStrategy::kFan),
                                   gen_convex_triangulation(poly, SplitStrategy::kRandomSplit, seed),
                                   refine_random(gen_convex_triangulation(poly, SplitStrategy::kRandomSplit, seed),
                                                 4, seed)}) {
        ++convex;
        o.require(oracle(p) > 0, "convex k=" + std::to_string(k) + " without a shared side");
      }
    }
  }
  for (const Rational& t : split_ratios()) {
    for (int n = 0; n <= 10; ++n) {
      ++negatives;
      o.require(oracle(recursive(t, n)) == 0, "recursive split with a shared side");
    }
  }
  o.require(convex >= 200, "corpus too small");
  if (o.pass) {
    o.detail = std::to_string(convex) + " convex triangulations share a side, " + std::to_string(negatives) +
               " recursive splits do not, " + std::to_string(oracle_runs) + " oracle agreements";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const Rational& t : split_ratios()) {
    for (int n = 0; n <= 10; ++n) {
      const std::string what = "t=" + to_string(t) + " N=" + std::to_string(n);
      const TilingPatch p = recursive(t, n);
      o.require(p.tiles.size() == static_cast<std::size_t>(3 * n + 1), what + " tile count");
      o.require(validate_patch(p).ok, what + " invalid");
      o.require(total_area(p) == abs(signed_area(*p.region)), what + " area sum");
      const IncidenceGraph g = build_incidence(p);
      const auto s = decompose_stretches(g);
      const StretchTotals tot = stretch_totals(s);
      o.require(triangle_conditions(g, s), what + " conditions");
      o.require(tot.sigma_tight == 3 * n && tot.loose_total_size == 0 && g.counts.e_full == 3, what + " counts");
    }
  }
  Timer timer;
  const TilingPatch big = recursive(2, kStressDepth);
  const IncidenceGraph g = build_incidence(big);
  const auto s = decompose_stretches(g);
  const WAudit w = w_audit(g, s, label_sides(g, s));
  const bool stress_ok = w.record.all_pass() && accounting_audit(g, s).all_pass() && graph_audit(g).all_pass() &&
                         triangle_conditions(g, s) && w.sigma_tight == 3 * kStressDepth;
  const double secs_taken = timer.seconds();
  o.require(stress_ok, "stress audit failed");
  o.require(secs_taken < kStressSeconds, "stress runtime " + secs(secs_taken));
  if (o.pass) {
    o.detail = "33 patches exact; " + std::to_string(big.tiles.size()) + "-tile audit in " + secs(secs_taken);
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  long checked = 0;
  for (const TilingPatch& p : corpus()) {
    const IncidenceGraph g = build_incidence(p);
    if (!shared_side_pairs(g).empty()) continue;
    const auto s = decompose_stretches(g);
    const WAudit w = w_audit(g, s, label_sides(g, s));
    ++checked;
    const LengthExpr expected = w.epsilon2 * Rational(-w.sigma_tight);
    o.require(compare(w.w_definition, expected) == Ordering::kEqual && w.w_definition == w.w_identity &&
                  w.w_by_tiles == w.w_identity,
              "W mismatch on patch " + std::to_string(checked));
  }
  if (o.pass) o.detail = "W = -eps2 * sigma_tight exactly on " + std::to_string(checked) + " patches";
  return o;
}

Outcome criterion5() {
  Outcome o;
  long checked = 0, with_partial = 0, with_improper = 0;
  for (const TilingPatch& p : corpus()) {
    const IncidenceGraph g = build_incidence(p);
    const auto s = decompose_stretches(g);
    const AuditRecord graph = graph_audit(g);
    const AuditRecord acc = accounting_audit(g, s);
    const bool shared = !shared_side_pairs(g).empty();
    ++checked;
    with_partial += g.counts.e_part > 0;
    with_improper += stretch_totals(s).improper > 0;
    o.require(graph.passed("euler") && graph.passed("face_edge"), "euler/face-edge count on patch " + std::to_string(checked));
    o.require(acc.count(CheckStatus::kFail) == 0, "accounting on patch " + std::to_string(checked));
    if (!shared) o.require(acc.passed("side_count") && acc.passed("subdividing_bound"), "side count/subdividing bound on patch " + std::to_string(checked));
  }
  o.require(with_partial > 0 && with_improper > 0, "corpus lacks partial edges or improper stretches");
  if (o.pass) {
    o.detail = "euler, face-edge, side count and subdividing bound exact on " + std::to_string(checked) + " patches (" +
               std::to_string(with_partial) + " with partial edges, " + std::to_string(with_improper) +
               " with improper stretches)";
  }
  return o;
}

Reflection expected_reflection(PairKind k) {
  switch (k) {
    case PairKind::kLine: return Reflection::kLineXY;
    case PairKind::kMidpoint: return Reflection::kMidpointXY;
    case PairKind::kBisector: return Reflection::kPerpBisectorXY;
  }
  return Reflection::kNone;
}

bool apexes_match_oracle(const Triangle& t, const std::vector<Point>& apexes) {
  const auto roots = ellipse_oracle(t[0], t[1], t[2]);
  if (roots.size() != apexes.size()) return false;
  const Big dx(t[1].x - t[0].x), dy(t[1].y - t[0].y);
  const Big len = (dx * dx + dy * dy).sqrt();
  for (const Point& a : apexes) {
    const Big u = (Big(a.x - t[0].x) * dx + Big(a.y - t[0].y) * dy) / len;
    const Big v = (dx * Big(a.y - t[0].y) - dy * Big(a.x - t[0].x)) / len;
    const Big scale = len + u.abs() + v.abs();
    bool matched = false;
    for (const auto& [ru, rv] : roots) {
      matched = matched || ((ru - u).abs() < Big(1e-30) * scale && (rv - v).abs() < Big(1e-30) * scale);
    }
    if (!matched) return false;
  }
  return true;
}

Outcome criterion6() {
  Outcome o;
  RandomRationals rnd(2026);
  long scalene = 0, isosceles = 0;
  while (scalene < 100) {
    const Triangle t = rnd.triangle();
    if (t.squared_side(1) == t.squared_side(2)) continue;
    ++scalene;
    for (PairKind k : {PairKind::kLine, PairKind::kMidpoint, PairKind::kBisector}) {
      const TilingPatch p = gen_reflected_pair(t, k);
      const Triangle& u = p.tiles[1];
      o.require(p.tiles[0].area() == u.area(), "area");
      o.require(compare(p.tiles[0].perimeter(), u.perimeter()) == Ordering::kEqual, "perimeter");
      o.require(congruent(p.tiles[0], u), "congruence");
      o.require(reflection_classify(t[0], t[1], t[2], u[2]) == expected_reflection(k),
                std::string("classify ") + to_string(k));
    }
    const auto apexes = equal_invariant_apexes(t[0], t[1], t[2]);
    o.require(apexes.size() == 4, "scalene apex count");
    o.require(apexes_match_oracle(t, apexes), "apex oracle");
  }
  for (int i = 0; i < 20; ++i) {
    // apex on the perpendicular bisector of xy
    const Point x = rnd.point(), y = rnd.point();
    if (x == y) continue;
    const Rational k = rnd.next() + ratio(1, 3);
    const Point z{(x.x + y.x) / 2 - k * (y.y - x.y), (x.y + y.y) / 2 + k * (y.x - x.x)};
    ++isosceles;
    const Triangle t(x, y, z);
    const TilingPatch p = gen_reflected_pair(t, PairKind::kBisector);
    o.require(reflection_classify(x, y, z, p.tiles[1][2]) == Reflection::kIdentity, "isosceles identity");
    const auto apexes = equal_invariant_apexes(x, y, z);
    o.require(apexes.size() == 2, "isosceles apex count");
    o.require(apexes_match_oracle(t, apexes), "isosceles apex oracle");
  }
  if (o.pass) {
    o.detail = std::to_string(scalene) + " scalene x 3 kinds and " + std::to_string(isosceles) +
               " isosceles triangles; apexes within 1e-30 of the ellipse oracle";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Timer timer;
  const TilingPatch p = gen_two_scale_periodic({2, ratio(433, 250), 10, 10});
  o.require(validate_patch(p).ok, "invalid");
  const IncidenceGraph g = build_incidence(p);
  o.require(shared_side_pairs(g).empty(), "shared sides");
  std::set<SideRef> composite;
  for (const CompositeSide& c : composite_sides(g)) {
    if (c.cover.size() == 2) composite.insert(c.side);
  }
  const std::vector<int> hops = hops_from_boundary(g);
  const Rational big = g.tiles[0].area();
  long bases = 0, reached = 0;
  for (TileId t = 0; t < g.tiles.size(); ++t) {
    if (g.tiles[t].area() == big && hops[t] >= 1) {
      ++bases;
      o.require(composite.count({t, 0}) == 1, "interior base not composite");
    }
    if (hops[t] >= 3) {
      ++reached;
      const auto h = neighbor_hops_to_composite(g, t);
      o.require(h && *h <= 3, "tile farther than 3 hops from a composite side");
    }
  }
  const SideLengthRange r = side_length_range(p, 80);
  o.require(r.min.width() <= kTol20 && r.max.width() <= kTol20, "enclosure width above 1e-20");
  o.require(r.max.contains(Rational(2)), "max side enclosure misses 2");
  // independent oracle: the small slant squared is 1/4 + (433/500)^2
  const Rational min_sq = ratio(249989, 250000);
  const bool exact_enclosed = r.min.lo * r.min.lo <= min_sq && min_sq <= r.min.hi * r.min.hi;
  o.require(exact_enclosed, "min side enclosure misses sqrt(249989)/500");
  const std::string min_dec = Big(r.min.lo).sig(12);
  o.require(min_dec.rfind(kTwoScaleMinPrefix, 0) == 0 && Big(r.min.hi).sig(12).rfind(kTwoScaleMinPrefix, 0) == 0,
            "min side enclosure [" + min_dec + ", " + Big(r.min.hi).sig(12) + "] does not lie at " +
                kTwoScaleMinPrefix + "...; exact minimum is sqrt(249989)/500");
  const double s = timer.seconds();
  o.require(s < kCriterion7Seconds, "runtime " + secs(s));
  if (o.pass) {
    o.detail = std::to_string(bases) + " interior bases composite, " + std::to_string(reached) +
               " deep tiles within 3 hops, " + secs(s);
  }
  return o;
}

Rational rational_sqrt(const Rational& q) {
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  const Rational r = ratio(num, den);
  if (r * r != q) throw std::logic_error("side length is not rational");
  return r;
}

// Triangles with rational sides: Pythagorean triangles and pairs of them
// glued along a common leg, rotated by Pythagorean angles.
std::vector<Triangle> unit_perimeter_corpus() {
  std::vector<std::array<long, 3>> triples;
  for (long m = 2; m <= 9; ++m) {
    for (long n = 1; n < m; ++n) triples.push_back({m * m - n * n, 2 * m * n, m * m + n * n});
  }
  std::vector<std::array<Point, 3>> raw;
  for (const auto& [a, b, c] : triples) raw.push_back({pt(0, 0), pt(a, 0), pt(0, b)});
  for (std::size_t i = 0; i < triples.size(); i += 3) {
    for (std::size_t j = 1; j < triples.size(); j += 4) {
      const auto& p = triples[i];
      const auto& q = triples[j];
      raw.push_back({pt(-p[0] * q[1], 0), pt(q[0] * p[1], 0), pt(0, p[1] * q[1])});
    }
  }
  std::vector<Triangle> out;
  RandomRationals rnd(36);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& [p, q, r] = triples[i % triples.size()];
    const Rational cs = ratio(p, r), sn = ratio(q, r);
    const Point shift = rnd.point(5, 3);
    std::array<Point, 3> v = raw[i];
    for (Point& x : v) x = {cs * x.x - sn * x.y + shift.x, sn * x.x + cs * x.y + shift.y};
    Rational perimeter = 0;
    for (int k = 0; k < 3; ++k) perimeter += rational_sqrt(squared_distance(v[k], v[(k + 1) % 3]));
    for (Point& x : v) x = {x.x / perimeter, x.y / perimeter};
    out.emplace_back(v[0], v[1], v[2]);
  }
  return out;
}

Outcome criterion8() {
  Outcome o;
  const Interval delta = enclose_relative(LengthExpr::sqrt_of(Rational(3)) * ratio(1, 36), 128);
  long checked = 0;
  for (const Triangle& t : unit_perimeter_corpus()) {
    const Interval perim = enclose_relative(t.perimeter(), 128);
    o.require(perim.lo >= 1 - kTol30 && perim.hi <= 1 + kTol30, "perimeter not certified to 1e-30");
    ++checked;
    o.require(t.area() <= delta.hi + kTol30, "area above sqrt(3)/36");
    Rational min_sq = t.squared_side(0);
    for (int i = 1; i < 3; ++i) min_sq = std::min(min_sq, t.squared_side(i));
    const Interval min_side = enclose_relative(LengthExpr::sqrt_of(min_sq), 128);
    o.require(min_side.hi >= 4 * t.area() - kTol30, "min side below 4 * area");
    o.require(min_sq >= 16 * t.area() * t.area(), "min side below 4 * area (exact)");
  }
  if (o.pass) o.detail = std::to_string(checked) + " unit-perimeter triangles";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion9(const std::string& cli_path) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("tritile-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const std::string data = TRITILE_TEST_DATA;
  std::vector<std::vector<std::string>> gens = {
      {"generate", "recursive", "--t", "3/2", "--depth", "6"},
      {"generate", "twoscale", "--b", "2", "--h", "433/250", "--m", "3", "--n", "2"},
      {"generate", "convex", "--k", "7", "--strategy", "random", "--seed", "5", "--refine", "5"},
      {"generate", "pair", "--kind", "midpoint"},
  };
  std::vector<std::string> inputs = {data + "/one_tile.til", data + "/overlap.til", data + "/malformed.til"};
  long commands = 0;
  auto same_run = [&](std::vector<std::string> args, const std::string& output) {
    ++commands;
    std::string texts[3], files[3];
    for (int i = 0; i < 3; ++i) {
      std::vector<std::string> a = args;
      const fs::path out = dir / ("out" + std::to_string(i));
      if (!output.empty()) a.insert(a.end(), {"-o", out.string()});
      if (i < 2) {
        std::ostringstream so, se;
        const int code = cli::run(a, so, se);
        texts[i] = std::to_string(code) + "\n" + so.str() + se.str();
      } else {
        std::string cmd = "'" + cli_path + "'";
        for (const std::string& s : a) cmd += " '" + s + "'";
        const fs::path log = dir / "log";
        const int status = std::system((cmd + " > '" + log.string() + "' 2>&1").c_str());
        texts[i] = std::to_string(WEXITSTATUS(status)) + "\n" + slurp(log);
      }
      files[i] = output.empty() ? "" : slurp(out);
      if (!output.empty()) fs::remove(out);
    }
    const bool ok = texts[0] == texts[1] && texts[1] == texts[2] && files[0] == files[1] && files[1] == files[2];
    std::string joined;
    for (const std::string& s : args) joined += s + " ";
    if (!ok && std::getenv("TRITILE_ACCEPTANCE_DEBUG")) {
      for (int i = 0; i < 3; ++i) std::cerr << "--- run " << i << "\n" << texts[i] << files[i].size() << "\n";
    }
    o.require(ok, "outputs differ for: " + joined);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    same_run(gens[i], "file");
    std::vector<std::string> a = gens[i];
    const std::string f = (dir / ("g" + std::to_string(i) + ".til")).string();
    a.insert(a.end(), {"-o", f});
    std::ostringstream so, se;
    cli::run(a, so, se);
    inputs.push_back(f);
  }
  for (const std::string& f : inputs) {
    same_run({"validate", f}, "");
    same_run({"audit", f}, "");
    same_run({"audit", f, "--unit-perimeter", "--disk", "1,1,3"}, "");
    same_run({"stretches", f}, "");
    same_run({"stats", f, "--precision-bits", "100"}, "");
    same_run({"render", f}, "file");
    same_run({"render", f, "--stretch-overlay", "--labels", "--width", "640"}, "file");
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(commands) + " commands byte-identical in-process and as a subprocess";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tritile acceptance criteria"};
  int only = 0;
  std::string cli_path = TRITILE_CLI_PATH;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--cli", cli_path, "Path of the tritile executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, [&] { return criterion9(cli_path); },
  };
  bool all = true;
  for (int i = 1; i <= 9; ++i) {
    if (only != 0 && only != i) continue;
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
