// Copyright 2026 The agshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agshare/analysis.hpp"
#include "agshare/cheatersim.hpp"
#include "agshare/io.hpp"
#include "catalog.hpp"
#include "test_util.hpp"

namespace {

using namespace agshare;
using testing::fixture_scheme;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome check(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::vector<PlayerSet> sorted(std::vector<PlayerSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Players of a configuration listed by the points they hold.
PlayerSet players_of(const SchemeConfig& cfg, const std::vector<Point>& pts) {
  PlayerSet s;
  for (const Point& pt : pts) {
    const auto it = std::find(cfg.points.begin() + 1, cfg.points.end(), pt);
    if (it == cfg.points.end()) throw InvalidArgument("point is not a player");
    s.insert(static_cast<std::size_t>(it - cfg.points.begin()));
  }
  return s;
}

Outcome four_player_gf7() {
  const auto cfg = testing::load_fixture("gf7_four_players.json").scheme;
  const EllipticCurve& c = cfg.curve;
  const std::vector<std::string> listed = {"(3,2)", "(2,6)", "(4,2)", "(0,5)", "(5,0)",
                                           "(0,2)", "(4,5)", "(2,1)", "(3,5)"};
  const Point p0 = c.parse_point(listed[0]);
  const std::vector<Point> all = c.points();
  const std::vector<Point> inventory(all.begin() + 1, all.end());
  std::vector<Point> expected;
  bool multiples_ok = true;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    expected.push_back(c.parse_point(listed[i]));
    multiples_ok = multiples_ok && c.scalar_mul(static_cast<long long>(i) + 1, p0) == expected.back();
  }
  std::sort(expected.begin(), expected.end());
  const bool inventory_ok = multiples_ok && inventory == expected;

  // D = {P_0, P_1, P_3, P_5, P_7}, players P_1, P_3, P_5, P_7.
  auto P = [&](int i) { return c.scalar_mul(i + 1, p0); };
  const std::vector<std::vector<int>> pairs = {{1, 7}, {1, 3}, {1, 5}, {3, 5}, {3, 7}, {5, 7}};
  std::vector<PlayerSet> listed_min;
  for (const auto& pr : pairs) listed_min.push_back(players_of(cfg, {P(pr[0]), P(pr[1])}));

  const Scheme s = Scheme::build(cfg);
  const auto params = mds_check(s);
  const auto min_gamma = access_structure(s).minimal_qualified;
  const bool gamma_ok = sorted(min_gamma) == sorted(listed_min);
  std::ostringstream d;
  d << "inventory " << (inventory_ok ? "ok" : "MISMATCH") << ", min Gamma " << (gamma_ok ? "ok" : "MISMATCH")
    << ", d_min=" << params.d_min << " (want 2), d_cheat=" << params.d_cheat << " (want 3), is_mds="
    << std::boolalpha << params.is_mds << " (want false)";
  return check(inventory_ok && gamma_ok && all.size() == 10 && params.d_min == 2 && params.d_cheat == 3 && !params.is_mds,
               d.str());
}

Outcome hermitian_gf4() {
  const auto cfg = testing::load_fixture("gf4_hermitian.json").scheme;
  const EllipticCurve& c = cfg.curve;
  const auto gs = c.group_structure();
  // Labels: P_ij = i * P_10 + j * P_01 with P_10 the dealer.
  const Point g10 = cfg.points[0], g01 = cfg.points[1];
  auto P = [&](int i, int j) { return c.add(c.scalar_mul(i, g10), c.scalar_mul(j, g01)); };
  const bool labels_ok = c.point_order(g10) == 3 && c.point_order(g01) == 3 && !(P(1, 1) == P(2, 2)) &&
                         c.is_subgroup(std::vector<Point>{Point::at_infinity(), g10, P(2, 0)}) &&
                         !c.is_subgroup(std::vector<Point>{Point::at_infinity(), g10, P(2, 0), g01});
  const Scheme s = Scheme::build(cfg);
  const std::size_t n = s.n();
  bool pairs_ok = true;
  for (const auto& removed : {std::vector<Point>{P(0, 1), P(0, 2)}, std::vector<Point>{P(1, 1), P(2, 2)},
                              std::vector<Point>{P(1, 2), P(2, 1)}})
    pairs_ok = pairs_ok && s.is_qualified(players_of(cfg, removed).complement(n));
  const auto params = mds_check(s);
  // Minimal qualified 4-sets from the brute-force oracle.
  const auto fours = testing::sets({{1, 2, 3, 4}, {1, 3, 5, 6}, {1, 4, 6, 7}, {2, 3, 6, 7}, {2, 4, 5, 7}});
  std::vector<PlayerSet> computed_fours;
  for (const PlayerSet& m : access_structure(s).minimal_qualified)
    if (m.size() == 4) computed_fours.push_back(m);
  const bool fours_ok = sorted(computed_fours) == sorted(fours);
  std::ostringstream d;
  d << "group (" << gs.n1 << "," << gs.n2 << "), labels " << (labels_ok ? "ok" : "BAD") << ", 2-element complements "
    << (pairs_ok ? "qualified" : "NOT qualified") << ", d_min=" << params.d_min << ", d_cheat=" << params.d_cheat
    << ", is_mds=" << std::boolalpha << params.is_mds << ", 4-element minimal family " << (fours_ok ? "ok" : "MISMATCH");
  return check(gs.n1 == 3 && gs.n2 == 3 && labels_ok && pairs_ok && params.d_min == 2 && params.d_cheat == 2 &&
                   params.is_mds && fours_ok,
               d.str());
}

Outcome hermitian_gf8() {
  const auto cfg = testing::load_fixture("gf8_hermitian.json").scheme;
  const EllipticCurve& c = cfg.curve;
  // P_i = i * g for i in Z_9; D = [P_1..P_8], dealer P_1.
  const Point g = cfg.points[0];
  bool labels_ok = c.point_order(g) == 9;
  for (int i = 1; i <= 8; ++i) labels_ok = labels_ok && cfg.points[i - 1] == c.scalar_mul(i, g);
  auto complement_of = [&](std::vector<int> labels) {
    std::vector<Point> pts;
    for (int l : labels) pts.push_back(c.scalar_mul(l, g));
    return players_of(cfg, pts).complement(7);
  };
  std::vector<PlayerSet> listed;
  for (const auto& r : std::vector<std::vector<int>>{{2, 3, 4}, {3, 7, 8}, {4, 6, 8}, {5, 6, 7}, {2, 5}, {2, 7},
                                                     {2, 8}, {3, 6}, {4, 5}, {4, 7}, {5, 8}})
    listed.push_back(complement_of(r));
  const Scheme s = Scheme::build(cfg);
  const auto params = mds_check(s);
  const auto min_gamma = access_structure(s).minimal_qualified;
  const bool gamma_ok = sorted(min_gamma) == sorted(listed);
  std::string t4;
  bool t4_ok = false;
  try {
    const auto r = subgroup_mds_check(s, params);
    t4_ok = r.subgroup && r.witness && !s.is_qualified(r.witness->complement(7)) &&
            c.group_sum([&] {
              std::vector<Point> w;
              for (std::size_t i : r.witness->indices()) w.push_back(cfg.points[i]);
              w.push_back(cfg.points[0]);
              return w;
            }()) == Point::at_infinity();
    t4 = r.witness ? "witness " + r.witness->to_string() : "no witness";
  } catch (const PropertyViolation& e) {
    t4 = e.what();
  }
  std::ostringstream d;
  d << "labels " << (labels_ok ? "ok" : "BAD") << ", 11 reference minimal sets " << (gamma_ok ? "reproduced" : "MISMATCH")
    << ", is_mds=" << std::boolalpha << params.is_mds << ", subgroup check " << (t4_ok ? "ok" : "FAILED") << " ("
    << t4 << ")";
  return check(labels_ok && gamma_ok && params.is_mds && t4_ok, d.str());
}

struct SweepRow {
  std::string label;
  bool subgroup;
  Scheme scheme;
  QualificationTable table;
  SchemeParams params;
};

const std::vector<SweepRow>& sweep() {
  static const std::vector<SweepRow> rows = [] {
    std::vector<SweepRow> out;
    for (auto& e : testing::catalog_configs()) {
      Scheme s = Scheme::build(e.config);
      QualificationTable t(s);
      SchemeParams p = mds_check(s, t);
      out.push_back({e.label, e.subgroup, std::move(s), std::move(t), p});
    }
    return out;
  }();
  return rows;
}

Outcome bound_chain_sweep() {
  std::vector<std::string> bad;
  for (const auto& r : sweep())
    if (!bound_chain_holds(r.scheme, r.params)) bad.push_back(r.label);
  return check(bad.empty(), std::to_string(sweep().size()) + " configs, " + std::to_string(bad.size()) +
                                " violations" + (bad.empty() ? "" : ", first: " + bad.front()));
}

Outcome group_sum_predictor() {
  std::size_t checked = 0, disagreements = 0;
  std::string first;
  auto run = [&](const Scheme& s, const QualificationTable& t, const std::string& label) {
    const auto r = validate_predictor(s, t);
    checked += r.checked;
    disagreements += r.disagreements.size();
    if (!r.disagreements.empty() && first.empty()) first = label + " removed " + r.disagreements[0].verdict.removed.to_string();
  };
  for (const char* name : {"gf7_four_players.json", "gf8_hermitian.json"}) {
    const auto s = fixture_scheme(name);
    run(s, QualificationTable(s), name);
  }
  for (const auto& r : sweep()) run(r.scheme, r.table, r.label);
  return check(disagreements == 0, std::to_string(checked) + " subsets compared, " + std::to_string(disagreements) +
                                       " disagreements" + (first.empty() ? "" : ", first: " + first));
}

Outcome subgroup_sweep() {
  std::size_t subgroup_configs = 0;
  std::vector<std::string> bad;
  for (const auto& r : sweep()) {
    if (!is_subgroup_config(*r.scheme.config())) continue;
    ++subgroup_configs;
    const auto m = static_cast<std::size_t>(r.scheme.config()->m);
    if (r.params.d_min != m - 1 || r.params.d_cheat != m - 1)
      bad.push_back(r.label + " (d_min=" + std::to_string(r.params.d_min) + ", d_cheat=" +
                    std::to_string(r.params.d_cheat) + ")");
  }
  std::string d = std::to_string(subgroup_configs) + " subgroup configs, " + std::to_string(bad.size()) + " with (d_min, d_cheat) != (m-1, m-1)";
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) d += "; " + bad[i];
  if (bad.size() > 3) d += "; ...";
  return check(subgroup_configs > 0 && bad.empty(), d);
}

Outcome weight_identity_sweep() {
  std::size_t mismatches = 0;
  for (const auto& r : sweep()) {
    const std::size_t by_access = r.scheme.n() - max_unqualified(r.table);
    const std::size_t by_weight = min_weight_where(r.scheme.sharing_code(), true, r.scheme.cap());
    if (by_access != by_weight) ++mismatches;
  }
  return check(mismatches == 0, std::to_string(sweep().size()) + " configs, " + std::to_string(mismatches) + " mismatches");
}

Outcome shamir_baseline() {
  std::size_t cases = 0, bad = 0;
  for (unsigned p : {7u, 11u}) {
    const auto f = make_field(p, 1);
    for (std::size_t n : {3u, 4u, 5u}) {
      for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Elem> xs;
        for (std::size_t i = 0; i <= n; ++i) xs.push_back(static_cast<Elem>(i));
        const auto params = mds_check(shamir_scheme(f, k, xs));
        ++cases;
        if (params.d_min != n - k + 1 || params.d_cheat != n - k + 1) ++bad;
      }
    }
  }
  return check(bad == 0, std::to_string(cases) + " (q, k, n) cases, " + std::to_string(bad) + " mismatches");
}

Outcome perfectness() {
  std::size_t unqualified = 0, leaks = 0;
  for (const char* name : {"gf7_four_players.json", "gf4_hermitian.json", "gf8_hermitian.json"}) {
    const auto s = fixture_scheme(name);
    const QualificationTable t(s);
    for (std::size_t mask = 0; mask < t.subsets(); ++mask) {
      if (t.qualified_mask(mask)) continue;
      ++unqualified;
      const auto prof = s.perfectness_profile(QualificationTable::to_set(mask));
      bool same = prof.size() == s.gf().order();
      for (const auto& [_, dist] : prof) same = same && dist == prof.begin()->second;
      if (!same) ++leaks;
    }
  }
  return check(leaks == 0, std::to_string(unqualified) + " unqualified subsets, " + std::to_string(leaks) +
                               " with secret-dependent share distributions");
}

Outcome cheater_semantics() {
  const auto s = fixture_scheme("gf8_m5.json");
  const auto sum = simulate(s, 200, 1, 2024);
  const std::size_t dcheat = d_cheat(s);
  const std::size_t t = (dcheat - 1) / 2 + 1;
  const auto sc = find_confusable_scenario(s, t);
  bool ambiguous = false;
  if (sc) ambiguous = !decode(s, sc->submitted).recovered_secret.has_value();
  std::ostringstream d;
  d << "t=1: recovered " << sum.secret_recovered << "/200, identified " << sum.cheaters_identified
    << "/200; t=" << t << ": " << (ambiguous ? "ambiguous scenario found" : "no ambiguous scenario");
  return check(sum.secret_recovered == 200 && sum.cheaters_identified == 200 && ambiguous, d.str());
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "agshare_acceptance";
  fs::create_directories(dir);
  std::size_t same = 0, total = 0;
  for (const char* name : {"gf7_four_players", "gf4_hermitian", "gf8_hermitian", "gf8_m5"}) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (std::string(name) + "." + std::to_string(run) + ".json");
      const std::string cmd = std::string(AGSHARE_CLI) + " analyze --config " +
                              testing::fixture_path(std::string(name) + ".json") + " --out " + out.string();
      if (std::system(cmd.c_str()) != 0) return check(false, std::string("analyze failed on ") + name);
      outputs[run] = testing::read_file(out.string());
    }
    ++total;
    if (outputs[0] == outputs[1] && !outputs[0].empty()) ++same;
  }
  fs::remove_all(dir);
  return check(same == total, std::to_string(same) + "/" + std::to_string(total) + " fixtures byte-identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"GF(7) four-player scheme: inventory, min Gamma, d_min=2, d_cheat=3, not MDS", four_player_gf7},
      {"GF(4) Hermitian scheme: (3,3) group, reference pairs, MDS (2,2), derived 4-sets", hermitian_gf4},
      {"GF(8) Hermitian scheme: reference minimal sets, MDS, subgroup witness", hermitian_gf8},
      {"bound chain m-1 <= d_min <= d_cheat <= m+1 on the sweep", bound_chain_sweep},
      {"group-sum predictor agrees with the linear-algebra oracle", group_sum_predictor},
      {"subgroup evaluation sets give d_min = d_cheat = m-1", subgroup_sweep},
      {"d_cheat by access structure equals min share weight with c_0 != 0", weight_identity_sweep},
      {"Shamir baseline d_min = d_cheat = n-k+1 over GF(7), GF(11)", shamir_baseline},
      {"perfectness of every unqualified subset (GF(7), GF(4), GF(8) fixtures)", perfectness},
      {"cheater semantics on GF(8), m=5", cheater_semantics},
      {"analyze reports are byte-identical across runs", determinism},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " -- " << o.detail
              << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in " << secs << " s"
            << std::endl;
  return failed;
}
