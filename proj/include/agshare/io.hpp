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

#pragma once

// JSON configuration files and reports. Key order is fixed so that reports
// are byte-identical across runs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "agshare/analysis.hpp"
#include "agshare/cheatersim.hpp"
#include "agshare/curve.hpp"
#include "agshare/errors.hpp"
#include "agshare/field.hpp"
#include "agshare/lsss.hpp"

namespace agshare::io {

using Json = nlohmann::ordered_json;

/// Published claims about a configuration, compared against the computed
/// values and reported as disagreements.
struct Claims {
  std::optional<std::vector<PlayerSet>> minimal_qualified;
  std::optional<std::size_t> d_min;
  std::optional<std::size_t> d_cheat;
  std::optional<bool> is_mds;

  bool empty() const { return !minimal_qualified && !d_min && !d_cheat && !is_mds; }
  bool operator==(const Claims&) const = default;
};

struct ConfigFile {
  SchemeConfig scheme;
  Claims claims;

  bool operator==(const ConfigFile&) const = default;
};

namespace detail {

inline void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidArgument("unknown key '" + key + "' in " + where);
  }
}

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InvalidArgument("missing key '" + std::string(key) + "' in " + where);
  return j.at(key);
}

template <class T>
T get(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument("bad value for " + what);
  }
}

inline std::vector<PlayerSet> parse_sets(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidArgument(what + " must be an array of index arrays");
  std::vector<PlayerSet> out;
  for (const Json& s : j) out.push_back(PlayerSet::from_indices(get<std::vector<std::size_t>>(s, what)));
  return out;
}

inline Json sets_json(const std::vector<PlayerSet>& sets) {
  Json out = Json::array();
  for (const PlayerSet& s : sets) out.push_back(s.indices());
  return out;
}

}  // namespace detail

inline FieldSpec parse_field(const Json& j, std::size_t cap = kDefaultFieldCap) {
  detail::reject_unknown(j, {"p", "r", "modulus"}, "field");
  const auto p = detail::get<unsigned>(detail::require(j, "p", "field"), "field.p");
  const auto r = j.contains("r") ? detail::get<unsigned>(j.at("r"), "field.r") : 1u;
  std::optional<std::vector<unsigned>> modulus;
  if (j.contains("modulus")) modulus = detail::get<std::vector<unsigned>>(j.at("modulus"), "field.modulus");
  return make_field_spec(p, r, modulus, cap);
}

inline EllipticCurve parse_curve(const FieldPtr& field, const Json& j) {
  detail::reject_unknown(j, {"a1", "a2", "a3", "a4", "a6"}, "curve");
  auto coeff = [&](const char* key) -> Elem {
    if (!j.contains(key)) return 0;
    const Json& v = j.at(key);
    if (v.is_number_unsigned() && field->degree() == 1) {
      const auto n = v.get<unsigned long>();
      if (n >= field->order()) throw InvalidArgument(std::string("curve.") + key + " out of range");
      return static_cast<Elem>(n);
    }
    return field->parse(detail::get<std::string>(v, std::string("curve.") + key));
  };
  return EllipticCurve(field, coeff("a1"), coeff("a2"), coeff("a3"), coeff("a4"), coeff("a6"));
}

/// Field and curve only (for the points command).
inline EllipticCurve parse_curve_config(const Json& j) {
  detail::reject_unknown(j, {"field", "curve", "m", "D", "dealer", "seed", "claims"}, "config");
  const FieldPtr field = make_field(parse_field(detail::require(j, "field", "config")));
  return parse_curve(field, detail::require(j, "curve", "config"));
}

inline ConfigFile parse_config(const Json& j) {
  EllipticCurve curve = parse_curve_config(j);
  ConfigFile out{SchemeConfig{curve, 0, {}, 0}, {}};
  SchemeConfig& cfg = out.scheme;
  cfg.m = detail::get<int>(detail::require(j, "m", "config"), "m");
  if (j.contains("seed")) cfg.seed = detail::get<std::uint64_t>(j.at("seed"), "seed");

  const Json& d = detail::require(j, "D", "config");
  if (d.is_string()) {
    if (d.get<std::string>() != "all-nonzero") throw InvalidArgument("D must be a point list or \"all-nonzero\"");
    auto pts = curve.points();
    pts.erase(pts.begin());
    if (pts.empty()) throw InvalidArgument("curve has no affine points");
    Point dealer = pts.front();
    if (j.contains("dealer")) dealer = curve.parse_point(detail::get<std::string>(j.at("dealer"), "dealer"));
    const auto it = std::find(pts.begin(), pts.end(), dealer);
    if (it == pts.end()) throw InvalidArgument("dealer must be an affine point of the curve");
    cfg.points.push_back(dealer);
    for (const Point& pt : pts)
      if (!(pt == dealer)) cfg.points.push_back(pt);
  } else if (d.is_array()) {
    if (j.contains("dealer")) throw InvalidArgument("dealer is only allowed with D = \"all-nonzero\"");
    for (const Json& s : d) cfg.points.push_back(curve.parse_point(detail::get<std::string>(s, "D entry")));
  } else {
    throw InvalidArgument("D must be a point list or \"all-nonzero\"");
  }
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (cfg.points[i].infinity) throw InvalidArgument("D must not contain the point at infinity");
    for (std::size_t k = 0; k < i; ++k)
      if (cfg.points[k] == cfg.points[i]) throw InvalidArgument("D contains duplicate points");
  }

  if (j.contains("claims")) {
    const Json& c = j.at("claims");
    detail::reject_unknown(c, {"minimal_qualified", "d_min", "d_cheat", "is_mds"}, "claims");
    if (c.contains("minimal_qualified"))
      out.claims.minimal_qualified = detail::parse_sets(c.at("minimal_qualified"), "claims.minimal_qualified");
    if (c.contains("d_min")) out.claims.d_min = detail::get<std::size_t>(c.at("d_min"), "claims.d_min");
    if (c.contains("d_cheat")) out.claims.d_cheat = detail::get<std::size_t>(c.at("d_cheat"), "claims.d_cheat");
    if (c.contains("is_mds")) out.claims.is_mds = detail::get<bool>(c.at("is_mds"), "claims.is_mds");
  }
  return out;
}

inline ConfigFile parse_config_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

inline Json field_json(const GaloisField& f) {
  return Json{{"p", f.spec().p}, {"r", f.spec().r}, {"modulus", f.spec().modulus}};
}

inline Json curve_json(const EllipticCurve& c) {
  const GaloisField& f = c.gf();
  return Json{{"a1", f.to_text(c.a1())},
              {"a2", f.to_text(c.a2())},
              {"a3", f.to_text(c.a3())},
              {"a4", f.to_text(c.a4())},
              {"a6", f.to_text(c.a6())}};
}

/// Normalised config: D as an explicit list. Re-parses to the same ConfigFile.
inline Json config_json(const ConfigFile& cfg) {
  const SchemeConfig& s = cfg.scheme;
  Json d = Json::array();
  for (const Point& pt : s.points) d.push_back(s.curve.to_text(pt));
  Json out{{"field", field_json(s.curve.gf())}, {"curve", curve_json(s.curve)}, {"m", s.m}, {"D", d},
           {"seed", s.seed}};
  if (!cfg.claims.empty()) {
    Json c = Json::object();
    if (cfg.claims.minimal_qualified) c["minimal_qualified"] = detail::sets_json(*cfg.claims.minimal_qualified);
    if (cfg.claims.d_min) c["d_min"] = *cfg.claims.d_min;
    if (cfg.claims.d_cheat) c["d_cheat"] = *cfg.claims.d_cheat;
    if (cfg.claims.is_mds) c["is_mds"] = *cfg.claims.is_mds;
    out["claims"] = c;
  }
  return out;
}

inline Json group_json(const EllipticCurve& c, const GroupStructure& gs) {
  Json gens = Json::array();
  for (const Point& g : gs.generators) gens.push_back(c.to_text(g));
  return Json{{"order", gs.order},           {"n1", gs.n1},
              {"n2", gs.n2},                 {"generators", gens},
              {"cyclic", gs.is_cyclic},      {"supersingular", gs.is_supersingular}};
}

inline Json points_report(const EllipticCurve& c) {
  Json pts = Json::array();
  for (const Point& pt : c.points()) pts.push_back(c.to_text(pt));
  return Json{{"field", field_json(c.gf())},
              {"curve", curve_json(c)},
              {"points", pts},
              {"group", group_json(c, c.group_structure())}};
}

/// Builds the scheme and runs every analysis. PropertyViolation propagates.
inline Json analysis_report(const ConfigFile& cfg) {
  const SchemeConfig& s = cfg.scheme;
  const Scheme scheme = Scheme::build(s);
  const QualificationTable table(scheme);
  const AccessStructure access = access_structure(table);
  const SchemeParams params = mds_check(scheme, table);
  if (params.is_mds != (params.d_min == params.d_cheat)) throw InvariantViolation("inconsistent MDS flag");

  Json report;
  report["config"] = config_json(cfg);
  report["scheme"] = Json{{"q", scheme.gf().order()},
                          {"n", scheme.n()},
                          {"m", s.m},
                          {"k", scheme.k()},
                          {"genus", EllipticCurve::kGenus},
                          {"group", group_json(s.curve, s.curve.group_structure())}};
  report["minimal_qualified"] = detail::sets_json(access.minimal_qualified);
  report["d_min"] = params.d_min;
  report["d_cheat"] = params.d_cheat;
  report["max_unqualified"] = params.max_unqualified;
  report["is_mds"] = params.is_mds;
  report["full_code_distance"] = params.full_code_distance;

  Json checks;
  if (!bound_chain_holds(scheme, params))
    throw PropertyViolation("bound chain m-1 <= d_min <= d_cheat <= m+1 violated");
  checks["bound_chain"] = true;

  const PredictorReport t3 = validate_predictor(scheme, table);
  Json dis = Json::array();
  for (const auto& d : t3.disagreements)
    dis.push_back(Json{{"removed", d.verdict.removed.indices()},
                       {"B", s.curve.to_text(d.verdict.b)},
                       {"case", to_string(d.verdict.kind)},
                       {"predicted_qualified", d.verdict.qualified_complement},
                       {"predicted_minimal", d.verdict.minimal_complement},
                       {"oracle_qualified", d.oracle_qualified},
                       {"oracle_minimal", d.oracle_minimal}});
  checks["group_sum_predictor"] = Json{{"checked", t3.checked},
                              {"disagreements", dis},
                              {"boundary_subsets", t3.boundary_subsets},
                              {"boundary_unqualified", detail::sets_json(t3.boundary_unqualified)}};

  const SubgroupCheck t4 = subgroup_mds_check(scheme, params);
  Json witness = nullptr;
  Json witness_points = nullptr;
  if (t4.subgroup) {
    const auto w = t4.witness;
    if (w) {
      witness = w->indices();
      witness_points = Json::array();
      for (std::size_t i : w->indices()) witness_points.push_back(s.curve.to_text(s.points[i]));
    }
  }
  checks["subgroup_mds"] = Json{{"subgroup", t4.subgroup}, {"witness", witness}, {"witness_points", witness_points}};
  checks["mds_condition"] = mds_condition_check(scheme, params);
  report["checks"] = checks;

  Json disagreements = Json::array();
  if (!t3.disagreements.empty())
    disagreements.push_back(Json{{"source", "group_sum_predictor"}, {"count", t3.disagreements.size()}});
  const Claims& c = cfg.claims;
  if (c.minimal_qualified) {
    const std::set<std::uint64_t> actual = [&] {
      std::set<std::uint64_t> a;
      for (const PlayerSet& ps : access.minimal_qualified) a.insert(ps.bits());
      return a;
    }();
    std::vector<PlayerSet> not_minimal;
    for (const PlayerSet& ps : *c.minimal_qualified)
      if (!actual.count(ps.bits())) not_minimal.push_back(ps);
    if (!not_minimal.empty()) {
      Json block{{"source", "claims.minimal_qualified"}, {"claimed_but_not_minimal", Json::array()}};
      for (const PlayerSet& ps : not_minimal)
        block["claimed_but_not_minimal"].push_back(
            Json{{"set", ps.indices()}, {"qualified", table.qualified(ps)}});
      disagreements.push_back(block);
    }
  }
  auto claim = [&](const char* key, const auto& claimed, const auto& actual) {
    if (claimed && *claimed != actual)
      disagreements.push_back(Json{{"source", std::string("claims.") + key}, {"claimed", *claimed}, {"computed", actual}});
  };
  claim("d_min", c.d_min, params.d_min);
  claim("d_cheat", c.d_cheat, params.d_cheat);
  claim("is_mds", c.is_mds, params.is_mds);
  report["disagreements"] = disagreements;
  return report;
}

inline Json bundle_json(const Scheme& scheme, const ShareBundle& b) {
  Json shares = Json::object();
  for (std::size_t i = 0; i < b.shares.size(); ++i) shares[std::to_string(i + 1)] = scheme.gf().to_text(b.shares[i]);
  return Json{{"secret", scheme.gf().to_text(b.secret)}, {"shares", shares}};
}

/// Player -> share map from a share file (the "shares" object of bundle_json).
inline std::map<std::size_t, Elem> parse_shares(const Scheme& scheme, const Json& j) {
  const Json& shares = j.contains("shares") ? j.at("shares") : j;
  if (!shares.is_object()) throw InvalidArgument("share file must contain a \"shares\" object");
  std::map<std::size_t, Elem> out;
  for (const auto& [key, value] : shares.items()) {
    std::size_t player = 0;
    try {
      std::size_t used = 0;
      player = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidArgument("bad player index '" + key + "' in share file");
    }
    if (player < 1 || player > scheme.n()) throw InvalidArgument("player index out of range in share file");
    out[player] = scheme.gf().parse(detail::get<std::string>(value, "share value"));
  }
  return out;
}

inline Json simulation_json(const Scheme& scheme, const SimulationSummary& sum, std::uint64_t seed,
                            const std::vector<TrialRecord>* detail) {
  const std::size_t dmin = d_min(scheme);
  const std::size_t dcheat = min_weight_where(scheme.sharing_code(), true, scheme.cap());
  Json out{{"model", "nearest-codeword decoding of submitted shares (distance interpretation)"},
           {"seed", seed},
           {"trials", sum.trials},
           {"cheaters", sum.cheaters},
           {"d_min", dmin},
           {"d_cheat", dcheat},
           {"identification_radius", (dmin - 1) / 2},
           {"recovery_radius", (dcheat - 1) / 2},
           {"secret_recovered", sum.secret_recovered},
           {"cheaters_identified", sum.cheaters_identified},
           {"ambiguous", sum.ambiguous},
           {"wrong_secret", sum.wrong_secret},
           {"recovery_rate", sum.recovery_rate()},
           {"identification_rate", sum.identification_rate()}};
  if (detail) {
    Json trials = Json::array();
    const GaloisField& f = scheme.gf();
    for (const TrialRecord& t : *detail) {
      Json submitted = Json::array();
      for (Elem e : t.scenario.submitted) submitted.push_back(f.to_text(e));
      trials.push_back(Json{
          {"seed", t.seed},
          {"secret", f.to_text(t.scenario.truth.secret)},
          {"cheaters", t.scenario.cheaters.indices()},
          {"submitted", submitted},
          {"distance", t.result.distance},
          {"candidates", t.result.candidates.size()},
          {"recovered_secret", t.result.recovered_secret ? Json(f.to_text(*t.result.recovered_secret)) : Json(nullptr)},
          {"identified_cheaters",
           t.result.identified_cheaters ? Json(t.result.identified_cheaters->indices()) : Json(nullptr)}});
    }
    out["trials_detail"] = trials;
  }
  return out;
}

}  // namespace agshare::io
