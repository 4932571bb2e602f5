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

// Access structures, d_min / d_cheat / MDS, and executable checks of the
// group-sum characterisation of qualified sets on elliptic-curve schemes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agshare/agcode.hpp"
#include "agshare/curve.hpp"
#include "agshare/errors.hpp"
#include "agshare/lsss.hpp"

namespace agshare {

inline constexpr std::size_t kMaxEnumeratedPlayers = 16;

/// is_qualified for every subset of {1..n}; entry `mask` describes the set
/// whose bit (i-1) marks player i.
class QualificationTable {
 public:
  explicit QualificationTable(const Scheme& scheme) : n_(scheme.n()) {
    if (n_ > kMaxEnumeratedPlayers)
      throw UnsupportedParameters("access structure enumeration needs n <= " +
                                  std::to_string(kMaxEnumeratedPlayers));
    qualified_.assign(std::size_t{1} << n_, 0);
    for (std::size_t mask = 0; mask < qualified_.size(); ++mask)
      qualified_[mask] = scheme.is_qualified(to_set(mask)) ? 1 : 0;
  }

  std::size_t n() const { return n_; }
  std::size_t subsets() const { return qualified_.size(); }
  bool qualified(const PlayerSet& s) const { return qualified_[to_mask(s)] != 0; }
  bool qualified_mask(std::size_t mask) const { return qualified_[mask] != 0; }

  /// Qualified, and no set obtained by dropping one player is.
  bool minimal(const PlayerSet& s) const {
    const std::size_t mask = to_mask(s);
    if (!qualified_[mask]) return false;
    for (std::size_t b = mask; b; b &= b - 1)
      if (qualified_[mask & ~(b & (~b + 1))]) return false;
    return true;
  }

  static PlayerSet to_set(std::size_t mask) { return PlayerSet::from_bits(std::uint64_t(mask) << 1); }
  static std::size_t to_mask(const PlayerSet& s) { return static_cast<std::size_t>(s.bits() >> 1); }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> qualified_;
};

struct AccessStructure {
  std::size_t n = 0;
  /// min Gamma, ordered by size then lexicographically.
  std::vector<PlayerSet> minimal_qualified;
};

inline AccessStructure access_structure(const QualificationTable& table) {
  AccessStructure out{table.n(), {}};
  for (std::size_t mask = 0; mask < table.subsets(); ++mask) {
    const PlayerSet s = QualificationTable::to_set(mask);
    if (table.minimal(s)) out.minimal_qualified.push_back(s);
  }
  std::sort(out.minimal_qualified.begin(), out.minimal_qualified.end());
  return out;
}

inline AccessStructure access_structure(const Scheme& scheme) { return access_structure(QualificationTable(scheme)); }

/// Size of the largest unqualified set, by enumeration.
inline std::size_t max_unqualified(const QualificationTable& table) {
  std::size_t best = 0;
  bool any = false;
  for (std::size_t mask = 0; mask < table.subsets(); ++mask)
    if (!table.qualified_mask(mask)) {
      any = true;
      best = std::max(best, QualificationTable::to_set(mask).size());
    }
  if (!any) throw InvariantViolation("the empty set is qualified");
  return best;
}

/// Minimum distance of the share code V (coordinates 1..n).
inline std::size_t d_min(const Scheme& scheme) {
  return min_weight_where(scheme.sharing_code(), false, scheme.cap());
}

/// n - max |unqualified|, cross-checked against the minimum share weight of
/// codewords with c_0 != 0.
inline std::size_t d_cheat(const Scheme& scheme, const QualificationTable& table) {
  const std::size_t by_access = scheme.n() - max_unqualified(table);
  const std::size_t by_weight = min_weight_where(scheme.sharing_code(), true, scheme.cap());
  if (by_access != by_weight)
    throw InvariantViolation("d_cheat mismatch: access structure gives " + std::to_string(by_access) +
                             ", codeword weights give " + std::to_string(by_weight));
  return by_access;
}

inline std::size_t d_cheat(const Scheme& scheme) { return d_cheat(scheme, QualificationTable(scheme)); }

struct SchemeParams {
  std::size_t d_min = 0;
  std::size_t d_cheat = 0;
  bool is_mds = false;
  std::size_t max_unqualified = 0;
  /// Minimum distance of the full length-(n+1) sharing code (diagnostic).
  std::size_t full_code_distance = 0;
};

inline SchemeParams mds_check(const Scheme& scheme, const QualificationTable& table) {
  SchemeParams p;
  p.d_min = d_min(scheme);
  p.d_cheat = d_cheat(scheme, table);
  p.max_unqualified = max_unqualified(table);
  p.is_mds = p.d_min == p.d_cheat;
  p.full_code_distance = min_distance(scheme.sharing_code(), scheme.cap());
  if (p.d_min > p.d_cheat) throw InvariantViolation("d_min exceeds d_cheat");
  return p;
}

inline SchemeParams mds_check(const Scheme& scheme) { return mds_check(scheme, QualificationTable(scheme)); }

namespace detail {

inline const SchemeConfig& curve_config(const Scheme& scheme) {
  if (!scheme.config()) throw InvalidArgument("analysis needs a scheme built from a curve configuration");
  return *scheme.config();
}

template <class Fn>
void for_each_subset_of_size(std::size_t n, std::size_t t, Fn&& fn) {
  if (t > n) return;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i + 1;
  for (;;) {
    if (fn(PlayerSet::from_indices(idx))) return;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + i) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// m-1 <= d_min <= d_cheat <= m+1 (genus 1).
inline bool bound_chain_holds(const Scheme& scheme, const SchemeParams& params) {
  const int m = detail::curve_config(scheme).m;
  const long long g = EllipticCurve::kGenus;
  const auto dmin = static_cast<long long>(params.d_min), dcheat = static_cast<long long>(params.d_cheat);
  return m - 2 * g + 1 <= dmin && dmin <= dcheat && dcheat <= m + 1;
}

enum class ComplementCase {
  kNeverQualified,   // t > m
  kZeroSum,          // t = m
  kEscapePoint,      // t = m - 1
  kAlwaysQualified,  // t <= m - 2
};

inline const char* to_string(ComplementCase c) {
  switch (c) {
    case ComplementCase::kNeverQualified: return "t>m never-qualified";
    case ComplementCase::kZeroSum: return "t=m zero-sum";
    case ComplementCase::kEscapePoint: return "t=m-1 B-escapes";
    case ComplementCase::kAlwaysQualified: return "t<=m-2 always-qualified";
  }
  return "?";
}

struct ComplementVerdict {
  PlayerSet removed;
  /// B with B + sum of the removed points = O.
  Point b;
  ComplementCase kind = ComplementCase::kAlwaysQualified;
  /// Prediction for removed^c being qualified.
  bool qualified_complement = false;
  /// Prediction for removed^c being a minimal qualified set.
  bool minimal_complement = false;
};

/// Predicts the status of A^c from B = -(sum of the points of A).
///
/// t = m: A^c is qualified iff B = O, and is then minimal.
/// t = m-1: the unique f in L(mO - A) vanishes at A and B, so A^c is qualified
/// iff B != P_0, and minimal iff additionally B is outside D or inside A.
/// t <= m-2: always qualified, never minimal. t > m: never qualified.
inline ComplementVerdict predict_complement(const Scheme& scheme, const PlayerSet& removed) {
  const SchemeConfig& cfg = detail::curve_config(scheme);
  scheme.check_players(removed);
  const auto idx = removed.indices();
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) pts.push_back(cfg.points[i]);
  ComplementVerdict v;
  v.removed = removed;
  v.b = cfg.curve.neg(cfg.curve.group_sum(pts));
  const auto t = static_cast<long long>(idx.size());
  const long long m = cfg.m;
  if (t > m) {
    v.kind = ComplementCase::kNeverQualified;
  } else if (t == m) {
    v.kind = ComplementCase::kZeroSum;
    v.qualified_complement = v.minimal_complement = v.b.infinity;
  } else if (t == m - 1) {
    v.kind = ComplementCase::kEscapePoint;
    const bool in_d = std::find(cfg.points.begin(), cfg.points.end(), v.b) != cfg.points.end();
    const bool in_a = std::find(pts.begin(), pts.end(), v.b) != pts.end();
    v.qualified_complement = !(v.b == cfg.points[0]);
    v.minimal_complement = !in_d || in_a;
  } else {
    v.kind = ComplementCase::kAlwaysQualified;
    v.qualified_complement = true;
  }
  return v;
}

struct PredictorDisagreement {
  ComplementVerdict verdict;
  bool oracle_qualified = false;
  bool oracle_minimal = false;
};

struct PredictorReport {
  std::size_t checked = 0;
  std::vector<PredictorDisagreement> disagreements;
  /// Complements of exactly n-m+2 players. The always-qualified rule is
  /// applied from this size on; any unqualified one is recorded here.
  std::size_t boundary_subsets = 0;
  std::vector<PlayerSet> boundary_unqualified;
};

/// Compares predict_complement with the linear-algebra oracle on every subset.
inline PredictorReport validate_predictor(const Scheme& scheme, const QualificationTable& table) {
  const SchemeConfig& cfg = detail::curve_config(scheme);
  const std::size_t n = scheme.n();
  PredictorReport report;
  for (std::size_t mask = 0; mask < table.subsets(); ++mask) {
    const PlayerSet a = QualificationTable::to_set(mask);
    const PlayerSet rest = a.complement(n);
    const ComplementVerdict v = predict_complement(scheme, a);
    const bool q = table.qualified(rest);
    const bool minimal = table.minimal(rest);
    ++report.checked;
    if (q != v.qualified_complement || minimal != v.minimal_complement)
      report.disagreements.push_back({v, q, minimal});
    if (static_cast<long long>(rest.size()) == static_cast<long long>(n) - cfg.m + 2) {
      ++report.boundary_subsets;
      if (!q) report.boundary_unqualified.push_back(rest);
    }
  }
  return report;
}

inline PredictorReport validate_predictor(const Scheme& scheme) {
  return validate_predictor(scheme, QualificationTable(scheme));
}

/// m-1 distinct players whose points sum to -P_0; the lexicographically
/// smallest such set, or nullopt.
inline std::optional<PlayerSet> subgroup_witness(const Scheme& scheme) {
  const SchemeConfig& cfg = detail::curve_config(scheme);
  const Point target = cfg.curve.neg(cfg.points[0]);
  std::optional<PlayerSet> found;
  detail::for_each_subset_of_size(scheme.n(), static_cast<std::size_t>(cfg.m - 1), [&](const PlayerSet& s) {
    Point acc = Point::at_infinity();
    for (std::size_t i : s.indices()) acc = cfg.curve.add_unchecked(acc, cfg.points[i]);
    if (acc == target) found = s;
    return found.has_value();
  });
  if (found && scheme.is_qualified(found->complement(scheme.n())))
    throw PropertyViolation("complement of the witness " + found->to_string() + " is qualified");
  return found;
}

inline bool is_subgroup_config(const SchemeConfig& cfg) {
  std::vector<Point> pts = cfg.points;
  pts.push_back(Point::at_infinity());
  return cfg.curve.is_subgroup(pts);
}

struct SubgroupCheck {
  bool subgroup = false;
  std::optional<PlayerSet> witness;
};

/// If D + {O} is a subgroup, requires d_min = d_cheat = m-1.
inline SubgroupCheck subgroup_mds_check(const Scheme& scheme, const SchemeParams& params) {
  const SchemeConfig& cfg = detail::curve_config(scheme);
  SubgroupCheck r;
  r.subgroup = is_subgroup_config(cfg);
  if (!r.subgroup) return r;
  r.witness = subgroup_witness(scheme);
  const auto expected = static_cast<std::size_t>(cfg.m - 1);
  if (params.d_min != expected || params.d_cheat != expected)
    throw PropertyViolation("D + O is a subgroup but (d_min, d_cheat) = (" + std::to_string(params.d_min) + ", " +
                           std::to_string(params.d_cheat) + "), expected m-1 = " + std::to_string(expected) +
                           (r.witness ? "" : "; no (m-1)-player witness summing to -P_0 exists"));
  return r;
}

/// Sufficient MDS condition: some (n-m+1)-set A^c is not a minimal set of the
/// t = m-1 kind and contains no qualified (n-m)-set of the t = m kind.
/// Requires MDS when the condition holds.
inline bool mds_condition_check(const Scheme& scheme, const SchemeParams& params) {
  const SchemeConfig& cfg = detail::curve_config(scheme);
  const std::size_t n = scheme.n();
  bool holds = false;
  detail::for_each_subset_of_size(n, static_cast<std::size_t>(cfg.m - 1), [&](const PlayerSet& a) {
    if (predict_complement(scheme, a).minimal_complement) return false;
    for (std::size_t j : a.complement(n).indices())
      if (predict_complement(scheme, a.with(j)).qualified_complement) return false;
    holds = true;
    return true;
  });
  if (holds && !params.is_mds) throw PropertyViolation("sufficient MDS condition holds but the scheme is not MDS");
  return holds;
}

}  // namespace agshare
