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

// Linear secret sharing on C_Omega(D, mO), realised as the dual of the
// evaluation code C_L(D, mO). Coordinate 0 carries the secret (the dealer
// point P_0); coordinates 1..n are the players' shares.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agshare/agcode.hpp"
#include "agshare/curve.hpp"
#include "agshare/errors.hpp"
#include "agshare/field.hpp"
#include "agshare/linalg.hpp"
#include "agshare/rng.hpp"

namespace agshare {

/// A set of player indices in 1..63, stored as a bitmask (bit i = player i).
class PlayerSet {
 public:
  static constexpr std::size_t kMaxPlayers = 63;

  PlayerSet() = default;
  PlayerSet(std::initializer_list<std::size_t> players) {
    for (std::size_t p : players) insert(p);
  }
  static PlayerSet from_bits(std::uint64_t bits) {
    PlayerSet s;
    s.bits_ = bits & ~std::uint64_t{1};
    return s;
  }
  static PlayerSet from_indices(std::span<const std::size_t> players) {
    PlayerSet s;
    for (std::size_t p : players) s.insert(p);
    return s;
  }
  /// {1, ..., n}.
  static PlayerSet all(std::size_t n) {
    if (n > kMaxPlayers) throw InvalidArgument("too many players");
    return from_bits(n == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 1));
  }

  void insert(std::size_t player) {
    if (player < 1 || player > kMaxPlayers) throw InvalidArgument("player index out of range");
    bits_ |= std::uint64_t{1} << player;
  }
  bool contains(std::size_t player) const { return player <= kMaxPlayers && ((bits_ >> player) & 1u); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::size_t max_index() const { return bits_ == 0 ? 0 : 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// {1..n} minus this set.
  PlayerSet complement(std::size_t n) const { return from_bits(all(n).bits_ & ~bits_); }
  bool is_subset_of(const PlayerSet& o) const { return (bits_ & ~o.bits_) == 0; }
  PlayerSet with(std::size_t player) const {
    PlayerSet s = *this;
    s.insert(player);
    return s;
  }
  PlayerSet without(std::size_t player) const { return from_bits(bits_ & ~(std::uint64_t{1} << player)); }

  bool operator==(const PlayerSet&) const = default;

  /// Canonical order: by size, then lexicographically on the sorted indices.
  bool operator<(const PlayerSet& o) const {
    if (size() != o.size()) return size() < o.size();
    return indices() < o.indices();
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t p : indices()) out += (out.size() > 1 ? "," : "") + std::to_string(p);
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

struct SchemeConfig {
  EllipticCurve curve;
  int m = 2;
  /// points[0] is the dealer point P_0; points[1..n] are the players.
  std::vector<Point> points;
  std::uint64_t seed = 0;

  std::size_t n() const { return points.empty() ? 0 : points.size() - 1; }
  bool operator==(const SchemeConfig&) const = default;
};

struct ShareBundle {
  Elem secret = 0;
  /// shares[i-1] belongs to player i.
  std::vector<Elem> shares;

  bool operator==(const ShareBundle&) const = default;
};

/// For each secret value, the multiset of share tuples seen by a player set.
using ShareDistribution = std::map<std::vector<Elem>, std::size_t>;
using PerfectnessProfile = std::map<Elem, ShareDistribution>;

class Scheme {
 public:
  /// Builds the scheme on C_Omega(D, mO) from a curve configuration.
  static Scheme build(const SchemeConfig& config, std::size_t cap = kDefaultEnumerationCap) {
    const std::size_t n = config.n();
    if (config.points.size() < 2) throw InvalidArgument("need a dealer point and at least one player");
    if (n > PlayerSet::kMaxPlayers) throw InvalidArgument("too many players");
    if (config.m < 2 || static_cast<std::size_t>(config.m) > n - 1)
      throw UnsupportedParameters("need 2 <= m <= n-1 (m=" + std::to_string(config.m) + ", n=" + std::to_string(n) +
                                  ")");
    LinearCode reconstruction = functional_code(config.curve, config.m, config.points);
    return Scheme(config.curve.field(), std::move(reconstruction), config, cap);
  }

  /// The same pipeline with an arbitrary reconstruction code (e.g. a genus-0
  /// Vandermonde evaluation code). Coordinate 0 is the secret.
  static Scheme from_reconstruction_code(LinearCode reconstruction, std::size_t cap = kDefaultEnumerationCap) {
    FieldPtr f = reconstruction.field();
    return Scheme(std::move(f), std::move(reconstruction), std::nullopt, cap);
  }

  const FieldPtr& field() const { return field_; }
  const GaloisField& gf() const { return *field_; }
  std::size_t n() const { return sharing_->length() - 1; }
  std::size_t k() const { return sharing_->dimension(); }
  const LinearCode& sharing_code() const { return *sharing_; }
  const LinearCode& reconstruction_code() const { return reconstruction_; }
  const std::optional<SchemeConfig>& config() const { return config_; }
  std::size_t cap() const { return cap_; }

  /// Column g_i of the sharing code's generator matrix.
  std::vector<Elem> column(std::size_t i) const { return sharing_->generator().column(i); }

  /// Deals with the configured seed.
  ShareBundle deal(Elem secret) const { return deal(secret, config_ ? config_->seed : 0); }

  /// Draws u uniformly from {u : u . g_0 = secret}: the pivot coordinate j
  /// (first nonzero entry of g_0) is solved for, the other k-1 coordinates
  /// are drawn in index order with Rng::below(q).
  ShareBundle deal(Elem secret, std::uint64_t seed) const {
    const GaloisField& F = *field_;
    if (secret >= F.order()) throw InvalidArgument("secret is not a field element");
    const auto g0 = column(0);
    std::size_t pivot = 0;
    while (g0[pivot] == 0) ++pivot;
    Rng rng(seed);
    std::vector<Elem> u(k(), 0);
    Elem rest = 0;
    for (std::size_t i = 0; i < k(); ++i) {
      if (i == pivot) continue;
      u[i] = static_cast<Elem>(rng.below(F.order()));
      rest = F.add(rest, F.mul(u[i], g0[i]));
    }
    u[pivot] = F.div(F.sub(secret, rest), g0[pivot]);
    return split(sharing_->encode(u));
  }

  ShareBundle split(std::span<const Elem> codeword) const {
    if (codeword.size() != n() + 1) throw InvalidArgument("codeword length mismatch");
    return {codeword[0], std::vector<Elem>(codeword.begin() + 1, codeword.end())};
  }

  static std::vector<Elem> join(const ShareBundle& b) {
    std::vector<Elem> w{b.secret};
    w.insert(w.end(), b.shares.begin(), b.shares.end());
    return w;
  }

  /// g_0 in span{g_i : i in Q}.
  bool is_qualified(const PlayerSet& players) const { return recovery_vector(players).has_value(); }

  /// Independent route: searches C_L directly for a word with v_0 = 1 and
  /// support inside {0} and Q, parameterised by the message of C_L.
  bool is_qualified_by_dual_codeword(const PlayerSet& players) const {
    check_players(players);
    const Matrix& gl = reconstruction_.generator();
    std::vector<std::size_t> constrained{0};
    for (std::size_t i = 1; i <= n(); ++i)
      if (!players.contains(i)) constrained.push_back(i);
    Matrix system = gl.select_columns(constrained).transpose();
    std::vector<Elem> rhs(constrained.size(), 0);
    rhs[0] = 1;
    return solve(*field_, system, rhs).has_value();
  }

  /// Coefficients v_i (i in Q) of a dual word (1, v on Q, 0 elsewhere).
  /// Solves sum v_i g_i = -g_0 with free variables set to zero.
  std::optional<std::map<std::size_t, Elem>> recovery_vector(const PlayerSet& players) const {
    check_players(players);
    const auto idx = players.indices();
    const Matrix a = sharing_->generator().select_columns(idx);
    auto g0 = column(0);
    for (Elem& e : g0) e = field_->neg(e);
    const auto x = solve(*field_, a, g0);
    if (!x) return std::nullopt;
    std::map<std::size_t, Elem> out;
    for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]] = (*x)[j];
    return out;
  }

  /// c_0 = -sum_{i in Q} v_i c_i.
  Elem reconstruct(const PlayerSet& players, const std::map<std::size_t, Elem>& sub_shares) const {
    const auto v = recovery_vector(players);
    if (!v) throw NotQualified("player set " + players.to_string() + " is not qualified");
    Elem acc = 0;
    for (const auto& [player, coeff] : *v) {
      const auto it = sub_shares.find(player);
      if (it == sub_shares.end()) throw InvalidArgument("missing share for player " + std::to_string(player));
      if (it->second >= field_->order()) throw InvalidArgument("share is not a field element");
      acc = field_->add(acc, field_->mul(coeff, it->second));
    }
    return field_->neg(acc);
  }

  Elem reconstruct(const PlayerSet& players, const ShareBundle& bundle) const {
    std::map<std::size_t, Elem> sub;
    for (std::size_t p : players.indices()) sub[p] = bundle.shares.at(p - 1);
    return reconstruct(players, sub);
  }

  /// Distribution of the shares on B for each secret, over all randomness.
  PerfectnessProfile perfectness_profile(const PlayerSet& observed) const {
    check_players(observed);
    const auto idx = observed.indices();
    PerfectnessProfile profile;
    for_each_codeword(
        *sharing_,
        [&](const std::vector<Elem>& w) {
          std::vector<Elem> view(idx.size());
          for (std::size_t j = 0; j < idx.size(); ++j) view[j] = w[idx[j]];
          ++profile[w[0]][view];
        },
        cap_);
    return profile;
  }

  void check_players(const PlayerSet& players) const {
    if (players.max_index() > n())
      throw InvalidArgument("player index " + std::to_string(players.max_index()) + " out of range 1.." +
                            std::to_string(n()));
  }

 private:
  Scheme(FieldPtr field, LinearCode reconstruction, std::optional<SchemeConfig> config, std::size_t cap)
      : field_(std::move(field)), reconstruction_(std::move(reconstruction)), config_(std::move(config)), cap_(cap) {
    sharing_.emplace(dual_code(reconstruction_));
    const GaloisField& F = *field_;
    const std::size_t len = reconstruction_.length();
    const auto g0 = column(0);
    if (std::all_of(g0.begin(), g0.end(), [](Elem e) { return e == 0; }))
      throw DegenerateScheme("secret column g_0 is zero");
    std::vector<Elem> unit(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      unit.assign(len, 0);
      unit[i] = 1;
      if (in_row_space(F, reconstruction_.generator(), unit))
        throw RecoveryHypothesisViolated("reconstruction code contains a weight-1 word at coordinate " +
                                      std::to_string(i));
    }
    unit.assign(len, 0);
    unit[0] = 1;
    if (in_row_space(F, sharing_->generator(), unit))
      throw InvariantViolation("sharing code contains a word supported only on the secret coordinate");
  }

  FieldPtr field_;
  LinearCode reconstruction_;
  std::optional<LinearCode> sharing_;
  std::optional<SchemeConfig> config_;
  std::size_t cap_;
};

inline Scheme build_scheme(const SchemeConfig& config) { return Scheme::build(config); }

/// Shamir's (k, n) scheme through the same pipeline: the reconstruction code
/// is the Vandermonde code of degree n-k at (x_0, x_1, ..., x_n), so the
/// sharing code is a generalised Reed-Solomon code of dimension k.
inline Scheme shamir_scheme(const FieldPtr& field, std::size_t k, std::span<const Elem> xs) {
  if (xs.size() < 2 || k < 1 || k > xs.size() - 1) throw UnsupportedParameters("need 1 <= k <= n");
  const std::size_t n = xs.size() - 1;
  return Scheme::from_reconstruction_code(vandermonde_code(field, n - k, xs));
}

}  // namespace agshare
