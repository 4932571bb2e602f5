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

// Cheating players under the distance interpretation: submitted share vectors
// are decoded to the nearest codewords of the sharing code by exhaustive search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "agshare/agcode.hpp"
#include "agshare/errors.hpp"
#include "agshare/lsss.hpp"
#include "agshare/rng.hpp"

namespace agshare {

struct CheatScenario {
  ShareBundle truth;
  PlayerSet cheaters;
  /// submitted[i-1] is what player i presents.
  std::vector<Elem> submitted;
};

struct DecodeResult {
  /// Full codewords (secret first) at minimum share distance.
  std::vector<std::vector<Elem>> candidates;
  std::size_t distance = 0;
  /// Common c_0 of all candidates; nullopt when they disagree.
  std::optional<Elem> recovered_secret;
  /// Disagreement positions of the unique candidate; nullopt when not unique.
  std::optional<PlayerSet> identified_cheaters;
};

/// Replaces each indexed share by a value drawn uniformly from the q-1
/// values other than the honest one.
inline CheatScenario corrupt(const Scheme& scheme, const ShareBundle& bundle, const PlayerSet& cheaters,
                             std::uint64_t seed) {
  scheme.check_players(cheaters);
  const std::size_t q = scheme.gf().order();
  Rng rng(seed);
  CheatScenario s{bundle, cheaters, bundle.shares};
  for (std::size_t i : cheaters.indices()) {
    const auto draw = static_cast<Elem>(rng.below(q - 1));
    s.submitted[i - 1] = draw < bundle.shares[i - 1] ? draw : static_cast<Elem>(draw + 1);
  }
  return s;
}

inline DecodeResult decode(const Scheme& scheme, const std::vector<Elem>& submitted) {
  if (submitted.size() != scheme.n()) throw InvalidArgument("submitted share vector has the wrong length");
  DecodeResult r;
  r.distance = scheme.n() + 1;
  for_each_codeword(
      scheme.sharing_code(),
      [&](const std::vector<Elem>& w) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < submitted.size() && d <= r.distance; ++i) d += w[i + 1] != submitted[i];
        if (d < r.distance) {
          r.distance = d;
          r.candidates.clear();
        }
        if (d == r.distance) r.candidates.push_back(w);
      },
      scheme.cap());
  r.recovered_secret = r.candidates.front()[0];
  for (const auto& c : r.candidates)
    if (c[0] != *r.recovered_secret) r.recovered_secret.reset();
  if (r.candidates.size() == 1) {
    PlayerSet diff;
    for (std::size_t i = 0; i < submitted.size(); ++i)
      if (r.candidates[0][i + 1] != submitted[i]) diff.insert(i + 1);
    r.identified_cheaters = diff;
  }
  return r;
}

struct SimulationSummary {
  std::size_t trials = 0;
  std::size_t cheaters = 0;
  std::size_t secret_recovered = 0;
  std::size_t cheaters_identified = 0;
  std::size_t ambiguous = 0;
  std::size_t wrong_secret = 0;

  double recovery_rate() const { return trials ? double(secret_recovered) / double(trials) : 1.0; }
  double identification_rate() const { return trials ? double(cheaters_identified) / double(trials) : 1.0; }
};

struct TrialRecord {
  std::uint64_t seed = 0;
  CheatScenario scenario;
  DecodeResult result;
};

/// Each trial uses derive_seed(seed, trial): a uniform secret and the
/// randomness for dealing, a uniform t-subset of players, and corrupt().
inline SimulationSummary simulate(const Scheme& scheme, std::size_t trials, std::size_t t, std::uint64_t seed,
                                  std::vector<TrialRecord>* detail = nullptr) {
  const std::size_t n = scheme.n();
  if (t > n) throw InvalidArgument("more cheaters than players");
  SimulationSummary sum;
  sum.trials = trials;
  sum.cheaters = t;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(seed, trial);
    Rng rng(trial_seed);
    const auto secret = static_cast<Elem>(rng.below(scheme.gf().order()));
    const ShareBundle bundle = scheme.deal(secret, rng.below(~std::uint64_t{0}));
    // Partial Fisher-Yates for a uniform t-subset.
    std::vector<std::size_t> players(n);
    for (std::size_t i = 0; i < n; ++i) players[i] = i + 1;
    PlayerSet cheaters;
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(players[i], players[j]);
      cheaters.insert(players[i]);
    }
    CheatScenario scenario = corrupt(scheme, bundle, cheaters, rng.below(~std::uint64_t{0}));
    DecodeResult result = decode(scheme, scenario.submitted);
    if (!result.recovered_secret) ++sum.ambiguous;
    else if (*result.recovered_secret == secret) ++sum.secret_recovered;
    else ++sum.wrong_secret;
    if (result.identified_cheaters && *result.identified_cheaters == cheaters) ++sum.cheaters_identified;
    if (detail) detail->push_back({trial_seed, std::move(scenario), std::move(result)});
  }
  return sum;
}

/// Exhaustive search for a t-cheater scenario whose decoding does not return
/// the true secret. The honest bundle shares the secret 0 with all-zero
/// shares; the cheaters copy part of the support of a codeword with c_0 != 0.
/// Scenarios where the candidates disagree on the secret are preferred over
/// ones that decode to a wrong secret.
inline std::optional<CheatScenario> find_confusable_scenario(const Scheme& scheme, std::size_t t) {
  const std::size_t n = scheme.n();
  std::optional<CheatScenario> wrong;
  std::optional<CheatScenario> ambiguous;
  const ShareBundle zero{0, std::vector<Elem>(n, 0)};
  for_each_codeword(
      scheme.sharing_code(),
      [&](const std::vector<Elem>& w) {
        if (ambiguous || w[0] == 0) return;
        PlayerSet support;
        for (std::size_t i = 1; i <= n; ++i)
          if (w[i] != 0) support.insert(i);
        if (support.size() < t || support.size() > 2 * t) return;
        const auto idx = support.indices();
        PlayerSet cheaters;
        for (std::size_t j = 0; j < t; ++j) cheaters.insert(idx[j]);
        CheatScenario s{zero, cheaters, zero.shares};
        for (std::size_t i : cheaters.indices()) s.submitted[i - 1] = w[i];
        const DecodeResult r = decode(scheme, s.submitted);
        if (!r.recovered_secret) ambiguous = s;
        else if (*r.recovered_secret != 0 && !wrong) wrong = s;
      },
      scheme.cap());
  return ambiguous ? ambiguous : wrong;
}

}  // namespace agshare
