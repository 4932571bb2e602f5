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

// Command-line front end.
//
//   agshare points      --config C
//   agshare analyze     --config C [--out R]
//   agshare share       --config C --secret S [--seed N] [--out F]
//   agshare reconstruct --config C --subset 1,2,3 --shares F
//   agshare simulate    --config C --cheaters T --trials N [--seed N] [--verbose]
//
// Exit codes: 0 success, 2 invalid input, 3 property-check failure,
// 4 unqualified reconstruction attempt, 1 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agshare/analysis.hpp"
#include "agshare/cheatersim.hpp"
#include "agshare/io.hpp"
#include "agshare/lsss.hpp"

namespace {

using agshare::io::Json;

constexpr int kExitInvalid = 2;
constexpr int kExitPropertyCheck = 3;
constexpr int kExitNotQualified = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw agshare::InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw agshare::InvalidArgument(path + " is not valid JSON: " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw agshare::InvalidArgument("cannot write " + out);
  f << text;
}

std::vector<std::size_t> parse_subset(const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  for (const std::string& s : items) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw agshare::InvalidArgument("bad player index '" + s + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secret sharing from AG codes on elliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
  app.add_option("--config", config_path, "scheme configuration (JSON)")->required();
  app.add_option("--seed", seed, "override the configured seed");
  app.add_option("--out", out_path, "write the result to this file instead of stdout");
  app.add_flag("--verbose", verbose, "per-trial detail in simulate");

  auto* points = app.add_subcommand("points", "list rational points and the group structure");
  auto* analyze = app.add_subcommand("analyze", "access structure, d_min, d_cheat, MDS and structural checks");

  auto* share = app.add_subcommand("share", "deal shares of a secret");
  std::string secret_text;
  share->add_option("--secret", secret_text, "secret (field element text)")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "recover the secret from a player subset");
  std::vector<std::string> subset_items;
  std::string shares_path;
  reconstruct->add_option("--subset", subset_items, "player indices, comma separated")->required()->delimiter(',');
  reconstruct->add_option("--shares", shares_path, "share file written by 'share'")->required();

  auto* simulate = app.add_subcommand("simulate", "simulate cheating players");
  std::size_t cheaters = 0;
  std::size_t trials = 100;
  simulate->add_option("--cheaters,-t", cheaters, "number of cheaters per trial")->required();
  simulate->add_option("--trials", trials, "number of trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    const Json config_json = read_json(config_path);
    if (points->parsed()) {
      emit(agshare::io::points_report(agshare::io::parse_curve_config(config_json)), out_path);
      return 0;
    }

    agshare::io::ConfigFile cfg = agshare::io::parse_config(config_json);
    if (seed) cfg.scheme.seed = *seed;

    if (analyze->parsed()) {
      emit(agshare::io::analysis_report(cfg), out_path);
      return 0;
    }

    const agshare::Scheme scheme = agshare::Scheme::build(cfg.scheme);
    if (share->parsed()) {
      const agshare::Elem secret = scheme.gf().parse(secret_text);
      emit(agshare::io::bundle_json(scheme, scheme.deal(secret)), out_path);
      return 0;
    }
    if (reconstruct->parsed()) {
      const auto players = agshare::PlayerSet::from_indices(parse_subset(subset_items));
      scheme.check_players(players);
      const auto shares = agshare::io::parse_shares(scheme, read_json(shares_path));
      const agshare::Elem secret = scheme.reconstruct(players, shares);
      emit(Json{{"subset", players.indices()}, {"secret", scheme.gf().to_text(secret)}}, out_path);
      return 0;
    }
    if (simulate->parsed()) {
      if (cheaters > scheme.n()) throw agshare::InvalidArgument("more cheaters than players");
      std::vector<agshare::TrialRecord> detail;
      const auto summary = agshare::simulate(scheme, trials, cheaters, cfg.scheme.seed, verbose ? &detail : nullptr);
      emit(agshare::io::simulation_json(scheme, summary, cfg.scheme.seed, verbose ? &detail : nullptr), out_path);
      return 0;
    }
  } catch (const agshare::NotQualified& e) {
    std::cerr << "not qualified: " << e.what() << "\n";
    return kExitNotQualified;
  } catch (const agshare::PropertyViolation& e) {
    std::cerr << "property check failed: " << e.what() << "\n";
    return kExitPropertyCheck;
  } catch (const agshare::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const agshare::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
