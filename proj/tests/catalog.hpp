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

// Deterministic catalogue of small curves and scheme configurations used by
// the property sweeps and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "agshare/agcode.hpp"
#include "agshare/curve.hpp"
#include "agshare/lsss.hpp"
#include "agshare/rng.hpp"

namespace agshare::testing {

struct CatalogCurve {
  std::string name;
  EllipticCurve curve;
};

inline std::vector<CatalogCurve> catalog_curves() {
  std::vector<CatalogCurve> out;
  auto add = [&](std::string name, unsigned p, unsigned r, Elem a1, Elem a2, Elem a3, Elem a4, Elem a6) {
    out.push_back({std::move(name), EllipticCurve(make_field(p, r), a1, a2, a3, a4, a6)});
  };
  // Element indices: in GF(p^r), index 2 is z and index p is z when r = 2 and p = 3.
  add("GF(4) y^2+y=x^3", 2, 2, 0, 0, 1, 0, 0);
  add("GF(4) y^2+xy=x^3+1", 2, 2, 1, 0, 0, 0, 1);
  add("GF(4) y^2+xy=x^3+z", 2, 2, 1, 0, 0, 0, 2);
  add("GF(5) y^2=x^3+x+1", 5, 1, 0, 0, 0, 1, 1);
  add("GF(5) y^2=x^3+2", 5, 1, 0, 0, 0, 0, 2);
  add("GF(5) y^2=x^3+x", 5, 1, 0, 0, 0, 1, 0);
  add("GF(7) y^2=x^3+5x+4", 7, 1, 0, 0, 0, 5, 4);
  add("GF(7) y^2=x^3+3", 7, 1, 0, 0, 0, 0, 3);
  add("GF(7) y^2=x^3+2x", 7, 1, 0, 0, 0, 2, 0);
  add("GF(8) y^2+y=x^3", 2, 3, 0, 0, 1, 0, 0);
  add("GF(8) y^2+xy=x^3+1", 2, 3, 1, 0, 0, 0, 1);
  add("GF(8) y^2+xy=x^3+x^2+z", 2, 3, 1, 1, 0, 0, 2);
  add("GF(9) y^2=x^3+x", 3, 2, 0, 0, 0, 1, 0);
  add("GF(9) y^2=x^3-x+1", 3, 2, 0, 0, 0, 2, 1);
  add("GF(9) y^2=x^3+x^2+z", 3, 2, 0, 1, 0, 0, 3);
  add("GF(11) y^2=x^3+x+1", 11, 1, 0, 0, 0, 1, 1);
  add("GF(11) y^2=x^3+7", 11, 1, 0, 0, 0, 0, 7);
  add("GF(11) y^2=x^3+x", 11, 1, 0, 0, 0, 1, 0);
  return out;
}

/// Every subgroup of E(GF(q)), as sorted point lists, found as <P, Q> over all pairs.
inline std::vector<std::vector<Point>> all_subgroups(const EllipticCurve& c) {
  const auto pts = c.points();
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) {
      std::vector<Point> h{Point::at_infinity()};
      for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Point> snapshot = h;
        for (const Point& a : snapshot)
          for (const Point& g : {pts[i], pts[j]}) {
            const Point s = c.add(a, g);
            if (std::find(h.begin(), h.end(), s) == h.end()) {
              h.push_back(s);
              grew = true;
            }
          }
      }
      std::sort(h.begin(), h.end());
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  return out;
}

struct CatalogEntry {
  std::string label;
  SchemeConfig config;
  bool subgroup = false;
};

/// Ordered D lists: the dealer first, the remaining points in canonical order.
inline std::vector<std::vector<Point>> dealer_orderings(const EllipticCurve& c, const std::vector<Point>& d,
                                                        std::uint64_t seed) {
  std::vector<Point> dealers{d.front()};
  for (const Point& pt : d)
    if (c.neg(pt) == pt) {
      if (std::find(dealers.begin(), dealers.end(), pt) == dealers.end()) dealers.push_back(pt);
      break;
    }
  Rng rng(seed);
  const Point r = d[rng.below(d.size())];
  if (std::find(dealers.begin(), dealers.end(), r) == dealers.end()) dealers.push_back(r);
  std::vector<std::vector<Point>> out;
  for (const Point& dealer : dealers) {
    std::vector<Point> ordered{dealer};
    for (const Point& pt : d)
      if (!(pt == dealer)) ordered.push_back(pt);
    out.push_back(ordered);
  }
  return out;
}

/// All buildable configurations: D ranges over every subgroup minus O (with at
/// least 4 affine points) and two seeded random non-subgroup subsets per
/// curve; up to three dealer choices per D; every m with 2 <= m <= n-1 whose
/// sharing code fits the enumeration cap. n is at most 16 for these fields.
inline std::vector<CatalogEntry> catalog_configs(std::uint64_t seed = 2024) {
  std::vector<CatalogEntry> out;
  std::uint64_t counter = 0;
  for (const CatalogCurve& cc : catalog_curves()) {
    const EllipticCurve& c = cc.curve;
    std::vector<std::pair<std::vector<Point>, bool>> dsets;
    for (const auto& h : all_subgroups(c)) {
      std::vector<Point> d(h.begin() + 1, h.end());
      if (d.size() >= 4) dsets.push_back({d, true});
    }
    auto affine = c.points();
    affine.erase(affine.begin());
    Rng rng(derive_seed(seed, counter++));
    for (int k = 0; k < 2 && affine.size() >= 8; ++k) {
      std::vector<Point> d;
      while (d.size() < 5 || d.size() + 2 > affine.size()) {
        d.clear();
        for (const Point& pt : affine)
          if (rng.below(4) != 0) d.push_back(pt);
      }
      std::vector<Point> with_o = d;
      with_o.push_back(Point::at_infinity());
      if (!c.is_subgroup(with_o)) dsets.push_back({d, false});
    }
    for (const auto& [d, is_sub] : dsets)
      for (const auto& ordered : dealer_orderings(c, d, derive_seed(seed, counter++))) {
        const std::size_t n = ordered.size() - 1;
        for (std::size_t m = 2; m + 1 <= n; ++m) {
          double words = 1;
          for (std::size_t i = 0; i < n + 1 - m; ++i) words *= double(c.gf().order());
          if (words > double(kDefaultEnumerationCap)) continue;
          std::string label = cc.name + " |D|=" + std::to_string(ordered.size()) + " dealer=" +
                              c.to_text(ordered[0]) + " m=" + std::to_string(m) + (is_sub ? " subgroup" : "");
          out.push_back(CatalogEntry{std::move(label), SchemeConfig{c, static_cast<int>(m), ordered, 1}, is_sub});
        }
      }
  }
  return out;
}

}  // namespace agshare::testing
