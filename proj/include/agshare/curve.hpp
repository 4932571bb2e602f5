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

// Rational points on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(q).
//
// The general Weierstrass form is kept throughout because the characteristic 2
// curves y^2 + y = x^3 are singular in short form.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agshare/errors.hpp"
#include "agshare/field.hpp"

namespace agshare {

/// The identity O or an affine point. Ordered with O first, then
/// lexicographically by canonical (x, y).
struct Point {
  bool infinity = true;
  Elem x = 0;
  Elem y = 0;

  static Point at_infinity() { return {}; }
  static Point affine(Elem x, Elem y) { return {false, x, y}; }

  bool operator==(const Point& o) const {
    return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
  }
  std::strong_ordering operator<=>(const Point& o) const {
    if (infinity || o.infinity) return o.infinity <=> infinity;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

/// E(GF(q)) ~ Z_{n1} (+) Z_{n2} with n1 | n2.
struct GroupStructure {
  std::size_t order = 0;
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  /// {g} when cyclic; otherwise {g1, g2} with ord(g1) = n1, ord(g2) = n2 and
  /// label (i, j) corresponding to i*g1 + j*g2.
  std::vector<Point> generators;
  bool is_cyclic = true;
  bool is_supersingular = false;
};

class EllipticCurve {
 public:
  static constexpr int kGenus = 1;

  EllipticCurve(FieldPtr field, Elem a1, Elem a2, Elem a3, Elem a4, Elem a6)
      : f_(std::move(field)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    if (!f_) throw InvalidArgument("null field");
    for (Elem a : {a1, a2, a3, a4, a6})
      if (a >= f_->order()) throw InvalidArgument("curve coefficient outside the field");
    if (discriminant() == 0) throw InvalidArgument("singular curve: discriminant is zero");
  }

  /// Short form y^2 = x^3 + a x + b.
  static EllipticCurve short_form(FieldPtr field, Elem a, Elem b) { return {std::move(field), 0, 0, 0, a, b}; }

  const FieldPtr& field() const { return f_; }
  const GaloisField& gf() const { return *f_; }
  Elem a1() const { return a1_; }
  Elem a2() const { return a2_; }
  Elem a3() const { return a3_; }
  Elem a4() const { return a4_; }
  Elem a6() const { return a6_; }

  bool operator==(const EllipticCurve& o) const {
    return f_->spec() == o.f_->spec() && a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ &&
           a6_ == o.a6_;
  }

  Elem discriminant() const {
    const GaloisField& F = *f_;
    auto k = [&](long long n) { return F.from_int(n); };
    auto m = [&](Elem a, Elem b) { return F.mul(a, b); };
    const Elem b2 = F.add(m(a1_, a1_), m(k(4), a2_));
    const Elem b4 = F.add(m(k(2), a4_), m(a1_, a3_));
    const Elem b6 = F.add(m(a3_, a3_), m(k(4), a6_));
    // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
    Elem b8 = m(m(a1_, a1_), a6_);
    b8 = F.add(b8, m(k(4), m(a2_, a6_)));
    b8 = F.sub(b8, m(a1_, m(a3_, a4_)));
    b8 = F.add(b8, m(a2_, m(a3_, a3_)));
    b8 = F.sub(b8, m(a4_, a4_));
    // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    Elem d = F.neg(m(m(b2, b2), b8));
    d = F.sub(d, m(k(8), m(b4, m(b4, b4))));
    d = F.sub(d, m(k(27), m(b6, b6)));
    d = F.add(d, m(k(9), m(b2, m(b4, b6))));
    return d;
  }

  bool on_curve(const Point& pt) const {
    if (pt.infinity) return true;
    if (pt.x >= f_->order() || pt.y >= f_->order()) return false;
    return lhs(pt.x, pt.y) == rhs(pt.x);
  }

  Point neg(const Point& pt) const {
    require_on_curve(pt);
    return neg_unchecked(pt);
  }

  Point add(const Point& p1, const Point& p2) const {
    require_on_curve(p1);
    require_on_curve(p2);
    return add_unchecked(p1, p2);
  }

  /// Negative k uses the inverse point.
  Point scalar_mul(long long k, const Point& pt) const {
    require_on_curve(pt);
    Point base = k < 0 ? neg_unchecked(pt) : pt;
    unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
    Point acc = Point::at_infinity();
    while (e) {
      if (e & 1ULL) acc = add_unchecked(acc, base);
      base = add_unchecked(base, base);
      e >>= 1;
    }
    return acc;
  }

  /// Every rational point: O first, then affine points by (x, y).
  std::vector<Point> points() const {
    std::vector<Point> out{Point::at_infinity()};
    const auto q = static_cast<Elem>(f_->order());
    for (Elem x = 0; x < q; ++x) {
      const Elem r = rhs(x);
      for (Elem y = 0; y < q; ++y)
        if (lhs(x, y) == r) out.push_back(Point::affine(x, y));
    }
    return out;
  }

  std::size_t point_order(const Point& pt) const {
    require_on_curve(pt);
    Point acc = pt;
    std::size_t k = 1;
    // Hasse: N <= q + 1 + 2 sqrt(q).
    const std::size_t bound = f_->order() + 2 + 2 * static_cast<std::size_t>(std::sqrt(double(f_->order())) + 1);
    while (!acc.infinity) {
      acc = add_unchecked(acc, pt);
      if (++k > bound) throw InvariantViolation("point order exceeds the Hasse bound");
    }
    return k;
  }

  Point group_sum(std::span<const Point> pts) const {
    Point acc = Point::at_infinity();
    for (const Point& pt : pts) acc = add(acc, pt);
    return acc;
  }

  /// True iff the set contains O and is closed under addition and negation.
  bool is_subgroup(std::span<const Point> pts) const {
    std::vector<Point> set(pts.begin(), pts.end());
    for (const Point& pt : set) require_on_curve(pt);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto contains = [&](const Point& pt) { return std::binary_search(set.begin(), set.end(), pt); };
    if (!contains(Point::at_infinity())) return false;
    for (const Point& a : set) {
      if (!contains(neg_unchecked(a))) return false;
      for (const Point& b : set)
        if (!contains(add_unchecked(a, b))) return false;
    }
    return true;
  }

  /// Brute-force decomposition from the orders of all points.
  GroupStructure group_structure() const {
    const auto pts = points();
    GroupStructure gs;
    gs.order = pts.size();
    std::vector<std::size_t> orders(pts.size());
    std::size_t exponent = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      orders[i] = point_order(pts[i]);
      exponent = std::lcm(exponent, orders[i]);
    }
    gs.n2 = exponent;
    if (gs.order % gs.n2 != 0) throw InvariantViolation("group exponent does not divide the group order");
    gs.n1 = gs.order / gs.n2;
    gs.is_cyclic = gs.n1 == 1;

    const std::size_t q = f_->order();
    if (gs.n2 % gs.n1 != 0 || (q - 1) % gs.n1 != 0)
      throw InvariantViolation("group structure violates n1 | n2 and n1 | q-1");
    const double trace = double(q + 1) - double(gs.order);
    if (trace * trace > 4.0 * double(q)) throw InvariantViolation("point count violates the Hasse bound");
    const long long t = static_cast<long long>(q + 1) - static_cast<long long>(gs.order);
    gs.is_supersingular = t % static_cast<long long>(f_->characteristic()) == 0;

    auto big = std::find(orders.begin(), orders.end(), gs.n2);
    if (big == orders.end()) throw InvariantViolation("no point of exponent order");
    const Point g2 = pts[std::size_t(big - orders.begin())];
    if (gs.is_cyclic) {
      gs.generators = {g2};
      return gs;
    }
    std::vector<Point> span_g2;
    for (Point acc = Point::at_infinity();;) {
      span_g2.push_back(acc);
      acc = add_unchecked(acc, g2);
      if (acc.infinity) break;
    }
    std::sort(span_g2.begin(), span_g2.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (orders[i] != gs.n1) continue;
      bool independent = true;
      Point acc = pts[i];
      for (std::size_t k = 1; k < gs.n1 && independent; ++k, acc = add_unchecked(acc, pts[i]))
        independent = !std::binary_search(span_g2.begin(), span_g2.end(), acc);
      if (independent) {
        gs.generators = {pts[i], g2};
        return gs;
      }
    }
    throw InvariantViolation("no complementary generator found");
  }

  /// i*g1 + j*g2 for a two-generator structure, j*g for a cyclic one (i ignored).
  Point label_point(const GroupStructure& gs, long long i, long long j) const {
    if (gs.generators.size() == 1) return scalar_mul(j, gs.generators[0]);
    return add(scalar_mul(i, gs.generators[0]), scalar_mul(j, gs.generators[1]));
  }

  std::string to_text(const Point& pt) const {
    if (pt.infinity) return "inf";
    return "(" + f_->to_text(pt.x) + "," + f_->to_text(pt.y) + ")";
  }

  /// Parses "inf" or "(x,y)"; the result must lie on the curve.
  Point parse_point(std::string_view text) const {
    std::string s;
    for (char ch : text)
      if (ch != ' ' && ch != '\t') s += ch;
    if (s == "inf" || s == "O") return Point::at_infinity();
    const auto comma = s.find(',');
    if (s.size() < 5 || s.front() != '(' || s.back() != ')' || comma == std::string::npos)
      throw InvalidArgument("cannot parse point '" + std::string(text) + "'");
    const Point pt = Point::affine(f_->parse(std::string_view(s).substr(1, comma - 1)),
                                   f_->parse(std::string_view(s).substr(comma + 1, s.size() - comma - 2)));
    if (!on_curve(pt)) throw InvalidArgument("point " + std::string(text) + " is not on the curve");
    return pt;
  }

  Point neg_unchecked(const Point& pt) const {
    if (pt.infinity) return pt;
    const GaloisField& F = *f_;
    return Point::affine(pt.x, F.sub(F.neg(pt.y), F.add(F.mul(a1_, pt.x), a3_)));
  }

  /// Chord-tangent law; callers guarantee both points are on the curve.
  Point add_unchecked(const Point& p1, const Point& p2) const {
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    const GaloisField& F = *f_;
    Elem lambda;
    if (p1.x == p2.x) {
      if (p2 == neg_unchecked(p1)) return Point::at_infinity();
      // Doubling: lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3).
      const Elem x = p1.x, y = p1.y;
      Elem num = F.mul(F.from_int(3), F.mul(x, x));
      num = F.add(num, F.mul(F.from_int(2), F.mul(a2_, x)));
      num = F.add(num, a4_);
      num = F.sub(num, F.mul(a1_, y));
      const Elem den = F.add(F.add(F.mul(F.from_int(2), y), F.mul(a1_, x)), a3_);
      if (den == 0) throw InvariantViolation("vertical tangent on a point that is not 2-torsion");
      lambda = F.div(num, den);
    } else {
      lambda = F.div(F.sub(p2.y, p1.y), F.sub(p2.x, p1.x));
    }
    const Elem nu = F.sub(p1.y, F.mul(lambda, p1.x));
    Elem x3 = F.add(F.mul(lambda, lambda), F.mul(a1_, lambda));
    x3 = F.sub(F.sub(F.sub(x3, a2_), p1.x), p2.x);
    const Elem y3 = F.sub(F.sub(F.neg(F.mul(F.add(lambda, a1_), x3)), nu), a3_);
    return Point::affine(x3, y3);
  }

 private:
  Elem lhs(Elem x, Elem y) const {
    const GaloisField& F = *f_;
    return F.add(F.mul(y, y), F.add(F.mul(a1_, F.mul(x, y)), F.mul(a3_, y)));
  }
  Elem rhs(Elem x) const {
    const GaloisField& F = *f_;
    const Elem x2 = F.mul(x, x);
    return F.add(F.add(F.mul(x2, x), F.mul(a2_, x2)), F.add(F.mul(a4_, x), a6_));
  }
  void require_on_curve(const Point& pt) const {
    if (!on_curve(pt)) throw InvalidArgument("point is not on the curve");
  }

  FieldPtr f_;
  Elem a1_, a2_, a3_, a4_, a6_;
};

}  // namespace agshare
