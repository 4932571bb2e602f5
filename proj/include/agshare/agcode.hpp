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

// Evaluation codes C_L(D, mO) on an elliptic curve, their duals, and
// exhaustive weight computations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agshare/curve.hpp"
#include "agshare/errors.hpp"
#include "agshare/field.hpp"
#include "agshare/linalg.hpp"

namespace agshare {

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

/// x^i y^j with j in {0, 1}; pole order at O is 2i + 3j.
struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;

  unsigned pole_order() const { return 2 * x_exp + 3 * y_exp; }
  bool operator==(const Monomial&) const = default;
};

/// Monomial basis of L(mO), sorted by pole order.
struct FunctionBasis {
  int m = 0;
  std::vector<Monomial> monomials;
};

inline FunctionBasis rr_basis(int m) {
  if (m < 1) throw InvalidArgument("divisor degree m must be >= 1");
  FunctionBasis basis{m, {}};
  for (unsigned pole = 0; pole <= static_cast<unsigned>(m); ++pole) {
    // Each pole order other than 1 is hit by exactly one (i, j) with j in {0, 1}.
    if (pole % 2 == 0) basis.monomials.push_back({pole / 2, 0});
    else if (pole >= 3) basis.monomials.push_back({(pole - 3) / 2, 1});
  }
  return basis;
}

/// One row per monomial, one column per point.
inline Matrix evaluate_basis(const EllipticCurve& curve, const FunctionBasis& basis, std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].infinity) throw InvalidArgument("evaluation set must not contain the point at infinity");
    if (!curve.on_curve(points[i])) throw InvalidArgument("evaluation point is not on the curve");
    for (std::size_t j = 0; j < i; ++j)
      if (points[j] == points[i]) throw InvalidArgument("evaluation set has duplicate points");
  }
  const GaloisField& F = curve.gf();
  Matrix out(basis.monomials.size(), points.size());
  for (std::size_t r = 0; r < basis.monomials.size(); ++r) {
    const Monomial mono = basis.monomials[r];
    for (std::size_t c = 0; c < points.size(); ++c)
      out(r, c) = F.mul(F.pow(points[c].x, mono.x_exp), F.pow(points[c].y, mono.y_exp));
  }
  return out;
}

/// A linear code given by a generator matrix with independent rows.
class LinearCode {
 public:
  LinearCode(FieldPtr field, Matrix generator) : field_(std::move(field)), generator_(std::move(generator)) {
    if (!field_) throw InvalidArgument("null field");
    if (generator_.rows() < 1 || generator_.rows() > generator_.cols())
      throw InvalidArgument("code dimension must satisfy 1 <= k <= length");
    if (rank(*field_, generator_) != generator_.rows())
      throw InvariantViolation("generator matrix rows are linearly dependent");
  }

  const FieldPtr& field() const { return field_; }
  const Matrix& generator() const { return generator_; }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }

  std::vector<Elem> encode(std::span<const Elem> message) const {
    return row_times(*field_, message, generator_);
  }

  /// q^k, saturating.
  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (n > std::numeric_limits<std::size_t>::max() / field_->order()) return std::numeric_limits<std::size_t>::max();
      n *= field_->order();
    }
    return n;
  }

 private:
  FieldPtr field_;
  Matrix generator_;
};

inline LinearCode functional_code(const EllipticCurve& curve, int m, std::span<const Point> points) {
  if (m < 1) throw InvalidArgument("divisor degree m must be >= 1");
  if (static_cast<std::size_t>(m) >= points.size())
    throw UnsupportedParameters("need m < |D| (got m=" + std::to_string(m) + ", |D|=" +
                                std::to_string(points.size()) + ")");
  Matrix g = evaluate_basis(curve, rr_basis(m), points);
  if (rank(curve.gf(), g) != g.rows()) throw InvariantViolation("evaluated Riemann-Roch basis is rank deficient");
  return LinearCode(curve.field(), std::move(g));
}

/// Null space of the generator, in canonical reduced form.
inline LinearCode dual_code(const LinearCode& code) {
  if (code.dimension() >= code.length()) throw UnsupportedParameters("dual of a full-length code is trivial");
  return LinearCode(code.field(), null_space(*code.field(), code.generator()));
}

/// Calls fn(word) for every codeword u*G, messages in increasing base-q order
/// with u[0] least significant. The word buffer is reused between calls.
template <class Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn, std::size_t cap = kDefaultEnumerationCap) {
  if (code.size() > cap)
    throw CapExceeded("code has " + (code.size() == std::numeric_limits<std::size_t>::max()
                                         ? std::string("too many")
                                         : std::to_string(code.size())) +
                      " codewords, cap is " + std::to_string(cap));
  const GaloisField& F = *code.field();
  const std::size_t q = F.order(), k = code.dimension(), n = code.length();
  const Matrix& g = code.generator();
  // step[i][v] = (e_{v+1} - e_v) * row_i for v < q-1, and (e_0 - e_{q-1}) * row_i at v = q-1.
  std::vector<std::vector<Elem>> step(k * q, std::vector<Elem>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t v = 0; v < q; ++v) {
      const Elem next = static_cast<Elem>((v + 1) % q);
      const Elem delta = F.sub(next, static_cast<Elem>(v));
      for (std::size_t c = 0; c < n; ++c) step[i * q + v][c] = F.mul(delta, g(i, c));
    }
  std::vector<Elem> word(n, 0);
  std::vector<std::size_t> u(k, 0);
  for (;;) {
    fn(std::as_const(word));
    std::size_t i = 0;
    for (; i < k; ++i) {
      const auto& s = step[i * q + u[i]];
      for (std::size_t c = 0; c < n; ++c) word[c] = F.add(word[c], s[c]);
      if (++u[i] < q) break;
      u[i] = 0;
    }
    if (i == k) break;
  }
}

inline std::vector<std::vector<Elem>> codewords(const LinearCode& code, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<std::vector<Elem>> out;
  for_each_codeword(code, [&](const std::vector<Elem>& w) { out.push_back(w); }, cap);
  return out;
}

inline std::size_t hamming_weight(std::span<const Elem> word, std::size_t from = 0) {
  std::size_t w = 0;
  for (std::size_t i = from; i < word.size(); ++i) w += word[i] != 0;
  return w;
}

inline std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw InvalidArgument("words of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Minimum weight over nonzero codewords.
inline std::size_t min_distance(const LinearCode& code, std::size_t cap = kDefaultEnumerationCap) {
  std::size_t best = code.length() + 1;
  for_each_codeword(
      code,
      [&](const std::vector<Elem>& w) {
        const std::size_t wt = hamming_weight(w);
        if (wt != 0 && wt < best) best = wt;
      },
      cap);
  return best;
}

/// Minimum weight on coordinates 1..length-1, over codewords with c_0 != 0
/// (coordinate0_nonzero) or over all nonzero codewords. Throws InvalidArgument
/// when no codeword passes the filter.
inline std::size_t min_weight_where(const LinearCode& code, bool coordinate0_nonzero,
                                    std::size_t cap = kDefaultEnumerationCap) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_codeword(
      code,
      [&](const std::vector<Elem>& w) {
        if (coordinate0_nonzero ? w[0] == 0 : hamming_weight(w) == 0) return;
        best = std::min(best, hamming_weight(w, 1));
      },
      cap);
  if (best == std::numeric_limits<std::size_t>::max()) throw InvalidArgument("no codeword satisfies the filter");
  return best;
}

/// Genus-0 analogue of functional_code: evaluations of 1, x, ..., x^degree
/// at distinct elements xs (a Reed-Solomon code).
inline LinearCode vandermonde_code(const FieldPtr& field, std::size_t degree, std::span<const Elem> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (xs[i] == xs[j]) throw InvalidArgument("evaluation points must be distinct");
  if (degree + 1 > xs.size()) throw UnsupportedParameters("degree too large for the evaluation set");
  Matrix g(degree + 1, xs.size());
  for (std::size_t r = 0; r <= degree; ++r)
    for (std::size_t c = 0; c < xs.size(); ++c) g(r, c) = field->pow(xs[c], r);
  return LinearCode(field, std::move(g));
}

}  // namespace agshare
