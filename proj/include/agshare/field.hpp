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

// Exact arithmetic in small finite fields GF(p^r).
//
// Elements are stored as their index in the canonical order: the coefficient
// vector (c_0, ..., c_{r-1}) of c_0 + c_1 z + ... + c_{r-1} z^{r-1} maps to
// the base-p number c_0 + c_1 p + ... + c_{r-1} p^{r-1}. Enumerating indices
// 0..q-1 therefore lists the elements with the least-significant digit
// varying fastest. All arithmetic goes through precomputed q x q tables, so
// the field order is capped.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agshare/errors.hpp"

namespace agshare {

/// Canonical index of a field element.
using Elem = std::uint16_t;

inline constexpr std::size_t kDefaultFieldCap = 256;
inline constexpr std::size_t kMaxFieldOrder = 1024;

struct FieldSpec {
  unsigned p = 2;
  unsigned r = 1;
  /// r+1 base-p digits of the monic modulus, constant term first.
  std::vector<unsigned> modulus;

  std::size_t order() const {
    std::size_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    return q;
  }

  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// Polynomials over GF(p) as digit vectors, constant term first, no trailing zeros.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod_p(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  unsigned result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Remainder of a modulo a monic-or-not nonzero divisor b.
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
    trim(a);
  }
  return a;
}

}  // namespace detail

/// Exhaustive trial division by every monic polynomial of degree 1..r/2.
inline bool is_irreducible(unsigned p, const std::vector<unsigned>& modulus) {
  if (modulus.size() < 2) return false;
  const std::size_t r = modulus.size() - 1;
  if (modulus.back() == 0) return false;
  if (r == 1) return true;
  for (std::size_t deg = 1; deg <= r / 2; ++deg) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::size_t lower = 0; lower < count; ++lower) {
      detail::Poly divisor(deg + 1, 0);
      std::size_t v = lower;
      for (std::size_t i = 0; i < deg; ++i) {
        divisor[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      divisor[deg] = 1;
      if (detail::poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

/// Built-in moduli: GF(4) = GF(2)[z]/(z^2+z+1), GF(8) = GF(2)[z]/(z^3+z+1).
/// Other fields get the monic irreducible whose lower coefficients form the
/// smallest base-p number (this also reproduces the two fixed entries).
inline std::vector<unsigned> default_modulus(unsigned p, unsigned r) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw InvalidArgument("extension degree must be >= 1");
  if (p == 2 && r == 2) return {1, 1, 1};
  if (p == 2 && r == 3) return {1, 1, 0, 1};
  if (r == 1) return {0, 1};
  std::size_t count = 1;
  for (unsigned i = 0; i < r; ++i) count *= p;
  for (std::size_t lower = 0; lower < count; ++lower) {
    std::vector<unsigned> mod(r + 1, 0);
    std::size_t v = lower;
    for (unsigned i = 0; i < r; ++i) {
      mod[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    mod[r] = 1;
    if (is_irreducible(p, mod)) return mod;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

/// Validates and completes a field description. Throws InvalidArgument.
inline FieldSpec make_field_spec(unsigned p, unsigned r, std::optional<std::vector<unsigned>> modulus = std::nullopt,
                                 std::size_t cap = kDefaultFieldCap) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw InvalidArgument("extension degree must be >= 1");
  FieldSpec spec{p, r, {}};
  const std::size_t limit = cap < kMaxFieldOrder ? cap : kMaxFieldOrder;
  std::size_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > limit) throw InvalidArgument("field order exceeds cap of " + std::to_string(limit));
  }
  if (modulus) {
    if (modulus->size() != r + 1) throw InvalidArgument("modulus must have r+1 digits");
    for (unsigned d : *modulus)
      if (d >= p) throw InvalidArgument("modulus digit out of range");
    if (modulus->back() != 1) throw InvalidArgument("modulus must be monic");
    if (!is_irreducible(p, *modulus)) throw InvalidArgument("modulus is reducible");
    spec.modulus = *modulus;
  } else {
    spec.modulus = default_modulus(p, r);
  }
  return spec;
}

class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
    const FieldSpec checked = make_field_spec(spec_.p, spec_.r, spec_.modulus, kMaxFieldOrder);
    spec_ = checked;
    q_ = spec_.order();
    build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t order() const { return q_; }
  unsigned characteristic() const { return spec_.p; }
  unsigned degree() const { return spec_.r; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    Elem base = a;
    while (e) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const {
    const long long p = spec_.p;
    return static_cast<Elem>(((n % p) + p) % p);
  }

  std::vector<unsigned> digits(Elem a) const {
    std::vector<unsigned> out(spec_.r);
    unsigned v = a;
    for (unsigned i = 0; i < spec_.r; ++i) {
      out[i] = v % spec_.p;
      v /= spec_.p;
    }
    return out;
  }

  Elem from_digits(const std::vector<unsigned>& coeffs) const {
    if (coeffs.size() != spec_.r) throw InvalidArgument("element must have exactly r digits");
    unsigned v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= spec_.p) throw InvalidArgument("element digit out of range");
      v = v * spec_.p + coeffs[i];
    }
    return static_cast<Elem>(v);
  }

  /// Prime fields render as a decimal integer. Extension fields render their
  /// digits most-significant first ("101" is z^2+1 in GF(8)); for p > 10 the
  /// digits are separated by '.'.
  std::string to_text(Elem a) const {
    if (spec_.r == 1) return std::to_string(a);
    const auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (spec_.p > 10 && i + 1 != d.size()) out += '.';
      out += std::to_string(d[i]);
    }
    return out;
  }

  Elem parse(std::string_view text) const {
    auto bad = [&] { return InvalidArgument("cannot parse field element '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::vector<unsigned> msd_first;
    if (spec_.r == 1) {
      unsigned long v = 0;
      for (char ch : text) {
        if (ch < '0' || ch > '9') throw bad();
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v >= spec_.p) throw bad();
      }
      return static_cast<Elem>(v);
    }
    if (spec_.p > 10) {
      std::size_t start = 0;
      while (start <= text.size()) {
        const std::size_t dot = text.find('.', start);
        const std::string_view part = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
        if (part.empty()) throw bad();
        unsigned v = 0;
        for (char ch : part) {
          if (ch < '0' || ch > '9') throw bad();
          v = v * 10 + static_cast<unsigned>(ch - '0');
          if (v >= spec_.p) throw bad();
        }
        msd_first.push_back(v);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '0' || ch > '9') throw bad();
        msd_first.push_back(static_cast<unsigned>(ch - '0'));
      }
    }
    if (msd_first.size() != spec_.r) throw bad();
    std::vector<unsigned> coeffs(msd_first.rbegin(), msd_first.rend());
    for (unsigned d : coeffs)
      if (d >= spec_.p) throw bad();
    return from_digits(coeffs);
  }

  /// All q elements in canonical order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out(q_);
    for (std::size_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
  }

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

  void build_tables() {
    const unsigned p = spec_.p;
    const unsigned r = spec_.r;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    std::vector<std::vector<unsigned>> digit(q_);
    for (std::size_t a = 0; a < q_; ++a) digit[a] = digits(static_cast<Elem>(a));
    auto pack = [&](const std::vector<unsigned>& d) {
      unsigned v = 0;
      for (std::size_t i = r; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
      return static_cast<Elem>(v);
    };
    for (std::size_t a = 0; a < q_; ++a) {
      std::vector<unsigned> n(r);
      for (unsigned i = 0; i < r; ++i) n[i] = (p - digit[a][i]) % p;
      neg_[a] = pack(n);
      for (std::size_t b = 0; b < q_; ++b) {
        std::vector<unsigned> s(r);
        for (unsigned i = 0; i < r; ++i) s[i] = (digit[a][i] + digit[b][i]) % p;
        add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = pack(s);
        detail::Poly prod(2 * r, 0);
        for (unsigned i = 0; i < r; ++i)
          for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + digit[a][i] * digit[b][j]) % p;
        mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = pack(detail::poly_mod(prod, spec_.modulus, p));
      }
    }
    for (std::size_t a = 1; a < q_; ++a)
      for (std::size_t b = 1; b < q_; ++b)
        if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) {
          inv_[a] = static_cast<Elem>(b);
          break;
        }
  }

  FieldSpec spec_;
  std::size_t q_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

inline FieldPtr make_field(const FieldSpec& spec) { return std::make_shared<const GaloisField>(spec); }

inline FieldPtr make_field(unsigned p, unsigned r) { return make_field(make_field_spec(p, r)); }

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw InvalidArgument("null field");
    if (value_ >= field_->order()) throw InvalidArgument("element index out of range");
  }

  static FieldElement from_coeffs(FieldPtr field, const std::vector<unsigned>& coeffs) {
    const Elem v = field->from_digits(coeffs);
    return {std::move(field), v};
  }
  static FieldElement parse(FieldPtr field, std::string_view text) {
    const Elem v = field->parse(text);
    return {std::move(field), v};
  }

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<unsigned> coeffs() const { return field_->digits(value_); }
  std::string to_string() const { return field_->to_text(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(value_, check(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(value_, check(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(value_, check(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(value_, check(o))}; }
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }

  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  bool operator==(const FieldElement& o) const { return same_field(o) && value_ == o.value_; }

  bool same_field(const FieldElement& o) const {
    return field_ == o.field_ || field_->spec() == o.field_->spec();
  }

 private:
  Elem check(const FieldElement& o) const {
    if (!same_field(o)) throw FieldMismatch("operands belong to different fields");
    return o.value_;
  }

  FieldPtr field_;
  Elem value_;
};

inline FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement ff_inv(const FieldElement& a) { return a.inv(); }
inline FieldElement ff_pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }

inline std::vector<FieldElement> enumerate_field(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Elem e : field->elements()) out.emplace_back(field, e);
  return out;
}

inline std::vector<FieldElement> enumerate_field(const FieldSpec& spec) { return enumerate_field(make_field(spec)); }

}  // namespace agshare
