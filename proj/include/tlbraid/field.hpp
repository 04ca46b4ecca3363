/* Copyright 2026 The tlbraid Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

// Exact arithmetic in F_p and F_{p^d} = F_p[x]/(m(x)).
//
// Elements are plain values (Elem) holding the encoded integer
// sum c_i * p^i of their polynomial coefficients; all arithmetic goes through
// the owning Field. FqElem bundles an element with its field for call sites
// that want operator syntax and owner checks.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlbraid/error.hpp"

namespace tlbraid {

struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned d = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;    // d+1 coefficients, ascending, monic
  std::vector<std::uint64_t> pow_p;      // p^0 .. p^d
  std::vector<std::uint64_t> q1_primes;  // distinct primes dividing q-1
  std::uint64_t primitive = 0;
  // Present for extension fields with q <= kTableLimit.
  std::vector<std::uint32_t> log_tab;  // size q, log_tab[0] unused
  std::vector<std::uint32_t> exp_tab;  // size 2(q-1)
  // Present for odd-characteristic extension fields with q <= kAddTableLimit.
  std::vector<std::uint16_t> add_tab;
};

inline constexpr std::uint64_t kTableLimit = 1u << 20;
inline constexpr std::uint64_t kAddTableLimit = 1024;
inline constexpr std::uint64_t kOrderLimit = 1ull << 40;

}  // namespace detail

class Field {
 public:
  Field() = default;

  // Builds F_{p^d}. Without a modulus the canonical one is used: the monic
  // irreducible of degree d whose low coefficients have the smallest encoded
  // value sum c_i p^i. For d = 1 the canonical modulus is x.
  static Field make(std::uint64_t p, unsigned d,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const { return data_->p; }
  unsigned degree() const { return data_->d; }
  std::uint64_t order() const { return data_->q; }
  std::span<const std::uint64_t> modulus() const { return data_->modulus; }
  bool valid() const { return data_ != nullptr; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t k) const;
  Elem from_code(std::uint64_t code) const;
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(Elem a) const;
  // The class of x; equals from_int(0) for prime fields with modulus x.
  Elem generator() const;
  Elem primitive_element() const { return {data_->primitive}; }
  std::span<const std::uint64_t> order_primes() const { return data_->q1_primes; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // Negative exponents invert first.
  Elem powi(Elem a, std::int64_t e) const;

  // "GF p d c_0 ... c_d"
  std::string header() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  Elem mul_poly(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b, bool negate_b) const;

  std::shared_ptr<const detail::FieldData> data_;
};

inline Elem Field::add(Elem a, Elem b) const {
  const auto& f = *data_;
  if (f.d == 1) {
    std::uint64_t s = a.v + b.v;
    return {s >= f.p ? s - f.p : s};
  }
  if (f.p == 2) return {a.v ^ b.v};
  if (!f.add_tab.empty()) return {f.add_tab[a.v * f.q + b.v]};
  return add_digits(a, b, false);
}

inline Elem Field::neg(Elem a) const {
  const auto& f = *data_;
  if (f.p == 2 || a.v == 0) return a;
  if (f.d == 1) return {f.p - a.v};
  return add_digits(Elem{0}, a, true);
}

inline Elem Field::mul(Elem a, Elem b) const {
  const auto& f = *data_;
  if (f.d == 1) {
    if (f.p <= 0xffffffffull) return {a.v * b.v % f.p};
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % f.p)};
  }
  if (!f.log_tab.empty()) {
    if (a.v == 0 || b.v == 0) return {0};
    return {f.exp_tab[f.log_tab[a.v] + f.log_tab[b.v]]};
  }
  return mul_poly(a, b);
}

// An element together with its field. Mixing owners throws kFieldMismatch.
class FqElem {
 public:
  FqElem(Field field, Elem value);
  FqElem(Field field, std::uint64_t code) : FqElem(std::move(field), Elem{code}) {}

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  std::uint64_t code() const { return value_.v; }
  bool is_zero() const { return value_.v == 0; }

  FqElem inv() const { return {field_, field_.inv(value_)}; }
  FqElem pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend bool operator==(const FqElem& a, const FqElem& b);

 private:
  Field field_;
  Elem value_;
};

void require_same_field(const Field& a, const Field& b);

bool is_prime(std::uint64_t n);
// Distinct prime divisors by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Rabin's irreducibility test over F_p; coefficients ascending, monic.
bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p);

Field make_field(std::uint64_t p, unsigned d,
                 std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

std::uint64_t mult_order(const Field& f, Elem x);
inline std::uint64_t mult_order(const FqElem& x) { return mult_order(x.field(), x.value()); }

// Least e >= 1 with 1 + alpha + ... + alpha^{e-1} = 0.
std::uint64_t quantum_e(const Field& f, Elem alpha);
inline std::uint64_t quantum_e(const FqElem& a) { return quantum_e(a.field(), a.value()); }

// [m]_alpha = (alpha^m - 1)/(alpha - 1), or m itself when alpha = 1.
Elem quantum_integer(const Field& f, Elem alpha, std::int64_t m);

// x^{p^r}, r taken mod d.
Elem frobenius(const Field& f, Elem x, std::int64_t r);
inline FqElem frobenius(const FqElem& x, std::int64_t r) {
  return {x.field(), frobenius(x.field(), x.value(), r)};
}

// Degree over F_p of F_p(x): the length of the Frobenius orbit of x.
unsigned generated_subfield_degree(const Field& f, Elem x);
inline unsigned generated_subfield_degree(const FqElem& x) {
  return generated_subfield_degree(x.field(), x.value());
}

// Smallest encoded element of multiplicative order k, if any.
std::optional<Elem> element_of_order(const Field& f, std::uint64_t k);

// Quadratic extension top / base with the involution eps(x) = x^{|base|}.
class ExtPair {
 public:
  // top must have even degree; base is the canonical field of half degree.
  static ExtPair over(const Field& top);

  const Field& base() const { return base_; }
  const Field& top() const { return top_; }
  std::uint64_t base_order() const { return base_.order(); }

  Elem embed(Elem base_elem) const;
  Elem eps(Elem x) const;
  Elem norm(Elem x) const { return top_.mul(x, eps(x)); }
  Elem trace(Elem x) const { return top_.add(x, eps(x)); }
  bool in_base(Elem x) const { return eps(x) == x; }

 private:
  Field base_;
  Field top_;
  Elem base_root_;  // image in top of the class of x in base
};

// lambda != 0 with eps(lambda) = mu * lambda. Requires norm(mu) = 1.
Elem hilbert90_solve(const ExtPair& pair, Elem mu);

// x with x * eps(x) = t for nonzero t in the fixed field.
Elem solve_norm(const ExtPair& pair, Elem t);

}  // namespace tlbraid
