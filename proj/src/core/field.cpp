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

#include "tlbraid/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tlbraid {

namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(lead, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  a = poly_mod(std::move(a), f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, a, p), f, p);
    e >>= 1;
    if (e) a = poly_mod(poly_mul(a, a, p), f, p);
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod applies
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = mulmod(c, inv, p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod f
Poly frobenius_power_of_x(unsigned k, const Poly& f, std::uint64_t p) {
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t p, unsigned d) {
  std::vector<std::uint64_t> c(d, 0);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint64_t encode(std::span<const std::uint64_t> c, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kNotPrime: return "not prime";
    case ErrorCode::kReducibleModulus: return "reducible modulus";
    case ErrorCode::kZeroDivision: return "division by zero";
    case ErrorCode::kFieldMismatch: return "field mismatch";
    case ErrorCode::kShapeMismatch: return "shape mismatch";
    case ErrorCode::kSingular: return "singular matrix";
    case ErrorCode::kNotHermitian: return "not hermitian";
    case ErrorCode::kNormNotOne: return "norm is not one";
    case ErrorCode::kGateRejected: return "gate rejected";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kIntertwiner: return "intertwiner failure";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  const Poly x{0, 1};
  if (poly_sub(frobenius_power_of_x(d, f, p), x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_divisors(d)) {
    Poly h = poly_sub(frobenius_power_of_x(static_cast<unsigned>(d / r), f, p), x, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field Field::make(std::uint64_t p, unsigned d,
                  std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->d = d;
  data->pow_p.assign(1, 1);
  for (unsigned i = 0; i < d; ++i) {
    if (data->pow_p.back() > detail::kOrderLimit / p) {
      throw Error(ErrorCode::kUnsupported, "field order exceeds 2^40");
    }
    data->pow_p.push_back(data->pow_p.back() * p);
  }
  data->q = data->pow_p[d];
  if (data->q >= detail::kOrderLimit) {
    throw Error(ErrorCode::kUnsupported, "field order exceeds 2^40");
  }

  if (modulus) {
    auto& m = *modulus;
    if (m.size() != d + 1 || m.back() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "modulus must be monic of degree " + std::to_string(d));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(m, p)) throw Error(ErrorCode::kReducibleModulus, "modulus is reducible");
    data->modulus = m;
  } else if (d == 1) {
    data->modulus = {0, 1};
  } else {
    const std::uint64_t low_count = data->q;
    for (std::uint64_t low = 0; low < low_count; ++low) {
      Poly cand = decode(low, p, d);
      cand.push_back(1);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        data->modulus = std::move(cand);
        break;
      }
    }
  }

  data->q1_primes = prime_divisors(data->q - 1);
  Field tmp(data);
  // Primitive element: smallest code whose order is q-1.
  for (std::uint64_t g = 1; g < data->q; ++g) {
    if (mult_order(tmp, Elem{g}) == data->q - 1) {
      data->primitive = g;
      break;
    }
  }

  if (d > 1 && data->q <= detail::kTableLimit) {
    const std::uint64_t n = data->q - 1;
    data->exp_tab.resize(2 * n);
    data->log_tab.assign(data->q, 0);
    Elem x{1};
    for (std::uint64_t i = 0; i < n; ++i) {
      data->exp_tab[i] = static_cast<std::uint32_t>(x.v);
      data->exp_tab[i + n] = static_cast<std::uint32_t>(x.v);
      data->log_tab[x.v] = static_cast<std::uint32_t>(i);
      x = tmp.mul_poly(x, Elem{data->primitive});
    }
  }
  if (d > 1 && p != 2 && data->q <= detail::kAddTableLimit) {
    const std::uint64_t q = data->q;
    data->add_tab.resize(q * q);
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        data->add_tab[a * q + b] =
            static_cast<std::uint16_t>(tmp.add_digits(Elem{a}, Elem{b}, false).v);
      }
    }
  }
  return Field(std::move(data));
}

Field make_field(std::uint64_t p, unsigned d, std::optional<std::vector<std::uint64_t>> modulus) {
  return Field::make(p, d, std::move(modulus));
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->p == b.data_->p && a.data_->d == b.data_->d &&
         a.data_->modulus == b.data_->modulus;
}

Elem Field::from_int(std::int64_t k) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = k % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

Elem Field::from_code(std::uint64_t code) const {
  if (code >= data_->q) {
    throw Error(ErrorCode::kInvalidArgument,
                "element code " + std::to_string(code) + " out of range for field of order " +
                    std::to_string(data_->q));
  }
  return {code};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > data_->d) throw Error(ErrorCode::kInvalidArgument, "too many coefficients");
  std::vector<std::uint64_t> c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= data_->p;
  return {encode(c, data_->p)};
}

std::vector<std::uint64_t> Field::coeffs(Elem a) const { return decode(a.v, data_->p, data_->d); }

Elem Field::generator() const {
  if (data_->d == 1) return from_int(static_cast<std::int64_t>(data_->p - data_->modulus[0]) %
                                     static_cast<std::int64_t>(data_->p));
  return {data_->p};
}

Elem Field::add_digits(Elem a, Elem b, bool negate_b) const {
  const auto p = data_->p;
  std::uint64_t x = a.v, y = b.v, out = 0, scale = 1;
  for (unsigned i = 0; i < data_->d; ++i) {
    std::uint64_t da = x % p, db = y % p;
    x /= p;
    y /= p;
    if (negate_b && db) db = p - db;
    std::uint64_t s = da + db;
    if (s >= p) s -= p;
    out += s * scale;
    scale *= p;
  }
  return {out};
}

Elem Field::mul_poly(Elem a, Elem b) const {
  const auto& f = *data_;
  if (a.v == 0 || b.v == 0) return {0};
  const auto p = f.p;
  const unsigned d = f.d;
  auto ca = decode(a.v, p, d);
  auto cb = decode(b.v, p, d);
  std::vector<std::uint64_t> r(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (!ca[i]) continue;
    for (unsigned j = 0; j < d; ++j) {
      r[i + j] = (r[i + j] + mulmod(ca[i], cb[j], p)) % p;
    }
  }
  for (std::size_t k = r.size(); k-- > d;) {
    const std::uint64_t lead = r[k];
    if (!lead) continue;
    r[k] = 0;
    for (unsigned i = 0; i < d; ++i) {
      r[k - d + i] = (r[k - d + i] + p - mulmod(lead, f.modulus[i], p)) % p;
    }
  }
  r.resize(d);
  return {encode(r, p)};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::kZeroDivision, "inverse of zero");
  const auto& f = *data_;
  if (!f.log_tab.empty()) return {f.exp_tab[(f.q - 1) - f.log_tab[a.v]]};
  if (f.d == 1) return {powmod(a.v, f.p - 2, f.p)};
  return pow(a, f.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  const auto& f = *data_;
  if (!f.log_tab.empty()) {
    if (a.v == 0) return e == 0 ? Elem{1} : Elem{0};
    const std::uint64_t n = f.q - 1;
    const auto l = static_cast<unsigned __int128>(f.log_tab[a.v]) * (e % n) % n;
    return {f.exp_tab[static_cast<std::uint64_t>(l)]};
  }
  Elem r{1};
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem Field::powi(Elem a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

std::string Field::header() const {
  std::ostringstream os;
  os << "GF " << data_->p << ' ' << data_->d;
  for (auto c : data_->modulus) os << ' ' << c;
  return os.str();
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::kFieldMismatch, "operands belong to different fields");
}

FqElem::FqElem(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.valid()) throw Error(ErrorCode::kInvalidArgument, "element without a field");
  field_.from_code(value.v);
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FqElem operator/(const FqElem& a, const FqElem& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool operator==(const FqElem& a, const FqElem& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::uint64_t mult_order(const Field& f, Elem x) {
  if (x.v == 0) throw Error(ErrorCode::kZeroDivision, "multiplicative order of zero");
  std::uint64_t ord = f.order() - 1;
  for (std::uint64_t r : f.order_primes()) {
    while (ord % r == 0 && f.pow(x, ord / r) == f.one()) ord /= r;
  }
  return ord;
}

std::uint64_t quantum_e(const Field& f, Elem alpha) {
  if (alpha.v == 0) throw Error(ErrorCode::kZeroDivision, "quantum parameter must be nonzero");
  if (alpha == f.one()) return f.characteristic();
  return mult_order(f, alpha);
}

Elem quantum_integer(const Field& f, Elem alpha, std::int64_t m) {
  if (alpha == f.one()) return f.from_int(m);
  const Elem num = f.sub(f.powi(alpha, m), f.one());
  return f.div(num, f.sub(alpha, f.one()));
}

Elem frobenius(const Field& f, Elem x, std::int64_t r) {
  const auto d = static_cast<std::int64_t>(f.degree());
  std::int64_t k = r % d;
  if (k < 0) k += d;
  for (std::int64_t i = 0; i < k; ++i) x = f.pow(x, f.characteristic());
  return x;
}

unsigned generated_subfield_degree(const Field& f, Elem x) {
  Elem y = x;
  for (unsigned r = 1; r <= f.degree(); ++r) {
    y = f.pow(y, f.characteristic());
    if (y == x) return r;
  }
  throw Error(ErrorCode::kInternal, "Frobenius orbit longer than the degree");
}

std::optional<Elem> element_of_order(const Field& f, std::uint64_t k) {
  if (k == 0 || (f.order() - 1) % k != 0) return std::nullopt;
  // Elements of order k are h^j with h = g^{(q-1)/k} and gcd(j, k) = 1.
  const Elem h = f.pow(f.primitive_element(), (f.order() - 1) / k);
  std::optional<Elem> best;
  Elem x = f.one();
  for (std::uint64_t j = 0; j < k; ++j) {
    if (std::gcd(j, k) == 1 && (!best || x < *best)) best = x;
    x = f.mul(x, h);
  }
  return best;
}

ExtPair ExtPair::over(const Field& top) {
  if (top.degree() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "quadratic pair needs a field of even degree");
  }
  ExtPair pair;
  pair.top_ = top;
  pair.base_ = Field::make(top.characteristic(), top.degree() / 2);
  const std::uint64_t q0 = pair.base_.order();
  // Roots of the base modulus lie in the fixed field, which is generated by
  // g^{q0+1} for g primitive in top.
  const Elem h = top.pow(top.primitive_element(), q0 + 1);
  auto m = pair.base_.modulus();
  auto eval = [&](Elem y) {
    Elem acc = top.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = top.add(top.mul(acc, y), top.from_int(static_cast<std::int64_t>(m[i])));
    return acc;
  };
  Elem y = top.one();
  bool found = eval(top.zero()) == top.zero();
  if (found) pair.base_root_ = top.zero();
  for (std::uint64_t k = 0; k < q0 - 1 && !found; ++k) {
    if (eval(y) == top.zero()) {
      pair.base_root_ = y;
      found = true;
      break;
    }
    y = top.mul(y, h);
  }
  if (!found) throw Error(ErrorCode::kInternal, "no root of the base modulus in the top field");
  return pair;
}

Elem ExtPair::embed(Elem b) const {
  const auto c = base_.coeffs(b);
  Elem acc = top_.zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = top_.add(top_.mul(acc, base_root_), top_.from_int(static_cast<std::int64_t>(c[i])));
  }
  return acc;
}

Elem ExtPair::eps(Elem x) const { return top_.pow(x, base_.order()); }

Elem hilbert90_solve(const ExtPair& pair, Elem mu) {
  const Field& f = pair.top();
  if (pair.norm(mu) != f.one()) {
    throw Error(ErrorCode::kNormNotOne, "Hilbert 90 input must have norm 1");
  }
  if (mu == f.one()) return f.one();
  const Elem emu = pair.eps(mu);
  for (std::uint64_t c = 1; c < f.order(); ++c) {
    const Elem lambda = f.add(Elem{c}, f.mul(emu, pair.eps(Elem{c})));
    if (lambda.v != 0) return lambda;
  }
  throw Error(ErrorCode::kInternal, "Hilbert 90 search exhausted");
}

Elem solve_norm(const ExtPair& pair, Elem t) {
  const Field& f = pair.top();
  if (t.v == 0 || !pair.in_base(t)) {
    throw Error(ErrorCode::kInvalidArgument, "norm target must be a nonzero base-field element");
  }
  const std::uint64_t q0 = pair.base_order();
  // Norm of g^k is g^{k(q0+1)}: walk the powers of g^{q0+1}.
  const Elem g = f.primitive_element();
  const Elem step = f.pow(g, q0 + 1);
  Elem acc = f.one();
  Elem x = f.one();
  for (std::uint64_t k = 0; k < q0 - 1; ++k) {
    if (acc == t) return x;
    acc = f.mul(acc, step);
    x = f.mul(x, g);
  }
  throw Error(ErrorCode::kInternal, "norm equation has no solution");
}

}  // namespace tlbraid
