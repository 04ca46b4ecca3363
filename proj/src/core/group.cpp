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

#include "tlbraid/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tlbraid/unitary.hpp"

namespace tlbraid {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Table arithmetic for q <= 256.
struct SmallArith {
  using E = std::uint8_t;
  std::vector<std::uint8_t> mul_tab, add_tab, inv_tab;

  explicit SmallArith(const Field& f) : mul_tab(1 << 16), add_tab(1 << 16), inv_tab(256) {
    const auto q = f.order();
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        mul_tab[a << 8 | b] = static_cast<E>(f.mul(Elem{a}, Elem{b}).v);
        add_tab[a << 8 | b] = static_cast<E>(f.add(Elem{a}, Elem{b}).v);
      }
      if (a) inv_tab[a] = static_cast<E>(f.inv(Elem{a}).v);
    }
  }
  E mul(E a, E b) const { return mul_tab[static_cast<std::size_t>(a) << 8 | b]; }
  E add(E a, E b) const { return add_tab[static_cast<std::size_t>(a) << 8 | b]; }
  E inv(E a) const { return inv_tab[a]; }
};

struct WideArith {
  using E = std::uint64_t;
  Field f;
  explicit WideArith(const Field& field) : f(field) {}
  E mul(E a, E b) const { return f.mul(Elem{a}, Elem{b}).v; }
  E add(E a, E b) const { return f.add(Elem{a}, Elem{b}).v; }
  E inv(E a) const { return f.inv(Elem{a}).v; }
};

template <class A>
struct Kernel {
  using E = typename A::E;
  const A& ar;
  const std::vector<std::size_t>& blocks;

  void mul(const E* x, const E* y, E* out) const {
    std::size_t off = 0;
    for (const std::size_t b : blocks) {
      const E* xb = x + off;
      const E* yb = y + off;
      E* ob = out + off;
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) ob[i * b + j] = 0;
        for (std::size_t k = 0; k < b; ++k) {
          const E a = xb[i * b + k];
          if (a == 0) continue;
          for (std::size_t j = 0; j < b; ++j) {
            const E c = yb[k * b + j];
            if (c) ob[i * b + j] = ar.add(ob[i * b + j], ar.mul(a, c));
          }
        }
      }
      off += b * b;
    }
  }

  void canon(E* x, std::size_t m) const {
    std::size_t k = 0;
    while (k < m && x[k] == 0) ++k;
    if (k == m || x[k] == 1) return;
    const E s = ar.inv(x[k]);
    for (; k < m; ++k) {
      if (x[k]) x[k] = ar.mul(x[k], s);
    }
  }
};

template <class A>
void run_bfs(const A& ar, std::span<const Matrix> steps_m, GroupClosure& out, std::uint64_t cap) {
  using E = typename A::E;
  const Packer& pk = out.packer;
  const std::size_t m = pk.entries();
  const bool packed = pk.fits64();
  Kernel<A> kern{ar, pk.blocks()};
  auto& set = *out.members;

  std::vector<std::vector<E>> steps;
  for (const auto& s : steps_m) {
    const auto flat = pk.flatten(s);
    std::vector<E> e(flat.begin(), flat.end());
    if (std::find(steps.begin(), steps.end(), e) == steps.end()) steps.push_back(std::move(e));
  }
  std::vector<E> x(m), y(m), z(m);
  {
    const auto id = pk.flatten(Matrix::identity(out.field, pk.degree()));
    std::copy(id.begin(), id.end(), y.begin());
  }
  std::uint64_t count = 0;
  auto offer = [&]() -> bool {
    if (packed) {
      const std::uint64_t code = pk.pack_raw(y.data());
      if (set.contains(code)) return true;
      if (count >= cap) return false;
      set.insert(code);
      out.codes.push_back(code);
      if ((count & 1023) == 0) {
        pk.unpack_raw(code, z.data());
        if (z != y) throw Error(ErrorCode::kInternal, "pack/unpack round trip failed");
      }
    } else {
      std::string code = pk.pack_bytes_raw(y.data());
      if (set.contains(code)) return true;
      if (count >= cap) return false;
      set.insert(code);
      if ((count & 1023) == 0) {
        pk.unpack_bytes_raw(code, z.data());
        if (z != y) throw Error(ErrorCode::kInternal, "pack/unpack round trip failed");
      }
      out.byte_codes.push_back(std::move(code));
    }
    ++count;
    return true;
  };
  if (cap == 0) {
    out.capped = true;
    return;
  }
  offer();
  for (std::uint64_t head = 0; head < count; ++head) {
    if (packed) {
      pk.unpack_raw(out.codes[head], x.data());
    } else {
      pk.unpack_bytes_raw(out.byte_codes[head], x.data());
    }
    for (const auto& s : steps) {
      kern.mul(x.data(), s.data(), y.data());
      if (out.projective) kern.canon(y.data(), m);
      if (!offer()) {
        out.capped = true;
        out.order = count;
        return;
      }
    }
  }
  out.order = count;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_linear_kind(ClassicalKind k) {
  return k == ClassicalKind::kGL || k == ClassicalKind::kSL || k == ClassicalKind::kPGL ||
         k == ClassicalKind::kPSL;
}

BigInt ipow(BigInt b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Packer::Packer(const Field& field, std::vector<std::size_t> blocks)
    : field_(field), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty block layout");
  for (auto b : blocks_) {
    if (b == 0) throw Error(ErrorCode::kInvalidArgument, "zero-sized block");
    degree_ += b;
    entries_ += b * b;
  }
  bits_ = static_cast<unsigned>(std::bit_width(field.order() - 1));
  if (bits_ == 0) bits_ = 1;
  bytes_per_entry_ = (bits_ + 7) / 8;
}

std::vector<std::uint64_t> Packer::flatten(const Matrix& m) const {
  if (m.rows() != degree_ || m.cols() != degree_) {
    throw Error(ErrorCode::kShapeMismatch, "matrix does not match the packing layout");
  }
  std::vector<std::uint64_t> out;
  out.reserve(entries_);
  std::size_t off = 0;
  for (auto b : blocks_) {
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < degree_; ++j) {
        const bool inside = j >= off && j < off + b;
        if (inside) {
          out.push_back(m(off + i, j).v);
        } else if (m(off + i, j).v) {
          throw Error(ErrorCode::kShapeMismatch, "matrix is not block diagonal for the layout");
        }
      }
    }
    off += b;
  }
  return out;
}

Matrix Packer::expand(std::span<const std::uint64_t> e) const {
  Matrix m(field_, degree_, degree_);
  std::size_t off = 0, k = 0;
  for (auto b : blocks_) {
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) m(off + i, off + j) = field_.from_code(e[k++]);
    }
    off += b;
  }
  return m;
}

std::uint64_t Packer::pack(const Matrix& m) const {
  if (!fits64()) throw Error(ErrorCode::kUnsupported, "layout too wide for a 64-bit code");
  const auto e = flatten(m);
  return pack_raw(e.data());
}

Matrix Packer::unpack(std::uint64_t code) const {
  std::vector<std::uint64_t> e(entries_);
  unpack_raw(code, e.data());
  return expand(e);
}

std::string Packer::pack_bytes(const Matrix& m) const {
  const auto e = flatten(m);
  return pack_bytes_raw(e.data());
}

Matrix Packer::unpack_bytes(const std::string& code) const {
  if (code.size() != entries_ * bytes_per_entry_) {
    throw Error(ErrorCode::kInvalidArgument, "byte code has the wrong length");
  }
  std::vector<std::uint64_t> e(entries_);
  unpack_bytes_raw(code, e.data());
  return expand(e);
}

namespace detail {

CodeSet::CodeSet(std::size_t width_bits) {
  if (width_bits <= kBitsetWidthLimit) {
    mode_ = Mode::kBits;
    words_.assign(((std::size_t{1} << width_bits) + 63) / 64, 0);
  } else if (width_bits <= 64) {
    mode_ = Mode::kHash;
    words_.assign(std::size_t{1} << 12, 0);
  } else {
    mode_ = Mode::kBytes;
  }
}

bool CodeSet::contains(std::uint64_t code) const {
  if (mode_ == Mode::kBits) return (words_[code >> 6] >> (code & 63)) & 1;
  const std::size_t mask = words_.size() - 1;
  for (std::size_t h = splitmix(code) & mask;; h = (h + 1) & mask) {
    if (words_[h] == code) return true;
    if (words_[h] == 0) return false;
  }
}

bool CodeSet::insert(std::uint64_t code) {
  if (mode_ == Mode::kBits) {
    auto& w = words_[code >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (code & 63);
    if (w & bit) return false;
    w |= bit;
    ++used_;
    return true;
  }
  if (code == 0) throw Error(ErrorCode::kInternal, "zero code in hashed set");
  if (2 * (used_ + 1) > words_.size()) grow();
  const std::size_t mask = words_.size() - 1;
  for (std::size_t h = splitmix(code) & mask;; h = (h + 1) & mask) {
    if (words_[h] == code) return false;
    if (words_[h] == 0) {
      words_[h] = code;
      ++used_;
      return true;
    }
  }
}

void CodeSet::grow() {
  std::vector<std::uint64_t> old(words_.size() * 2, 0);
  old.swap(words_);
  const std::size_t mask = words_.size() - 1;
  for (const auto c : old) {
    if (c == 0) continue;
    std::size_t h = splitmix(c) & mask;
    while (words_[h] != 0) h = (h + 1) & mask;
    words_[h] = c;
  }
}

bool CodeSet::insert(const std::string& code) { return bytes_.insert(code).second; }
bool CodeSet::contains(const std::string& code) const { return bytes_.count(code) != 0; }

std::size_t CodeSet::memory_bytes() const { return words_.size() * sizeof(std::uint64_t); }

}  // namespace detail

Matrix GroupClosure::element(std::size_t k) const {
  if (packer.fits64()) return packer.unpack(codes.at(k));
  return packer.unpack_bytes(byte_codes.at(k));
}

bool GroupClosure::contains(const Matrix& m) const {
  const Matrix c = projective ? projective_canonical(m) : m;
  if (packer.fits64()) return members->contains(packer.pack(c));
  return members->contains(packer.pack_bytes(c));
}

Matrix projective_canonical(const Matrix& m) {
  for (const Elem e : m.data()) {
    if (e.v) return e == m.field().one() ? m : scale(m, m.field().inv(e));
  }
  return m;
}

GroupClosure closure(std::span<const Matrix> gens, const ClosureOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "closure needs at least one generator");
  GroupClosure g;
  g.field = gens[0].field();
  g.degree = gens[0].rows();
  g.projective = options.projective;
  std::vector<Matrix> steps;
  for (const auto& m : gens) {
    require_same_field(g.field, m.field());
    if (!m.square() || m.rows() != g.degree) {
      throw Error(ErrorCode::kShapeMismatch, "generators must be square of equal size");
    }
    g.gens.push_back(m);
    steps.push_back(m);
  }
  for (const auto& m : gens) steps.push_back(inverse(m));
  auto blocks = options.blocks.empty() ? std::vector<std::size_t>{g.degree} : options.blocks;
  g.packer = Packer(g.field, std::move(blocks));
  if (g.packer.degree() != g.degree) throw Error(ErrorCode::kShapeMismatch, "block sizes do not sum to N");
  g.members = std::make_shared<detail::CodeSet>(g.packer.fits64() ? g.packer.width() : 65);
  if (g.field.order() <= 256) {
    SmallArith ar(g.field);
    run_bfs(ar, steps, g, options.cap);
  } else {
    WideArith ar(g.field);
    run_bfs(ar, steps, g, options.cap);
  }
  return g;
}

GroupClosure projective_closure(std::span<const Matrix> gens, std::uint64_t cap) {
  ClosureOptions o;
  o.cap = cap;
  o.projective = true;
  return closure(gens, o);
}

const char* to_string(ClassicalKind kind) {
  switch (kind) {
    case ClassicalKind::kGL: return "GL";
    case ClassicalKind::kSL: return "SL";
    case ClassicalKind::kGU: return "GU";
    case ClassicalKind::kSU: return "SU";
    case ClassicalKind::kPGL: return "PGL";
    case ClassicalKind::kPSL: return "PSL";
    case ClassicalKind::kPGU: return "PGU";
    case ClassicalKind::kPSU: return "PSU";
  }
  return "?";
}

BigInt classical_order(ClassicalKind kind, unsigned n, std::uint64_t q) {
  if (n == 0 || q < 2) throw Error(ErrorCode::kInvalidArgument, "classical order needs N >= 1, q >= 2");
  const BigInt bq = q;
  BigInt order = ipow(bq, n * (n - 1) / 2);
  const bool linear = is_linear_kind(kind);
  for (unsigned k = 1; k <= n; ++k) {
    const BigInt qk = ipow(bq, k);
    order *= linear ? qk - 1 : qk - ((k % 2) ? -1 : 1);
  }
  switch (kind) {
    case ClassicalKind::kGL:
    case ClassicalKind::kGU:
      return order;
    case ClassicalKind::kSL:
    case ClassicalKind::kPGL:
      return order / (q - 1);
    case ClassicalKind::kPSL:
      return order / (q - 1) / gcd_u(n, q - 1);
    case ClassicalKind::kSU:
    case ClassicalKind::kPGU:
      return order / (q + 1);
    case ClassicalKind::kPSU:
      return order / (q + 1) / gcd_u(n, q + 1);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown classical group kind");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kContainsSL: return "ContainsSL";
    case Verdict::kContainsSU: return "ContainsSU";
    case Verdict::kInconclusive: return "Inconclusive";
    case Verdict::kCapped: return "Capped";
    case Verdict::kRefuted: return "Refuted";
  }
  return "?";
}

Certificate certify_contains_sl(const GroupClosure& g) {
  Certificate c;
  const auto n = static_cast<unsigned>(g.degree);
  const std::uint64_t q = g.field.order();
  c.route = g.projective ? "projective" : "direct";
  if (g.capped) {
    c.verdict = Verdict::kCapped;
    c.detail = "enumeration stopped at the cap after " + std::to_string(g.order) + " elements";
    return c;
  }
  if (!g.projective) {
    c.target = classical_order(ClassicalKind::kSL, n, q);
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < g.order; ++k) {
      if (det(g.element(k)) == g.field.one()) ++count;
    }
    c.observed = count;
    if (c.observed == c.target) {
      c.verdict = Verdict::kContainsSL;
      c.detail = "det-1 elements number |SL_" + std::to_string(n) + "(" + std::to_string(q) + ")|";
    } else {
      c.verdict = Verdict::kRefuted;
      c.detail = "det-1 subgroup is smaller than SL";
    }
    return c;
  }
  c.observed = g.order;
  const BigInt psl = classical_order(ClassicalKind::kPSL, n, q);
  if (gcd_u(n, q - 1) == 1) {
    c.target = psl;
    if (c.observed == c.target) {
      c.verdict = Verdict::kContainsSL;
      c.detail = "projective image is PGL = PSL (gcd(N, q-1) = 1); SL lifts";
    } else {
      c.verdict = Verdict::kRefuted;
      c.detail = "projective image is a proper subgroup of PSL";
    }
    return c;
  }
  c.target = psl;
  if (c.observed < psl || c.observed % psl != 0) {
    c.verdict = Verdict::kRefuted;
    c.detail = "projective order is not a multiple of |PSL|";
  } else {
    c.verdict = Verdict::kInconclusive;
    c.detail = "gcd(N, q-1) > 1: order equality does not certify PSL; use the direct route";
  }
  return c;
}

Certificate certify_contains_su(const GroupClosure& g, const ExtPair& pair) {
  Certificate c;
  c.route = "direct";
  if (g.capped) {
    c.verdict = Verdict::kCapped;
    c.detail = "enumeration stopped at the cap after " + std::to_string(g.order) + " elements";
    return c;
  }
  if (g.projective) throw Error(ErrorCode::kInvalidArgument, "unitary certification needs a direct closure");
  require_same_field(g.field, pair.top());
  const auto n = static_cast<unsigned>(g.degree);
  const std::uint64_t q0 = pair.base_order();
  c.target = classical_order(ClassicalKind::kSU, n, q0);
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < g.order; ++k) {
    const Matrix m = g.element(k);
    if (!is_isometry(m, pair)) {
      c.verdict = Verdict::kRefuted;
      c.detail = "element " + std::to_string(k) + " is not an isometry of the identity form";
      return c;
    }
    if (det(m) == g.field.one()) ++count;
  }
  c.observed = count;
  if (c.observed == c.target) {
    c.verdict = Verdict::kContainsSU;
    c.detail = "contained in GU_" + std::to_string(n) + "(" + std::to_string(q0) +
               ") with det-1 count |SU_" + std::to_string(n) + "(" + std::to_string(q0) + ")|";
  } else {
    c.verdict = Verdict::kRefuted;
    c.detail = "det-1 subgroup is smaller than SU";
  }
  return c;
}

std::uint64_t det_image(std::span<const Matrix> gens) {
  std::uint64_t l = 1;
  for (const auto& m : gens) l = std::lcm(l, mult_order(m.field(), det(m)));
  return l;
}

std::uint64_t transvection_census(const GroupClosure& g) {
  if (g.capped) throw Error(ErrorCode::kCapExceeded, "census needs an uncapped closure");
  if (g.projective) throw Error(ErrorCode::kInvalidArgument, "census needs a direct closure");
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < g.order; ++k) {
    if (is_transvection(g.element(k))) ++count;
  }
  return count;
}

CensusBounds census_bounds(unsigned n, std::uint64_t q) {
  if (n < 2 || q < 2) throw Error(ErrorCode::kInvalidArgument, "bounds need N >= 2 and q >= 2");
  CensusBounds b;
  b.n = n;
  b.q = q;
  b.k = n / 2;
  const unsigned k = b.k;
  const BigInt bq = q;
  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  b.t_linear = (bq - 1) * pairs;
  b.t_unitary = (bq + 1) * pairs;
  b.tprime_linear = (ipow(bq, k) - 1) * (ipow(bq, k - 1) - 1) / (bq - 1);
  const BigInt mq = -bq;
  b.tprime_unitary = (ipow(mq, k) - 1) * (ipow(mq, k - 1) - 1) / (mq - 1);
  BigInt s1 = 0, s2 = 0;
  for (unsigned i = 0; i < k; ++i) s1 += ipow(bq, i);
  for (unsigned i = 0; i + 1 < k; ++i) s2 += ipow(bq, i);
  const BigInt kk = BigInt(k) * (2 * k - 1);
  b.f_value = s1 * s2 - kk;
  b.h_value = (ipow(mq, k) - 1) * (ipow(mq, k - 1) - 1) / (-(bq + 1) * (bq + 1));
  b.h_margin = b.h_value - kk;
  return b;
}

Matrix swap_matrix(const Field& field, std::size_t n, Elem a, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw Error(ErrorCode::kInvalidArgument, "bad swap indices");
  Matrix m = Matrix::identity(field, n);
  m(i, i) = field.zero();
  m(j, j) = field.zero();
  m(i, j) = a;
  m(j, i) = field.inv(a);
  return m;
}

std::uint64_t monomial_transvection_count(const Field& field, unsigned n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint64_t units = field.order() - 1;
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < n; ++i) tuples *= units;
  std::uint64_t count = 0;
  do {
    for (std::uint64_t t = 0; t < tuples; ++t) {
      Matrix m(field, n, n);
      std::uint64_t rest = t;
      for (unsigned i = 0; i < n; ++i) {
        m(i, perm[i]) = Elem{rest % units + 1};
        rest /= units;
      }
      if (is_transvection(m)) ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

GroupClosure derived_subgroup(const GroupClosure& g) {
  if (g.capped) throw Error(ErrorCode::kCapExceeded, "derived subgroup needs an uncapped closure");
  auto norm = [&](const Matrix& m) { return g.projective ? projective_canonical(m) : m; };
  ClosureOptions opts;
  opts.cap = g.order;
  opts.projective = g.projective;
  opts.blocks = g.packer.blocks();
  std::vector<Matrix> inv;
  for (const auto& x : g.gens) inv.push_back(inverse(x));
  std::vector<Matrix> s;
  for (std::size_t a = 0; a < g.gens.size(); ++a) {
    for (std::size_t b = a + 1; b < g.gens.size(); ++b) {
      const Matrix c = norm(mul(mul(inv[a], inv[b]), mul(g.gens[a], g.gens[b])));
      if (!c.is_identity() && std::find(s.begin(), s.end(), c) == s.end()) s.push_back(c);
    }
  }
  if (s.empty()) {
    const Matrix id = Matrix::identity(g.field, g.degree);
    return closure(std::span<const Matrix>(&id, 1), opts);
  }
  GroupClosure h = closure(s, opts);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < g.gens.size(); ++a) {
      for (std::size_t t = 0; t < s.size(); ++t) {
        const Matrix c = norm(mul(mul(g.gens[a], s[t]), inv[a]));
        if (!h.contains(c)) {
          s.push_back(c);
          h = closure(s, opts);
          changed = true;
        }
      }
    }
  }
  return h;
}

DicksonResult dickson_classify(const GroupClosure& g) {
  if (g.degree != 2 || !g.projective) {
    throw Error(ErrorCode::kInvalidArgument, "Dickson classification needs a projective closure of degree 2");
  }
  if (g.capped) throw Error(ErrorCode::kCapExceeded, "classification needs an uncapped closure");
  DicksonResult r;
  r.order = g.order;
  const GroupClosure d = derived_subgroup(g);
  r.derived_order = d.order;
  r.metabelian = true;
  for (std::size_t a = 0; a < d.gens.size() && r.metabelian; ++a) {
    for (std::size_t b = a + 1; b < d.gens.size(); ++b) {
      if (!(projective_canonical(mul(d.gens[a], d.gens[b])) ==
            projective_canonical(mul(d.gens[b], d.gens[a])))) {
        r.metabelian = false;
        break;
      }
    }
  }
  if (r.metabelian) r.candidates.push_back("AbelianByAbelian");
  if (r.order == 12 && r.derived_order == 4) r.candidates.push_back("A4");
  if (r.order == 24 && r.derived_order == 12) r.candidates.push_back("S4");
  if (r.order == 60 && r.derived_order == 60) r.candidates.push_back("A5");
  const std::uint64_t p = g.field.characteristic();
  std::uint64_t qt = 1;
  for (unsigned j = 1; j <= g.field.degree(); ++j) {
    qt *= p;
    if (g.field.degree() % j != 0) continue;
    if (BigInt(r.order) == classical_order(ClassicalKind::kPSL, 2, qt)) {
      r.candidates.push_back("PSL(" + std::to_string(qt) + ")");
    }
    if (BigInt(r.order) == classical_order(ClassicalKind::kPGL, 2, qt)) {
      r.candidates.push_back("PGL(" + std::to_string(qt) + ")");
    }
  }
  return r;
}

BundleCertification certify_bundle(const RepBundle& bundle, std::uint64_t cap, Route route) {
  BundleCertification out;
  const Field& f = bundle.params.field;
  const auto n = static_cast<unsigned>(bundle.dim);
  out.det_image_order = det_image(bundle.gens);
  if (bundle.rep_case == RepCase::kUnitary) {
    const ExtPair pair = ExtPair::over(f);
    const Unitarized u = unitarize(bundle, pair);
    ClosureOptions o;
    o.cap = cap;
    const GroupClosure g = closure(u.bundle.gens, o);
    out.order = g.order;
    out.capped = g.capped;
    out.certificate = certify_contains_su(g, pair);
    return out;
  }
  bool projective = route == Route::kProjective;
  if (route == Route::kAuto) projective = n >= 2 && gcd_u(n, f.order() - 1) == 1;
  ClosureOptions o;
  o.cap = cap;
  o.projective = projective;
  const GroupClosure g = closure(bundle.gens, o);
  out.order = g.order;
  out.capped = g.capped;
  out.projective = projective;
  out.certificate = certify_contains_sl(g);
  return out;
}

ProductCertificate product_certify(std::span<const RepBundle> bundles, std::uint64_t cap, Route route) {
  ProductCertificate out;
  for (const auto& b : bundles) {
    if (b.params.n != bundles[0].params.n || !(b.params.field == bundles[0].params.field) ||
        b.params.alpha != bundles[0].params.alpha) {
      throw Error(ErrorCode::kInvalidArgument, "bundles must share n, field and alpha");
    }
  }
  for (const auto& b : bundles) out.factors.push_back(certify_bundle(b, cap, route).certificate);
  const Field f = bundles.empty() ? Field() : bundles[0].params.field;
  auto special_order = [&](const RepBundle& b) -> BigInt {
    const auto n = static_cast<unsigned>(b.dim);
    if (b.rep_case == RepCase::kUnitary) {
      return classical_order(ClassicalKind::kSU, n, ExtPair::over(f).base_order());
    }
    return classical_order(ClassicalKind::kSL, n, f.order());
  };
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (std::size_t j = i + 1; j < bundles.size(); ++j) {
      const RepBundle& a = bundles[i];
      const RepBundle& b = bundles[j];
      PairCertificate pc;
      pc.i = i;
      pc.j = j;
      std::vector<Matrix> gens;
      for (std::size_t k = 0; k < a.gens.size(); ++k) gens.push_back(direct_sum(a.gens[k], b.gens[k]));
      ClosureOptions o;
      o.cap = cap;
      o.blocks = {a.dim, b.dim};
      const GroupClosure g = closure(gens, o);
      pc.joint_order = g.order;
      pc.capped = g.capped;
      pc.target = special_order(a) * special_order(b);
      pc.det_linkage = std::lcm(det_image(a.gens), det_image(b.gens));
      if (g.capped) {
        pc.verdict = Verdict::kInconclusive;
        out.pairs.push_back(std::move(pc));
        continue;
      }
      for (std::size_t k = 0; k < g.order; ++k) {
        const Matrix m = g.element(k);
        if (det(m.block(0, 0, a.dim, a.dim)) == f.one() &&
            det(m.block(a.dim, a.dim, b.dim, b.dim)) == f.one()) {
          ++pc.det_one_count;
        }
      }
      pc.consistent = BigInt(pc.joint_order) == pc.target * pc.det_linkage;
      if (BigInt(pc.det_one_count) == pc.target) {
        pc.verdict = a.rep_case == RepCase::kUnitary ? Verdict::kContainsSU : Verdict::kContainsSL;
      } else {
        pc.verdict = Verdict::kRefuted;
      }
      out.pairs.push_back(std::move(pc));
    }
  }
  return out;
}

}  // namespace tlbraid
