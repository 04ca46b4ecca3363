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

#include "tlbraid/rep.hpp"

#include <array>
#include <unordered_map>

namespace tlbraid {

namespace {

void require_shape_params(int n, int r) {
  if (n < 2 || r < 0 || 2 * r > n || n > 62) {
    throw Error(ErrorCode::kInvalidArgument,
                "[" + std::to_string(n - r) + "," + std::to_string(r) + "] is not a valid two-row shape");
  }
}

void append_tableaux(int n, int r, std::vector<Tableau>& out, Tableau prefix_bits) {
  // prefix_bits holds letters above n, already placed.
  if (n == 0) {
    out.push_back(prefix_bits);
    return;
  }
  if (2 * r <= n - 1) append_tableaux(n - 1, r, out, prefix_bits);
  if (r >= 1) append_tableaux(n - 1, r - 1, out, prefix_bits | (Tableau{1} << (n - 1)));
}

// Content col - row of every letter.
std::vector<int> contents(Tableau t, int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  std::array<int, 2> len{0, 0};
  for (int k = 0; k < n; ++k) {
    const int row = static_cast<int>((t >> k) & 1);
    c[static_cast<std::size_t>(k)] = len[static_cast<std::size_t>(row)] - row;
    ++len[static_cast<std::size_t>(row)];
  }
  return c;
}

}  // namespace

const char* to_string(RepCase c) { return c == RepCase::kLinear ? "linear" : "unitary"; }

std::vector<Tableau> tableaux(int n, int r) {
  std::vector<Tableau> out;
  if (n < 0 || r < 0 || 2 * r > n) return out;
  append_tableaux(n, r, out, 0);
  return out;
}

std::uint64_t dim_two_row(int n, int r) {
  if (n < 0 || r < 0 || 2 * r > n) return 0;
  auto binom = [](int a, int b) -> std::uint64_t {
    if (b < 0 || b > a) return 0;
    std::uint64_t v = 1;
    for (int i = 1; i <= b; ++i) v = v * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return v;
  };
  return binom(n, r) - binom(n, r - 1);
}

SpectrumProfile spectrum_profile(int n, int r) {
  require_shape_params(n, r);
  SpectrumProfile s;
  s.c = dim_two_row(n, r);
  s.b = dim_two_row(n - 2, r - 1);
  s.a = s.c - s.b;
  return s;
}

GateResult gate(const RepParams& params) {
  GateResult g;
  g.e = quantum_e(params.field, params.alpha);
  if (g.e <= static_cast<std::uint64_t>(params.n)) {
    g.clause = GateClause::kNotSemisimple;
    g.reason = "semisimplicity clause: e = " + std::to_string(g.e) + " <= n = " + std::to_string(params.n);
  } else if (g.e == 2 || g.e == 3 || g.e == 4 || g.e == 5 || g.e == 6 || g.e == 10) {
    g.clause = GateClause::kExcludedOrder;
    g.reason = "excluded-order clause: e = " + std::to_string(g.e) + " lies in the excluded set {2,3,4,5,6,10}";
  }
  return g;
}

RepCase case_detect(const Field& field, Elem alpha) {
  if (alpha.v == 0) throw Error(ErrorCode::kZeroDivision, "alpha must be nonzero");
  const Elem s = field.add(alpha, field.inv(alpha));
  const unsigned da = generated_subfield_degree(field, alpha);
  const unsigned ds = generated_subfield_degree(field, s);
  if (da == ds) return RepCase::kLinear;
  if (da == 2 * ds) return RepCase::kUnitary;
  throw Error(ErrorCode::kInternal, "alpha + 1/alpha generates an unexpected subfield");
}

RepBundle build_rep(const RepParams& params, bool force) {
  require_shape_params(params.n, params.r);
  const Field& f = params.field;
  const Elem alpha = params.alpha;
  if (alpha.v == 0) throw Error(ErrorCode::kZeroDivision, "alpha must be nonzero");
  const GateResult g = gate(params);
  if (!g.ok() && !force) throw Error(ErrorCode::kGateRejected, g.reason);

  const int n = params.n;
  const auto tabs = tableaux(n, params.r);
  const std::size_t dim = tabs.size();
  std::unordered_map<Tableau, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(tabs[k], k);
  std::vector<std::vector<int>> cont;
  cont.reserve(dim);
  for (auto t : tabs) cont.push_back(contents(t, n));

  auto qint = [&](int m) { return quantum_integer(f, alpha, m); };
  auto checked_inv = [&](Elem x, int m) {
    if (x.v == 0) {
      throw Error(ErrorCode::kZeroDivision,
                  "quantum integer [" + std::to_string(m) + "] vanishes");
    }
    return f.inv(x);
  };
  // alpha^rho / [rho]
  auto diag_entry = [&](int rho) { return f.mul(f.powi(alpha, rho), checked_inv(qint(rho), rho)); };

  RepBundle bundle;
  bundle.params = params;
  bundle.dim = dim;
  bundle.rep_case = case_detect(f, alpha);
  for (int i = 1; i < n; ++i) {
    Matrix m(f, dim, dim);
    const int li = i - 1;  // bit index of letter i
    for (std::size_t t = 0; t < dim; ++t) {
      const auto& c = cont[t];
      const int rho = c[static_cast<std::size_t>(li)] - c[static_cast<std::size_t>(li + 1)];
      m(t, t) = diag_entry(rho);
      if (rho == 1 || rho == -1) continue;
      const Tableau tt = tabs[t];
      const Tableau bi = (tt >> li) & 1, bj = (tt >> (li + 1)) & 1;
      const Tableau swapped = (tt & ~((Tableau{3}) << li)) | (bj << li) | (bi << (li + 1));
      const std::size_t s = index.at(swapped);
      if (bi == 0) {
        m(s, t) = f.one();
      } else {
        const Elem num = f.mul(alpha, f.mul(qint(rho + 1), qint(rho - 1)));
        const Elem den = checked_inv(f.mul(qint(rho), qint(rho)), rho);
        m(s, t) = f.mul(num, den);
      }
    }
    bundle.gens.push_back(std::move(m));
  }
  return bundle;
}

std::vector<std::string> verify_relations(const RepBundle& bundle) {
  std::vector<std::string> bad;
  const auto& g = bundle.gens;
  const Field& f = bundle.params.field;
  const Elem alpha = bundle.params.alpha;
  const std::size_t n = bundle.dim;
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Matrix lhs = mul(add(g[i], id), shift(g[i], alpha));
    if (!lhs.is_zero()) bad.push_back("quadratic " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const Matrix ab = mul(g[i], g[i + 1]);
    const Matrix ba = mul(g[i + 1], g[i]);
    const Matrix aba = mul(ab, g[i]);
    const Matrix bab = mul(g[i + 1], ab);
    if (!(aba == bab)) bad.push_back("braid " + std::to_string(i + 1));
    Matrix tl = add(bab, ab);
    tl = add(tl, ba);
    tl = add(tl, g[i]);
    tl = add(tl, g[i + 1]);
    tl = add(tl, id);
    if (!tl.is_zero()) bad.push_back("temperley-lieb " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 2; j < g.size(); ++j) {
      if (!(mul(g[i], g[j]) == mul(g[j], g[i]))) {
        bad.push_back("commute " + std::to_string(i + 1) + " " + std::to_string(j + 1));
      }
    }
  }
  return bad;
}

std::vector<RepBundle> restrict_bundle(const RepBundle& bundle) {
  const int n = bundle.params.n;
  const int r = bundle.params.r;
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "restriction needs n >= 3");
  const std::size_t d1 = dim_two_row(n - 1, r);
  const std::size_t d2 = dim_two_row(n - 1, r - 1);
  if (d1 + d2 != bundle.dim) throw Error(ErrorCode::kInternal, "block sizes do not add up");
  std::vector<RepBundle> out;
  auto make = [&](int rr, std::size_t off, std::size_t d) {
    RepBundle b;
    b.params = bundle.params;
    b.params.n = n - 1;
    b.params.r = rr;
    b.dim = d;
    b.rep_case = bundle.rep_case;
    for (std::size_t i = 0; i + 1 < bundle.gens.size(); ++i) {
      b.gens.push_back(bundle.gens[i].block(off, off, d, d));
    }
    out.push_back(std::move(b));
  };
  for (std::size_t i = 0; i + 1 < bundle.gens.size(); ++i) {
    const Matrix& m = bundle.gens[i];
    if (d1 && d2 && (!m.block(0, d1, d1, d2).is_zero() || !m.block(d1, 0, d2, d1).is_zero())) {
      throw Error(ErrorCode::kInternal, "restriction does not split into blocks");
    }
  }
  if (d1) make(r, 0, d1);
  if (d2) make(r - 1, d1, d2);
  return out;
}

}  // namespace tlbraid
