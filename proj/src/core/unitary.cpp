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

#include "tlbraid/unitary.hpp"

namespace tlbraid {

namespace {

Matrix eps_entries(const Matrix& m, const ExtPair& pair) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = pair.eps(m(i, j));
  }
  return out;
}

}  // namespace

bool eps_self_dual(std::span<const Matrix> gens, const ExtPair& pair) {
  for (const auto& m : gens) {
    if (charpoly(m) != charpoly(eps_entries(inverse(m), pair))) return false;
  }
  return true;
}

Matrix solve_intertwiner(std::span<const Matrix> gens, const ExtPair& pair) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "no generators");
  const Field& f = pair.top();
  const std::size_t n = gens[0].rows();
  const std::size_t unknowns = n * n;
  std::vector<Matrix> lhs;
  for (const auto& m : gens) {
    require_same_field(f, m.field());
    lhs.push_back(conj_transpose(inverse(m), pair));
  }
  // Unknown (k, l) of P sits at index k * n + l. Equations are added until
  // the solution space is one-dimensional; the candidate is then checked
  // against the full system.
  std::vector<std::vector<Elem>> rows;
  std::vector<std::size_t> pivots;
  auto insert = [&](std::vector<Elem> v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Elem c = v[pivots[k]];
      if (c.v == 0) continue;
      for (std::size_t j = pivots[k]; j < unknowns; ++j) {
        if (rows[k][j].v) v[j] = f.sub(v[j], f.mul(c, rows[k][j]));
      }
    }
    std::size_t piv = 0;
    while (piv < unknowns && v[piv].v == 0) ++piv;
    if (piv == unknowns) return;
    const Elem inv = f.inv(v[piv]);
    for (std::size_t j = piv; j < unknowns; ++j) v[j] = f.mul(v[j], inv);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
  };
  for (std::size_t g = 0; g < gens.size() && rows.size() + 1 < unknowns; ++g) {
    const Matrix& a = lhs[g];
    const Matrix& m = gens[g];
    for (std::size_t i = 0; i < n && rows.size() + 1 < unknowns; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> eq(unknowns, Elem{0});
        for (std::size_t k = 0; k < n; ++k) {
          eq[k * n + j] = f.add(eq[k * n + j], a(i, k));
          eq[i * n + k] = f.sub(eq[i * n + k], m(k, j));
        }
        insert(std::move(eq));
        if (rows.size() + 1 >= unknowns) break;
      }
    }
  }
  if (rows.size() + 1 < unknowns) {
    throw Error(ErrorCode::kIntertwiner,
                "intertwiner space has dimension " + std::to_string(unknowns - rows.size()) +
                    "; the representation is not absolutely irreducible");
  }
  if (rows.size() == unknowns) {
    throw Error(ErrorCode::kIntertwiner,
                "no invariant sesquilinear form; the representation is not eps-self-dual");
  }
  Matrix sys(f, rows.size(), unknowns);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < unknowns; ++j) sys(k, j) = rows[k][j];
  }
  const Matrix ker = kernel(sys);
  Matrix p(f, n, n);
  for (std::size_t k = 0; k < unknowns; ++k) p(k / n, k % n) = ker(0, k);
  Elem lead{0};
  for (const Elem e : p.data()) {
    if (e.v) {
      lead = e;
      break;
    }
  }
  p = scale(p, f.inv(lead));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!(mul(lhs[g], p) == mul(p, gens[g]))) {
      throw Error(ErrorCode::kIntertwiner,
                  "no invariant sesquilinear form; the representation is not eps-self-dual");
    }
  }
  return p;
}

HermitianForm hermitian_normalize(const Matrix& raw, const ExtPair& pair) {
  const Field& f = pair.top();
  const Matrix ratio = mul(inverse(conj_transpose(raw, pair)), raw);
  const auto mu = ratio.as_scalar();
  if (!mu) throw Error(ErrorCode::kIntertwiner, "intertwiner is not hermitian up to a scalar");
  if (pair.norm(*mu) != f.one()) throw Error(ErrorCode::kNormNotOne, "ratio scalar has norm != 1");
  const Elem h90 = hilbert90_solve(pair, *mu);
  HermitianForm form{pair, scale(raw, h90)};
  if (!is_hermitian(form.gram, pair)) {
    throw Error(ErrorCode::kInternal, "normalized form is not hermitian");
  }
  return form;
}

Unitarized unitarize(const RepBundle& bundle, const ExtPair& pair) {
  require_same_field(bundle.params.field, pair.top());
  if (!eps_self_dual(bundle.gens, pair)) {
    throw Error(ErrorCode::kIntertwiner, "generator spectra are not eps-self-dual");
  }
  const Matrix raw = solve_intertwiner(bundle.gens, pair);
  HermitianForm form = hermitian_normalize(raw, pair);
  Matrix c = congruence_to_identity(form.gram, pair);
  const Matrix cinv = inverse(c);
  Unitarized out{bundle, std::move(form), c};
  for (auto& g : out.bundle.gens) {
    g = mul(cinv, mul(g, c));
    if (!is_isometry(g, pair)) throw Error(ErrorCode::kInternal, "conjugated generator is not unitary");
  }
  return out;
}

bool verify_unitary(const Matrix& m, const HermitianForm& form) {
  if (!m.square() || m.rows() != form.gram.rows()) return false;
  return mul(conj_transpose(m, form.pair), mul(form.gram, m)) == form.gram;
}

bool is_isometry(const Matrix& m, const ExtPair& pair) {
  return m.square() && mul(conj_transpose(m, pair), m).is_identity();
}

}  // namespace tlbraid
