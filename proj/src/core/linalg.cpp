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

#include "tlbraid/linalg.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace tlbraid {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kShapeMismatch, what);
}

// Row vectors kept in echelon form: each stored row has pivot 1 and zeros at
// the pivots of earlier rows, so reducing in insertion order is enough.
class EchelonSpan {
 public:
  EchelonSpan(Field field, std::size_t width) : field_(std::move(field)), width_(width) {}

  // Reduces v in place; returns true (and keeps it) if it was independent.
  bool insert(std::vector<Elem>& v) {
    const Field& f = field_;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Elem c = v[pivots_[k]];
      if (c.v == 0) continue;
      const auto& r = rows_[k];
      for (std::size_t j = pivots_[k]; j < width_; ++j) {
        if (r[j].v) v[j] = f.sub(v[j], f.mul(c, r[j]));
      }
    }
    std::size_t piv = 0;
    while (piv < width_ && v[piv].v == 0) ++piv;
    if (piv == width_) return false;
    const Elem inv = f.inv(v[piv]);
    for (std::size_t j = piv; j < width_; ++j) v[j] = f.mul(v[j], inv);
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  const std::vector<Elem>& row(std::size_t k) const { return rows_[k]; }

 private:
  Field field_;
  std::size_t width_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, Elem>>> rows;
};

SparseRows sparse(const Matrix& m) {
  SparseRows s;
  s.rows.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).v) s.rows[i].emplace_back(j, m(i, j));
    }
  }
  return s;
}

std::vector<Elem> apply(const Field& f, const SparseRows& m, const std::vector<Elem>& v) {
  std::vector<Elem> out(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Elem acc{0};
    for (const auto& [j, a] : m.rows[i]) {
      if (v[j].v) acc = f.add(acc, f.mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

std::size_t spin_sparse(const Field& f, const std::vector<SparseRows>& gens,
                        std::vector<Elem> v) {
  const std::size_t n = v.size();
  EchelonSpan span(f, n);
  std::vector<std::vector<Elem>> queue;
  std::vector<Elem> keep = v;
  if (!span.insert(v)) return 0;
  queue.push_back(std::move(keep));
  for (std::size_t head = 0; head < queue.size() && span.size() < n; ++head) {
    for (const auto& g : gens) {
      auto w = apply(f, g, queue[head]);
      auto copy = w;
      if (span.insert(copy)) queue.push_back(std::move(w));
      if (span.size() == n) break;
    }
  }
  return span.size();
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  return scalar(field, n, field.one());
}

Matrix Matrix::scalar(const Field& field, std::size_t n, Elem s) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_codes(const Field& field, std::size_t rows, std::size_t cols,
                          std::span<const std::uint64_t> codes) {
  require_shape(codes.size() == rows * cols, "entry count does not match dimensions");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < codes.size(); ++k) m.data_[k] = field.from_code(codes[k]);
  return m;
}

Matrix Matrix::diagonal(const Field& field, std::span<const Elem> diag) {
  Matrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<std::uint64_t> Matrix::codes() const {
  std::vector<std::uint64_t> out(data_.size());
  for (std::size_t k = 0; k < data_.size(); ++k) out[k] = data_[k].v;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.v == 0; });
}

bool Matrix::is_identity() const {
  auto s = as_scalar();
  return s && *s == field_.one();
}

std::optional<Elem> Matrix::as_scalar() const {
  if (!square() || rows_ == 0) return std::nullopt;
  const Elem s = data_[0];
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? s : Elem{0})) return std::nullopt;
    }
  }
  return s;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require_shape(a.cols() == b.rows(), "product dimension mismatch");
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x.v == 0) continue;
      auto br = b.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        if (br[j].v) out[j] = f.add(out[j], f.mul(x, br[j]));
      }
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "sum dimension mismatch");
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  }
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) { return add(a, neg(b)); }

Matrix scale(const Matrix& a, Elem s) {
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
  }
  return c;
}

Matrix neg(const Matrix& a) {
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().neg(a(i, j));
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix c(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  }
  return c;
}

Matrix shift(const Matrix& a, Elem s) {
  require_shape(a.square(), "shift needs a square matrix");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c(i, i) = a.field().sub(c(i, i), s);
  return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return c;
}

Echelon row_reduce(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a;
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem x = m(i, c);
      if (x.v == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j).v) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
  const Field& f = a.field();
  const Echelon e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(f, free_cols.size(), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t fc = free_cols[t];
    k(t, fc) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(t, e.pivots[r]) = f.neg(e.rref(r, fc));
  }
  // Bring the basis itself into reduced echelon form.
  if (k.rows() == 0) return k;
  Echelon ke = row_reduce(k);
  return ke.rref;
}

std::size_t kernel_dim(const Matrix& a) { return a.cols() - rank(a); }

Matrix inverse(const Matrix& a) {
  require_shape(a.square(), "inverse needs a square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).v == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::kSingular, "matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Elem s = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const Elem x = m(i, c);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m(c, j).v) m(i, j) = f.sub(m(i, j), f.mul(x, m(c, j)));
        if (inv(c, j).v) inv(i, j) = f.sub(inv(i, j), f.mul(x, inv(c, j)));
      }
    }
  }
  return inv;
}

Elem det(const Matrix& a) {
  require_shape(a.square(), "determinant needs a square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Elem d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).v == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const Elem s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem x = f.mul(m(i, c), s);
      if (x.v == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        if (m(c, j).v) m(i, j) = f.sub(m(i, j), f.mul(x, m(c, j)));
      }
    }
  }
  return d;
}

Elem trace(const Matrix& a) {
  require_shape(a.square(), "trace needs a square matrix");
  Elem t{0};
  for (std::size_t i = 0; i < a.rows(); ++i) t = a.field().add(t, a(i, i));
  return t;
}

std::vector<Elem> charpoly(const Matrix& a) {
  require_shape(a.square(), "characteristic polynomial needs a square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k).v == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
    }
    const Elem inv = f.inv(h(k + 1, k));
    for (std::size_t j = k + 2; j < n; ++j) {
      const Elem u = f.mul(h(j, k), inv);
      if (u.v == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(j, c) = f.sub(h(j, c), f.mul(u, h(k + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) = f.add(h(r, k + 1), f.mul(u, h(r, j)));
    }
  }
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t c = m - 1;
    std::vector<Elem> next(m + 1, Elem{0});
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      next[i + 1] = f.add(next[i + 1], p[m - 1][i]);
      next[i] = f.sub(next[i], f.mul(h(c, c), p[m - 1][i]));
    }
    Elem prod = f.one();
    for (std::size_t i = c; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.v == 0) break;
      const Elem coef = f.mul(prod, h(i, c));
      if (coef.v == 0) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) {
        next[t] = f.sub(next[t], f.mul(coef, p[i][t]));
      }
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::size_t algebra_dimension(std::span<const Matrix> gens, std::size_t cap) {
  if (gens.empty()) return 1;
  const Field& f = gens[0].field();
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens) {
    require_same_field(f, g.field());
    require_shape(g.rows() == n && g.cols() == n, "generators must be square of equal size");
  }
  EchelonSpan span(f, n * n);
  std::vector<Matrix> basis;
  auto try_add = [&](const Matrix& m) {
    std::vector<Elem> v = m.data();
    if (!span.insert(v)) return;
    if (span.size() > cap) throw Error(ErrorCode::kCapExceeded, "algebra dimension cap exceeded");
    basis.push_back(m);
  };
  try_add(Matrix::identity(f, n));
  for (std::size_t head = 0; head < basis.size() && basis.size() < n * n; ++head) {
    for (const auto& g : gens) {
      try_add(mul(g, basis[head]));
      if (basis.size() == n * n) break;
    }
  }
  return span.size();
}

std::size_t spin_dimension(std::span<const Matrix> gens, std::span<const Elem> v) {
  if (gens.empty()) {
    return std::any_of(v.begin(), v.end(), [](Elem e) { return e.v != 0; }) ? 1 : 0;
  }
  std::vector<SparseRows> sp;
  for (const auto& g : gens) sp.push_back(sparse(g));
  return spin_sparse(gens[0].field(), sp, std::vector<Elem>(v.begin(), v.end()));
}

Irreducibility absolute_irreducibility(std::span<const Matrix> gens, std::uint64_t seed) {
  if (gens.empty()) return Irreducibility::kUnknown;
  const Field& f = gens[0].field();
  const std::size_t n = gens[0].rows();
  if (n <= 1) return Irreducibility::kAbsolute;
  if (n <= 16) {
    return algebra_dimension(gens) == n * n ? Irreducibility::kAbsolute
                                            : Irreducibility::kReducible;
  }
  if (f.order() > detail::kTableLimit) {
    return algebra_dimension(gens) == n * n ? Irreducibility::kAbsolute
                                            : Irreducibility::kReducible;
  }
  std::vector<SparseRows> sp, spt;
  for (const auto& g : gens) {
    sp.push_back(sparse(g));
    spt.push_back(sparse(transpose(g)));
  }
  std::mt19937_64 rng(seed);
  std::vector<Matrix> words(gens.begin(), gens.end());
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t x = rng() % words.size();
    const std::size_t y = rng() % gens.size();
    words.push_back(mul(words[x], gens[y]));
    Matrix theta(f, n, n);
    for (const auto& w : words) {
      const Elem c = f.from_code(rng() % f.order());
      if (c.v) theta = add(theta, scale(w, c));
    }
    const auto cp = charpoly(theta);
    for (std::uint64_t code = 0; code < f.order(); ++code) {
      Elem acc{0};
      for (std::size_t i = cp.size(); i-- > 0;) acc = f.add(f.mul(acc, Elem{code}), cp[i]);
      if (acc.v != 0) continue;
      const Matrix shifted = shift(theta, Elem{code});
      const Matrix k = kernel(shifted);
      if (k.rows() != 1) break;
      if (spin_sparse(f, sp, std::vector<Elem>(k.row(0).begin(), k.row(0).end())) < n) {
        return Irreducibility::kReducible;
      }
      const Matrix kt = kernel(transpose(shifted));
      if (spin_sparse(f, spt, std::vector<Elem>(kt.row(0).begin(), kt.row(0).end())) < n) {
        return Irreducibility::kReducible;
      }
      return Irreducibility::kAbsolute;
    }
  }
  return Irreducibility::kUnknown;
}

Matrix conj_transpose(const Matrix& a, const ExtPair& pair) {
  require_same_field(a.field(), pair.top());
  Matrix c(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = pair.eps(a(i, j));
  }
  return c;
}

bool is_hermitian(const Matrix& p, const ExtPair& pair) {
  return p.square() && conj_transpose(p, pair) == p;
}

Matrix congruence_to_identity(const Matrix& p, const ExtPair& pair) {
  if (!is_hermitian(p, pair)) throw Error(ErrorCode::kNotHermitian, "form is not hermitian");
  const Field& f = pair.top();
  const std::size_t n = p.rows();
  // h(x, y) = eps(x)^T P y
  auto form = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem acc{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].v == 0) continue;
      Elem row{0};
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].v && p(i, j).v) row = f.add(row, f.mul(p(i, j), y[j]));
      }
      acc = f.add(acc, f.mul(pair.eps(x[i]), row));
    }
    return acc;
  };
  std::vector<std::vector<Elem>> rest;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> e(n, Elem{0});
    e[i] = f.one();
    rest.push_back(std::move(e));
  }
  Matrix c(f, n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = rest.size();
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (form(rest[k], rest[k]).v) {
        pick = k;
        break;
      }
    }
    if (pick == rest.size()) {
      // Every remaining vector is isotropic: combine a non-orthogonal pair.
      bool done = false;
      for (std::size_t j = 0; j < rest.size() && !done; ++j) {
        for (std::size_t k = 0; k < rest.size() && !done; ++k) {
          if (j == k) continue;
          const Elem h = form(rest[j], rest[k]);
          if (h.v == 0) continue;
          for (std::uint64_t code = 1; code < f.order(); ++code) {
            if (pair.trace(f.mul(Elem{code}, h)).v == 0) continue;
            for (std::size_t i = 0; i < n; ++i) {
              rest[j][i] = f.add(rest[j][i], f.mul(Elem{code}, rest[k][i]));
            }
            pick = j;
            done = true;
            break;
          }
        }
      }
      if (!done) throw Error(ErrorCode::kSingular, "hermitian form is degenerate");
    }
    std::vector<Elem> w = std::move(rest[pick]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    const Elem t = form(w, w);
    const Elem x = solve_norm(pair, f.inv(t));
    for (auto& e : w) e = f.mul(x, e);
    for (auto& v : rest) {
      const Elem s = form(w, v);
      if (s.v == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] = f.sub(v[i], f.mul(s, w[i]));
    }
    for (std::size_t i = 0; i < n; ++i) c(i, col) = w[i];
  }
  return c;
}

bool is_transvection(const Matrix& a) {
  if (!a.square()) return false;
  const Matrix d = shift(a, a.field().one());
  return rank(d) == 1 && mul(d, d).is_zero();
}

}  // namespace tlbraid
