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

#include "tlbraid/textio.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tlbraid {

namespace {

std::string expect_word(std::istream& in, const char* what) {
  std::string w;
  if (!(in >> w)) throw Error(ErrorCode::kParse, std::string("unexpected end of input, expected ") + what);
  return w;
}

std::uint64_t read_u64(std::istream& in, const char* what) {
  const std::string w = expect_word(in, what);
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (w.empty() || w[0] == '-') throw std::invalid_argument(w);
    v = std::stoull(w, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, std::string("expected ") + what + ", got '" + w + "'");
  }
  if (used != w.size()) throw Error(ErrorCode::kParse, std::string("expected ") + what + ", got '" + w + "'");
  return v;
}

void expect_tag(std::istream& in, const char* tag) {
  const std::string w = expect_word(in, tag);
  if (w != tag) throw Error(ErrorCode::kParse, std::string("expected ") + tag + ", got '" + w + "'");
}

}  // namespace

Field read_field_header(std::istream& in) {
  expect_tag(in, "GF");
  const std::uint64_t p = read_u64(in, "characteristic");
  const std::uint64_t d = read_u64(in, "degree");
  if (d == 0 || d > 64) throw Error(ErrorCode::kParse, "bad extension degree");
  std::vector<std::uint64_t> mod(d + 1);
  for (auto& c : mod) c = read_u64(in, "modulus coefficient");
  return Field::make(p, static_cast<unsigned>(d), mod);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << "MAT " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).v;
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in, const Field& field) {
  expect_tag(in, "MAT");
  const std::uint64_t rows = read_u64(in, "row count");
  const std::uint64_t cols = read_u64(in, "column count");
  if (rows == 0 || cols == 0 || rows * cols > (std::uint64_t{1} << 26)) {
    throw Error(ErrorCode::kParse, "bad matrix dimensions");
  }
  std::vector<std::uint64_t> codes(rows * cols);
  for (auto& c : codes) {
    c = read_u64(in, "matrix entry");
    if (c >= field.order()) throw Error(ErrorCode::kParse, "matrix entry out of range");
  }
  return Matrix::from_codes(field, rows, cols, codes);
}

std::string write_bundle(const RepBundle& bundle) {
  std::ostringstream out;
  out << bundle.params.field.header() << '\n';
  out << "REP " << bundle.params.n << ' ' << bundle.params.r << ' ' << bundle.params.alpha.v << '\n';
  for (const auto& g : bundle.gens) write_matrix(out, g);
  return out.str();
}

RepBundle read_bundle(const std::string& text) {
  std::istringstream in(text);
  RepBundle b;
  b.params.field = read_field_header(in);
  expect_tag(in, "REP");
  const std::uint64_t n = read_u64(in, "n");
  const std::uint64_t r = read_u64(in, "r");
  if (n < 2 || n > 62 || 2 * r > n) throw Error(ErrorCode::kParse, "REP line does not describe a two-row shape");
  b.params.n = static_cast<int>(n);
  b.params.r = static_cast<int>(r);
  const std::uint64_t a = read_u64(in, "alpha");
  if (a == 0 || a >= b.params.field.order()) throw Error(ErrorCode::kParse, "alpha out of range");
  b.params.alpha = Elem{a};
  b.dim = dim_two_row(b.params.n, b.params.r);
  b.rep_case = case_detect(b.params.field, b.params.alpha);
  for (int i = 1; i < b.params.n; ++i) {
    Matrix m = read_matrix(in, b.params.field);
    if (m.rows() != b.dim || m.cols() != b.dim) {
      throw Error(ErrorCode::kShapeMismatch, "generator size does not match c(n, r)");
    }
    b.gens.push_back(std::move(m));
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::kParse, "trailing data after the last matrix");
  return b;
}

std::string write_unitarized(const Unitarized& u) {
  std::ostringstream out;
  out << write_bundle(u.bundle);
  out << "FORM\n";
  write_matrix(out, u.form.gram);
  out << "CONGRUENCE\n";
  write_matrix(out, u.congruence);
  return out.str();
}

}  // namespace tlbraid
