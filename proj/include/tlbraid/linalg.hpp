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

// Dense exact matrices over a Field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tlbraid/field.hpp"

namespace tlbraid {

class Matrix {
 public:
  Matrix() = default;
  // Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_codes(const Field& field, std::size_t rows, std::size_t cols,
                           std::span<const std::uint64_t> codes);
  static Matrix diagonal(const Field& field, std::span<const Elem> diag);
  static Matrix scalar(const Field& field, std::size_t n, Elem s);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<std::uint64_t> codes() const;

  bool is_zero() const;
  bool is_identity() const;
  // Some scalar multiple of the identity; returns the scalar.
  std::optional<Elem> as_scalar() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem s);
Matrix neg(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix inverse(const Matrix& a);
Elem det(const Matrix& a);
Elem trace(const Matrix& a);
std::size_t rank(const Matrix& a);
// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
// a - s*I
Matrix shift(const Matrix& a, Elem s);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form, first-nonzero pivoting.
Echelon row_reduce(const Matrix& a);

// Right null space. Rows of the result form a basis in reduced echelon form;
// an empty (0 x cols) matrix when the kernel is trivial.
Matrix kernel(const Matrix& a);
std::size_t kernel_dim(const Matrix& a);

// Characteristic polynomial det(X - A), ascending coefficients, monic.
std::vector<Elem> charpoly(const Matrix& a);

// Dimension of the unital algebra spanned by words in gens. Throws
// kCapExceeded once more than cap basis elements have been found.
std::size_t algebra_dimension(std::span<const Matrix> gens, std::size_t cap = 1u << 20);

// Dimension of the smallest subspace containing v and stable under gens
// (gens act on column vectors).
std::size_t spin_dimension(std::span<const Matrix> gens, std::span<const Elem> v);

enum class Irreducibility { kAbsolute, kReducible, kUnknown };

// Absolute irreducibility. Small degrees use the algebra dimension; larger
// ones use Norton's criterion with seeded random algebra elements.
Irreducibility absolute_irreducibility(std::span<const Matrix> gens, std::uint64_t seed = 1);

// Entrywise eps, then transpose.
Matrix conj_transpose(const Matrix& a, const ExtPair& pair);
bool is_hermitian(const Matrix& p, const ExtPair& pair);

// C with conj_transpose(C) * P * C = I for hermitian nonsingular P.
Matrix congruence_to_identity(const Matrix& p, const ExtPair& pair);

// rank(A - I) = 1 and (A - I)^2 = 0.
bool is_transvection(const Matrix& a);

}  // namespace tlbraid
