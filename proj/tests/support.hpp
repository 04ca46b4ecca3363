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

// Seeded generators shared by the unit and property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "tlbraid/linalg.hpp"

namespace tlbraid::testing {

using Rng = std::mt19937_64;

inline Elem random_elem(const Field& f, Rng& rng) {
  return {std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng)};
}

inline Elem random_nonzero(const Field& f, Rng& rng) {
  return {std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng)};
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_elem(f, rng);
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

// Small fields used by the property sweeps: prime, binary and odd
// extensions, with and without lookup tables.
inline std::vector<Field> sample_fields() {
  return {Field::make(2, 1), Field::make(7, 1),  Field::make(2, 3),  Field::make(3, 2),
          Field::make(5, 3), Field::make(13, 2), Field::make(3, 7), Field::make(2, 8)};
}

}  // namespace tlbraid::testing
