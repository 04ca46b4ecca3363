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

// Invariant hermitian forms and conjugation into the standard unitary group.

#include "tlbraid/field.hpp"
#include "tlbraid/linalg.hpp"
#include "tlbraid/rep.hpp"

namespace tlbraid {

struct HermitianForm {
  ExtPair pair;
  Matrix gram;
};

// For every generator, M and eps(M^{-1}) (entrywise) have the same
// characteristic polynomial.
bool eps_self_dual(std::span<const Matrix> gens, const ExtPair& pair);

// P with conj_transpose(M_i^{-1}) P = P M_i for every generator, scaled so
// the first nonzero entry is 1. Throws kIntertwiner unless the solution
// space is one-dimensional.
Matrix solve_intertwiner(std::span<const Matrix> gens, const ExtPair& pair);

// Scales an intertwiner by a Hilbert-90 solution so it becomes hermitian.
HermitianForm hermitian_normalize(const Matrix& raw, const ExtPair& pair);

struct Unitarized {
  RepBundle bundle;  // generators C^{-1} M C
  HermitianForm form;
  Matrix congruence;  // C with conj_transpose(C) P C = I
};

Unitarized unitarize(const RepBundle& bundle, const ExtPair& pair);

// conj_transpose(M) P M = P
bool verify_unitary(const Matrix& m, const HermitianForm& form);

// conj_transpose(M) M = I
bool is_isometry(const Matrix& m, const ExtPair& pair);

}  // namespace tlbraid
