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

// Two-row representations of the Hecke algebra H_n(alpha) in seminormal form.

#include <cstdint>
#include <string>
#include <vector>

#include "tlbraid/field.hpp"
#include "tlbraid/linalg.hpp"

namespace tlbraid {

struct RepParams {
  int n = 0;
  int r = 0;
  Field field;
  Elem alpha;
};

enum class RepCase { kLinear, kUnitary };

const char* to_string(RepCase c);

struct SpectrumProfile {
  std::uint64_t a = 0;  // multiplicity of -1
  std::uint64_t b = 0;  // multiplicity of alpha
  std::uint64_t c = 0;  // dimension
};

struct RepBundle {
  RepParams params;
  std::size_t dim = 0;
  std::vector<Matrix> gens;  // R(sigma_1) .. R(sigma_{n-1})
  RepCase rep_case = RepCase::kLinear;
};

// Bit k set when letter k+1 sits in the second row.
using Tableau = std::uint64_t;

// Standard tableaux of shape [n-r, r] in last-letter order: those with n in
// the first row, then those with n in the second row, each recursively.
std::vector<Tableau> tableaux(int n, int r);

// binom(n, r) - binom(n, r-1); zero when [n-r, r] is not a partition.
std::uint64_t dim_two_row(int n, int r);

SpectrumProfile spectrum_profile(int n, int r);

enum class GateClause { kOk, kNotSemisimple, kExcludedOrder };

struct GateResult {
  GateClause clause = GateClause::kOk;
  std::uint64_t e = 0;
  std::string reason;
  bool ok() const { return clause == GateClause::kOk; }
};

GateResult gate(const RepParams& params);

RepCase case_detect(const Field& field, Elem alpha);

// Throws kGateRejected unless force; throws kZeroDivision if a quantum
// integer denominator vanishes.
RepBundle build_rep(const RepParams& params, bool force = false);

// Names of violated relations; empty when all hold.
std::vector<std::string> verify_relations(const RepBundle& bundle);

// Drops R(sigma_{n-1}) and splits into the blocks for [n-r-1, r] and
// [n-r, r-1] (whichever are partitions). Throws kInternal if the
// off-diagonal blocks are not zero.
std::vector<RepBundle> restrict_bundle(const RepBundle& bundle);

}  // namespace tlbraid
