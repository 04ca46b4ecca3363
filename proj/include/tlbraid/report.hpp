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

// JSON/CSV/text reports shared by the C API and the command-line tool.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlbraid/group.hpp"
#include "tlbraid/rep.hpp"

namespace tlbraid {

enum class ReportFormat { kJson, kCsv, kText };

struct ReportOptions {
  std::uint64_t cap = kDefaultCap;
  Route route = Route::kAuto;
  bool timing = true;
  bool forced = false;
};

struct Report {
  std::string json;
  Verdict verdict = Verdict::kInconclusive;
};

Report certify_report(const RepBundle& bundle, const ReportOptions& options);
Report census_report(const RepBundle& bundle, const ReportOptions& options);
// All valid two-row factors of one n, with pairwise joint closures.
Report product_report(std::span<const RepBundle> bundles, const ReportOptions& options);
std::string analyze_report(const RepBundle& bundle);
std::string bounds_report(unsigned n, std::uint64_t q);

struct ScanField {
  Field field;
  std::vector<Elem> alphas;
};

struct ScanConfig {
  std::vector<ScanField> fields;  // empty: field-free spectrum table
  int n_max = 12;
  std::string check = "spectrum";  // spectrum | relations | irreducible
  bool force = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// One row per (field, alpha, n, r) cell in grid order, as a JSON array.
// Cells run concurrently; output order never depends on scheduling.
std::string scan_report(const ScanConfig& config);

// Re-renders a JSON report (object or array of flat rows).
std::string render(const std::string& json, ReportFormat format);

// 0 certified, 1 refuted, 2 inconclusive or capped.
int exit_code(Verdict v);

// "order:k" (smallest element of multiplicative order k) or an encoded
// element.
Elem resolve_alpha(const Field& field, const std::string& selector);

const char* to_string(Route route);
Route parse_route(const std::string& s);

}  // namespace tlbraid
