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

#include "tlbraid/tlbraid.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "tlbraid/group.hpp"
#include "tlbraid/report.hpp"
#include "tlbraid/textio.hpp"
#include "tlbraid/unitary.hpp"

struct tlb_field {
  tlbraid::Field field;
};

struct tlb_bundle {
  tlbraid::RepBundle bundle;
};

namespace {

thread_local std::string g_last_error;

template <class F>
tlb_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return TLB_OK;
  } catch (const tlbraid::Error& e) {
    g_last_error = e.what();
    return static_cast<tlb_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TLB_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TLB_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw tlbraid::Error(tlbraid::ErrorCode::kInvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

tlbraid::ReportFormat to_format(tlb_format f) {
  switch (f) {
    case TLB_FORMAT_JSON: return tlbraid::ReportFormat::kJson;
    case TLB_FORMAT_CSV: return tlbraid::ReportFormat::kCsv;
    case TLB_FORMAT_TEXT: return tlbraid::ReportFormat::kText;
  }
  throw tlbraid::Error(tlbraid::ErrorCode::kInvalidArgument, "unknown format");
}

tlbraid::ReportOptions to_options(const tlb_run_options* o) {
  tlbraid::ReportOptions r;
  if (!o) return r;
  r.cap = o->cap;
  r.timing = o->timing != 0;
  r.forced = o->forced != 0;
  switch (o->route) {
    case TLB_ROUTE_AUTO: r.route = tlbraid::Route::kAuto; break;
    case TLB_ROUTE_DIRECT: r.route = tlbraid::Route::kDirect; break;
    case TLB_ROUTE_PROJECTIVE: r.route = tlbraid::Route::kProjective; break;
    default: throw tlbraid::Error(tlbraid::ErrorCode::kInvalidArgument, "unknown route");
  }
  return r;
}

tlb_verdict to_c(tlbraid::Verdict v) {
  switch (v) {
    case tlbraid::Verdict::kContainsSL: return TLB_VERDICT_CONTAINS_SL;
    case tlbraid::Verdict::kContainsSU: return TLB_VERDICT_CONTAINS_SU;
    case tlbraid::Verdict::kInconclusive: return TLB_VERDICT_INCONCLUSIVE;
    case tlbraid::Verdict::kCapped: return TLB_VERDICT_CAPPED;
    case tlbraid::Verdict::kRefuted: return TLB_VERDICT_REFUTED;
  }
  return TLB_VERDICT_INCONCLUSIVE;
}

tlbraid::Elem alpha_of(const tlbraid::Field& f, uint64_t alpha) {
  require(alpha != 0, "alpha must be nonzero");
  return f.from_code(alpha);
}

void emit_report(const tlbraid::Report& r, const tlb_run_options* o, char** out, tlb_verdict* verdict) {
  const tlb_format fmt = o ? o->format : TLB_FORMAT_JSON;
  *out = dup(tlbraid::render(r.json, to_format(fmt)));
  if (verdict) *verdict = to_c(r.verdict);
}

}  // namespace

extern "C" {

void tlb_run_options_init(tlb_run_options* options) {
  if (!options) return;
  options->cap = tlbraid::kDefaultCap;
  options->route = TLB_ROUTE_AUTO;
  options->timing = 1;
  options->forced = 0;
  options->format = TLB_FORMAT_JSON;
}

const char* tlb_version(void) { return "0.1.0"; }

const char* tlb_status_name(tlb_status status) {
  if (status == TLB_OK) return "ok";
  if (status == TLB_OUT_OF_MEMORY) return "out of memory";
  if (status < TLB_INVALID_ARGUMENT || status > TLB_INTERNAL) return "unknown status";
  return tlbraid::to_string(static_cast<tlbraid::ErrorCode>(static_cast<int>(status)));
}

const char* tlb_last_error(void) { return g_last_error.c_str(); }

void tlb_string_free(char* s) { std::free(s); }

int tlb_verdict_exit_code(tlb_verdict verdict) {
  switch (verdict) {
    case TLB_VERDICT_CONTAINS_SL:
    case TLB_VERDICT_CONTAINS_SU:
      return 0;
    case TLB_VERDICT_REFUTED:
      return 1;
    default:
      return 2;
  }
}

const char* tlb_verdict_name(tlb_verdict verdict) {
  switch (verdict) {
    case TLB_VERDICT_CONTAINS_SL: return "ContainsSL";
    case TLB_VERDICT_CONTAINS_SU: return "ContainsSU";
    case TLB_VERDICT_INCONCLUSIVE: return "Inconclusive";
    case TLB_VERDICT_CAPPED: return "Capped";
    case TLB_VERDICT_REFUTED: return "Refuted";
  }
  return "?";
}

tlb_status tlb_field_create(uint64_t p, uint32_t d, const uint64_t* modulus, size_t modulus_len,
                            tlb_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    std::optional<std::vector<uint64_t>> mod;
    if (modulus) mod.emplace(modulus, modulus + modulus_len);
    auto* h = new tlb_field{tlbraid::Field::make(p, d, mod)};
    *out = h;
  });
}

void tlb_field_destroy(tlb_field* field) { delete field; }

tlb_status tlb_field_header(const tlb_field* field, char** out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = dup(field->field.header());
  });
}

tlb_status tlb_field_order(const tlb_field* field, uint64_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = field->field.order();
  });
}

tlb_status tlb_field_resolve_alpha(const tlb_field* field, const char* selector, uint64_t* out) {
  return guarded([&] {
    require(field && selector && out, "null argument");
    *out = tlbraid::resolve_alpha(field->field, selector).v;
  });
}

tlb_status tlb_quantum_e(const tlb_field* field, uint64_t alpha, uint64_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = tlbraid::quantum_e(field->field, alpha_of(field->field, alpha));
  });
}

tlb_status tlb_gate(const tlb_field* field, int n, uint64_t alpha, char** reason_out) {
  return guarded([&] {
    require(field != nullptr, "null field");
    const tlbraid::RepParams params{n, 0, field->field, alpha_of(field->field, alpha)};
    const tlbraid::GateResult g = tlbraid::gate(params);
    if (reason_out) *reason_out = dup(g.reason);
    if (!g.ok()) throw tlbraid::Error(tlbraid::ErrorCode::kGateRejected, g.reason);
  });
}

tlb_status tlb_bundle_build(const tlb_field* field, int n, int r, uint64_t alpha, int force, tlb_bundle** out) {
  return guarded([&] {
    require(field && out, "null argument");
    const tlbraid::RepParams params{n, r, field->field, alpha_of(field->field, alpha)};
    *out = new tlb_bundle{tlbraid::build_rep(params, force != 0)};
  });
}

tlb_status tlb_bundle_read(const char* text, tlb_bundle** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new tlb_bundle{tlbraid::read_bundle(text)};
  });
}

void tlb_bundle_destroy(tlb_bundle* bundle) { delete bundle; }

tlb_status tlb_bundle_write(const tlb_bundle* bundle, char** out) {
  return guarded([&] {
    require(bundle && out, "null argument");
    *out = dup(tlbraid::write_bundle(bundle->bundle));
  });
}

tlb_status tlb_bundle_dim(const tlb_bundle* bundle, size_t* out) {
  return guarded([&] {
    require(bundle && out, "null argument");
    *out = bundle->bundle.dim;
  });
}

tlb_status tlb_bundle_generator_count(const tlb_bundle* bundle, size_t* out) {
  return guarded([&] {
    require(bundle && out, "null argument");
    *out = bundle->bundle.gens.size();
  });
}

tlb_status tlb_bundle_generator(const tlb_bundle* bundle, size_t index, uint64_t* entries, size_t len) {
  return guarded([&] {
    require(bundle && entries, "null argument");
    const auto& gens = bundle->bundle.gens;
    require(index < gens.size(), "generator index out of range");
    const auto codes = gens[index].codes();
    if (len != codes.size()) throw tlbraid::Error(tlbraid::ErrorCode::kShapeMismatch, "buffer length must be dim^2");
    std::copy(codes.begin(), codes.end(), entries);
  });
}

tlb_status tlb_analyze(const tlb_bundle* bundle, tlb_format format, char** out) {
  return guarded([&] {
    require(bundle && out, "null argument");
    *out = dup(tlbraid::render(tlbraid::analyze_report(bundle->bundle), to_format(format)));
  });
}

tlb_status tlb_unitarize(const tlb_bundle* bundle, char** out) {
  return guarded([&] {
    require(bundle && out, "null argument");
    const auto& b = bundle->bundle;
    if (b.params.field.degree() % 2 != 0) {
      throw tlbraid::Error(tlbraid::ErrorCode::kInvalidArgument,
                           "unitarization needs a field of even degree");
    }
    const auto pair = tlbraid::ExtPair::over(b.params.field);
    *out = dup(tlbraid::write_unitarized(tlbraid::unitarize(b, pair)));
  });
}

tlb_status tlb_certify(const tlb_bundle* bundle, const tlb_run_options* options, char** out,
                       tlb_verdict* verdict) {
  return guarded([&] {
    require(bundle && out, "null argument");
    emit_report(tlbraid::certify_report(bundle->bundle, to_options(options)), options, out, verdict);
  });
}

tlb_status tlb_census(const tlb_bundle* bundle, const tlb_run_options* options, char** out,
                      tlb_verdict* verdict) {
  return guarded([&] {
    require(bundle && out, "null argument");
    emit_report(tlbraid::census_report(bundle->bundle, to_options(options)), options, out, verdict);
  });
}

tlb_status tlb_certify_product(const tlb_field* field, int n, uint64_t alpha, int force,
                               const tlb_run_options* options, char** out, tlb_verdict* verdict) {
  return guarded([&] {
    require(field && out, "null argument");
    std::vector<tlbraid::RepBundle> bundles;
    for (int r = 0; 2 * r <= n; ++r) {
      bundles.push_back(
          tlbraid::build_rep({n, r, field->field, alpha_of(field->field, alpha)}, force != 0));
    }
    emit_report(tlbraid::product_report(bundles, to_options(options)), options, out, verdict);
  });
}

tlb_status tlb_bounds(uint32_t n, uint64_t q, tlb_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup(tlbraid::render(tlbraid::bounds_report(n, q), to_format(format)));
  });
}

tlb_status tlb_scan(const tlb_field* const* fields, size_t n_fields, const char* alpha_selectors, int n_max,
                    const char* check, int force, tlb_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(n_fields == 0 || fields != nullptr, "null field array");
    tlbraid::ScanConfig cfg;
    for (size_t i = 0; i < n_fields; ++i) {
      require(fields[i] != nullptr, "null field");
      require(alpha_selectors && *alpha_selectors, "scan over a field needs alpha selectors");
      tlbraid::ScanField sf{fields[i]->field, {}};
      std::string list = alpha_selectors;
      size_t pos = 0;
      while (pos <= list.size()) {
        const size_t comma = std::min(list.find(',', pos), list.size());
        const std::string sel = list.substr(pos, comma - pos);
        require(!sel.empty(), "empty alpha selector");
        sf.alphas.push_back(tlbraid::resolve_alpha(sf.field, sel));
        pos = comma + 1;
      }
      cfg.fields.push_back(std::move(sf));
    }
    cfg.n_max = n_max;
    cfg.check = check ? check : "spectrum";
    cfg.force = force != 0;
    *out = dup(tlbraid::render(tlbraid::scan_report(cfg), to_format(format)));
  });
}

}  // extern "C"
