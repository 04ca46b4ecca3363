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

#include "tlbraid/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tlbraid/unitary.hpp"

namespace tlbraid {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms(bool enabled) const {
    if (!enabled) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json big(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

Json params_json(const RepBundle& b, const ReportOptions* o) {
  const Field& f = b.params.field;
  Json p;
  p["p"] = f.characteristic();
  p["d"] = f.degree();
  p["modulus"] = std::vector<std::uint64_t>(f.modulus().begin(), f.modulus().end());
  p["alpha"] = b.params.alpha.v;
  p["e"] = quantum_e(f, b.params.alpha);
  p["n"] = b.params.n;
  p["r"] = b.params.r;
  p["dim"] = b.dim;
  if (o) {
    p["cap"] = o->cap;
    p["route"] = to_string(o->route);
    p["forced"] = o->forced;
  }
  return p;
}

Json bounds_json(unsigned n, std::uint64_t q) {
  if (n < 2) return Json(nullptr);
  const CensusBounds b = census_bounds(n, q);
  Json j;
  j["N"] = b.n;
  j["q"] = b.q;
  j["k"] = b.k;
  j["T_linear"] = big(b.t_linear);
  j["T_unitary"] = big(b.t_unitary);
  j["Tprime_linear"] = big(b.tprime_linear);
  j["Tprime_unitary"] = big(b.tprime_unitary);
  j["f_value"] = big(b.f_value);
  j["h_value"] = big(b.h_value);
  j["h_margin"] = big(b.h_margin);
  return j;
}

std::uint64_t bounds_q(const RepBundle& b) {
  const Field& f = b.params.field;
  return b.rep_case == RepCase::kUnitary ? ExtPair::over(f).base_order() : f.order();
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["route"] = c.route;
  j["target"] = big(c.target);
  j["observed"] = big(c.observed);
  j["detail"] = c.detail;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t shape_a(int n, int r) {
  if (n < 2 || r < 0 || 2 * r > n) return 0;
  return spectrum_profile(n, r).a;
}

std::uint64_t shape_b(int n, int r) {
  if (n < 2 || r < 0 || 2 * r > n) return 0;
  return spectrum_profile(n, r).b;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += scalar_text(v[i]);
    }
    return s;
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

const char* to_string(Route route) {
  switch (route) {
    case Route::kAuto: return "auto";
    case Route::kDirect: return "direct";
    case Route::kProjective: return "projective";
  }
  return "?";
}

Route parse_route(const std::string& s) {
  if (s == "auto") return Route::kAuto;
  if (s == "direct") return Route::kDirect;
  if (s == "projective") return Route::kProjective;
  throw Error(ErrorCode::kInvalidArgument, "unknown route '" + s + "'");
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kContainsSL:
    case Verdict::kContainsSU:
      return 0;
    case Verdict::kRefuted:
      return 1;
    default:
      return 2;
  }
}

Elem resolve_alpha(const Field& field, const std::string& selector) {
  const std::string prefix = "order:";
  if (selector.rfind(prefix, 0) == 0) {
    const std::string k = selector.substr(prefix.size());
    std::uint64_t order = 0;
    try {
      std::size_t used = 0;
      order = std::stoull(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad order selector '" + selector + "'");
    }
    auto e = element_of_order(field, order);
    if (!e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no element of order " + k + " in the field of order " + std::to_string(field.order()));
    }
    return *e;
  }
  std::uint64_t code = 0;
  try {
    std::size_t used = 0;
    if (selector.empty() || selector[0] == '-') throw std::invalid_argument(selector);
    code = std::stoull(selector, &used);
    if (used != selector.size()) throw std::invalid_argument(selector);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "bad alpha '" + selector + "'");
  }
  if (code == 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be nonzero");
  return field.from_code(code);
}

Report certify_report(const RepBundle& bundle, const ReportOptions& options) {
  Stopwatch sw;
  const BundleCertification c = certify_bundle(bundle, options.cap, options.route);
  Json j;
  j["command"] = "certify";
  j["params"] = params_json(bundle, &options);
  j["case"] = to_string(bundle.rep_case);
  j["order"] = c.order;
  j["projective"] = c.projective;
  j["det_image_order"] = c.det_image_order;
  j["transvection_count"] = nullptr;
  j["bounds"] = bounds_json(static_cast<unsigned>(bundle.dim), bounds_q(bundle));
  j["verdict"] = to_string(c.certificate.verdict);
  j["certificate"] = certificate_json(c.certificate);
  j["runtime_ms"] = sw.ms(options.timing);
  j["capped"] = c.capped;
  return {dump(j), c.certificate.verdict};
}

Report census_report(const RepBundle& bundle, const ReportOptions& options) {
  Stopwatch sw;
  const Field& f = bundle.params.field;
  ClosureOptions co;
  co.cap = options.cap;
  Certificate cert;
  GroupClosure g;
  if (bundle.rep_case == RepCase::kUnitary) {
    const ExtPair pair = ExtPair::over(f);
    const Unitarized u = unitarize(bundle, pair);
    g = closure(u.bundle.gens, co);
    cert = certify_contains_su(g, pair);
  } else {
    g = closure(bundle.gens, co);
    cert = certify_contains_sl(g);
  }
  Json j;
  j["command"] = "census";
  j["params"] = params_json(bundle, &options);
  j["case"] = to_string(bundle.rep_case);
  j["order"] = g.order;
  j["projective"] = false;
  j["det_image_order"] = det_image(bundle.gens);
  if (g.capped) {
    j["transvection_count"] = nullptr;
  } else {
    j["transvection_count"] = transvection_census(g);
  }
  j["bounds"] = bounds_json(static_cast<unsigned>(bundle.dim), bounds_q(bundle));
  j["verdict"] = to_string(cert.verdict);
  j["certificate"] = certificate_json(cert);
  j["runtime_ms"] = sw.ms(options.timing);
  j["capped"] = g.capped;
  return {dump(j), cert.verdict};
}

Report product_report(std::span<const RepBundle> bundles, const ReportOptions& options) {
  if (bundles.empty()) throw Error(ErrorCode::kInvalidArgument, "no factors to certify");
  Stopwatch sw;
  const ProductCertificate pc = product_certify(bundles, options.cap, options.route);
  Json j;
  j["command"] = "certify-product";
  Json params = params_json(bundles[0], &options);
  params.erase("r");
  params.erase("dim");
  j["params"] = params;
  j["case"] = to_string(bundles[0].rep_case);
  j["order"] = nullptr;
  j["projective"] = false;
  std::uint64_t link = 1;
  for (const auto& b : bundles) link = std::lcm(link, det_image(b.gens));
  j["det_image_order"] = link;
  j["transvection_count"] = nullptr;
  j["bounds"] = nullptr;
  bool any_refuted = false, all_ok = true, any_capped = false;
  Json factors = Json::array();
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    Json fj;
    fj["r"] = bundles[i].params.r;
    fj["dim"] = bundles[i].dim;
    fj["verdict"] = to_string(pc.factors[i].verdict);
    fj["certificate"] = certificate_json(pc.factors[i]);
    factors.push_back(fj);
    const Verdict v = pc.factors[i].verdict;
    any_refuted |= v == Verdict::kRefuted;
    // SL_1 and SU_1 are trivial, nothing to certify
    if (bundles[i].dim > 1) all_ok &= v == Verdict::kContainsSL || v == Verdict::kContainsSU;
    any_capped |= v == Verdict::kCapped;
  }
  Json pairs = Json::array();
  for (const auto& p : pc.pairs) {
    Json pj;
    pj["r_i"] = bundles[p.i].params.r;
    pj["r_j"] = bundles[p.j].params.r;
    pj["joint_order"] = p.joint_order;
    pj["det_one_count"] = p.det_one_count;
    pj["target"] = big(p.target);
    pj["det_linkage"] = p.det_linkage;
    pj["consistent"] = p.consistent;
    pj["verdict"] = to_string(p.verdict);
    pj["capped"] = p.capped;
    pairs.push_back(pj);
    any_refuted |= p.verdict == Verdict::kRefuted;
    all_ok &= p.verdict == Verdict::kContainsSL || p.verdict == Verdict::kContainsSU;
    any_capped |= p.capped;
  }
  Verdict overall = Verdict::kInconclusive;
  if (any_refuted) {
    overall = Verdict::kRefuted;
  } else if (all_ok) {
    overall = bundles[0].rep_case == RepCase::kUnitary ? Verdict::kContainsSU : Verdict::kContainsSL;
  } else if (any_capped) {
    overall = Verdict::kCapped;
  }
  j["verdict"] = to_string(overall);
  j["factors"] = factors;
  j["pairs"] = pairs;
  j["runtime_ms"] = sw.ms(options.timing);
  j["capped"] = any_capped;
  return {dump(j), overall};
}

std::string analyze_report(const RepBundle& bundle) {
  const Field& f = bundle.params.field;
  const Elem alpha = bundle.params.alpha;
  Json j;
  j["command"] = "analyze";
  j["params"] = params_json(bundle, nullptr);
  j["case"] = to_string(bundle.rep_case);
  const GateResult g = gate(bundle.params);
  Json gj;
  gj["ok"] = g.ok();
  gj["e"] = g.e;
  gj["reason"] = g.reason;
  j["gate"] = gj;
  const SpectrumProfile sp = spectrum_profile(bundle.params.n, bundle.params.r);
  Json sj;
  sj["a"] = sp.a;
  sj["b"] = sp.b;
  sj["c"] = sp.c;
  if (!bundle.gens.empty()) {
    const Matrix& s1 = bundle.gens[0];
    sj["observed_a"] = kernel_dim(add(s1, Matrix::identity(f, bundle.dim)));
    sj["observed_b"] = kernel_dim(shift(s1, alpha));
  }
  j["spectrum"] = sj;
  const auto bad = verify_relations(bundle);
  Json rj;
  rj["ok"] = bad.empty();
  rj["violations"] = bad;
  j["relations"] = rj;
  const Irreducibility irr = absolute_irreducibility(bundle.gens);
  j["absolutely_irreducible"] = irr == Irreducibility::kAbsolute  ? "yes"
                                : irr == Irreducibility::kReducible ? "no"
                                                                    : "unknown";
  j["det_image_order"] = det_image(bundle.gens);
  if (!bundle.gens.empty()) j["det_sigma1"] = det(bundle.gens[0]).v;
  Json restr = Json::array();
  if (bundle.params.n >= 3) {
    for (const auto& b : restrict_bundle(bundle)) {
      Json bj;
      bj["n"] = b.params.n;
      bj["r"] = b.params.r;
      bj["dim"] = b.dim;
      restr.push_back(bj);
    }
  }
  j["restriction"] = restr;
  if (bundle.rep_case == RepCase::kUnitary) {
    j["eps_self_dual"] = eps_self_dual(bundle.gens, ExtPair::over(f));
  }
  return dump(j);
}

std::string bounds_report(unsigned n, std::uint64_t q) {
  Json j;
  j["command"] = "bounds";
  j["bounds"] = bounds_json(n, q);
  return dump(j);
}

namespace {

struct ScanCell {
  const ScanField* field = nullptr;
  std::optional<Elem> alpha;
  int n = 0;
  int r = 0;
};

Json scan_cell(const ScanCell& cell, const ScanConfig& config) {
  const std::string& check = config.check;
  const int n = cell.n;
  const int r = cell.r;
  Json row;
  if (cell.alpha) {
    const Field& f = cell.field->field;
    row["p"] = f.characteristic();
    row["d"] = f.degree();
    row["alpha"] = cell.alpha->v;
    row["e"] = quantum_e(f, *cell.alpha);
  }
  row["n"] = n;
  row["r"] = r;
  const SpectrumProfile sp = spectrum_profile(n, r);
  row["dim"] = sp.c;
  std::string status = "ok";
  std::string detail;
  if (check == "spectrum") {
    row["a"] = sp.a;
    row["b"] = sp.b;
    const bool rec = n < 3 || (sp.a == shape_a(n - 1, r) + shape_a(n - 1, r - 1) &&
                               sp.b == shape_b(n - 1, r) + shape_b(n - 1, r - 1));
    const bool ineq = n < 5 || sp.a > sp.b;
    row["recurrence"] = rec;
    row["a_gt_b"] = ineq;
    if (!rec || !ineq) status = "fail";
    if (cell.alpha) {
      row["observed_a"] = nullptr;
      row["observed_b"] = nullptr;
    }
  }
  if (cell.alpha) {
    const Field& f = cell.field->field;
    const RepParams params{n, r, f, *cell.alpha};
    const GateResult g = gate(params);
    if (!g.ok() && !config.force) {
      status = "gate";
      detail = g.reason;
    } else {
      try {
        const RepBundle b = build_rep(params, config.force);
        if (check == "spectrum") {
          const auto oa = kernel_dim(add(b.gens[0], Matrix::identity(f, b.dim)));
          const auto ob = kernel_dim(shift(b.gens[0], *cell.alpha));
          row["observed_a"] = oa;
          row["observed_b"] = ob;
          if (oa != sp.a || ob != sp.b) status = "fail";
        } else if (check == "relations") {
          const auto bad = verify_relations(b);
          if (!bad.empty()) {
            detail = bad.front();
            status = "fail";
          }
        } else {
          const Irreducibility irr = absolute_irreducibility(b.gens);
          detail = irr == Irreducibility::kAbsolute    ? "absolute"
                   : irr == Irreducibility::kReducible ? "reducible"
                                                       : "unknown";
          if (irr != Irreducibility::kAbsolute) status = "fail";
        }
      } catch (const Error& e) {
        status = "error";
        detail = e.what();
      }
    }
  }
  row["detail"] = detail;
  row["status"] = status;
  return row;
}

}  // namespace

std::string scan_report(const ScanConfig& config) {
  if (config.n_max < 2 || config.n_max > 40) {
    throw Error(ErrorCode::kInvalidArgument, "n-max must lie in [2, 40]");
  }
  const std::string& check = config.check;
  if (check != "spectrum" && check != "relations" && check != "irreducible") {
    throw Error(ErrorCode::kInvalidArgument, "unknown check '" + check + "'");
  }
  for (const auto& sf : config.fields) {
    if (sf.alphas.empty()) throw Error(ErrorCode::kInvalidArgument, "scan field without alpha");
  }
  if (check != "spectrum" && config.fields.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "check '" + check + "' needs a field and alpha");
  }
  std::vector<ScanCell> cells;
  auto add_cells = [&](const ScanField* sf, std::optional<Elem> alpha) {
    for (int n = 2; n <= config.n_max; ++n) {
      for (int r = 0; 2 * r <= n; ++r) cells.push_back({sf, alpha, n, r});
    }
  };
  if (config.fields.empty()) {
    add_cells(nullptr, std::nullopt);
  } else {
    for (const auto& sf : config.fields) {
      for (auto a : sf.alphas) add_cells(&sf, a);
    }
  }

  std::vector<Json> out(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i] = scan_cell(cells[i], config);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json rows = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    rows.push_back(std::move(out[i]));
  }
  return dump(rows);
}

std::string render(const std::string& json, ReportFormat format) {
  if (format == ReportFormat::kJson) return json;
  const Json j = Json::parse(json);
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  if (j.is_array()) {
    for (const auto& r : j) {
      rows.emplace_back();
      flatten(r, "", rows.back());
    }
  } else {
    rows.emplace_back();
    flatten(j, "", rows.back());
  }
  std::ostringstream out;
  if (format == ReportFormat::kText && !j.is_array()) {
    for (const auto& [k, v] : rows[0]) out << k << ": " << v << '\n';
    return out.str();
  }
  // Column set in first-seen order across rows.
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  auto cell = [](const std::vector<std::pair<std::string, std::string>>& r, const std::string& k) {
    for (const auto& [kk, v] : r) {
      if (kk == k) return v;
    }
    return std::string();
  };
  if (format == ReportFormat::kCsv) {
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_field(cols[c]);
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_field(cell(r, cols[c]));
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], cell(r, cols[c]).size());
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cols[c];
  }
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cell(r, cols[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tlbraid
