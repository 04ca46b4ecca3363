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

// tlbraid command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tlbraid/tlbraid.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitGate = 65;
constexpr int kExitSoftware = 70;

struct Failure {
  tlb_status status;
  std::string message;
};

void check(tlb_status s) {
  if (s != TLB_OK) throw Failure{s, tlb_last_error()};
}

void usage(const std::string& message) { throw Failure{TLB_INVALID_ARGUMENT, message}; }

struct CString {
  char* p = nullptr;
  ~CString() { tlb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct FieldDeleter {
  void operator()(tlb_field* f) const { tlb_field_destroy(f); }
};
struct BundleDeleter {
  void operator()(tlb_bundle* b) const { tlb_bundle_destroy(b); }
};
using FieldPtr = std::unique_ptr<tlb_field, FieldDeleter>;
using BundlePtr = std::unique_ptr<tlb_bundle, BundleDeleter>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, 10);
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    usage(std::string("bad ") + what + " '" + s + "'");
  }
  return 0;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("TLBRAID_CAP"); env && *env) return parse_u64(env, "TLBRAID_CAP");
  return std::uint64_t{1} << 28;
}

struct Config {
  std::string p;  // comma list for scan
  std::uint32_t d = 1;
  std::string modulus;
  std::string alpha;
  std::optional<int> n;
  std::optional<int> r;
  std::uint64_t cap = 0;
  bool force = false;
  std::string output;
  std::string input;
  std::string format = "json";
  std::string route = "auto";
  bool no_timing = false;
  bool product = false;
  int n_max = 12;
  std::string check = "spectrum";
  std::uint32_t bounds_n = 0;
  std::uint64_t bounds_q = 0;
};

tlb_format to_format(const std::string& f) {
  if (f == "json") return TLB_FORMAT_JSON;
  if (f == "csv") return TLB_FORMAT_CSV;
  return TLB_FORMAT_TEXT;
}

tlb_route to_route(const std::string& r) {
  if (r == "direct") return TLB_ROUTE_DIRECT;
  if (r == "projective") return TLB_ROUTE_PROJECTIVE;
  return TLB_ROUTE_AUTO;
}

FieldPtr make_field(const std::string& p, std::uint32_t d, const std::string& modulus) {
  if (p.empty()) usage("--p is required");
  std::vector<std::uint64_t> mod;
  if (!modulus.empty()) {
    for (const auto& c : split(modulus, ',')) mod.push_back(parse_u64(c, "modulus coefficient"));
  }
  tlb_field* f = nullptr;
  check(tlb_field_create(parse_u64(p, "prime"), d, modulus.empty() ? nullptr : mod.data(), mod.size(), &f));
  return FieldPtr(f);
}

std::uint64_t alpha_code(const tlb_field* f, const std::string& sel) {
  if (sel.empty()) usage("--alpha is required");
  std::uint64_t a = 0;
  check(tlb_field_resolve_alpha(f, sel.c_str(), &a));
  return a;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// From --input, or built from the field parameters.
BundlePtr load_bundle(const Config& c) {
  tlb_bundle* b = nullptr;
  if (!c.input.empty()) {
    check(tlb_bundle_read(slurp(c.input).c_str(), &b));
    return BundlePtr(b);
  }
  if (!c.n) usage("--n is required");
  if (!c.r) usage("--r is required");
  FieldPtr f = make_field(c.p, c.d, c.modulus);
  check(tlb_bundle_build(f.get(), *c.n, *c.r, alpha_code(f.get(), c.alpha), c.force, &b));
  return BundlePtr(b);
}

void emit(const Config& c, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (c.output.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) usage("cannot write '" + c.output + "'");
  out << body;
}

tlb_run_options run_options(const Config& c) {
  tlb_run_options o;
  tlb_run_options_init(&o);
  o.cap = c.cap;
  o.route = to_route(c.route);
  o.timing = c.no_timing ? 0 : 1;
  o.forced = c.force ? 1 : 0;
  o.format = to_format(c.format);
  return o;
}

int run_rep(const Config& c) {
  BundlePtr b = load_bundle(c);
  CString s;
  check(tlb_bundle_write(b.get(), &s.p));
  emit(c, s.str());
  return 0;
}

int run_analyze(const Config& c) {
  BundlePtr b = load_bundle(c);
  CString s;
  check(tlb_analyze(b.get(), to_format(c.format), &s.p));
  emit(c, s.str());
  return 0;
}

int run_unitarize(const Config& c) {
  BundlePtr b = load_bundle(c);
  CString s;
  check(tlb_unitarize(b.get(), &s.p));
  emit(c, s.str());
  return 0;
}

int run_certify(const Config& c, bool census) {
  const tlb_run_options o = run_options(c);
  CString s;
  tlb_verdict v = TLB_VERDICT_INCONCLUSIVE;
  if (c.product) {
    if (census) usage("--product applies to certify only");
    if (!c.input.empty()) usage("--product builds its factors from --p/--alpha/--n");
    if (!c.n) usage("--n is required");
    FieldPtr f = make_field(c.p, c.d, c.modulus);
    check(tlb_certify_product(f.get(), *c.n, alpha_code(f.get(), c.alpha), c.force, &o, &s.p, &v));
  } else {
    BundlePtr b = load_bundle(c);
    check(census ? tlb_census(b.get(), &o, &s.p, &v) : tlb_certify(b.get(), &o, &s.p, &v));
  }
  emit(c, s.str());
  return tlb_verdict_exit_code(v);
}

int run_scan(const Config& c) {
  std::vector<FieldPtr> fields;
  if (!c.p.empty()) {
    const auto primes = split(c.p, ',');
    if (primes.size() > 1 && !c.modulus.empty()) usage("--modulus needs a single --p");
    for (const auto& p : primes) fields.push_back(make_field(p, c.d, c.modulus));
    if (c.alpha.empty()) usage("--alpha is required with --p");
  } else if (!c.alpha.empty()) {
    usage("--alpha needs --p");
  }
  std::vector<const tlb_field*> raw;
  for (const auto& f : fields) raw.push_back(f.get());
  CString s;
  check(tlb_scan(raw.data(), raw.size(), c.alpha.empty() ? nullptr : c.alpha.c_str(), c.n_max, c.check.c_str(),
                 c.force, to_format(c.format), &s.p));
  emit(c, s.str());
  return 0;
}

int run_bounds(const Config& c) {
  CString s;
  check(tlb_bounds(c.bounds_n, c.bounds_q, to_format(c.format), &s.p));
  emit(c, s.str());
  return 0;
}

void add_field_options(CLI::App* sub, Config& c, bool scan = false) {
  sub->add_option("--p", c.p, scan ? "characteristic (comma list allowed)" : "characteristic");
  sub->add_option("--d", c.d, "extension degree")->check(CLI::Range(1u, 64u));
  sub->add_option("--modulus", c.modulus, "ascending modulus coefficients, comma separated");
  sub->add_option("--alpha", c.alpha, scan ? "comma list of codes or order:k" : "encoded element or order:k");
  sub->add_flag("--force", c.force, "bypass the semisimplicity gate");
  sub->add_option("--output,-o", c.output, "output path (default stdout)");
}

void add_bundle_options(CLI::App* sub, Config& c) {
  add_field_options(sub, c);
  sub->add_option("--n", c.n, "braid index")->check(CLI::Range(2, 64));
  sub->add_option("--r", c.r, "second row length")->check(CLI::NonNegativeNumber);
  sub->add_option("--input,-i", c.input, "read a bundle file instead of building one");
}

void add_format_option(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_run_options(CLI::App* sub, Config& c) {
  add_format_option(sub, c);
  sub->add_option("--cap", c.cap, "closure element cap (env TLBRAID_CAP)")->check(CLI::PositiveNumber);
  sub->add_option("--route", c.route, "auto, direct or projective")
      ->check(CLI::IsMember({"auto", "direct", "projective"}));
  sub->add_flag("--no-timing", c.no_timing, "report runtime_ms as 0");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Two-row braid group representations over finite fields"};
  app.set_version_flag("--version", tlb_version());
  app.require_subcommand(1);

  auto* rep = app.add_subcommand("rep", "emit the representation bundle");
  add_bundle_options(rep, c);

  auto* analyze = app.add_subcommand("analyze", "gate, spectrum, relations and irreducibility report");
  add_bundle_options(analyze, c);
  add_format_option(analyze, c);

  auto* unitarize = app.add_subcommand("unitarize", "conjugate into a unitary group, with form and congruence");
  add_bundle_options(unitarize, c);

  auto* certify = app.add_subcommand("certify", "closure-based certification of the image");
  add_bundle_options(certify, c);
  add_run_options(certify, c);
  certify->add_flag("--product", c.product, "certify every two-row factor of B_n and their pairs");

  auto* census = app.add_subcommand("census", "certification plus the transvection census");
  add_bundle_options(census, c);
  add_run_options(census, c);

  auto* scan = app.add_subcommand("scan", "grid sweep over (p, alpha, n, r)");
  add_field_options(scan, c, true);
  add_format_option(scan, c);
  scan->add_option("--n-max", c.n_max, "largest braid index")->check(CLI::Range(2, 40));
  scan->add_option("--check", c.check, "spectrum, relations or irreducible")
      ->check(CLI::IsMember({"spectrum", "relations", "irreducible"}));

  auto* bounds = app.add_subcommand("bounds", "census bounds for SL_N(q) and SU_N(q)");
  bounds->add_option("--N", c.bounds_n, "matrix degree")->required()->check(CLI::Range(2u, 1024u));
  bounds->add_option("--q", c.bounds_q, "field order")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--output,-o", c.output, "output path (default stdout)");
  add_format_option(bounds, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (c.cap == 0) c.cap = default_cap();
    if (*rep) return run_rep(c);
    if (*analyze) return run_analyze(c);
    if (*unitarize) return run_unitarize(c);
    if (*certify) return run_certify(c, false);
    if (*census) return run_certify(c, true);
    if (*scan) return run_scan(c);
    if (*bounds) return run_bounds(c);
  } catch (const Failure& f) {
    switch (f.status) {
      case TLB_GATE_REJECTED:
        std::cerr << "tlbraid: gate rejected: " << f.message << " (use --force to override)\n";
        return kExitGate;
      case TLB_INVALID_ARGUMENT:
      case TLB_NOT_PRIME:
      case TLB_REDUCIBLE_MODULUS:
      case TLB_PARSE:
      case TLB_FIELD_MISMATCH:
        std::cerr << "tlbraid: " << f.message << "\n";
        return kExitUsage;
      default:
        std::cerr << "tlbraid: " << tlb_status_name(f.status) << ": " << f.message << "\n";
        return kExitSoftware;
    }
  }
  return kExitUsage;
}
