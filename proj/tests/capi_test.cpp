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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "tlbraid/tlbraid.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { tlb_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

tlb_field* make(uint64_t p, uint32_t d) {
  tlb_field* f = nullptr;
  EXPECT_EQ(tlb_field_create(p, d, nullptr, 0, &f), TLB_OK) << tlb_last_error();
  return f;
}

TEST(CApi, FieldLifecycle) {
  tlb_field* f = make(2, 3);
  Str h;
  ASSERT_EQ(tlb_field_header(f, &h.p), TLB_OK);
  EXPECT_EQ(h.s(), "GF 2 3 1 1 0 1");
  uint64_t q = 0;
  EXPECT_EQ(tlb_field_order(f, &q), TLB_OK);
  EXPECT_EQ(q, 8u);
  uint64_t a = 0;
  EXPECT_EQ(tlb_field_resolve_alpha(f, "order:7", &a), TLB_OK);
  EXPECT_EQ(a, 2u);
  uint64_t e = 0;
  EXPECT_EQ(tlb_quantum_e(f, a, &e), TLB_OK);
  EXPECT_EQ(e, 7u);
  tlb_field_destroy(f);
  tlb_field_destroy(nullptr);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  tlb_field* f = nullptr;
  EXPECT_EQ(tlb_field_create(4, 1, nullptr, 0, &f), TLB_NOT_PRIME);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::strlen(tlb_last_error()), 0u);
  const uint64_t reducible[] = {1, 0, 0, 1};
  EXPECT_EQ(tlb_field_create(2, 3, reducible, 4, &f), TLB_REDUCIBLE_MODULUS);
  EXPECT_EQ(tlb_field_create(2, 3, nullptr, 0, nullptr), TLB_INVALID_ARGUMENT);
  EXPECT_STREQ(tlb_status_name(TLB_OK), "ok");
  EXPECT_STREQ(tlb_status_name(TLB_GATE_REJECTED), "gate rejected");
  f = make(2, 3);
  uint64_t a = 0;
  EXPECT_EQ(tlb_field_resolve_alpha(f, "order:5", &a), TLB_INVALID_ARGUMENT);
  tlb_bundle* b = nullptr;
  EXPECT_EQ(tlb_bundle_build(f, 8, 1, 2, 0, &b), TLB_GATE_REJECTED);
  EXPECT_NE(std::string(tlb_last_error()).find("semisimplicity"), std::string::npos);
  EXPECT_EQ(tlb_bundle_read("garbage", &b), TLB_PARSE);
  Str reason;
  EXPECT_EQ(tlb_gate(f, 3, 2, &reason.p), TLB_OK);
  EXPECT_EQ(reason.s(), "");
  tlb_field_destroy(f);
}

TEST(CApi, BundleRoundTripAndGenerators) {
  tlb_field* f = make(2, 3);
  tlb_bundle* b = nullptr;
  ASSERT_EQ(tlb_bundle_build(f, 3, 1, 2, 0, &b), TLB_OK);
  size_t dim = 0, count = 0;
  EXPECT_EQ(tlb_bundle_dim(b, &dim), TLB_OK);
  EXPECT_EQ(tlb_bundle_generator_count(b, &count), TLB_OK);
  EXPECT_EQ(dim, 2u);
  EXPECT_EQ(count, 2u);
  std::vector<uint64_t> g(4);
  EXPECT_EQ(tlb_bundle_generator(b, 0, g.data(), g.size()), TLB_OK);
  EXPECT_EQ(tlb_bundle_generator(b, 2, g.data(), g.size()), TLB_INVALID_ARGUMENT);
  EXPECT_EQ(tlb_bundle_generator(b, 0, g.data(), 3), TLB_SHAPE_MISMATCH);
  Str text;
  ASSERT_EQ(tlb_bundle_write(b, &text.p), TLB_OK);
  tlb_bundle* back = nullptr;
  ASSERT_EQ(tlb_bundle_read(text.p, &back), TLB_OK);
  Str again;
  ASSERT_EQ(tlb_bundle_write(back, &again.p), TLB_OK);
  EXPECT_EQ(text.s(), again.s());
  tlb_bundle_destroy(back);
  tlb_bundle_destroy(b);
  tlb_field_destroy(f);
}

TEST(CApi, CertifyAndCensus) {
  tlb_field* f = make(2, 3);
  tlb_bundle* b = nullptr;
  ASSERT_EQ(tlb_bundle_build(f, 3, 1, 2, 0, &b), TLB_OK);
  tlb_run_options o;
  tlb_run_options_init(&o);
  o.timing = 0;
  Str r1, r2;
  tlb_verdict v = TLB_VERDICT_REFUTED;
  ASSERT_EQ(tlb_certify(b, &o, &r1.p, &v), TLB_OK);
  EXPECT_EQ(v, TLB_VERDICT_CONTAINS_SL);
  EXPECT_EQ(tlb_verdict_exit_code(v), 0);
  EXPECT_STREQ(tlb_verdict_name(v), "ContainsSL");
  ASSERT_EQ(tlb_certify(b, &o, &r2.p, &v), TLB_OK);
  EXPECT_EQ(r1.s(), r2.s());
  EXPECT_NE(r1.s().find("\"order\": 504"), std::string::npos);
  Str c;
  ASSERT_EQ(tlb_census(b, &o, &c.p, &v), TLB_OK);
  EXPECT_NE(c.s().find("\"transvection_count\": 63"), std::string::npos);
  o.route = TLB_ROUTE_DIRECT;
  o.format = TLB_FORMAT_TEXT;
  Str t;
  ASSERT_EQ(tlb_certify(b, &o, &t.p, &v), TLB_OK);
  EXPECT_NE(t.s().find("order: 3528"), std::string::npos);
  o.cap = 10;
  Str capped;
  ASSERT_EQ(tlb_certify(b, &o, &capped.p, &v), TLB_OK);
  EXPECT_EQ(v, TLB_VERDICT_CAPPED);
  EXPECT_EQ(tlb_verdict_exit_code(v), 2);
  tlb_bundle_destroy(b);
  tlb_field_destroy(f);
}

TEST(CApi, UnitarizeAnalyzeProductBoundsScan) {
  tlb_field* f = make(13, 2);
  uint64_t a = 0;
  ASSERT_EQ(tlb_field_resolve_alpha(f, "order:7", &a), TLB_OK);
  tlb_bundle* b = nullptr;
  ASSERT_EQ(tlb_bundle_build(f, 3, 1, a, 0, &b), TLB_OK);
  Str u;
  ASSERT_EQ(tlb_unitarize(b, &u.p), TLB_OK);
  EXPECT_NE(u.s().find("FORM\n"), std::string::npos);
  EXPECT_NE(u.s().find("CONGRUENCE\n"), std::string::npos);
  Str an;
  ASSERT_EQ(tlb_analyze(b, TLB_FORMAT_JSON, &an.p), TLB_OK);
  EXPECT_NE(an.s().find("\"case\": \"unitary\""), std::string::npos);
  tlb_run_options o;
  tlb_run_options_init(&o);
  o.timing = 0;
  Str pr;
  tlb_verdict v;
  ASSERT_EQ(tlb_certify_product(f, 3, a, 0, &o, &pr.p, &v), TLB_OK);
  EXPECT_EQ(v, TLB_VERDICT_CONTAINS_SU);
  Str bd;
  ASSERT_EQ(tlb_bounds(6, 4, TLB_FORMAT_CSV, &bd.p), TLB_OK);
  EXPECT_EQ(bd.s().rfind("command,bounds.N,bounds.q,bounds.k", 0), 0u);
  Str sc;
  ASSERT_EQ(tlb_scan(nullptr, 0, nullptr, 6, "spectrum", 0, TLB_FORMAT_CSV, &sc.p), TLB_OK);
  EXPECT_EQ(sc.s().rfind("n,r,dim,a,b,recurrence,a_gt_b,detail,status\n", 0), 0u);
  const tlb_field* fields[] = {f};
  Str sf;
  ASSERT_EQ(tlb_scan(fields, 1, "order:7,order:14", 5, "irreducible", 0, TLB_FORMAT_JSON, &sf.p), TLB_OK);
  EXPECT_EQ(sf.s().find("\"fail\""), std::string::npos);
  EXPECT_EQ(tlb_scan(fields, 1, nullptr, 5, "spectrum", 0, TLB_FORMAT_JSON, &sf.p), TLB_INVALID_ARGUMENT);
  tlb_bundle_destroy(b);
  tlb_field_destroy(f);

  tlb_field* f8 = make(2, 3);
  tlb_bundle* lin = nullptr;
  ASSERT_EQ(tlb_bundle_build(f8, 3, 1, 2, 0, &lin), TLB_OK);
  Str none;
  EXPECT_EQ(tlb_unitarize(lin, &none.p), TLB_INVALID_ARGUMENT);
  tlb_bundle_destroy(lin);
  tlb_field_destroy(f8);
}

}  // namespace
