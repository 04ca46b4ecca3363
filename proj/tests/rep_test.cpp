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

#include <gtest/gtest.h>

#include <bit>

#include "support.hpp"
#include "tlbraid/rep.hpp"

namespace tlbraid {
namespace {

struct Setting {
  std::uint64_t p;
  unsigned d;
  std::uint64_t order;
};

// The four fields of the relation sweep, with alpha given by its order.
const Setting kSettings[] = {{2, 3, 7}, {13, 2, 7}, {29, 1, 28}, {13, 1, 12}};

RepParams params_for(const Setting& s, int n, int r) {
  const Field f = Field::make(s.p, s.d);
  return {n, r, f, *element_of_order(f, s.order)};
}

// Ballot sequences: subsets of {1..n} of size r such that every prefix has
// at least as many first-row letters as second-row letters.
std::uint64_t count_standard(int n, int r) {
  if (2 * r > n) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    int second = 0;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      second += (mask >> k) & 1;
      ok = 2 * second <= k + 1;
    }
    count += ok;
  }
  return count;
}

TEST(Tableaux, CountMatchesEnumeration) {
  for (int n = 1; n <= 14; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto ts = tableaux(n, r);
      ASSERT_EQ(ts.size(), count_standard(n, r)) << n << "," << r;
      ASSERT_EQ(dim_two_row(n, r), ts.size());
      for (auto t : ts) ASSERT_EQ(std::popcount(t), r);
    }
  }
  EXPECT_EQ(dim_two_row(5, 2), 5u);
  EXPECT_EQ(dim_two_row(4, 1), 3u);
  EXPECT_EQ(dim_two_row(4, 2), 2u);
  EXPECT_EQ(dim_two_row(7, 2), 14u);
  EXPECT_EQ(dim_two_row(7, 3), 14u);
  EXPECT_EQ(dim_two_row(4, 3), 0u);
}

TEST(Tableaux, LastLetterOrder) {
  // tableaux with n in the first row come first
  for (int n = 3; n <= 10; ++n) {
    for (int r = 1; 2 * r <= n; ++r) {
      const auto ts = tableaux(n, r);
      const std::size_t first = dim_two_row(n - 1, r);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const bool n_in_second = (ts[i] >> (n - 1)) & 1;
        ASSERT_EQ(n_in_second, i >= first) << n << "," << r;
      }
    }
  }
}

TEST(Spectrum, PaperValues) {
  auto check = [](int n, int r, std::uint64_t a, std::uint64_t b) {
    const SpectrumProfile s = spectrum_profile(n, r);
    EXPECT_EQ(s.a, a) << n << "," << r;
    EXPECT_EQ(s.b, b) << n << "," << r;
    EXPECT_EQ(s.c, dim_two_row(n, r));
  };
  check(5, 0, 1, 0);
  check(5, 1, 3, 1);
  check(5, 2, 3, 2);
  check(4, 2, 1, 1);
}

TEST(Spectrum, RecurrenceAndInequality) {
  for (int n = 3; n <= 30; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto s = spectrum_profile(n, r);
      auto at = [](int m, int k) {
        return (k < 0 || 2 * k > m) ? SpectrumProfile{} : spectrum_profile(m, k);
      };
      ASSERT_EQ(s.a, at(n - 1, r).a + at(n - 1, r - 1).a) << n << "," << r;
      ASSERT_EQ(s.b, at(n - 1, r).b + at(n - 1, r - 1).b) << n << "," << r;
      if (n >= 5) {
        ASSERT_GT(s.a, s.b) << n << "," << r;
      }
    }
  }
}

TEST(Gate, Examples) {
  const Field f8 = Field::make(2, 3);
  EXPECT_TRUE(gate({3, 1, f8, *element_of_order(f8, 7)}).ok());
  const Field f11 = Field::make(11, 1);
  const GateResult g10 = gate({3, 1, f11, *element_of_order(f11, 10)});
  EXPECT_EQ(g10.clause, GateClause::kExcludedOrder);
  EXPECT_EQ(g10.e, 10u);
  const GateResult g8 = gate({8, 1, f8, *element_of_order(f8, 7)});
  EXPECT_EQ(g8.clause, GateClause::kNotSemisimple);
  EXPECT_NE(g8.reason.find("semisimplicity"), std::string::npos);
}

TEST(CaseDetect, Examples) {
  const Field f8 = Field::make(2, 3);
  EXPECT_EQ(case_detect(f8, *element_of_order(f8, 7)), RepCase::kLinear);
  const Field f169 = Field::make(13, 2);
  EXPECT_EQ(case_detect(f169, *element_of_order(f169, 7)), RepCase::kUnitary);
  const Field f29 = Field::make(29, 1);
  EXPECT_EQ(case_detect(f29, Elem{2}), RepCase::kLinear);
  EXPECT_EQ(quantum_e(f29, Elem{2}), 28u);
  // alpha of order 8 in F_169 does not lie on the norm-one circle: Linear
  EXPECT_EQ(case_detect(f169, *element_of_order(f169, 8)), RepCase::kLinear);
}

TEST(BuildRep, OneDimensionalBundles) {
  const Field f = Field::make(29, 1);
  const Elem a{2};
  const RepBundle row = build_rep({2, 0, f, a});
  ASSERT_EQ(row.dim, 1u);
  EXPECT_EQ(row.gens[0](0, 0), f.neg(f.one()));
  const RepBundle col = build_rep({2, 1, f, a});
  ASSERT_EQ(col.dim, 1u);
  EXPECT_EQ(col.gens[0](0, 0), a);
  const RepBundle triv = build_rep({5, 0, f, a});
  for (const auto& g : triv.gens) EXPECT_EQ(g(0, 0), f.neg(f.one()));
}

TEST(BuildRep, GateEnforcedUnlessForced) {
  const Field f7 = Field::make(7, 1);
  const Elem a6 = *element_of_order(f7, 6);
  try {
    build_rep({3, 1, f7, a6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGateRejected);
  }
  const RepBundle forced = build_rep({3, 1, f7, a6}, true);
  EXPECT_EQ(forced.dim, 2u);
  EXPECT_TRUE(verify_relations(forced).empty());
  // [3]_alpha = 0 for alpha of order 3: the seminormal form breaks down
  const Elem a3 = *element_of_order(f7, 3);
  try {
    build_rep({4, 1, f7, a3}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDivision);
  }
  EXPECT_THROW(build_rep({3, 2, f7, Elem{3}}, true), Error);
  EXPECT_THROW(build_rep({1, 0, f7, Elem{3}}, true), Error);
}

TEST(BuildRep, RelationsOverTheSweep) {
  for (const Setting& s : kSettings) {
    for (int n = 2; n <= 9; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        const RepParams p = params_for(s, n, r);
        if (!gate(p).ok()) continue;
        const RepBundle b = build_rep(p);
        ASSERT_EQ(b.dim, dim_two_row(n, r));
        ASSERT_EQ(b.gens.size(), static_cast<std::size_t>(n - 1));
        const auto bad = verify_relations(b);
        ASSERT_TRUE(bad.empty()) << s.p << "^" << s.d << " n=" << n << " r=" << r << ": " << bad.front();
        ASSERT_EQ(b.rep_case, case_detect(p.field, p.alpha));
      }
    }
  }
}

TEST(BuildRep, CorruptedGeneratorIsCaught) {
  RepBundle b = build_rep(params_for(kSettings[2], 5, 2));
  const Field& f = b.params.field;
  b.gens[2](1, 1) = f.add(b.gens[2](1, 1), f.one());
  const auto bad = verify_relations(b);
  EXPECT_FALSE(bad.empty());
}

TEST(BuildRep, SpectrumOfEveryGenerator) {
  for (const Setting& s : kSettings) {
    for (int n = 2; n <= 8; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        const RepParams p = params_for(s, n, r);
        if (!gate(p).ok()) continue;
        const RepBundle b = build_rep(p);
        const SpectrumProfile sp = spectrum_profile(n, r);
        const Field& f = p.field;
        for (const auto& g : b.gens) {
          ASSERT_EQ(kernel_dim(add(g, Matrix::identity(f, b.dim))), sp.a);
          ASSERT_EQ(kernel_dim(shift(g, p.alpha)), sp.b);
        }
        Elem want = f.pow(p.alpha, sp.b);
        if (sp.a % 2) want = f.neg(want);
        ASSERT_EQ(det(b.gens[0]), want);
      }
    }
  }
}

TEST(BuildRep, SpecialMorphismOfTwoTwo) {
  for (const Setting& s : kSettings) {
    const RepBundle b = build_rep(params_for(s, 4, 2));
    EXPECT_EQ(b.gens[2], b.gens[0]) << s.p;
  }
}

TEST(BuildRep, Deterministic) {
  const RepParams p = params_for(kSettings[1], 6, 2);
  EXPECT_EQ(build_rep(p).gens, build_rep(p).gens);
}

TEST(Restrict, BlockExactBranching) {
  for (const Setting& s : kSettings) {
    for (int n = 3; n <= 9; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        const RepParams p = params_for(s, n, r);
        if (!gate(p).ok()) continue;
        const RepBundle b = build_rep(p);
        const auto parts = restrict_bundle(b);
        std::size_t offset = 0;
        std::vector<int> rs;
        for (const auto& part : parts) {
          ASSERT_EQ(part.params.n, n - 1);
          ASSERT_EQ(part.dim, dim_two_row(n - 1, part.params.r));
          rs.push_back(part.params.r);
          for (std::size_t i = 0; i < part.gens.size(); ++i) {
            ASSERT_EQ(b.gens[i].block(offset, offset, part.dim, part.dim), part.gens[i]);
            // the restriction of a bundle is the bundle of the smaller shape
            ASSERT_EQ(part.gens[i], build_rep({n - 1, part.params.r, p.field, p.alpha}).gens[i]);
          }
          offset += part.dim;
        }
        ASSERT_EQ(offset, b.dim);
        for (std::size_t i = 0; i + 1 < b.gens.size(); ++i) {
          std::size_t o = 0;
          for (const auto& part : parts) {
            if (o > 0) {
              ASSERT_TRUE(b.gens[i].block(0, o, o, part.dim).is_zero());
              ASSERT_TRUE(b.gens[i].block(o, 0, part.dim, o).is_zero());
            }
            o += part.dim;
          }
        }
        if (2 * r == n) {
          ASSERT_EQ(parts.size(), 1u);
          ASSERT_EQ(parts[0].params.r, r - 1);
          ASSERT_EQ(dim_two_row(n, r), dim_two_row(n - 1, r - 1));
        } else if (r == 0) {
          ASSERT_EQ(rs, std::vector<int>{0});
        } else {
          ASSERT_EQ(rs, (std::vector<int>{r, r - 1}));
        }
      }
    }
  }
}

// The explicit 2x2 model, for invariant comparisons.
std::pair<Matrix, Matrix> paper_model(const Field& f, Elem a) {
  Matrix s1(f, 2, 2), s2(f, 2, 2);
  const Elem m1 = f.neg(f.one());
  s1(0, 0) = m1;
  s1(0, 1) = m1;
  s1(1, 1) = a;
  s2(0, 0) = m1;
  s2(1, 0) = f.add(f.one(), f.add(a, f.mul(a, a)));
  s2(1, 1) = a;
  return {s1, s2};
}

TEST(BuildRep, ThreeStrandBundleMatchesPaperModel) {
  for (const Setting& s : kSettings) {
    const RepParams p = params_for(s, 3, 1);
    const Field& f = p.field;
    const RepBundle b = build_rep(p);
    const auto [s1, s2] = paper_model(f, p.alpha);
    const Matrix& r1 = b.gens[0];
    const Matrix& r2 = b.gens[1];
    auto same = [&](const Matrix& x, const Matrix& y) {
      EXPECT_EQ(trace(x), trace(y));
      EXPECT_EQ(det(x), det(y));
      EXPECT_EQ(charpoly(x), charpoly(y));
    };
    same(r1, s1);
    same(r2, s2);
    same(mul(r1, inverse(r2)), mul(s1, inverse(s2)));
    const Matrix cb = mul(mul(r1, r2), mul(inverse(r1), inverse(r2)));
    const Matrix cp = mul(mul(s1, s2), mul(inverse(s1), inverse(s2)));
    same(cb, cp);
  }
}

TEST(BuildRep, CommutatorWitnessIsNonScalar) {
  // w = (s1 s2^-1)(s1^-1 s2) - (s1^-1 s2)(s1 s2^-1). Closed form derived by
  // hand: w = [[u, a - a^-2], [v, -u]] with u = (a^4 + a^3 - a - 1)/a^2 and
  // v = -a^3 - a^2 - a + 1 + a^-1 + a^-2. The matrix printed next to the
  // witness is (s1 s2^-1)(s1^-1 s2)^-1; pinned here as well.
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 29u, 31u}) {
    for (unsigned d : {1u, 2u}) {
      const Field f = Field::make(p, d);
      for (std::uint64_t v = 2; v < f.order(); ++v) {
        const Elem a{v};
        const auto [s1, s2] = paper_model(f, a);
        const Matrix x = mul(s1, inverse(s2)), y = mul(inverse(s1), s2);
        const Matrix w = sub(mul(x, y), mul(y, x));
        const Elem a2 = f.mul(a, a), a3 = f.mul(a2, a), a4 = f.mul(a3, a), one = f.one();
        const Elem ai = f.inv(a), ai2 = f.mul(ai, ai);
        Matrix want(f, 2, 2);
        const Elem u = f.div(f.sub(f.add(a4, a3), f.add(a, one)), a2);
        want(0, 0) = u;
        want(0, 1) = f.sub(a, ai2);
        want(1, 0) = f.add(f.sub(one, f.add(a3, f.add(a2, a))), f.add(ai, ai2));
        want(1, 1) = f.neg(u);
        ASSERT_EQ(w, want) << f.header() << " alpha=" << v;
        if (mult_order(f, a) >= 4) {
          ASSERT_FALSE(w.as_scalar().has_value()) << f.header() << " alpha=" << v;
        }
        Matrix printed(f, 2, 2);
        printed(0, 0) = f.neg(f.div(f.sub(f.add(f.neg(a2), a3), one), a2));
        printed(0, 1) = f.neg(f.div(f.mul(f.sub(a, one), f.add(one, a2)), a2));
        printed(1, 0) = f.div(f.mul(f.sub(a, one), f.add(f.add(a2, a), one)), a);
        printed(1, 1) = f.div(f.sub(f.add(a3, a), one), a);
        ASSERT_EQ(mul(x, inverse(y)), printed) << f.header() << " alpha=" << v;
        if (f.order() > 200 && v > 60) break;
      }
    }
  }
  // the bundle carries the same witness up to conjugation
  for (const Setting& s : kSettings) {
    const RepBundle b = build_rep(params_for(s, 3, 1));
    const Matrix x = mul(b.gens[0], inverse(b.gens[1])), y = mul(inverse(b.gens[0]), b.gens[1]);
    EXPECT_FALSE(sub(mul(x, y), mul(y, x)).as_scalar().has_value());
  }
}

}  // namespace
}  // namespace tlbraid
