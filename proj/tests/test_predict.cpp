#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shortcode/construct.hpp"
#include "shortcode/predict.hpp"
#include "shortcode/sums.hpp"

using namespace shortcode;

namespace {

Field field(int p, int m) { return Field(default_field_spec(p, m)); }

WeightDistribution wd_of(std::initializer_list<std::pair<std::size_t, long long>> rows) {
  WeightDistribution wd;
  for (auto [w, c] : rows) wd[w] = c;
  return wd;
}

oracle::NaiveField naive(const Field& f) {
  std::string digits;
  for (int c : f.spec().modulus) digits.push_back(static_cast<char>('0' + c));
  return oracle::NaiveField(f.p(), f.m(), digits);
}

WeightDistribution from_oracle(const oracle::WD& wd) {
  WeightDistribution out;
  for (auto [w, c] : wd) out[w] = Count(c);
  return out;
}

/// Enumerated C_T by the schoolbook oracle, T given as field elements.
WeightDistribution oracle_shortened(const Field& f, std::uint64_t s, const std::vector<FieldElement>& t) {
  std::set<std::uint32_t> idx;
  for (auto x : t) idx.insert(x.index);
  return from_oracle(oracle::monomial_code_wd(naive(f), s, idx));
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Tables, PrintedExamples) {
  EXPECT_EQ(table_wd("tab3", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 310}, {16, 527}, {20, 186}}));
  const auto t15 = table_wd("tab15", {3, 3, {}});
  EXPECT_EQ(t15.n, 24u);
  EXPECT_EQ(t15.k, 4u);
  EXPECT_EQ(t15.wd, wd_of({{0, 1}, {15, 48}, {18, 32}}));
  EXPECT_EQ(table_wd("tab16", {3, 4, {}}).wd, wd_of({{0, 1}, {48, 240}, {51, 240}, {54, 26}, {57, 192}, {60, 30}}));
  EXPECT_EQ(table_wd("tab4", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 190}, {16, 255}, {20, 66}}));
  EXPECT_EQ(table_wd("tab5", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 114}, {16, 119}, {20, 22}}));
  EXPECT_EQ(table_wd("tab6", {2, 4, {}}).wd, wd_of({{0, 1}, {4, 15}, {6, 100}, {8, 75}, {10, 60}, {12, 5}}));
  EXPECT_EQ(table_wd("tab7", {2, 4, {}}).wd, wd_of({{0, 1}, {4, 11}, {6, 60}, {8, 35}, {10, 20}, {12, 1}}));
  EXPECT_EQ(table_wd("tab8", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 66}, {16, 55}, {20, 6}}));
  EXPECT_EQ(table_wd("tab9", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 68}, {16, 51}, {20, 8}}));
  EXPECT_EQ(table_wd("tab10", {2, 4, 0L}).wd, wd_of({{0, 1}, {4, 7}, {6, 36}, {8, 15}, {10, 4}, {12, 1}}));
  EXPECT_EQ(table_wd("tab10", {2, 4, 2L}).wd, wd_of({{0, 1}, {4, 8}, {6, 34}, {8, 15}, {10, 6}}));
  EXPECT_EQ(table_wd("gf4", {2, 4, {}}).wd, wd_of({{0, 1}, {4, 3}, {6, 24}, {8, 3}, {12, 1}}));
  EXPECT_EQ(table_wd("tab11", {3, 3, {}}).wd, wd_of({{0, 1}, {15, 312}, {18, 260}, {21, 156}}));
  EXPECT_EQ(table_wd("tab13", {3, 4, {}}).wd, wd_of({{0, 1}, {48, 1320}, {51, 2400}, {54, 80}, {57, 1920}, {60, 840}}));
  EXPECT_EQ(table_wd("tab12", {3, 5, {}}).wd, wd_of({{0, 1}, {153, 8010}, {162, 6560}, {171, 5112}}));
  EXPECT_EQ(table_wd("tab14", {3, 4, {}}).wd, wd_of({{0, 1}, {48, 528}, {51, 870}, {54, 26}, {57, 552}, {60, 210}}));
}

TEST(Tables, FullCodeDistributions) {
  EXPECT_EQ(table_wd("tab1", {2, 5, {}}).wd, wd_of({{0, 1}, {12, 496}, {16, 1054}, {20, 496}, {32, 1}}));
  EXPECT_EQ(table_wd("tab2", {2, 4, {}}).wd, wd_of({{0, 1}, {4, 20}, {6, 160}, {8, 150}, {10, 160}, {12, 20}, {16, 1}}));
}

TEST(Tables, MassAndSignSweep) {
  std::size_t evaluated = 0;
  for (const auto& tag : table_tags()) {
    for (int p : {2, 3, 5, 7}) {
      for (int m = 1; m <= 10; ++m) {
        std::vector<std::optional<long>> lambdas{std::nullopt};
        if (tag == "tab10" && m >= 4 && m % 2 == 0) {
          const long q = 1L << m;
          const long h = m / 2;
          lambdas = {(q - 2 - neg_one_pow(h) * (1L << (h + 1))) / 6 - 1, (q - 2 + neg_one_pow(h) * (1L << h)) / 6 - 1};
        }
        for (auto l : lambdas) {
          PredictedWD w;
          try {
            w = table_wd(tag, {p, m, l});
          } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::GateUnsatisfied) << tag << " p=" << p << " m=" << m << ": " << e.what();
            continue;
          }
          ++evaluated;
          Count mass = 1;
          for (std::size_t i = 0; i < w.k; ++i) mass *= p;
          EXPECT_EQ(total(w.wd), mass) << tag;
          for (const auto& [wt, c] : w.wd) {
            EXPECT_GT(c, 0) << tag << " p=" << p << " m=" << m;
            EXPECT_LE(wt, w.n);
          }
        }
      }
    }
  }
  EXPECT_GT(evaluated, 80u);
}

TEST(Tables, GatesAndUnknownTag) {
  EXPECT_EQ(error_of([] { table_wd("tab1", {2, 4, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab2", {2, 5, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab10", {2, 4, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab11", {2, 3, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab15", {3, 4, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab3", {3, 5, {}}); }), ErrorCode::GateUnsatisfied);
  EXPECT_EQ(error_of([] { table_wd("tab99", {2, 5, {}}); }), ErrorCode::ParseError);
}

TEST(Tables, TabTenRejectsInadmissibleLambda) {
  EXPECT_EQ(error_of([] { table_wd("tab10", {2, 4, 4L}); }), ErrorCode::NegativeCount);
  EXPECT_EQ(error_of([] { table_wd("tab10", {2, 4, 1L}); }), ErrorCode::NonIntegralCount);
}

TEST(Tables, MatchSchoolbookEnumeration) {
  const auto f4 = field(2, 4);
  const auto f5 = field(2, 5);
  EXPECT_EQ(oracle_shortened(f5, 3, {}), table_wd("tab1", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {}), table_wd("tab2", {2, 4, {}}).wd);
  EXPECT_EQ(oracle_shortened(f5, 3, {f5.alpha_pow(7)}), table_wd("tab3", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f5, 3, {f5.zero(), f5.alpha_pow(3)}), table_wd("tab4", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f5, 3, {f5.zero(), f5.one(), f5.alpha_pow(1)}), table_wd("tab5", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {f4.alpha_pow(2)}), table_wd("tab6", {2, 4, {}}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {f4.alpha_pow(2), f4.alpha_pow(9)}), table_wd("tab7", {2, 4, {}}).wd);
  EXPECT_EQ(oracle_shortened(f5, 3, {f5.alpha_pow(1), f5.alpha_pow(2), f5.alpha_pow(4), f5.alpha_pow(5)}), table_wd("tab8", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f5, 3, {f5.alpha_pow(1), f5.alpha_pow(2), f5.alpha_pow(3), f5.alpha_pow(4)}), table_wd("tab9", {2, 5, {}}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {f4.alpha_pow(1), f4.alpha_pow(2), f4.alpha_pow(4)}), table_wd("tab10", {2, 4, 0L}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {f4.alpha_pow(2), f4.alpha_pow(5), f4.alpha_pow(7)}), table_wd("tab10", {2, 4, 2L}).wd);
  EXPECT_EQ(oracle_shortened(f4, 3, {f4.zero(), f4.one(), f4.alpha_pow(5), f4.alpha_pow(10)}), table_wd("gf4", {2, 4, {}}).wd);
  const auto f27 = field(3, 3);
  EXPECT_EQ(oracle_shortened(f27, 2, {f27.alpha_pow(4)}), table_wd("tab11", {3, 3, {}}).wd);
  EXPECT_EQ(oracle_shortened(f27, 4, {f27.alpha_pow(4), f27.alpha_pow(11)}), table_wd("tab12", {3, 3, {}}).wd);
  EXPECT_EQ(oracle_shortened(f27, 2, {f27.zero(), f27.one(), f27.from_int(2)}), table_wd("tab15", {3, 3, {}}).wd);
  const auto f9 = field(3, 2);
  EXPECT_EQ(oracle_shortened(f9, 2, {f9.alpha_pow(3)}), table_wd("tab13", {3, 2, {}}).wd);
  EXPECT_EQ(oracle_shortened(f9, 2, {f9.alpha_pow(3), f9.alpha_pow(6)}), table_wd("tab14", {3, 2, {}}).wd);
  EXPECT_EQ(oracle_shortened(f9, 2, {f9.zero(), f9.one(), f9.from_int(2)}), table_wd("tab16", {3, 2, {}}).wd);
}

TEST(Tables, LambdaTablesSatisfyLowMoments) {
  for (int m : {5, 7, 9}) {
    const auto t8 = table_wd("tab8", {2, m, {}});
    EXPECT_TRUE(pless_consistent(2, t8.n, t8.k, t8.wd, {{0, 1}, {1, 0}, {2, 0}}, 2)) << m;
    const auto t9 = table_wd("tab9", {2, m, {}});
    EXPECT_TRUE(pless_consistent(2, t9.n, t9.k, t9.wd, {{0, 1}, {1, 0}, {2, 1}}, 2)) << m;
  }
  for (int m : {4, 6, 8}) {
    const auto f = field(2, m);
    for (const char* branch : {"residue", "nonresidue"}) {
      const long q = 1L << m;
      const long h = m / 2;
      const long lambda = std::string(branch) == "residue" ? (q - 2 - neg_one_pow(h) * (1L << (h + 1))) / 6 - 1
                                                           : (q - 2 + neg_one_pow(h) * (1L << h)) / 6 - 1;
      const auto t10 = table_wd("tab10", {2, m, lambda});
      const std::map<std::size_t, Count> dual{{0, 1}, {1, 0}, {2, 0}, {3, Count(lambda)}, {4, A4_dual_punctured3(m, lambda)}};
      EXPECT_TRUE(pless_consistent(2, t10.n, t10.k, t10.wd, dual, 4)) << m << " " << branch;
    }
    (void)f;
  }
}

TEST(DualParams, Values) {
  const auto d5 = dual_params(5);
  EXPECT_EQ(d5.n, 32u);
  EXPECT_EQ(d5.k, 21u);
  EXPECT_EQ(d5.d, 6u);
  EXPECT_EQ(A6_dual(4), Count(48));
  EXPECT_EQ(A6_dual(6), Count(20160));
  EXPECT_EQ(error_of([] { A6_dual(5); }), ErrorCode::GateUnsatisfied);
}

TEST(DualParams, A6MatchesSupportSearch) {
  const auto c = build_code(parse_code_spec("apn:p=2,m=4,e=1"));
  const auto sup = dual_low_weight_supports(c, 6);
  EXPECT_EQ(sup.begin()->first, 6u);
  EXPECT_EQ(Count(sup.at(6).size()), A6_dual(4));
}

TEST(LambdaOdd4, Examples) {
  const auto f = field(2, 5);
  const std::vector<FieldElement> t1{f.alpha_pow(1), f.alpha_pow(2), f.alpha_pow(4), f.alpha_pow(5)};
  EXPECT_EQ(predict_lambda_odd4(f, 1, t1).lambda, 0);
  const std::vector<FieldElement> t2{f.alpha_pow(1), f.alpha_pow(2), f.alpha_pow(3), f.alpha_pow(4)};
  EXPECT_EQ(predict_lambda_odd4(f, 1, t2).lambda, 1);
  // {a, b, c, a+b+c} sums to zero
  const auto x = f.alpha_pow(3), y = f.alpha_pow(8), z = f.alpha_pow(20);
  const std::vector<FieldElement> t3{x, y, z, f.add(x, f.add(y, z))};
  const auto r = predict_lambda_odd4(f, 1, t3);
  EXPECT_EQ(r.lambda, 0);
  EXPECT_EQ(r.branch, "sum is zero");
}

TEST(LambdaOdd4, MatchesDualSupportOracle) {
  const auto f = field(2, 5);
  const auto c = build_code(f, 3);
  std::vector<std::vector<int>> g(c.k(), std::vector<int>(c.n));
  for (std::size_t r = 0; r < c.k(); ++r)
    for (std::size_t j = 0; j < c.n; ++j) g[r][j] = c.generator(r, j);
  const std::vector<std::vector<std::size_t>> subsets{{2, 3, 5, 6}, {2, 3, 4, 5}, {0, 1, 2, 3}, {0, 7, 19, 30}, {4, 9, 13, 22}};
  for (const auto& s : subsets) {
    const auto predicted = predict_lambda_odd4(f, 1, elements_of(f, s)).lambda;
    EXPECT_EQ(static_cast<long>(oracle::dual_supports(g, 2, 6, s).size()), predicted);
    EXPECT_EQ(static_cast<long>(lambda_T_w(c, s, 6, true)), predicted);
  }
}

TEST(LambdaEven3, Examples) {
  const auto f = field(2, 4);
  const auto a = predict_lambda_even3(f, 1, {f.alpha_pow(1), f.alpha_pow(2), f.alpha_pow(4)});
  EXPECT_EQ(a.lambda, 0);
  EXPECT_EQ(a.branch, "cubic residue");
  const auto b = predict_lambda_even3(f, 1, {f.alpha_pow(2), f.alpha_pow(5), f.alpha_pow(7)});
  EXPECT_EQ(b.lambda, 2);
  EXPECT_EQ(b.branch, "cubic nonresidue");
}

TEST(LambdaEven3, MatchesBruteOnAllTriplesAtM4) {
  const auto f = field(2, 4);
  const auto c = build_code(f, 3);
  std::size_t n = 0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = i + 1; j < 16; ++j)
      for (std::size_t k = j + 1; k < 16; ++k, ++n) {
        const CoordSet t{i, j, k};
        const auto pr = predict_lambda_even3(f, 1, elements_of(f, t));
        EXPECT_EQ(static_cast<long>(lambda_T_w(c, t, 6, true)), pr.lambda) << i << " " << j << " " << k;
      }
  EXPECT_EQ(n, 560u);
}

TEST(LambdaEven3, BranchValuesAtM6) {
  const auto f = field(2, 6);
  std::set<long> seen;
  for (std::size_t k = 3; k < 64; ++k) seen.insert(predict_lambda_even3(f, 1, {f.zero(), f.one(), f.at_position(k)}).lambda);
  EXPECT_EQ(seen, (std::set<long>{8, 12}));
}

TEST(Gf4, Moments) {
  const auto m4 = gf4_moments(4, 96);
  EXPECT_EQ(m4.A3, Count(0));
  EXPECT_EQ(m4.A4, Count(39));
  EXPECT_EQ(gf4_lambda6(4), 0);
  const auto f = field(2, 4);
  const auto c = build_code(f, 3);
  const auto t = special_T(f, SpecialT::GF4);
  const auto dual_punct = weight_distribution(puncture(dual(c), t));
  EXPECT_EQ(dual_punct.count(3) ? dual_punct.at(3) : Count(0), m4.A3);
  EXPECT_EQ(dual_punct.at(4), m4.A4);
  EXPECT_EQ(A4_dual_punctured2(4), Count(6));
}

TEST(DesignTransfer, ReproducesTablesSymbolically) {
  for (int m = 5; m <= 9; m += 2) {
    const auto full = table_wd("tab1", {2, m, {}});
    EXPECT_EQ(design_transfer(full.wd, full.n, 0, TransferMode::Shorten), full.wd);
    const char* tags[] = {"tab3", "tab4", "tab5"};
    for (std::size_t t = 1; t <= 3; ++t)
      EXPECT_EQ(design_transfer(full.wd, full.n, t, TransferMode::Shorten), table_wd(tags[t - 1], {2, m, {}}).wd) << m << " t=" << t;
  }
  for (int m = 4; m <= 10; m += 2) {
    const auto full = table_wd("tab2", {2, m, {}});
    EXPECT_EQ(design_transfer(full.wd, full.n, 1, TransferMode::Shorten), table_wd("tab6", {2, m, {}}).wd) << m;
    EXPECT_EQ(design_transfer(full.wd, full.n, 2, TransferMode::Shorten), table_wd("tab7", {2, m, {}}).wd) << m;
  }
}

TEST(DesignTransfer, PunctureMatchesEnumeration) {
  const auto f = field(2, 5);
  const auto c = build_code(f, 3);
  const auto full = weight_distribution(c);
  for (std::size_t t = 1; t <= 3; ++t) {
    CoordSet ts;
    for (std::size_t i = 0; i < t; ++i) ts.push_back(3 * i + 1);
    EXPECT_EQ(design_transfer(full, c.n, t, TransferMode::Puncture), weight_distribution(puncture(c, ts))) << t;
  }
}

TEST(DesignTransfer, NonDesignRejected) {
  // one weight-2 block on 4 points is not a 1-design
  EXPECT_EQ(error_of([] { design_transfer(wd_of({{0, 1}, {2, 1}}), 4, 1, TransferMode::Shorten); }), ErrorCode::NonIntegralCount);
}

TEST(AssmusMattson, Hypothesis) {
  const auto t1 = table_wd("tab1", {2, 5, {}});
  const auto r = assmus_mattson(t1.wd, t1.n, 2, 6, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.weights_in_range, 3u);
  EXPECT_EQ(r.w, 32u);
  EXPECT_EQ(r.w_dual, 32u);
  const auto t2 = table_wd("tab2", {2, 4, {}});
  const auto r2 = assmus_mattson(t2.wd, t2.n, 2, 6, 2);
  EXPECT_EQ(r2.weights_in_range, 5u);
  EXPECT_FALSE(r2.holds);
  EXPECT_TRUE(assmus_mattson(t2.wd, t2.n, 2, 6, 1).holds);
  EXPECT_FALSE(assmus_mattson(t1.wd, t1.n, 2, 6, 0).holds);
}

TEST(AssmusMattson, Threshold) {
  EXPECT_EQ(am_threshold(10, 2, 3), 10u);
  // q = 3: w - ceil(w/2) < 3 holds up to w = 5
  EXPECT_EQ(am_threshold(20, 3, 3), 5u);
}
