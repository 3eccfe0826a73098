#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "shortcode/gf.hpp"

using namespace shortcode;

namespace {

Field gf32() { return Field(parse_field_spec("p=2,m=5,mod=100101")); }
Field gf16() { return Field(parse_field_spec("p=2,m=4,mod=10011")); }

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

FieldElement sum_of_powers(const Field& f, std::initializer_list<int> exps) {
  FieldElement s = f.zero();
  for (int k : exps) s = f.add(s, f.alpha_pow(k));
  return s;
}

}  // namespace

TEST(BuildField, PinnedQuinticModulus) {
  const auto f = gf32();
  EXPECT_EQ(f.q(), 32u);
  const auto a = f.generator();
  EXPECT_EQ(f.add(f.add(f.pow(a, 5u), f.pow(a, 2u)), f.one()), f.zero());
}

TEST(BuildField, PinnedQuarticModulus) {
  const auto f = gf16();
  EXPECT_EQ(f.q(), 16u);
  const auto a = f.generator();
  EXPECT_EQ(f.add(f.add(f.pow(a, 4u), a), f.one()), f.zero());
}

TEST(BuildField, RejectsReducibleModulus) {
  EXPECT_EQ(error_of([] { Field(parse_field_spec("p=2,m=2,mod=110")); }), ErrorCode::RejectsReducibleModulus);
}

TEST(BuildField, RejectsNonPrime) {
  EXPECT_EQ(error_of([] { Field(FieldSpec{4, 2, {1, 1, 1}}); }), ErrorCode::RejectsNonPrimeP);
}

TEST(BuildField, MalformedSpecs) {
  EXPECT_EQ(error_of([] { Field(FieldSpec{2, 3, {1, 1}}); }), ErrorCode::MalformedFieldSpec);
  EXPECT_EQ(error_of([] { Field(FieldSpec{3, 2, {2, 1, 1}}); }), ErrorCode::MalformedFieldSpec);
  EXPECT_EQ(error_of([] { parse_field_spec("p=3,k=4"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_field_spec("p=x,m=4"); }), ErrorCode::ParseError);
}

TEST(BuildField, SpecTextRoundTrip) {
  const auto s = parse_field_spec("p=3,m=4,mod=10012");
  EXPECT_EQ(s.to_string(), "p=3,m=4,mod=10012");
  EXPECT_EQ(parse_field_spec("p=3,m=4"), s);
}

TEST(BuildField, DefaultModuliAreIrreducibleWithSmallestPrimitive) {
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= 10; ++m) {
      if (ipow(p, m) > 5000) continue;
      const auto spec = default_field_spec(p, m);
      const Field f(spec);
      std::string digits;
      for (int c : spec.modulus) digits += static_cast<char>('0' + c);
      const oracle::NaiveField nf(p, m, digits);
      EXPECT_EQ(f.generator().index, nf.smallest_primitive()) << spec.to_string();
    }
  }
}

TEST(Arith, KnownSumsInGF32) {
  const auto f = gf32();
  EXPECT_EQ(sum_of_powers(f, {1, 2, 4, 5}), f.alpha_pow(17));
  EXPECT_EQ(sum_of_powers(f, {1, 2, 3, 4}), f.alpha_pow(24));
}

TEST(Arith, CharacteristicTwoDoubling) {
  const auto f = gf32();
  for (std::uint32_t i = 0; i < f.q(); ++i) EXPECT_TRUE(f.add(FieldElement{i}, FieldElement{i}).is_zero());
}

TEST(Arith, InverseOfZero) {
  const auto f = gf16();
  EXPECT_EQ(error_of([&] { f.inv(f.zero()); }), ErrorCode::InversionOfZero);
}

TEST(Arith, PowConventions) {
  const auto f = gf16();
  EXPECT_EQ(f.pow(f.zero(), 0u), f.one());
  EXPECT_EQ(f.pow(f.zero(), 5u), f.zero());
  EXPECT_EQ(f.pow(f.alpha_pow(1), 15u), f.one());
  EXPECT_EQ(f.pow(f.alpha_pow(2), BigInt("150000000000000000000000000007")), f.pow(f.alpha_pow(2), 7u));
}

TEST(Arith, MatchesSchoolbookArithmetic) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    const auto spec = default_field_spec(p, m);
    std::string digits;
    for (int c : spec.modulus) digits += static_cast<char>('0' + c);
    const Field f(spec);
    const oracle::NaiveField nf(p, m, digits);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        ASSERT_EQ(f.add(FieldElement{a}, FieldElement{b}).index, nf.add(a, b));
        ASSERT_EQ(f.mul(FieldElement{a}, FieldElement{b}).index, nf.mul(a, b));
      }
      ASSERT_EQ(f.neg(FieldElement{a}).index, nf.neg(a));
      ASSERT_EQ(f.trace(FieldElement{a}), nf.trace(a));
      if (a != 0) {
        ASSERT_EQ(f.mul(FieldElement{a}, f.inv(FieldElement{a})), f.one());
      }
    }
  }
}

TEST(Trace, RatioWithTraceZero) {
  const auto f = gf32();
  const auto gamma = f.alpha_pow(17);
  const auto gamma_bar = sum_of_powers(f, {3, 6, 12, 15});
  EXPECT_EQ(f.trace(f.div(gamma_bar, f.pow(gamma, 3u))), 0);
}

TEST(Trace, ZeroAndBalance) {
  const auto f = gf32();
  EXPECT_EQ(f.trace(f.zero()), 0);
  int zeros = 0;
  for (std::uint32_t i = 0; i < f.q(); ++i) zeros += f.trace(FieldElement{i}) == 0;
  EXPECT_EQ(zeros, 16);
}

TEST(Trace, LinearAndFrobeniusInvariant) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 3}}) {
    const Field f(default_field_spec(p, m));
    std::vector<int> hits(static_cast<std::size_t>(p), 0);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const FieldElement x{a};
      EXPECT_EQ(f.trace(f.pow(x, static_cast<std::uint64_t>(p))), f.trace(x));
      ++hits[static_cast<std::size_t>(f.trace(x))];
      for (std::uint32_t b = 0; b < f.q(); b += 3) {
        const FieldElement y{b};
        EXPECT_EQ(f.trace(f.add(x, y)), (f.trace(x) + f.trace(y)) % p);
      }
    }
    // a nonzero a makes x -> Tr(ax) hit every value q/p times
    for (int h : hits) EXPECT_EQ(static_cast<std::uint32_t>(h), f.q() / static_cast<std::uint32_t>(p));
  }
}

TEST(Eta, BasicValues) {
  const Field f(default_field_spec(3, 3));
  EXPECT_EQ(f.eta(f.one()), 1);
  EXPECT_EQ(f.eta(f.zero()), 0);
  std::set<std::uint32_t> squares;
  for (std::uint32_t i = 1; i < f.q(); ++i) squares.insert(f.mul(FieldElement{i}, FieldElement{i}).index);
  EXPECT_EQ(squares.size(), 13u);
  EXPECT_EQ(squares.count(f.generator().index), 0u);
  EXPECT_EQ(f.eta(f.generator()), -1);
  for (std::uint32_t i = 1; i < f.q(); ++i) EXPECT_EQ(f.eta(FieldElement{i}) == 1, squares.count(i) == 1);
}

TEST(Eta, UndefinedInCharacteristicTwo) {
  EXPECT_EQ(error_of([] { gf16().eta(FieldElement{1}); }), ErrorCode::UndefinedForEvenCharacteristic);
}

TEST(Eta, Multiplicative) {
  const Field f(default_field_spec(5, 3));
  for (std::uint32_t a = 1; a < f.q(); a += 7)
    for (std::uint32_t b = 1; b < f.q(); ++b)
      EXPECT_EQ(f.eta(f.mul(FieldElement{a}, FieldElement{b})), f.eta(FieldElement{a}) * f.eta(FieldElement{b}));
}

TEST(CubicResidue, GF16) {
  const auto f = gf16();
  EXPECT_TRUE(f.is_cubic_residue(f.one()));
  EXPECT_FALSE(f.is_cubic_residue(f.alpha_pow(11)));
  int count = 0;
  for (std::uint32_t i = 1; i < f.q(); ++i) count += f.is_cubic_residue(FieldElement{i});
  EXPECT_EQ(count, 5);
  std::set<std::uint32_t> cubes;
  for (std::uint32_t i = 1; i < f.q(); ++i) cubes.insert(f.pow(FieldElement{i}, 3u).index);
  for (std::uint32_t i = 1; i < f.q(); ++i) EXPECT_EQ(f.is_cubic_residue(FieldElement{i}), cubes.count(i) == 1);
}

TEST(CubicResidue, Errors) {
  EXPECT_EQ(error_of([] { gf16().is_cubic_residue(FieldElement{0}); }), ErrorCode::ZeroInput);
  EXPECT_EQ(error_of([] { gf32().is_cubic_residue(FieldElement{1}); }), ErrorCode::CubesAreAllOfGFq);
}

TEST(SolveLinearized, ZeroRightHandSide) {
  const Field f(default_field_spec(3, 3));
  for (std::uint32_t a = 1; a < f.q(); ++a) EXPECT_TRUE(f.solve_linearized(FieldElement{a}, 1, f.zero()).is_zero());
}

TEST(SolveLinearized, SubstitutesBackAndIsUnique) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 3}, {5, 1}, {5, 3}}) {
    const Field f(default_field_spec(p, m));
    const auto pe = static_cast<std::uint64_t>(p);
    for (std::uint32_t ai = 1; ai < f.q(); ++ai) {
      const FieldElement a{ai};
      for (std::uint32_t bi = 0; bi < f.q(); ++bi) {
        const FieldElement b{bi};
        auto lhs = [&](FieldElement x) {
          return f.add(f.add(f.mul(f.pow(a, pe), f.pow(x, pe * pe)), f.mul(a, x)), f.pow(b, pe));
        };
        const auto x = f.solve_linearized(a, 1, b);
        ASSERT_TRUE(lhs(x).is_zero());
        if (p == 3 && m == 3) {
          int roots = 0;
          for (std::uint32_t y = 0; y < f.q(); ++y) roots += lhs(FieldElement{y}).is_zero();
          ASSERT_EQ(roots, 1);
        }
      }
    }
  }
}

TEST(SolveLinearized, OneIsTheRootForTheSpecialRightHandSide) {
  const Field f(default_field_spec(3, 3));
  for (std::uint32_t ai = 1; ai < f.q(); ++ai) {
    const FieldElement a{ai};
    const auto b = f.sub(f.neg(f.frobenius(a, -1)), a);
    EXPECT_EQ(f.solve_linearized(a, 1, b), f.one());
  }
}

TEST(SolveLinearized, NonBijectiveMapReported) {
  // m/gcd(m,e) even: x -> x^9 + x has a kernel in GF(9)
  const Field f(default_field_spec(3, 2));
  EXPECT_EQ(error_of([&] {
              for (std::uint32_t a = 1; a < f.q(); ++a) f.solve_linearized(FieldElement{a}, 1, f.one());
            }),
            ErrorCode::NonUniqueSolution);
}

TEST(Labels, PositionsAndLabels) {
  const auto f = gf16();
  EXPECT_EQ(f.position(f.zero()), 0u);
  EXPECT_EQ(f.position(f.one()), 1u);
  EXPECT_EQ(f.position(f.alpha_pow(5)), 6u);
  EXPECT_EQ(f.label(f.alpha_pow(5)), "alpha^5");
  EXPECT_EQ(f.parse_label("alpha^20"), f.alpha_pow(5));
  for (std::size_t i = 0; i < f.q(); ++i) EXPECT_EQ(f.position(f.at_position(i)), i);
  EXPECT_EQ(error_of([&] { f.parse_label("beta"); }), ErrorCode::ParseError);
}
