#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shortcode/code.hpp"
#include "shortcode/count.hpp"
#include "shortcode/error.hpp"
#include "shortcode/gf.hpp"

namespace shortcode {

/// A closed-form weight distribution, A_0 included.
struct PredictedWD {
  std::string tag;
  int p = 2;
  int m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  WeightDistribution wd;
};

struct LambdaPrediction {
  long lambda = 0;
  std::string branch;
};

struct TableParams {
  int p = 2;
  int m = 0;
  std::optional<long> lambda;
};

/// Tags accepted by table_wd.
inline const std::vector<std::string>& table_tags() {
  static const std::vector<std::string> tags{"tab1",  "tab2",  "tab3",  "tab4",  "tab5",  "tab6",
                                             "tab7",  "tab8",  "tab9",  "tab10", "gf4",   "tab11",
                                             "tab12", "tab13", "tab14", "tab15", "tab16"};
  return tags;
}

namespace detail {

inline void gate(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::GateUnsatisfied, what);
}

/// x/2 for an x the gates make even.
inline long half(long x) {
  if (x % 2 != 0) throw Error(ErrorCode::GateUnsatisfied, "odd exponent numerator");
  return x / 2;
}

inline long quarter(long x) {
  if (x % 4 != 0) throw Error(ErrorCode::GateUnsatisfied, "exponent numerator not divisible by 4");
  return x / 4;
}

inline Rational P(long base, long e) { return pow_q(base, e); }

inline Rational S(long k) { return Rational(neg_one_pow(k)); }

class TableBuilder {
 public:
  TableBuilder(std::string tag, int p, int m, long n, long k) {
    out_.tag = std::move(tag);
    out_.p = p;
    out_.m = m;
    if (n < 0 || k < 0) throw Error(ErrorCode::GateUnsatisfied, "negative length or dimension");
    out_.n = static_cast<std::size_t>(n);
    out_.k = static_cast<std::size_t>(k);
    out_.wd[0] = 1;
  }

  TableBuilder& row(const Rational& weight, const Rational& count) {
    const Count w = to_count(weight);
    const Count c = to_count(count);
    if (c < 0) throw Error(ErrorCode::NegativeCount, out_.tag + ": negative count " + c.str() + " at weight " + w.str());
    if (c == 0) return *this;
    if (w <= 0 || w > static_cast<long long>(out_.n)) {
      throw Error(ErrorCode::GateUnsatisfied, out_.tag + ": weight " + w.str() + " outside 1..n");
    }
    out_.wd[static_cast<std::size_t>(w)] += c;
    return *this;
  }

  PredictedWD done() {
    Count mass = 1;
    for (std::size_t i = 0; i < out_.k; ++i) mass *= out_.p;
    if (total(out_.wd) != mass) {
      throw Error(ErrorCode::MassMismatch, out_.tag + ": counts sum to " + total(out_.wd).str() + ", expected " + mass.str());
    }
    return std::move(out_);
  }

 private:
  PredictedWD out_;
};

inline PredictedWD binary_odd_table(const std::string& tag, int m) {
  gate(m >= 5 && m % 2 == 1, tag + " needs odd m >= 5");
  const long M = m;
  const Rational q = P(2, M);
  const Rational w1 = P(2, M - 1) - P(2, half(M - 1));
  const Rational w2 = P(2, M - 1);
  const Rational w3 = P(2, M - 1) + P(2, half(M - 1));
  auto b = [&](long t) { return TableBuilder(tag, 2, m, (1L << m) - t, 2 * M + 1 - t); };
  if (tag == "tab1") {
    return b(0)
        .row(w1, (q - 1) * P(2, M - 1))
        .row(w2, (q - 1) * (P(2, M + 1) - q + 2))
        .row(w3, (q - 1) * P(2, M - 1))
        .row(q, 1)
        .done();
  }
  if (tag == "tab3") {
    return b(1)
        .row(w1, P(2, half(M - 5)) * (q - 1) * (2 + P(2, half(1 + M))))
        .row(w2, -1 + P(2, M - 1) + P(2, 2 * M - 1))
        .row(w3, P(2, half(M - 5)) * (q - 1) * (-2 + P(2, half(1 + M))))
        .done();
  }
  if (tag == "tab4") {
    return b(2)
        .row(w1, P(2, half(M - 7)) * (-4 + P(2, 2 + M) + P(2, half(1 + 3 * M))))
        .row(w2, -1 + P(2, 2 * M - 2))
        .row(w3, P(2, half(M - 7)) * (4 - P(2, 2 + M) + P(2, half(1 + 3 * M))))
        .done();
  }
  if (tag == "tab5") {
    return b(3)
        .row(w1, -P(2, half(M - 3)) + 3 * P(2, half(3 * M - 7)) + P(2, M - 3) + P(2, 2 * M - 4))
        .row(w2, (-1 + P(2, M - 2)) * (1 + P(2, M - 1)))
        .row(w3, P(2, half(M - 3)) - 3 * P(2, half(3 * M - 7)) + P(2, M - 3) + P(2, 2 * M - 4))
        .done();
  }
  if (tag == "tab8") {
    return b(4)
        .row(w1, -P(2, half(M - 3)) + P(2, M - 3) + P(2, 2 * M - 5) + P(2, half(3 * M - 5)))
        .row(w2, -1 - P(2, M - 2) + P(4, M - 2))
        .row(w3, P(2, half(M - 3)) + P(2, M - 3) + P(2, 2 * M - 5) - P(2, half(3 * M - 5)))
        .done();
  }
  // tab9
  return b(4)
      .row(w1, 3 * P(2, M - 4) - P(2, half(M - 3)) + P(2, 2 * M - 5) + P(2, half(3 * M - 5)))
      .row(w2, P(2, -4) * (-8 + q) * (2 + q))
      .row(w3, 3 * P(2, M - 4) + P(2, half(M - 3)) + P(2, 2 * M - 5) - P(2, half(3 * M - 5)))
      .done();
}

inline PredictedWD binary_even_table(const std::string& tag, int m, std::optional<long> lambda) {
  gate(m >= 4 && m % 2 == 0, tag + " needs even m >= 4");
  const long M = m;
  const long h = M / 2;
  const Rational q = P(2, M);
  const Rational r = P(2, h);
  const Rational w1 = P(2, M - 1) - r;
  const Rational w2 = P(2, M - 1) - P(2, h - 1);
  const Rational w3 = P(2, M - 1);
  const Rational w4 = P(2, M - 1) + P(2, h - 1);
  const Rational w5 = P(2, M - 1) + r;
  const Rational third = Rational(1, 3);
  auto b = [&](long t, long k) { return TableBuilder(tag, 2, m, (1L << m) - t, k); };
  if (tag == "tab2") {
    return b(0, 2 * M + 1)
        .row(w1, (q - 1) * P(2, M - 2) / 3)
        .row(w2, (q - 1) * P(2, M + 1) / 3)
        .row(w3, 2 * (q - 1) * (P(2, M - 2) + 1))
        .row(w4, (q - 1) * P(2, M + 1) / 3)
        .row(w5, (q - 1) * P(2, M - 2) / 3)
        .row(q, 1)
        .done();
  }
  if (tag == "tab6") {
    return b(1, 2 * M)
        .row(w1, third * P(2, h - 3) * (2 + r) * (q - 1))
        .row(w2, third * r * (r - 1) * (1 + r) * (1 + r))
        .row(w3, (q - 1) * (1 + P(2, M - 2)))
        .row(w4, third * r * (r - 1) * (r - 1) * (1 + r))
        .row(w5, third * P(2, h - 3) * (r - 2) * (q - 1))
        .done();
  }
  if (tag == "tab7") {
    return b(2, 2 * M - 1)
        .row(w1, third * P(2, h - 4) * (2 + r) * (q + P(2, 1 + h) - 2))
        .row(w2, third * P(2, h - 1) * (1 + r) * (q + r - 2))
        .row(w3, (P(2, M - 1) - 1) * (1 + P(2, M - 2)))
        .row(w4, third * P(2, h - 1) * (r - 1) * (q - r - 2))
        .row(w5, third * P(2, h - 4) * (4 + P(2, 1 + h) + P(2, 3 * h) - P(2, 2 + M)))
        .done();
  }
  if (tag == "tab10") {
    gate(lambda.has_value(), "tab10 needs lambda");
    gate(*lambda >= 0, "lambda must be non-negative");
    const Rational l = *lambda;
    return b(3, 2 * M - 2)
        .row(w1, third * P(2, h - 5) * (8 + P(2, 3 + h) + P(2, 3 * h) + P(2, 2 + M) + 12 * l))
        .row(w2, third * P(2, h - 3) * ((2 + r) * (-8 + 3 * r + P(2, 1 + M)) - 6 * l))
        .row(w3, -1 + P(4, M - 2))
        .row(w4, third * P(2, h - 3) * ((-2 + r) * (-8 - 3 * r + P(2, 1 + M)) + 6 * l))
        .row(w5, third * P(2, h - 5) * (-8 + P(2, 3 + h) + P(2, 3 * h) - P(2, 2 + M) - 12 * l))
        .done();
  }
  // gf4
  const Rational s = S(h);
  return b(4, 2 * M - 3)
      .row(w1, third * P(2, h - 6) * (-16 + P(2, 3 * h) - P(2, M + 1) * (-4 + s) - P(2, 4 + h) * (-1 + s)))
      .row(w2, Rational(1, 24) * (P(2, h + 2) + q) * (q + s * r - 2))
      .row(w3, -1 + P(2, 2 * M - 5) - s * P(2, 3 * h - 4))
      .row(w4, Rational(1, 24) * (-P(2, h + 2) + q) * (q + s * r - 2))
      .row(w5, third * P(2, h - 6) * (16 + P(2, 3 * h) - P(2, M + 1) * (4 + s) + P(2, 4 + h) * (1 + s)))
      .done();
}

inline PredictedWD pn_table(const std::string& tag, int p, int m) {
  gate(p != 2 && is_prime(p), tag + " needs an odd prime p");
  gate(m >= 1, tag + " needs m >= 1");
  const long M = m;
  const long pp = p;
  const Rational pm = P(pp, M);
  const Rational w0 = P(pp, M - 1) * (pp - 1);
  auto b = [&](long t, long k) { return TableBuilder(tag, p, m, static_cast<long>(ipow(pp, M)) - t, k); };
  if (tag == "tab11" || tag == "tab12") {
    gate(M % 2 == 1, tag + " needs odd m");
    const Rational d = P(pp, half(M - 1));
    if (tag == "tab11") {
      return b(1, 2 * M)
          .row(w0, (pm - 1) * (1 + P(pp, M - 1)))
          .row(w0 - d, Rational(1, 2) * (pp - 1) * P(pp, half(M - 3)) * (pm - 1) * (pp + P(pp, half(1 + M))))
          .row(w0 + d, Rational(1, 2) * (pp - 1) * P(pp, half(M - 3)) * (pm - 1) * (-pp + P(pp, half(1 + M))))
          .done();
    }
    return b(2, 2 * M - 1)
        .row(w0, P(pp, 2 * M - 2) - 1)
        .row(w0 - d, (pp - 1) * (-d + P(pp, 2 * M - 2) + 2 * P(pp, half(3 * M - 3))) / 2)
        .row(w0 + d, (pp - 1) * (d + P(pp, 2 * M - 2) - 2 * P(pp, half(3 * M - 3))) / 2)
        .done();
  }
  if (tag == "tab13" || tag == "tab14") {
    gate(M % 2 == 0, tag + " needs even m");
    const long h = M / 2;
    const Rational r = P(pp, h);
    const Rational d = P(pp, h - 1);
    const Rational w1 = (pp - 1) * (P(pp, M - 1) - d);
    const Rational w2 = w0 - d;
    const Rational w4 = w0 + d;
    const Rational w5 = (pp - 1) * (P(pp, M - 1) + d);
    if (tag == "tab13") {
      return b(1, 2 * M)
          .row(w1, d * (pp + r - 1) * (pm - 1) / 2)
          .row(w2, (pp - 1) * d * (r - 1) * (1 + r) * (1 + r) / 2)
          .row(w0, pm - 1)
          .row(w4, (pp - 1) * d * (r - 1) * (r - 1) * (1 + r) / 2)
          .row(w5, d * (-pp + r + 1) * (pm - 1) / 2)
          .done();
    }
    const Rational d2 = P(pp, h - 2);
    return b(2, 2 * M - 1)
        .row(w1, d2 * (r - 1) * (-1 + pp + r) * (pp + r) / 2)
        .row(w2, (pp - 1) * d2 * (1 + r) * (-pp + r + pm) / 2)
        .row(w0, P(pp, M - 1) - 1)
        .row(w4, (pp - 1) * d2 * (-1 + r) * (-pp - r + pm) / 2)
        .row(w5, d2 * (r + 1) * (1 - pp + r) * (r - pp) / 2)
        .done();
  }
  const long q = static_cast<long>(ipow(pp, M));
  if (tag == "tab15") {
    gate(M % 2 == 1 && M >= 3, "tab15 needs odd m >= 3");
    const Rational B = S(half(q - 1) + quarter((pp - 1) * (M - 1))) * P(pp, half(M - 1));
    const Rational d = P(pp, half(M - 1)) * S(quarter((pp - 1) * (M + 1)));
    const Rational c = (P(pp, M - 1) - 1) / 2 * (pp - 1);
    return b(pp, 2 * M - 2)
        .row(w0, (P(pp, M - 1) - 1) * (P(pp, M - 2) + 1))
        .row(w0 - d, c * (P(pp, M - 2) + B))
        .row(w0 + d, c * (P(pp, M - 2) - B))
        .done();
  }
  // tab16
  gate(M % 2 == 0 && M >= 2, "tab16 needs even m >= 2");
  const long base = quarter(M * (pp - 1));
  // (sqrt(-1))^((p-1)m/2) = (-1)^((p-1)m/4) since (p-1)m/2 is even
  const Rational B1 = (P(pp, M - 1) - 1 - (pp - 1) * P(pp, half(M - 2)) * S(base)) / 2;
  const Rational B2 = S(half(q + 1) + base) * (pp - 1) * P(pp, half(M - 2));
  const Rational big = (pp - 1) * P(pp, half(M - 2));
  const Rational small = P(pp, half(M - 2));
  const Rational rest = P(pp, M - 1) - 1 - B1;
  return b(pp, 2 * M - 2)
      .row(w0, P(pp, M - 1) - 1)
      .row(w0 - big * S(base + 1), B1 * (P(pp, M - 2) + B2))
      .row(w0 - big * S(base), rest * (P(pp, M - 2) - B2))
      .row(w0 - small * S(base), B1 * (P(pp, M - 1) - P(pp, M - 2) - B2))
      .row(w0 - small * S(base + 1), rest * (P(pp, M - 1) - P(pp, M - 2) + B2))
      .done();
}

}  // namespace detail

/// Exact evaluation of a tabulated weight distribution.
inline PredictedWD table_wd(const std::string& tag, const TableParams& params) {
  if (tag == "tab1" || tag == "tab3" || tag == "tab4" || tag == "tab5" || tag == "tab8" || tag == "tab9") {
    detail::gate(params.p == 2, tag + " is binary");
    return detail::binary_odd_table(tag, params.m);
  }
  if (tag == "tab2" || tag == "tab6" || tag == "tab7" || tag == "tab10" || tag == "gf4") {
    detail::gate(params.p == 2, tag + " is binary");
    return detail::binary_even_table(tag, params.m, params.lambda);
  }
  if (tag == "tab11" || tag == "tab12" || tag == "tab13" || tag == "tab14" || tag == "tab15" || tag == "tab16") {
    return detail::pn_table(tag, params.p, params.m);
  }
  throw Error(ErrorCode::ParseError, "unknown table tag '" + tag + "'");
}

/// Tag of the distribution of the unshortened binary code.
inline std::string full_table_tag(int m) { return m % 2 == 1 ? "tab1" : "tab2"; }

/// Tag for a shortening by t positions that holds for every T: binary t <= 3
/// (odd m) or t <= 2 (even m), odd p with t <= 2.
inline std::optional<std::string> design_table_tag(int p, int m, std::size_t t) {
  if (p == 2) {
    if (m % 2 == 1) {
      static const char* odd[] = {"tab1", "tab3", "tab4", "tab5"};
      if (t <= 3) return odd[t];
    } else {
      static const char* even[] = {"tab2", "tab6", "tab7"};
      if (t <= 2) return even[t];
    }
    return std::nullopt;
  }
  if (t == 1) return m % 2 == 1 ? "tab11" : "tab13";
  if (t == 2) return m % 2 == 1 ? "tab12" : "tab14";
  return std::nullopt;
}

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
};

/// Parameters of the dual of the binary APN code of length 2^m.
inline CodeParams dual_params(int m) {
  detail::gate(m >= 4, "needs m >= 4");
  const std::size_t q = std::size_t{1} << m;
  return {q, q - 2 * static_cast<std::size_t>(m) - 1, 6};
}

/// Number of weight-6 dual codewords, for even m.
inline Count A6_dual(int m) {
  detail::gate(m >= 4 && m % 2 == 0, "needs even m >= 4");
  const Rational q = detail::P(2, m);
  return to_count(Rational(1, 45) * detail::P(2, m - 4) * (q - 4) * (q - 4) * (q - 1));
}

/// A_4 of the dual punctured on a 3-set T with lambda_{T,6} = lambda.
inline Count A4_dual_punctured3(int m, long lambda) {
  detail::gate(m >= 4 && m % 2 == 0, "needs even m >= 4");
  return to_count(2 * (detail::P(2, m - 2) - 1) * (detail::P(2, m - 2) - 1) - 3 * lambda);
}

/// A_4 of the dual punctured on a 2-set.
inline Count A4_dual_punctured2(int m) {
  detail::gate(m >= 4 && m % 2 == 0, "needs even m >= 4");
  return to_count(Rational(2, 3) * (detail::P(2, m - 2) - 1) * (detail::P(2, m - 2) - 1));
}

/// lambda_{T,6} of the dual for a 3-subset of GF(4), even m.
inline long gf4_lambda6(int m) {
  detail::gate(m >= 4 && m % 2 == 0, "needs even m >= 4");
  const long q = 1L << m;
  return (q - 2 - neg_one_pow(m / 2) * (1L << (m / 2 + 1))) / 6 - 1;
}

/// Low-weight counts of the dual punctured on T = GF(4), given N_(0,1).
struct Gf4Moments {
  Count A3 = 0;
  Count A4 = 0;
  Count lambda8 = 0;
};

inline Gf4Moments gf4_moments(int m, const Count& n01) {
  const long l6 = gf4_lambda6(m);
  const Rational n = Rational(static_cast<BigInt>(n01));
  Gf4Moments out;
  out.A3 = 4 * l6;
  out.lambda8 = to_count(n / 24 - 1 - 4 * l6);
  const Rational a4 = 4 * (detail::P(2, m - 2) - 1) * (detail::P(2, m - 2) - 1) -
                      Rational(8, 3) * (detail::P(2, m) - 2 - neg_one_pow(m / 2) * detail::P(2, m / 2 + 1)) + n / 24 + 15;
  out.A4 = to_count(a4);
  return out;
}

namespace detail {

inline FieldElement gold_power_sum(const Field& fld, long e, const std::vector<FieldElement>& t, FieldElement* linear) {
  const std::uint64_t s = (std::uint64_t{1} << e) + 1;
  FieldElement s1 = fld.zero(), ss = fld.zero();
  for (auto x : t) {
    s1 = fld.add(s1, x);
    ss = fld.add(ss, fld.pow(x, s));
  }
  *linear = s1;
  return ss;
}

}  // namespace detail

/// lambda_{T,6} of the dual for a 4-set T and f = x^(2^e+1): 1 exactly when
/// S_1 != 0 and Tr(S_s / S_1^s + 1) = 0.
inline LambdaPrediction predict_lambda_odd4(const Field& fld, long e, const std::vector<FieldElement>& t) {
  detail::gate(fld.p() == 2, "needs p = 2");
  detail::gate(e > 0 && std::gcd(static_cast<long>(fld.m()), e) == 1, "needs gcd(m,e) = 1");
  detail::gate(t.size() == 4, "needs four elements");
  FieldElement s1;
  const FieldElement ss = detail::gold_power_sum(fld, e, t, &s1);
  if (s1.is_zero()) return {0, "sum is zero"};
  const std::uint64_t s = (std::uint64_t{1} << e) + 1;
  const int tr = fld.trace(fld.add(fld.div(ss, fld.pow(s1, s)), fld.one()));
  if (tr == 0) return {1, "trace condition holds"};
  return {0, "trace condition fails"};
}

/// lambda_{T,6} of the dual for a 3-set T, even m and f = x^(2^e+1).
inline LambdaPrediction predict_lambda_even3(const Field& fld, long e, const std::vector<FieldElement>& t) {
  detail::gate(fld.p() == 2 && fld.m() % 2 == 0, "needs p = 2 and m even");
  detail::gate(e > 0 && std::gcd(static_cast<long>(fld.m()), e) == 1, "needs gcd(m,e) = 1");
  detail::gate(t.size() == 3, "needs three elements");
  FieldElement a;
  const FieldElement b = detail::gold_power_sum(fld, e, t, &a);
  const std::uint64_t s = (std::uint64_t{1} << e) + 1;
  const FieldElement c = fld.add(fld.pow(a, s), b);
  if (c.is_zero()) throw Error(ErrorCode::DegenerateT, "a^(2^e+1) = b");
  const long m = fld.m();
  const long q = 1L << m;
  const long h = m / 2;
  if (fld.is_cubic_residue(c)) return {(q - 2 - neg_one_pow(h) * (1L << (h + 1))) / 6 - 1, "cubic residue"};
  return {(q - 2 + neg_one_pow(h) * (1L << h)) / 6 - 1, "cubic nonresidue"};
}

enum class TransferMode { Shorten, Puncture };

/// Distribution of C_T or C^T for a code whose supports form t-designs.
inline WeightDistribution design_transfer(const WeightDistribution& full, std::size_t n, std::size_t t, TransferMode mode) {
  if (t == 0) return full;
  if (t > n) throw Error(ErrorCode::IndexOutOfRange, "t exceeds length");
  const long nu = static_cast<long>(n);
  const long tl = static_cast<long>(t);
  auto A = [&](long w) -> Rational {
    const auto it = full.find(static_cast<std::size_t>(w));
    return it == full.end() ? Rational(0) : Rational(static_cast<BigInt>(it->second));
  };
  WeightDistribution out;
  out[0] = 1;
  for (long k = 1; k <= nu - tl; ++k) {
    Rational v = 0;
    if (mode == TransferMode::Shorten) {
      if (k >= tl && A(k) != 0) {
        v = Rational(binomial(k, tl) * binomial(nu - tl, k)) / Rational(binomial(nu, tl) * binomial(nu - tl, k - tl)) * A(k);
      }
    } else {
      for (long i = 0; i <= tl; ++i) {
        if (k + i < tl || A(k + i) == 0) continue;
        const Rational num = Rational(binomial(nu - tl, k) * binomial(k + i, tl) * binomial(tl, i));
        const Rational den = Rational(binomial(nu - tl, k - tl + i) * binomial(nu, tl));
        v += num / den * A(k + i);
      }
    }
    const Count c = to_count(v);
    if (c != 0) out[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

struct AssmusMattson {
  bool holds = false;
  std::size_t weights_in_range = 0;
  std::size_t w = 0;
  std::size_t w_dual = 0;
};

/// Largest w <= nu with w - floor((w + q - 2)/(q - 1)) < d.
inline std::size_t am_threshold(std::size_t nu, long q, std::size_t d) {
  for (std::size_t w = nu + 1; w-- > 0;) {
    const long wl = static_cast<long>(w);
    if (wl - (wl + q - 2) / (q - 1) < static_cast<long>(d)) return w;
  }
  return 0;
}

/// Hypothesis check: 1 <= t < min(d, d_dual) and at most d_dual - t nonzero
/// weights of C in 1..n-t.
inline AssmusMattson assmus_mattson(const WeightDistribution& wd, std::size_t n, long q, std::size_t dual_d, std::size_t t) {
  AssmusMattson out;
  const std::size_t d = min_distance(wd);
  for (const auto& [w, a] : wd)
    if (w >= 1 && w + t <= n && a != 0) ++out.weights_in_range;
  out.w = am_threshold(n, q, d);
  out.w_dual = am_threshold(n, q, dual_d);
  out.holds = t >= 1 && t < std::min(d, dual_d) && dual_d >= t && out.weights_in_range <= dual_d - t;
  return out;
}

}  // namespace shortcode
