#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "shortcode/count.hpp"
#include "shortcode/error.hpp"
#include "shortcode/gf.hpp"

namespace shortcode {

using ComplexVal = std::complex<double>;

/// A brute-force integer count paired with its closed form.
struct CountResult {
  Count brute = 0;
  Count closed = 0;
  bool agree = false;
};

inline CountResult make_count(Count brute, Count closed) { return {brute, closed, brute == closed}; }

/// A brute-force character sum paired with its closed form.
struct SumCheck {
  ComplexVal brute;
  ComplexVal closed;
  double tol = 0;
  bool agree = false;
};

/// 1e-6 sqrt(q) for odd p; exact for p = 2, where every sum is an integer.
inline double sum_tolerance(const Field& fld) {
  return fld.p() == 2 ? 0.0 : 1e-6 * std::sqrt(static_cast<double>(fld.q()));
}

inline SumCheck make_check(const Field& fld, ComplexVal brute, ComplexVal closed) {
  const double tol = sum_tolerance(fld);
  return {brute, closed, tol, std::abs(brute - closed) <= tol};
}

/// (sqrt(-1))^k, exact on the four branches.
inline ComplexVal i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// zeta_p^k.
inline ComplexVal zeta(int p, long k) {
  const long r = ((k % p) + p) % p;
  if (r == 0) return {1, 0};
  const double t = 2 * std::numbers::pi * static_cast<double>(r) / p;
  return {std::cos(t), std::sin(t)};
}

/// sqrt(p*) with p* = (-1)^((p-1)/2) p, realised as i sqrt(p) for p = 3 mod 4.
inline ComplexVal sqrt_pstar(int p) {
  return i_pow(static_cast<long>((p - 1) / 2) * ((p - 1) / 2)) * std::sqrt(static_cast<double>(p));
}

inline ComplexVal sqrt_pstar_pow(int p, long k) {
  ComplexVal r{1, 0};
  const ComplexVal s = sqrt_pstar(p);
  for (long i = 0; i < k; ++i) r *= s;
  return r;
}

inline double sqrt_q(const Field& fld) { return std::sqrt(static_cast<double>(fld.q())); }

/// Canonical additive character chi_1(x) = zeta_p^Tr(x).
inline ComplexVal chi1(const Field& fld, FieldElement x) { return zeta(fld.p(), fld.trace(x)); }

/// Legendre symbol on GF(p), i.e. the quadratic character of the prime field.
inline int eta_prime(int p, long c) { return legendre(c, p); }

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::GateUnsatisfied, what);
}

inline void require_odd(const Field& fld) { require(fld.p() != 2, "needs odd characteristic"); }

inline void require_odd_quotient(const Field& fld, long e) {
  require(e > 0 && (fld.m() / std::gcd(static_cast<long>(fld.m()), e)) % 2 == 1, "needs m/gcd(m,e) odd");
}

inline void require_coprime_even(const Field& fld, long e) {
  require(fld.p() == 2, "needs p = 2");
  require(fld.m() % 2 == 0, "needs m even");
  require(e > 0 && std::gcd(static_cast<long>(fld.m()), e) == 1, "needs gcd(m,e) = 1");
}

inline std::uint64_t pe_plus_1(const Field& fld, long e) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(fld.p());
  return r + 1;
}

inline std::vector<ComplexVal> zeta_table(int p) {
  std::vector<ComplexVal> z(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) z[static_cast<std::size_t>(k)] = zeta(p, k);
  return z;
}

inline Count pow_count(long base, long exp) {
  Count r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// S_e(a,b) = sum_x chi_1(a x^(p^e+1) + b x), summed directly.
inline ComplexVal exp_sum_Se_brute(const Field& fld, long e, FieldElement a, FieldElement b) {
  const auto s = detail::pe_plus_1(fld, e);
  if (fld.p() == 2) {
    long long v = 0;
    for (std::uint32_t i = 0; i < fld.q(); ++i) {
      const FieldElement x{i};
      v += fld.trace(fld.add(fld.mul(a, fld.pow(x, s)), fld.mul(b, x))) ? -1 : 1;
    }
    return {static_cast<double>(v), 0};
  }
  const auto z = detail::zeta_table(fld.p());
  ComplexVal v{0, 0};
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const FieldElement x{i};
    v += z[static_cast<std::size_t>(fld.trace(fld.add(fld.mul(a, fld.pow(x, s)), fld.mul(b, x))))];
  }
  return v;
}

/// Closed form of S_e(a,b): q at a = b = 0; 0 at a = 0, b != 0; the binary
/// b = 0 evaluation keyed on cubic residuosity; the odd-p evaluation via x_{a,b}.
inline ComplexVal exp_sum_Se_closed(const Field& fld, long e, FieldElement a, FieldElement b) {
  if (a.is_zero()) return b.is_zero() ? ComplexVal(fld.q(), 0) : ComplexVal(0, 0);
  const int m = fld.m();
  if (fld.p() == 2) {
    detail::require_coprime_even(fld, e);
    detail::require(b.is_zero(), "binary closed form needs b = 0");
    const double h = std::ldexp(1.0, m / 2);
    const double sign = neg_one_pow(m / 2);
    return fld.is_cubic_residue(a) ? ComplexVal(-sign * 2 * h, 0) : ComplexVal(sign * h, 0);
  }
  detail::require_odd_quotient(fld, e);
  detail::require(!b.is_zero(), "odd-p closed form needs b != 0");
  const FieldElement x = fld.solve_linearized(a, e, b);
  const auto s = detail::pe_plus_1(fld, e);
  ComplexVal v = static_cast<double>(neg_one_pow(m - 1)) * sqrt_q(fld) * static_cast<double>(fld.eta(fld.neg(a))) *
                 chi1(fld, fld.neg(fld.mul(a, fld.pow(x, s))));
  if (fld.p() % 4 == 3) v *= i_pow(3L * m);
  return v;
}

inline SumCheck exp_sum_Se(const Field& fld, long e, FieldElement a, FieldElement b) {
  return make_check(fld, exp_sum_Se_brute(fld, e, a, b), exp_sum_Se_closed(fld, e, a, b));
}

/// sum_{b != 0} S_e(a,b)^h for p = 2, in exact integers.
inline Count power_sum_Se_brute(const Field& fld, long e, FieldElement a, int h) {
  Count total = 0;
  for (std::uint32_t i = 1; i < fld.q(); ++i) {
    const auto v = static_cast<long long>(std::llround(exp_sum_Se_brute(fld, e, a, FieldElement{i}).real()));
    Count t = 1;
    for (int j = 0; j < h; ++j) t *= v;
    total += t;
  }
  return total;
}

/// Power-sum identity; stated only for even h.
inline CountResult power_sum_Se(const Field& fld, long e, FieldElement a, int h) {
  detail::require_coprime_even(fld, e);
  detail::require(!a.is_zero(), "needs a != 0");
  detail::require(h > 0 && h % 2 == 0, "closed form needs even h");
  const long m = fld.m();
  const Count closed = fld.is_cubic_residue(a) ? (detail::pow_count(2, m - 2) - 1) * detail::pow_count(2, (m / 2 + 1) * h)
                                               : (detail::pow_count(2, m) - 1) * detail::pow_count(2, m / 2 * h);
  return make_count(power_sum_Se_brute(fld, e, a, h), closed);
}

/// G(eta, chi_1) over GF(q) and G(eta-bar, chi-bar_1) over GF(p).
inline std::pair<SumCheck, SumCheck> gauss_sums(const Field& fld) {
  detail::require_odd(fld);
  const int p = fld.p();
  const long m = fld.m();
  ComplexVal g{0, 0};
  for (std::uint32_t i = 1; i < fld.q(); ++i) g += static_cast<double>(fld.eta(FieldElement{i})) * chi1(fld, FieldElement{i});
  ComplexVal gbar{0, 0};
  for (int c = 1; c < p; ++c) gbar += static_cast<double>(eta_prime(p, c)) * zeta(p, c);
  const long h = static_cast<long>((p - 1) / 2) * ((p - 1) / 2);
  const ComplexVal g_closed = static_cast<double>(neg_one_pow(m - 1)) * i_pow(h * m) * sqrt_q(fld);
  const ComplexVal gbar_closed = i_pow(h) * std::sqrt(static_cast<double>(p));
  const double tol = sum_tolerance(fld);
  return {SumCheck{g, g_closed, tol, std::abs(g - g_closed) <= tol},
          SumCheck{gbar, gbar_closed, tol, std::abs(gbar - gbar_closed) <= tol}};
}

/// Restriction of eta to GF(p)*: identically 1 for even m, the Legendre symbol for odd m.
inline bool eta_on_prime_field_holds(const Field& fld) {
  detail::require_odd(fld);
  for (int c = 1; c < fld.p(); ++c) {
    const int v = fld.eta(fld.from_int(c));
    const int expect = fld.m() % 2 == 0 ? 1 : eta_prime(fld.p(), c);
    if (v != expect) return false;
  }
  return true;
}

/// sum_x chi_b(a2 x^2 + a1 x + a0). Odd p uses chi_1; p = 2 uses chi_b.
inline SumCheck quad_char_sum(const Field& fld, FieldElement a2, FieldElement a1, FieldElement a0,
                              FieldElement b = FieldElement{1}) {
  if (a2.is_zero()) throw Error(ErrorCode::ZeroInput, "needs a2 != 0");
  auto poly = [&](FieldElement x) { return fld.add(fld.add(fld.mul(a2, fld.mul(x, x)), fld.mul(a1, x)), a0); };
  if (fld.p() == 2) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "needs b != 0");
    long long v = 0;
    for (std::uint32_t i = 0; i < fld.q(); ++i) v += fld.trace(fld.mul(b, poly(FieldElement{i}))) ? -1 : 1;
    long long closed = 0;
    if (a2 == fld.mul(b, fld.mul(a1, a1))) closed = (fld.trace(fld.mul(b, a0)) ? -1 : 1) * static_cast<long long>(fld.q());
    return make_check(fld, {static_cast<double>(v), 0}, {static_cast<double>(closed), 0});
  }
  ComplexVal v{0, 0};
  for (std::uint32_t i = 0; i < fld.q(); ++i) v += chi1(fld, poly(FieldElement{i}));
  const FieldElement four = fld.from_int(4);
  const FieldElement shift = fld.sub(a0, fld.div(fld.mul(a1, a1), fld.mul(four, a2)));
  const ComplexVal closed = chi1(fld, shift) * static_cast<double>(fld.eta(a2)) * gauss_sums(fld).first.closed;
  return make_check(fld, v, closed);
}

/// Delta = sum_{c in GF(p)*} S_e(ac, bc).
inline SumCheck delta_sum(const Field& fld, long e, FieldElement a, FieldElement b) {
  detail::require_odd(fld);
  detail::require_odd_quotient(fld, e);
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "needs a, b != 0");
  const int p = fld.p();
  const long m = fld.m();
  ComplexVal brute{0, 0};
  for (int c = 1; c < p; ++c) {
    const auto cc = fld.from_int(c);
    brute += exp_sum_Se_brute(fld, e, fld.mul(a, cc), fld.mul(b, cc));
  }
  const FieldElement x = fld.solve_linearized(a, e, b);
  const int tr = fld.trace(fld.mul(a, fld.pow(x, detail::pe_plus_1(fld, e))));
  const double ea = fld.eta(a);
  const double rq = sqrt_q(fld);
  const bool p1 = p % 4 == 1;
  ComplexVal closed;
  if (m % 2 == 1) {
    if (tr == 0) {
      closed = 0;
    } else {
      closed = ea * static_cast<double>(fld.eta(fld.from_int(tr))) * rq * sqrt_pstar(p);
      if (!p1) closed *= i_pow(3 * m);
    }
  } else {
    closed = (tr == 0 ? -static_cast<double>(p - 1) : 1.0) * ea * rq;
    if (!p1) closed *= i_pow(m);
  }
  return make_check(fld, brute, closed);
}

/// Rounds a complex closed form to an integer; real-valued by construction.
inline Count to_integer(ComplexVal v) { return Count(static_cast<long long>(std::llround(v.real()))); }

/// Nhat_0(a,b) = #{x : Tr(a x^(p^e+1) + b x) = 0}.
inline CountResult count_Nhat0(const Field& fld, long e, FieldElement a, FieldElement b) {
  detail::require_odd(fld);
  detail::require_odd_quotient(fld, e);
  const auto s = detail::pe_plus_1(fld, e);
  Count brute = 0;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const FieldElement x{i};
    if (fld.trace(fld.add(fld.mul(a, fld.pow(x, s)), fld.mul(b, x))) == 0) ++brute;
  }
  const int p = fld.p();
  const long m = fld.m();
  const Count pm1 = detail::pow_count(p, m - 1);
  Count closed;
  if (a.is_zero()) {
    closed = b.is_zero() ? Count(fld.q()) : pm1;
  } else if (b.is_zero()) {
    if (m % 2 == 1) {
      closed = pm1;
    } else {
      ComplexVal d = static_cast<double>(p - 1) * static_cast<double>(fld.eta(a)) * sqrt_q(fld);
      if (p % 4 == 3) d *= i_pow(m);
      closed = to_integer((static_cast<double>(fld.q()) - d) / static_cast<double>(p));
    }
  } else {
    const ComplexVal delta = delta_sum(fld, e, a, b).closed;
    closed = to_integer((static_cast<double>(fld.q()) + delta) / static_cast<double>(p));
  }
  return make_count(brute, closed);
}

/// N_0(a,b) = #{x : Tr(a x^2 + b x) = 0}, with the case split on Tr(b^2/4a) and eta(a).
inline CountResult count_N0_quadratic(const Field& fld, FieldElement a, FieldElement b) {
  detail::require_odd(fld);
  Count brute = 0;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const FieldElement x{i};
    if (fld.trace(fld.add(fld.mul(a, fld.mul(x, x)), fld.mul(b, x))) == 0) ++brute;
  }
  const int p = fld.p();
  const long m = fld.m();
  const Count pm1 = detail::pow_count(p, m - 1);
  Count closed;
  if (a.is_zero()) {
    closed = b.is_zero() ? Count(fld.q()) : pm1;
  } else {
    const int t = fld.trace(fld.div(fld.mul(b, b), fld.mul(fld.from_int(4), a)));
    if (m % 2 == 1) {
      if (t == 0) {
        closed = pm1;
      } else {
        const int branch = fld.eta(a) * eta_prime(p, -t);
        const long k = static_cast<long>(p - 1) * (m + 1) / 4 + (branch == 1 ? 0 : 1);
        closed = pm1 + neg_one_pow(k) * detail::pow_count(p, (m - 1) / 2);
      }
    } else {
      const long base = m * (p - 1) / 4;
      const bool square = fld.eta(a) == 1;
      if (t == 0) {
        closed = pm1 + neg_one_pow(base + (square ? 1 : 0)) * Count(p - 1) * detail::pow_count(p, (m - 2) / 2);
      } else {
        closed = pm1 + neg_one_pow(base + (square ? 0 : 1)) * detail::pow_count(p, (m - 2) / 2);
      }
    }
  }
  return make_count(brute, closed);
}

/// Squares and nonsquares of trace zero in GF(q)*.
inline std::pair<CountResult, CountResult> count_quadchar_trace(const Field& fld) {
  detail::require_odd(fld);
  Count sq = 0, nsq = 0;
  for (std::uint32_t i = 1; i < fld.q(); ++i) {
    const FieldElement x{i};
    if (fld.trace(x) != 0) continue;
    (fld.eta(x) == 1 ? sq : nsq) += 1;
  }
  const int p = fld.p();
  const long m = fld.m();
  const Count base = detail::pow_count(p, m - 1) - 1;
  if (m % 2 == 1) return {make_count(sq, base / 2), make_count(nsq, base / 2)};
  // (sqrt(-1))^((p-1)m/2) is real here since (p-1)m/2 is even.
  const Count corr = Count(p - 1) * detail::pow_count(p, (m - 2) / 2) * neg_one_pow(static_cast<long>(p - 1) * m / 4);
  return {make_count(sq, (base - corr) / 2), make_count(nsq, (base + corr) / 2)};
}

/// R_(3,0), R_(3,1), Rbar_(3,0), Rbar_(3,1): cubic residuosity against the trace bit.
inline std::array<CountResult, 4> count_R3(const Field& fld) {
  detail::require(fld.p() == 2 && fld.m() % 2 == 0, "needs p = 2 and m even");
  std::array<Count, 4> brute{0, 0, 0, 0};
  for (std::uint32_t i = 1; i < fld.q(); ++i) {
    const FieldElement x{i};
    const int slot = (fld.is_cubic_residue(x) ? 0 : 2) + fld.trace(x);
    brute[static_cast<std::size_t>(slot)] += 1;
  }
  const long m = fld.m();
  const Count q = detail::pow_count(2, m);
  const Count r30 = (q - 2 + neg_one_pow(m / 2 + 1) * detail::pow_count(2, m / 2 + 1)) / 6;
  const Count r31 = (q - 1) / 3 - r30;
  const Count rb30 = (detail::pow_count(2, m - 1) - 1) - r30;
  const Count rb31 = (q - neg_one_pow(m / 2) * detail::pow_count(2, m / 2)) / 3;
  return {make_count(brute[0], r30), make_count(brute[1], r31), make_count(brute[2], rb30), make_count(brute[3], rb31)};
}

/// Values of f : GF(q) -> GF(p), indexed by element index.
using FunctionTable = std::vector<int>;

/// W_f(beta) = sum_x zeta_p^(f(x) - Tr(beta x)).
inline ComplexVal walsh(const Field& fld, const FunctionTable& f, FieldElement beta) {
  const auto z = detail::zeta_table(fld.p());
  const int p = fld.p();
  ComplexVal v{0, 0};
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const int k = ((f[i] - fld.trace(fld.mul(beta, FieldElement{i}))) % p + p) % p;
    v += z[static_cast<std::size_t>(k)];
  }
  return v;
}

enum class BentFamily {
  Quadratic,  // Tr(-x^2 / (4a))
  Monomial,   // Tr(a x^(p^e+1))
};

inline FunctionTable bent_function(const Field& fld, BentFamily kind, FieldElement a, long e) {
  detail::require_odd(fld);
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "needs a != 0");
  FunctionTable f(fld.q());
  if (kind == BentFamily::Quadratic) {
    const FieldElement c = fld.neg(fld.inv(fld.mul(fld.from_int(4), a)));
    for (std::uint32_t i = 0; i < fld.q(); ++i) f[i] = fld.trace(fld.mul(c, fld.mul(FieldElement{i}, FieldElement{i})));
  } else {
    detail::require_odd_quotient(fld, e);
    const auto s = detail::pe_plus_1(fld, e);
    for (std::uint32_t i = 0; i < fld.q(); ++i) f[i] = fld.trace(fld.mul(a, fld.pow(FieldElement{i}, s)));
  }
  return f;
}

/// Walsh value decomposed as eps * sqrt(p*)^m * zeta_p^dual.
struct WalshPoint {
  int eps = 0;
  int dual = 0;
};

inline WalshPoint decompose_walsh(const Field& fld, ComplexVal w) {
  const double tol = sum_tolerance(fld);
  if (std::abs(std::abs(w) - sqrt_q(fld)) > tol) throw Error(ErrorCode::NotBent, "Walsh magnitude is not sqrt(q)");
  const ComplexVal u = w / sqrt_pstar_pow(fld.p(), fld.m());
  for (int k = 0; k < fld.p(); ++k) {
    for (int s : {1, -1}) {
      if (std::abs(u - static_cast<double>(s) * zeta(fld.p(), k)) <= 1e-6) return {s, k};
    }
  }
  throw Error(ErrorCode::NotBent, "Walsh value is not a signed root of unity");
}

/// Closed-form sign of the Walsh transform for the two families.
inline int bent_sign(const Field& fld, BentFamily kind, FieldElement a) {
  detail::require_odd(fld);
  const long m = fld.m();
  const long half = static_cast<long>((fld.q() - 1) / 2);
  if (kind == BentFamily::Quadratic || fld.p() % 4 == 1) return fld.eta(a) * neg_one_pow(m - 1 + half);
  return fld.eta(a) * neg_one_pow(half + 1);
}

/// Closed-form dual f*(beta): Tr(a beta^2), or Tr(-a x^(p^e+1)) with x the root for -beta.
inline int bent_dual(const Field& fld, BentFamily kind, FieldElement a, long e, FieldElement beta) {
  if (kind == BentFamily::Quadratic) return fld.trace(fld.mul(a, fld.mul(beta, beta)));
  const FieldElement x = fld.solve_linearized(a, e, fld.neg(beta));
  return fld.trace(fld.neg(fld.mul(a, fld.pow(x, detail::pe_plus_1(fld, e)))));
}

/// Sign and dual extracted from the full Walsh spectrum against the closed forms.
struct WalshSignCheck {
  int eps_brute = 0;
  int eps_closed = 0;
  std::size_t dual_mismatches = 0;
  bool agree = false;
};

inline WalshSignCheck walsh_sign_check(const Field& fld, BentFamily kind, FieldElement a, long e = 1) {
  const auto f = bent_function(fld, kind, a, e);
  WalshSignCheck out;
  out.eps_closed = bent_sign(fld, kind, a);
  bool consistent = true;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const auto pt = decompose_walsh(fld, walsh(fld, f, FieldElement{i}));
    if (i == 0) out.eps_brute = pt.eps;
    if (pt.eps != out.eps_brute) consistent = false;
    if (pt.dual != bent_dual(fld, kind, a, e, FieldElement{i})) ++out.dual_mismatches;
  }
  out.agree = consistent && out.eps_brute == out.eps_closed && out.dual_mismatches == 0;
  return out;
}

/// N_{f,beta}, N_{sq,beta}, N_{nsq,beta} for weakly regular bent f with f*(beta) = 0.
struct BentZeroSets {
  CountResult zero;
  CountResult square;
  CountResult nonsquare;
  int eps = 0;
};

inline BentZeroSets count_bent_zero_sets(const Field& fld, const FunctionTable& f, FieldElement beta) {
  detail::require_odd(fld);
  if (beta.is_zero()) throw Error(ErrorCode::ZeroInput, "needs beta != 0");
  const int p = fld.p();
  const long m = fld.m();
  const auto pt = decompose_walsh(fld, walsh(fld, f, beta));
  if (pt.dual != 0) throw Error(ErrorCode::DualNonzero, "f*(beta) != 0");
  const int eps = decompose_walsh(fld, walsh(fld, f, fld.zero())).eps;
  Count nz = 0, nsq = 0, nnsq = 0;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    if (fld.trace(fld.mul(beta, FieldElement{i})) != 0) continue;
    const int v = f[i];
    if (v == 0) {
      ++nz;
    } else if (eta_prime(p, v) == 1) {
      ++nsq;
    } else {
      ++nnsq;
    }
  }
  const Count pm2 = m >= 2 ? detail::pow_count(p, m - 2) : Count(0);
  const Count half = (p - 1) / 2;
  BentZeroSets out;
  out.eps = eps;
  if (m % 2 == 0) {
    const int etam = eta_prime(p, -1) == 1 ? 1 : neg_one_pow(m / 2);
    const Count h = detail::pow_count(p, (m - 2) / 2);
    out.zero = make_count(nz, pm2 + eps * etam * Count(p - 1) * h);
    const Count side = half * (pm2 - eps * etam * h);
    out.square = make_count(nsq, side);
    out.nonsquare = make_count(nnsq, side);
  } else {
    out.zero = make_count(nz, pm2);
    // sqrt(p*)^(m-1) = (p*)^((m-1)/2)
    const long pstar = eta_prime(p, -1) * p;
    Count pw = 1;
    for (long i = 0; i < (m - 1) / 2; ++i) pw *= pstar;
    out.square = make_count(nsq, half * (pm2 + eps * pw));
    out.nonsquare = make_count(nnsq, half * (pm2 - eps * pw));
  }
  return out;
}

/// Ntilde_gamma = #{b : Tr(b) = 0, Tr(a x_{a,b}^(p^e+1)) = gamma}. For gamma != 0
/// the closed form counts the whole square or nonsquare class of gamma, so the
/// brute side is summed over that class.
inline CountResult count_Ntilde(const Field& fld, long e, FieldElement a, int gamma) {
  detail::require_odd(fld);
  detail::require_odd_quotient(fld, e);
  detail::require(!a.is_zero() && fld.trace(a) == 0, "needs a != 0 with Tr(a) = 0");
  const int p = fld.p();
  gamma = ((gamma % p) + p) % p;
  const long m = fld.m();
  const auto s = detail::pe_plus_1(fld, e);
  const int cls = gamma == 0 ? 0 : eta_prime(p, gamma);
  Count brute = 0;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const FieldElement b{i};
    if (fld.trace(b) != 0) continue;
    const int v = fld.trace(fld.mul(a, fld.pow(fld.solve_linearized(a, e, b), s)));
    const int vc = v == 0 ? 0 : eta_prime(p, v);
    if (vc == cls) ++brute;
  }
  const int eps = bent_sign(fld, BentFamily::Monomial, a);
  const Count pm2 = m >= 2 ? detail::pow_count(p, m - 2) : Count(0);
  const Count half = (p - 1) / 2;
  Count closed;
  if (m % 2 == 0) {
    const int etam = eta_prime(p, -1) == 1 ? 1 : neg_one_pow(m / 2);
    const Count h = detail::pow_count(p, (m - 2) / 2);
    closed = gamma == 0 ? pm2 + eps * etam * Count(p - 1) * h : half * (pm2 - eps * etam * h);
  } else if (gamma == 0) {
    closed = pm2;
  } else {
    const long pstar = eta_prime(p, -1) * p;
    Count pw = 1;
    for (long i = 0; i < (m - 1) / 2; ++i) pw *= pstar;
    closed = half * (cls == 1 ? pm2 + eps * pw : pm2 - eps * pw);
  }
  return make_count(brute, closed);
}

/// Solutions (x, y) of x + y = S_1, x^s + y^s = S_s with {x1..x4, x, y} six distinct,
/// where s = 2^e + 1 and T = {x1..x4}.
inline CountResult count_pair_system(const Field& fld, long e, const std::vector<FieldElement>& t) {
  detail::require(fld.p() == 2 && fld.m() >= 4, "needs p = 2 and m >= 4");
  detail::require(e > 0 && std::gcd(static_cast<long>(fld.m()), e) == 1, "needs gcd(m,e) = 1");
  detail::require(t.size() == 4, "needs four elements");
  const auto s = detail::pe_plus_1(fld, e);
  FieldElement s1 = fld.zero(), ss = fld.zero();
  for (auto x : t) {
    s1 = fld.add(s1, x);
    ss = fld.add(ss, fld.pow(x, s));
  }
  Count brute = 0;
  for (std::uint32_t i = 0; i < fld.q(); ++i) {
    const FieldElement x{i};
    const FieldElement y = fld.add(x, s1);
    if (fld.add(fld.pow(x, s), fld.pow(y, s)) != ss) continue;
    std::vector<std::uint32_t> all{x.index, y.index};
    for (auto v : t) all.push_back(v.index);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) == all.end()) ++brute;
  }
  Count closed = 0;
  if (!s1.is_zero() && fld.trace(fld.add(fld.div(ss, fld.pow(s1, s)), fld.one())) == 0) closed = 2;
  return make_count(brute, closed);
}

/// Closed form for the number of (x1, x2, x3) with sum a and s-power sum b, s = 2^e + 1.
inline Count triple_system_closed(const Field& fld, long e, FieldElement a, FieldElement b) {
  detail::require_coprime_even(fld, e);
  const auto s = detail::pe_plus_1(fld, e);
  const FieldElement c = fld.add(fld.pow(a, s), b);
  if (c.is_zero()) throw Error(ErrorCode::DegenerateT, "a^(2^e+1) = b");
  const long m = fld.m();
  const Count q = detail::pow_count(2, m);
  const long k = fld.is_cubic_residue(c) ? m / 2 + 1 : m / 2;
  return q + neg_one_pow(k) * detail::pow_count(2, k) - 2;
}

/// Brute counts of all (a, b) at once: tally[a][b] over GF(q)^3.
inline std::vector<std::vector<std::uint32_t>> triple_system_tally(const Field& fld, long e) {
  const auto s = detail::pe_plus_1(fld, e);
  const std::uint32_t q = fld.q();
  std::vector<FieldElement> pw(q);
  for (std::uint32_t i = 0; i < q; ++i) pw[i] = fld.pow(FieldElement{i}, s);
  std::vector<std::vector<std::uint32_t>> tally(q, std::vector<std::uint32_t>(q, 0));
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) {
        const auto a = x ^ y ^ z;
        const auto b = pw[x].index ^ pw[y].index ^ pw[z].index;
        ++tally[a][b];
      }
  return tally;
}

inline CountResult count_triple_system(const Field& fld, long e, FieldElement a, FieldElement b) {
  const Count closed = triple_system_closed(fld, e, a, b);
  const auto s = detail::pe_plus_1(fld, e);
  Count brute = 0;
  for (std::uint32_t x = 0; x < fld.q(); ++x)
    for (std::uint32_t y = 0; y < fld.q(); ++y) {
      const FieldElement z = fld.add(a, fld.add(FieldElement{x}, FieldElement{y}));
      const auto sum = fld.add(fld.add(fld.pow(FieldElement{x}, s), fld.pow(FieldElement{y}, s)), fld.pow(z, s));
      if (sum == b) ++brute;
    }
  return make_count(brute, closed);
}

/// Distinct (x, y, z, u) with x + y + z + u = 0 and s-power sum 1, s = 2^e + 1.
inline CountResult count_quadruple_system(const Field& fld, long e) {
  detail::require_coprime_even(fld, e);
  const auto s = detail::pe_plus_1(fld, e);
  const std::uint32_t q = fld.q();
  std::vector<std::uint32_t> pw(q);
  for (std::uint32_t i = 0; i < q; ++i) pw[i] = fld.pow(FieldElement{i}, s).index;
  Count brute = 0;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      if (y == x) continue;
      for (std::uint32_t z = 0; z < q; ++z) {
        if (z == x || z == y) continue;
        const std::uint32_t u = x ^ y ^ z;
        if (u == x || u == y || u == z) continue;
        if ((pw[x] ^ pw[y] ^ pw[z] ^ pw[u]) == 1) ++brute;
      }
    }
  const long m = fld.m();
  const Count qq = detail::pow_count(2, m);
  const Count closed = qq * (qq - 2 - neg_one_pow(m / 2) * detail::pow_count(2, m / 2 + 1));
  return make_count(brute, closed);
}

}  // namespace shortcode
