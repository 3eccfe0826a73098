#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shortcode/code.hpp"
#include "shortcode/gf.hpp"

namespace shortcode {

/// The code {(Tr(a x^s + b x + c))_x : a, b, c in GF(q)} over GF(p).
struct MonomialCodeSpec {
  FieldSpec field;
  std::uint64_t s = 1;
};

inline std::vector<std::string> coordinate_labels(const Field& fld) {
  std::vector<std::string> out;
  out.reserve(fld.q());
  for (std::size_t i = 0; i < fld.q(); ++i) out.push_back(fld.label(fld.at_position(i)));
  return out;
}

inline LinearCode build_code(const Field& fld, std::uint64_t s) {
  const std::size_t q = fld.q();
  const auto m = static_cast<std::size_t>(fld.m());
  if (s < 1 || s >= q) throw Error(ErrorCode::IndexOutOfRange, "exponent must satisfy 1 <= s < q");
  MatrixGFp g(fld.p(), 2 * m + 1, q);
  for (std::size_t pos = 0; pos < q; ++pos) {
    const FieldElement x = fld.at_position(pos);
    const FieldElement xs = fld.pow(x, s);
    for (std::size_t i = 0; i < m; ++i) {
      const FieldElement beta = fld.alpha_pow(static_cast<long long>(i));
      g(i, pos) = static_cast<std::uint8_t>(fld.trace(fld.mul(beta, xs)));
      g(m + i, pos) = static_cast<std::uint8_t>(fld.trace(fld.mul(beta, x)));
    }
    g(2 * m, pos) = 1;
  }
  return make_code(g, coordinate_labels(fld), fld.spec().to_string());
}

inline LinearCode build_code(const MonomialCodeSpec& spec) { return build_code(Field(spec.field), spec.s); }

inline std::uint64_t reduce_exponent(std::uint64_t s, std::uint64_t q) {
  const std::uint64_t r = s % (q - 1);
  return r == 0 ? q - 1 : r;
}

/// APN monomial exponents for GF(2^m), reduced mod 2^m - 1 and deduplicated.
inline std::vector<std::uint64_t> apn_exponents(int m) {
  const std::uint64_t q = std::uint64_t{1} << m;
  std::set<std::uint64_t> out;
  for (int e = 1; e < m; ++e) {
    if (std::gcd(e, m) != 1) continue;
    out.insert(reduce_exponent((std::uint64_t{1} << e) + 1, q));
    out.insert(reduce_exponent((std::uint64_t{1} << (2 * e)) - (std::uint64_t{1} << e) + 1, q));
  }
  if (m % 2 == 1 && m >= 5) {
    const std::uint64_t h = std::uint64_t{1} << ((m - 1) / 2);
    out.insert(reduce_exponent(h + 3, q));
    if (m % 4 == 1) out.insert(reduce_exponent(h + (std::uint64_t{1} << ((m - 1) / 4)) - 1, q));
    if (m % 4 == 3) out.insert(reduce_exponent(h + (std::uint64_t{1} << ((3 * m - 1) / 4)) - 1, q));
  }
  return {out.begin(), out.end()};
}

/// PN monomial exponents for GF(p^m), p odd, reduced mod q - 1 and deduplicated.
inline std::vector<std::uint64_t> pn_exponents(int p, int m) {
  if (p == 2) throw Error(ErrorCode::UndefinedForEvenCharacteristic, "PN exponents need odd p");
  const auto q = static_cast<std::uint64_t>(ipow(p, m));
  std::set<std::uint64_t> out{2};
  for (int e = 1; e <= m; ++e) {
    if ((m / std::gcd(m, e)) % 2 == 1) out.insert(reduce_exponent(static_cast<std::uint64_t>(ipow(p, e)) + 1, q));
  }
  if (p == 3) {
    for (int e = 1; e < 2 * m; e += 2) {
      if (std::gcd(m, e) != 1) continue;
      // (3^e + 1)/2 mod (q - 1), computed without overflow
      const std::uint64_t mod2 = 2 * (q - 1);
      std::uint64_t t = 1;
      for (int i = 0; i < e; ++i) t = (t * 3) % mod2;
      out.insert(reduce_exponent(((t + 1) % mod2) / 2, q));
    }
  }
  return {out.begin(), out.end()};
}

/// Differential uniformity of x^s: max over a != 0 and b of #{x : (x+a)^s - x^s = b}.
inline std::size_t differential_uniformity(const Field& fld, std::uint64_t s) {
  const std::uint32_t q = fld.q();
  std::vector<FieldElement> power(q);
  for (std::uint32_t i = 0; i < q; ++i) power[i] = fld.pow(FieldElement{i}, s);
  std::size_t best = 0;
  std::vector<std::uint32_t> hits(q);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::fill(hits.begin(), hits.end(), 0u);
    for (std::uint32_t x = 0; x < q; ++x) {
      const auto xa = fld.add(FieldElement{x}, FieldElement{a});
      const auto d = fld.sub(power[xa.index], power[x]);
      best = std::max<std::size_t>(best, ++hits[d.index]);
    }
  }
  return best;
}

inline bool is_apn(const Field& fld, std::uint64_t s) { return fld.p() == 2 && differential_uniformity(fld, s) == 2; }

inline bool is_pn(const Field& fld, std::uint64_t s) { return fld.p() != 2 && differential_uniformity(fld, s) == 1; }

enum class SpecialT { SubfieldP, GF4 };

inline CoordSet special_T(const Field& fld, SpecialT kind) {
  std::vector<std::size_t> pos;
  if (kind == SpecialT::SubfieldP) {
    for (int c = 0; c < fld.p(); ++c) pos.push_back(fld.position(fld.from_int(c)));
  } else {
    if (fld.p() != 2 || fld.m() % 2 != 0) throw Error(ErrorCode::SubfieldAbsent, "GF(4) is not a subfield of GF(" + std::to_string(fld.p()) + "^" + std::to_string(fld.m()) + ")");
    const long long third = (fld.q() - 1) / 3;
    for (auto x : {fld.zero(), fld.one(), fld.alpha_pow(third), fld.alpha_pow(2 * third)}) pos.push_back(fld.position(x));
  }
  return make_coord_set(std::move(pos), fld.q());
}

/// Positions of the elements a*t + b for t in T.
inline CoordSet affine_image(const Field& fld, const CoordSet& t, FieldElement a, FieldElement b) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "affine map needs a != 0");
  std::vector<std::size_t> pos;
  for (auto i : t) pos.push_back(fld.position(fld.add(fld.mul(a, fld.at_position(i)), b)));
  return make_coord_set(std::move(pos), fld.q());
}

inline std::vector<FieldElement> elements_of(const Field& fld, const CoordSet& t) {
  std::vector<FieldElement> out;
  for (auto i : t) out.push_back(fld.at_position(i));
  return out;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace detail

/// "T=GF(p)", "T=GF(4)", "T=alpha^1,alpha^2,0" or "T=" for the empty set.
inline CoordSet parse_T(const Field& fld, std::string_view text) {
  if (text.starts_with("T=")) text.remove_prefix(2);
  if (text.empty()) return {};
  if (text == "GF(p)" || text == "GF(" + std::to_string(fld.p()) + ")") return special_T(fld, SpecialT::SubfieldP);
  if (text == "GF(4)") return special_T(fld, SpecialT::GF4);
  std::vector<std::size_t> pos;
  for (auto item : detail::split(text, ',')) pos.push_back(fld.position(fld.parse_label(item)));
  return make_coord_set(std::move(pos), fld.q());
}

inline std::string format_T(const Field& fld, const CoordSet& t) {
  std::string s = "T=";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += fld.label(fld.at_position(t[i]));
  }
  return s;
}

/// "apn:p=2,m=5,e=1", "apn:p=2,m=5,s=7", "pn:p=3,m=4,s=2"; an optional
/// mod=<digits> pins the modulus.
inline MonomialCodeSpec parse_code_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "code spec needs 'apn:' or 'pn:' prefix");
  const auto family = text.substr(0, colon);
  if (family != "apn" && family != "pn") throw Error(ErrorCode::ParseError, "unknown code family '" + std::string(family) + "'");
  std::string field_text;
  long e = -1;
  long s = -1;
  for (auto item : detail::split(text.substr(colon + 1), ',')) {
    if (item.starts_with("e=")) {
      e = parse_int(item.substr(2), "e");
    } else if (item.starts_with("s=")) {
      s = parse_int(item.substr(2), "s");
    } else {
      if (!field_text.empty()) field_text += ',';
      field_text += std::string(item);
    }
  }
  MonomialCodeSpec spec{parse_field_spec(field_text), 0};
  if (family == "apn" && spec.field.p != 2) throw Error(ErrorCode::ParseError, "apn codes need p=2");
  if (family == "pn" && spec.field.p == 2) throw Error(ErrorCode::ParseError, "pn codes need odd p");
  if ((e < 0) == (s < 0)) throw Error(ErrorCode::ParseError, "give exactly one of e= or s=");
  const auto q = static_cast<std::uint64_t>(ipow(spec.field.p, spec.field.m));
  if (e >= 0) {
    if (e < 1) throw Error(ErrorCode::ParseError, "e must be positive");
    spec.s = reduce_exponent(static_cast<std::uint64_t>(ipow(spec.field.p, e)) + 1, q);
  } else {
    if (s < 1 || static_cast<std::uint64_t>(s) >= q) throw Error(ErrorCode::ParseError, "s must satisfy 1 <= s < q");
    spec.s = static_cast<std::uint64_t>(s);
  }
  return spec;
}

}  // namespace shortcode
