#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "shortcode/count.hpp"
#include "shortcode/error.hpp"
#include "shortcode/gfmat.hpp"

namespace shortcode {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline long ipow(long base, long exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Quadratic character of GF(p) on an integer residue: 0, +1 or -1.
inline int legendre(long v, int p) {
  v %= p;
  if (v < 0) v += p;
  if (v == 0) return 0;
  long r = 1;
  long b = v;
  long e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

/// A field GF(p^m) described by its defining polynomial.
/// `modulus` holds the coefficients from degree m down to degree 0.
struct FieldSpec {
  int p = 2;
  int m = 1;
  std::vector<int> modulus;

  /// "p=3,m=4,mod=10012"
  std::string to_string() const {
    std::string s = "p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",mod=";
    for (int c : modulus) s += static_cast<char>('0' + c);
    return s;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

/// First primitive polynomial in index order for each (p, m) we ship.
struct DefaultModulus {
  int p;
  int m;
  const char* digits;
};

inline constexpr DefaultModulus kDefaultModuli[] = {
    {2, 1, "10"},          {2, 2, "111"},          {2, 3, "1011"},         {2, 4, "10011"},
    {2, 5, "100101"},      {2, 6, "1000011"},      {2, 7, "10000011"},     {2, 8, "100011101"},
    {2, 9, "1000010001"},  {2, 10, "10000001001"}, {3, 1, "10"},           {3, 2, "112"},
    {3, 3, "1021"},        {3, 4, "10012"},        {3, 5, "100021"},       {3, 6, "1000012"},
    {3, 7, "10000121"},    {3, 8, "100001002"},    {3, 9, "1000002101"},   {3, 10, "10000001012"},
    {5, 1, "10"},          {5, 2, "112"},          {5, 3, "1032"},         {5, 4, "10122"},
    {5, 5, "100042"},      {5, 6, "1000012"},      {5, 7, "10000032"},     {5, 8, "100000123"},
    {7, 1, "10"},          {7, 2, "113"},          {7, 3, "1032"},         {7, 4, "10135"},
    {7, 5, "100014"},      {7, 6, "1000315"},      {7, 7, "10000062"},
};

using Poly = std::vector<int>;  // low degree first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, int p) {
  poly_trim(a);
  const std::size_t n = f.size() - 1;
  const int lead_inv = prime_field_inverses(p)[static_cast<std::size_t>(f.back())];
  while (a.size() > n) {
    const int c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1u) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1u;
  }
  return r;
}

inline Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  poly_trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^k) mod f by repeated p-th powering.
inline Poly frobenius_of_x(const Poly& f, int p, int k) {
  Poly x = poly_mod(Poly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) x = poly_powmod(x, static_cast<std::uint64_t>(p), f, p);
  return x;
}

/// Rabin's irreducibility test.
inline bool is_irreducible(const Poly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (poly_sub(frobenius_of_x(f, p, m), x, p) != Poly{}) return false;
  for (long r : prime_factors(m)) {
    const Poly g = poly_gcd(f, poly_sub(frobenius_of_x(f, p, m / static_cast<int>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

inline FieldSpec default_field_spec(int p, int m) {
  for (const auto& d : detail::kDefaultModuli) {
    if (d.p == p && d.m == m) {
      FieldSpec s{p, m, {}};
      for (const char* c = d.digits; *c; ++c) s.modulus.push_back(*c - '0');
      return s;
    }
  }
  if (!is_prime(p)) throw Error(ErrorCode::RejectsNonPrimeP, "p=" + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::MalformedFieldSpec, "m must be positive");
  // Fall back to the first irreducible monic polynomial in index order.
  const long q = ipow(p, m);
  for (long idx = 0; idx < q; ++idx) {
    detail::Poly f(static_cast<std::size_t>(m) + 1, 0);
    long t = idx;
    for (int i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
      t /= p;
    }
    f.back() = 1;
    if (detail::is_irreducible(f, p)) {
      FieldSpec s{p, m, {}};
      for (auto it = f.rbegin(); it != f.rend(); ++it) s.modulus.push_back(*it);
      return s;
    }
  }
  throw Error(ErrorCode::RejectsReducibleModulus, "no irreducible polynomial found");
}

inline int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::ParseError, std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

/// Parses "p=3,m=4,mod=10012"; `mod` may be omitted to take the default.
inline FieldSpec parse_field_spec(std::string_view text) {
  int p = 0;
  int m = 0;
  std::string mod;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + std::string(text) + "'");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "p") {
      p = parse_int(value, "p");
    } else if (key == "m") {
      m = parse_int(value, "m");
    } else if (key == "mod") {
      mod = std::string(value);
    } else {
      throw Error(ErrorCode::ParseError, "unknown field key '" + std::string(key) + "'");
    }
    start = comma + 1;
  }
  if (p == 0 || m == 0) throw Error(ErrorCode::ParseError, "field spec needs p and m");
  if (mod.empty()) return default_field_spec(p, m);
  FieldSpec s{p, m, {}};
  for (char c : mod) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "modulus digits must be decimal");
    s.modulus.push_back(c - '0');
  }
  return s;
}

/// Element of GF(p^m), stored as the base-p integer of its polynomial-basis
/// coordinates (digit i is the coefficient of alpha_poly^i).
struct FieldElement {
  std::uint32_t index = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t i) : index(i) {}

  constexpr bool is_zero() const { return index == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(p^m) with exp/log and Zech tables. Immutable after construction.
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
    validate();
    q_ = static_cast<std::uint32_t>(ipow(spec_.p, spec_.m));
    build_tables();
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  int p() const noexcept { return spec_.p; }
  int m() const noexcept { return spec_.m; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return q_ - 1; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement generator() const { return alpha_pow(1); }

  /// alpha^k for any integer k (negative allowed).
  FieldElement alpha_pow(long long k) const {
    const long long n = static_cast<long long>(q_ - 1);
    long long r = k % n;
    if (r < 0) r += n;
    return FieldElement{exp_[static_cast<std::size_t>(r)]};
  }

  /// Constant c of the prime subfield.
  FieldElement from_int(long c) const {
    long r = c % spec_.p;
    if (r < 0) r += spec_.p;
    return FieldElement{static_cast<std::uint32_t>(r)};
  }

  /// Inverse of from_int on prime-subfield elements.
  int to_int(FieldElement x) const {
    if (x.index >= static_cast<std::uint32_t>(spec_.p)) {
      throw Error(ErrorCode::IndexOutOfRange, "element is not in the prime subfield");
    }
    return static_cast<int>(x.index);
  }

  std::uint32_t log(FieldElement x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "log of zero");
    return log_[x.index];
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (spec_.p == 2) return FieldElement{a.index ^ b.index};
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t n = q_ - 1;
    const std::uint32_t la = log_[a.index];
    const std::uint32_t lb = log_[b.index];
    const std::uint32_t d = (lb + n - la) % n;
    const std::int64_t z = zech_[d];
    if (z < 0) return zero();
    return FieldElement{exp_[(la + static_cast<std::uint32_t>(z)) % n]};
  }

  FieldElement neg(FieldElement a) const {
    if (spec_.p == 2 || a.is_zero()) return a;
    return FieldElement{exp_[(log_[a.index] + (q_ - 1) / 2) % (q_ - 1)]};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElement{exp_[(log_[a.index] + log_[b.index]) % (q_ - 1)]};
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorCode::InversionOfZero, "inverse of zero");
    return FieldElement{exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// x^e with 0^0 = 1; exponents of nonzero bases reduce mod q-1.
  FieldElement pow(FieldElement x, std::uint64_t e) const {
    if (e == 0) return one();
    if (x.is_zero()) return zero();
    const std::uint64_t n = q_ - 1;
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[x.index]) * (e % n)) % n;
    return FieldElement{exp_[r]};
  }

  FieldElement pow(FieldElement x, const BigInt& e) const {
    if (e < 0) throw Error(ErrorCode::IndexOutOfRange, "negative exponent");
    if (e == 0) return one();
    if (x.is_zero()) return zero();
    const BigInt r = e % (q_ - 1);
    return pow(x, static_cast<std::uint64_t>(r == 0 ? BigInt(q_ - 1) : r));
  }

  /// x^(p^k), the k-th Frobenius image; negative k wraps around m.
  FieldElement frobenius(FieldElement x, long k) const {
    long r = k % spec_.m;
    if (r < 0) r += spec_.m;
    FieldElement y = x;
    for (long i = 0; i < r; ++i) y = pow(y, static_cast<std::uint64_t>(spec_.p));
    return y;
  }

  /// Absolute trace into GF(p), returned as 0..p-1.
  int trace(FieldElement x) const { return trace_[x.index]; }

  /// Quadratic character: +1 square, -1 nonsquare, 0 at zero.
  int eta(FieldElement x) const {
    if (spec_.p == 2) throw Error(ErrorCode::UndefinedForEvenCharacteristic, "eta needs odd p");
    if (x.is_zero()) return 0;
    return (log_[x.index] % 2 == 0) ? 1 : -1;
  }

  bool is_cubic_residue(FieldElement x) const {
    if ((q_ - 1) % 3 != 0) throw Error(ErrorCode::CubesAreAllOfGFq, "3 does not divide q-1");
    if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "cubic residuosity of zero");
    return log_[x.index] % 3 == 0;
  }

  std::vector<std::uint8_t> digits(FieldElement x) const {
    std::vector<std::uint8_t> d(static_cast<std::size_t>(spec_.m));
    std::uint32_t v = x.index;
    for (auto& c : d) {
      c = static_cast<std::uint8_t>(v % static_cast<std::uint32_t>(spec_.p));
      v /= static_cast<std::uint32_t>(spec_.p);
    }
    return d;
  }

  FieldElement from_digits(std::span<const std::uint8_t> d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(spec_.p) + d[i];
    return FieldElement{v};
  }

  /// The unique root of a^(p^e) x^(p^2e) + a x + b^(p^e) = 0, obtained by
  /// solving the GF(p)-linear system of that map in the polynomial basis.
  FieldElement solve_linearized(FieldElement a, long e, FieldElement b) const {
    const std::size_t m = static_cast<std::size_t>(spec_.m);
    const FieldElement ae = frobenius(a, e);
    MatrixGFp map(spec_.p, m, m);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::uint8_t> unit(m, 0);
      unit[j] = 1;
      const FieldElement x = from_digits(unit);
      const FieldElement image = add(mul(ae, frobenius(x, 2 * e)), mul(a, x));
      const auto col = digits(image);
      for (std::size_t i = 0; i < m; ++i) map(i, j) = col[i];
    }
    const auto rhs = digits(neg(frobenius(b, e)));
    const auto sol = solve(map, rhs);
    if (!sol || !sol->unique) {
      throw Error(ErrorCode::NonUniqueSolution, "linearized map is not bijective for these parameters");
    }
    return from_digits(sol->x);
  }

  /// Coordinate position of x under the order [0, alpha^0, ..., alpha^(q-2)].
  std::size_t position(FieldElement x) const { return x.is_zero() ? 0 : static_cast<std::size_t>(log_[x.index]) + 1; }

  FieldElement at_position(std::size_t pos) const {
    if (pos >= q_) throw Error(ErrorCode::IndexOutOfRange, "coordinate position out of range");
    return pos == 0 ? zero() : FieldElement{exp_[pos - 1]};
  }

  /// "0", "1" or "alpha^k".
  std::string label(FieldElement x) const {
    if (x.is_zero()) return "0";
    const auto k = log_[x.index];
    if (k == 0) return "1";
    return "alpha^" + std::to_string(k);
  }

  FieldElement parse_label(std::string_view s) const {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s.starts_with("alpha^")) return alpha_pow(parse_int(s.substr(6), "alpha exponent"));
    if (s == "alpha") return alpha_pow(1);
    throw Error(ErrorCode::ParseError, "bad element label '" + std::string(s) + "'");
  }

 private:
  void validate() const {
    if (!is_prime(spec_.p)) throw Error(ErrorCode::RejectsNonPrimeP, "p=" + std::to_string(spec_.p) + " is not prime");
    if (spec_.p > 255) throw Error(ErrorCode::MalformedFieldSpec, "p must be below 256");
    if (spec_.m < 1) throw Error(ErrorCode::MalformedFieldSpec, "m must be positive");
    if (static_cast<int>(spec_.modulus.size()) != spec_.m + 1 || spec_.modulus.front() != 1) {
      throw Error(ErrorCode::MalformedFieldSpec, "modulus must be monic of degree m");
    }
    for (int c : spec_.modulus) {
      if (c < 0 || c >= spec_.p) throw Error(ErrorCode::MalformedFieldSpec, "modulus coefficient out of range");
    }
    if (ipow(spec_.p, spec_.m) > (1L << 24)) throw Error(ErrorCode::CapExceeded, "field too large");
    if (!detail::is_irreducible(poly(), spec_.p)) {
      throw Error(ErrorCode::RejectsReducibleModulus, spec_.to_string() + " has a reducible modulus");
    }
  }

  detail::Poly poly() const {
    detail::Poly f(spec_.modulus.rbegin(), spec_.modulus.rend());
    return f;
  }

  detail::Poly to_poly(std::uint32_t index) const {
    detail::Poly a(static_cast<std::size_t>(spec_.m), 0);
    for (auto& c : a) {
      c = static_cast<int>(index % static_cast<std::uint32_t>(spec_.p));
      index /= static_cast<std::uint32_t>(spec_.p);
    }
    detail::poly_trim(a);
    return a;
  }

  std::uint32_t to_index(const detail::Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(spec_.p) + static_cast<std::uint32_t>(a[i]);
    return v;
  }

  void build_tables() {
    const int p = spec_.p;
    const auto f = poly();
    const std::uint32_t n = q_ - 1;
    const auto factors = prime_factors(static_cast<long>(n));
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q_ && g == 0; ++cand) {
      const auto c = to_poly(cand);
      bool primitive = true;
      for (long r : factors) {
        if (detail::poly_powmod(c, n / static_cast<std::uint32_t>(r), f, p) == detail::Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (n == 1) primitive = true;
      if (primitive) g = cand;
    }
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    const auto gp = to_poly(g);
    detail::Poly cur{1};
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t idx = to_index(cur);
      exp_[k] = idx;
      log_[idx] = k;
      cur = detail::poly_mulmod(cur, gp, f, p);
    }
    // Zech logarithms: alpha^z = 1 + alpha^k, -1 when the sum vanishes.
    zech_.assign(n, -1);
    if (p != 2) {
      for (std::uint32_t k = 0; k < n; ++k) {
        auto d = digits(FieldElement{exp_[k]});
        d[0] = static_cast<std::uint8_t>((d[0] + 1) % p);
        const auto s = from_digits(d);
        zech_[k] = s.is_zero() ? -1 : static_cast<std::int64_t>(log_[s.index]);
      }
    }
    // Trace is GF(p)-linear: tabulate it on the polynomial basis first.
    std::vector<int> basis_trace(static_cast<std::size_t>(spec_.m));
    for (int i = 0; i < spec_.m; ++i) {
      std::vector<std::uint8_t> unit(static_cast<std::size_t>(spec_.m), 0);
      unit[static_cast<std::size_t>(i)] = 1;
      FieldElement x = from_digits(unit);
      FieldElement sum = zero();
      for (int j = 0; j < spec_.m; ++j) {
        sum = add(sum, x);
        x = pow(x, static_cast<std::uint64_t>(p));
      }
      if (sum.index >= static_cast<std::uint32_t>(p)) throw Error(ErrorCode::MalformedFieldSpec, "trace left the prime field");
      basis_trace[static_cast<std::size_t>(i)] = static_cast<int>(sum.index);
    }
    trace_.assign(q_, 0);
    for (std::uint32_t x = 0; x < q_; ++x) {
      std::uint32_t v = x;
      int t = 0;
      for (int i = 0; i < spec_.m; ++i) {
        t += static_cast<int>(v % static_cast<std::uint32_t>(p)) * basis_trace[static_cast<std::size_t>(i)];
        v /= static_cast<std::uint32_t>(p);
      }
      trace_[x] = static_cast<std::uint8_t>(t % p);
    }
  }

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
  std::vector<std::uint8_t> trace_;
};

inline Field build_field(const FieldSpec& spec) { return Field(spec); }

}  // namespace shortcode
