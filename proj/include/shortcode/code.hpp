#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "shortcode/count.hpp"
#include "shortcode/error.hpp"
#include "shortcode/gfmat.hpp"

namespace shortcode {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000'000;

/// Enumeration cap, overridable through SHORTCODE_CAP.
inline std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("SHORTCODE_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

/// Sorted distinct coordinate positions.
using CoordSet = std::vector<std::size_t>;

inline CoordSet make_coord_set(std::vector<std::size_t> positions, std::size_t n) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "repeated coordinate in T");
  }
  if (!positions.empty() && positions.back() >= n) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
  return positions;
}

/// weight -> number of codewords of that weight; zero counts are omitted.
using WeightDistribution = std::map<std::size_t, Count>;

inline Count total(const WeightDistribution& wd) {
  Count s = 0;
  for (const auto& [w, a] : wd) s += a;
  return s;
}

/// Smallest nonzero weight, or 0 when the code is {0}.
inline std::size_t min_distance(const WeightDistribution& wd) {
  for (const auto& [w, a] : wd)
    if (w > 0 && a != 0) return w;
  return 0;
}

/// Drops the A_0 term.
inline WeightDistribution nonzero_part(WeightDistribution wd) {
  wd.erase(0);
  return wd;
}

struct LinearCode {
  int p = 2;
  std::size_t n = 0;
  MatrixGFp generator;
  std::vector<std::string> labels;
  std::string field;  // field spec text when built from a field, else empty

  std::size_t k() const { return generator.rows(); }
};

/// Row-reduces `g` to a full-rank generator.
inline LinearCode make_code(const MatrixGFp& g, std::vector<std::string> labels = {}, std::string field = {}) {
  LinearCode c;
  c.p = g.p();
  c.n = g.cols();
  c.generator = row_basis(g);
  if (labels.empty()) {
    for (std::size_t i = 0; i < c.n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != c.n) throw Error(ErrorCode::IndexOutOfRange, "label count differs from length");
  c.labels = std::move(labels);
  c.field = std::move(field);
  return c;
}

inline bool same_row_space(const MatrixGFp& a, const MatrixGFp& b) {
  if (a.cols() != b.cols() || a.p() != b.p()) return false;
  return row_basis(a) == row_basis(b);
}

inline bool same_code(const LinearCode& a, const LinearCode& b) { return same_row_space(a.generator, b.generator); }

namespace detail {

inline std::vector<std::string> drop_labels(const std::vector<std::string>& labels, const CoordSet& drop) {
  std::vector<std::string> out;
  std::size_t d = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (d < drop.size() && drop[d] == i) {
      ++d;
      continue;
    }
    out.push_back(labels[i]);
  }
  return out;
}

inline std::uint64_t checked_codeword_count(int p, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / static_cast<std::uint64_t>(p)) {
      throw Error(ErrorCode::CapExceeded, std::to_string(p) + "^" + std::to_string(k) + " codewords exceed the cap of " + std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

}  // namespace detail

/// Codewords of C vanishing on T, with the T-coordinates removed.
inline LinearCode shorten(const LinearCode& c, const CoordSet& t) {
  if (t.empty()) return c;
  for (auto i : t)
    if (i >= c.n) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
  // Combinations y of generator rows with y G_T = 0.
  const auto y = nullspace(c.generator.select_columns(t).transpose());
  MatrixGFp g(c.p, 0, c.n - t.size());
  if (y.rows() > 0) g = (y * c.generator).drop_columns(t);
  return make_code(g, detail::drop_labels(c.labels, t), c.field);
}

/// All codewords of C with the T-coordinates removed.
inline LinearCode puncture(const LinearCode& c, const CoordSet& t) {
  if (t.empty()) return c;
  for (auto i : t)
    if (i >= c.n) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
  return make_code(c.generator.drop_columns(t), detail::drop_labels(c.labels, t), c.field);
}

inline LinearCode dual(const LinearCode& c) {
  LinearCode d;
  d.p = c.p;
  d.n = c.n;
  d.generator = c.k() == 0 ? MatrixGFp::identity(c.p, c.n) : nullspace(c.generator);
  d.labels = c.labels;
  d.field = c.field;
  return d;
}

/// Read-only view of the current codeword during enumeration.
class CodewordView {
 public:
  CodewordView(std::size_t n, const std::uint64_t* bits, const std::uint8_t* symbols)
      : n_(n), bits_(bits), symbols_(symbols) {}

  std::size_t length() const { return n_; }

  std::uint8_t operator[](std::size_t i) const {
    if (bits_) return static_cast<std::uint8_t>((bits_[i / 64] >> (i % 64)) & 1u);
    return symbols_[i];
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
      if ((*this)[i]) s.push_back(i);
    return s;
  }

 private:
  std::size_t n_;
  const std::uint64_t* bits_;
  const std::uint8_t* symbols_;
};

/// Calls visit(weight, view) once per codeword, in Gray-code order for GF(2)
/// and mixed-radix order for odd p.
template <class Visit>
void for_each_codeword(const LinearCode& c, Visit&& visit, std::uint64_t cap = enumeration_cap()) {
  const std::size_t k = c.k();
  const std::uint64_t total = detail::checked_codeword_count(c.p, k, cap);
  const std::size_t n = c.n;
  if (c.p == 2) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(k * words, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (c.generator(r, j)) rows[r * words + j / 64] |= std::uint64_t{1} << (j % 64);
    std::vector<std::uint64_t> cw(words, 0);
    visit(std::size_t{0}, CodewordView(n, cw.data(), nullptr));
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto r = static_cast<std::size_t>(std::countr_zero(i));
      std::size_t weight = 0;
      for (std::size_t w = 0; w < words; ++w) {
        cw[w] ^= rows[r * words + w];
        weight += static_cast<std::size_t>(std::popcount(cw[w]));
      }
      visit(weight, CodewordView(n, cw.data(), nullptr));
    }
    return;
  }
  const unsigned p = static_cast<unsigned>(c.p);
  std::vector<std::uint8_t> cw(n, 0);
  std::vector<unsigned> digit(k, 0);
  std::size_t weight = 0;
  auto add_row = [&](std::size_t r) {
    const auto row = c.generator.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j]) continue;
      const unsigned before = cw[j];
      const unsigned after = (before + row[j]) % p;
      cw[j] = static_cast<std::uint8_t>(after);
      weight = weight + (after != 0) - (before != 0);
    }
  };
  visit(weight, CodewordView(n, nullptr, cw.data()));
  for (std::uint64_t i = 1; i < total; ++i) {
    std::size_t r = 0;
    while (true) {
      add_row(r);
      if (++digit[r] < p) break;
      digit[r] = 0;
      ++r;
    }
    visit(weight, CodewordView(n, nullptr, cw.data()));
  }
}

/// Exact weight distribution by exhaustive enumeration.
inline WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t cap = enumeration_cap()) {
  std::vector<std::uint64_t> counts(c.n + 1, 0);
  for_each_codeword(c, [&](std::size_t w, const CodewordView&) { ++counts[w]; }, cap);
  WeightDistribution wd;
  for (std::size_t w = 0; w <= c.n; ++w)
    if (counts[w]) wd[w] = Count(counts[w]);
  return wd;
}

/// Distinct supports of the weight-w codewords of C.
inline std::set<std::vector<std::size_t>> codeword_supports(const LinearCode& c, std::size_t w,
                                                            std::uint64_t cap = enumeration_cap()) {
  std::set<std::vector<std::size_t>> out;
  for_each_codeword(
      c,
      [&](std::size_t weight, const CodewordView& v) {
        if (weight == w) out.insert(v.support());
      },
      cap);
  return out;
}

using SupportSet = std::set<std::vector<std::size_t>>;

namespace detail {

inline long double choose_ld(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

/// Enumerates supports S of weight-exactly-w dual codewords with M inside S.
/// Every such codeword is reached once per projective class: fix the
/// coefficients on M and on all but the largest free position, then the last
/// column must be a multiple of the running sum.
class DualSupportSearch {
 public:
  DualSupportSearch(const LinearCode& c, std::uint64_t budget) : c_(c), budget_(budget) {
    const std::size_t k = c.k();
    binary_ = c.p == 2 && k <= 64;
    columns_.resize(c.n);
    for (std::size_t j = 0; j < c.n; ++j) {
      columns_[j].resize(k);
      for (std::size_t r = 0; r < k; ++r) columns_[j][r] = c.generator(r, j);
    }
    if (binary_) {
      packed_.resize(c.n, 0);
      for (std::size_t j = 0; j < c.n; ++j)
        for (std::size_t r = 0; r < k; ++r)
          if (columns_[j][r]) packed_[j] |= std::uint64_t{1} << r;
      for (std::size_t j = 0; j < c.n; ++j) packed_index_[packed_[j]].push_back(j);
    } else {
      inv_ = prime_field_inverses(c.p);
      for (std::size_t j = 0; j < c.n; ++j) key_index_[normalized_key(columns_[j])].push_back(j);
    }
  }

  SupportSet run(const CoordSet& mandatory, std::size_t w) {
    SupportSet found;
    if (w == 0 || w > c_.n || mandatory.size() > w) return found;
    for (auto m : mandatory)
      if (m >= c_.n) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
    if (mandatory.size() == w) {
      if (has_full_support_dependency(c_.generator, mandatory)) found.insert(mandatory);
      return found;
    }
    in_mandatory_.assign(c_.n, false);
    for (auto m : mandatory) in_mandatory_[m] = true;
    pool_.clear();
    for (std::size_t j = 0; j < c_.n; ++j)
      if (!in_mandatory_[j]) pool_.push_back(j);
    const std::size_t free_before_last = w - mandatory.size() - 1;
    const std::size_t fixed = mandatory.size() + free_before_last;
    long double work = choose_ld(pool_.size(), free_before_last);
    if (!binary_ && fixed > 1) {
      for (std::size_t i = 0; i + 1 < fixed; ++i) work *= static_cast<long double>(c_.p - 1);
    }
    if (work > static_cast<long double>(budget_)) {
      throw Error(ErrorCode::BudgetExceeded, "dual support search needs about " + std::to_string(static_cast<double>(work)) +
                                                 " subset tests, budget is " + std::to_string(budget_));
    }
    mandatory_ = mandatory;
    chosen_.clear();
    target_free_ = free_before_last;
    found_ = &found;
    if (binary_) {
      std::uint64_t sum = 0;
      for (auto m : mandatory) sum ^= packed_[m];
      binary_dfs(0, sum);
    } else {
      std::vector<std::uint8_t> sum(c_.k(), 0);
      generic_mandatory(0, sum);
    }
    return found;
  }

 private:
  void emit(std::size_t last) {
    std::vector<std::size_t> s = mandatory_;
    s.insert(s.end(), chosen_.begin(), chosen_.end());
    s.push_back(last);
    std::sort(s.begin(), s.end());
    found_->insert(std::move(s));
  }

  void binary_dfs(std::size_t start, std::uint64_t sum) {
    if (chosen_.size() == target_free_) {
      const auto it = packed_index_.find(sum);
      if (it == packed_index_.end()) return;
      const std::size_t floor = chosen_.empty() ? 0 : chosen_.back() + 1;
      for (auto j : it->second)
        if (j >= floor && !in_mandatory_[j]) emit(j);
      return;
    }
    const std::size_t need = target_free_ - chosen_.size();
    for (std::size_t i = start; i + need <= pool_.size(); ++i) {
      chosen_.push_back(pool_[i]);
      binary_dfs(i + 1, sum ^ packed_[pool_[i]]);
      chosen_.pop_back();
    }
  }

  std::string normalized_key(const std::vector<std::uint8_t>& v) const {
    std::string key(v.size(), '\0');
    unsigned scale = 0;
    for (auto x : v) {
      if (x) {
        scale = inv_[x];
        break;
      }
    }
    const unsigned p = static_cast<unsigned>(c_.p);
    for (std::size_t i = 0; i < v.size(); ++i) key[i] = static_cast<char>((v[i] * scale) % p);
    return key;
  }

  void add_scaled(std::vector<std::uint8_t>& sum, std::size_t col, unsigned coeff) const {
    const unsigned p = static_cast<unsigned>(c_.p);
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] = static_cast<std::uint8_t>((sum[r] + coeff * columns_[col][r]) % p);
  }

  // Coefficients over M, the first element of M∪R' normalized to 1.
  void generic_mandatory(std::size_t idx, std::vector<std::uint8_t>& sum) {
    if (idx == mandatory_.size()) {
      generic_free(0, sum, mandatory_.empty());
      return;
    }
    const unsigned p = static_cast<unsigned>(c_.p);
    const unsigned hi = idx == 0 ? 1 : p - 1;
    for (unsigned a = 1; a <= hi; ++a) {
      auto next = sum;
      add_scaled(next, mandatory_[idx], a);
      generic_mandatory(idx + 1, next);
    }
  }

  void generic_free(std::size_t start, std::vector<std::uint8_t>& sum, bool first_unset) {
    if (chosen_.size() == target_free_) {
      const auto it = key_index_.find(normalized_key(sum));
      if (it == key_index_.end()) return;
      const std::size_t floor = chosen_.empty() ? 0 : chosen_.back() + 1;
      for (auto j : it->second)
        if (j >= floor && !in_mandatory_[j]) emit(j);
      return;
    }
    const unsigned p = static_cast<unsigned>(c_.p);
    const std::size_t need = target_free_ - chosen_.size();
    for (std::size_t i = start; i + need <= pool_.size(); ++i) {
      chosen_.push_back(pool_[i]);
      const unsigned hi = first_unset ? 1 : p - 1;
      for (unsigned a = 1; a <= hi; ++a) {
        auto next = sum;
        add_scaled(next, pool_[i], a);
        generic_free(i + 1, next, false);
      }
      chosen_.pop_back();
    }
  }

  const LinearCode& c_;
  std::uint64_t budget_;
  bool binary_ = false;
  std::vector<std::vector<std::uint8_t>> columns_;
  std::vector<std::uint64_t> packed_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> packed_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> key_index_;
  std::vector<std::uint8_t> inv_;

  CoordSet mandatory_;
  std::vector<bool> in_mandatory_;
  std::vector<std::size_t> pool_;
  std::vector<std::size_t> chosen_;
  std::size_t target_free_ = 0;
  SupportSet* found_ = nullptr;
};

}  // namespace detail

/// Supports of the dual codewords of weight w <= wmax, keyed by weight.
/// Only weights with at least one support appear.
inline std::map<std::size_t, SupportSet> dual_low_weight_supports(const LinearCode& c, std::size_t wmax,
                                                                  std::uint64_t budget = kDefaultSubsetBudget) {
  detail::DualSupportSearch search(c, budget);
  std::map<std::size_t, SupportSet> out;
  for (std::size_t w = 1; w <= wmax; ++w) {
    auto s = search.run({}, w);
    if (!s.empty()) out[w] = std::move(s);
  }
  return out;
}

/// Supports of weight-w dual codewords that contain T.
inline SupportSet dual_supports_containing(const LinearCode& c, const CoordSet& t, std::size_t w,
                                           std::uint64_t budget = kDefaultSubsetBudget) {
  detail::DualSupportSearch search(c, budget);
  return search.run(t, w);
}

/// Number of distinct weight-w supports containing T, in C or in its dual.
inline std::size_t lambda_T_w(const LinearCode& c, const CoordSet& t, std::size_t w, bool in_dual,
                              std::uint64_t budget = kDefaultSubsetBudget) {
  if (in_dual) return dual_supports_containing(c, t, w, budget).size();
  SupportSet found;
  for_each_codeword(c, [&](std::size_t weight, const CodewordView& v) {
    if (weight != w) return;
    for (auto i : t)
      if (!v[i]) return;
    found.insert(v.support());
  });
  return found.size();
}

struct Design {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::uint64_t lambda = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Design&, const Design&) = default;
};

/// Two t-subsets covered a different number of times.
struct NotADesign {
  std::vector<std::size_t> first;
  std::uint64_t first_count = 0;
  std::vector<std::size_t> second;
  std::uint64_t second_count = 0;
};

using DesignCheck = std::variant<Design, NotADesign>;

namespace detail {

/// Colex rank of a sorted subset.
inline std::size_t subset_rank(const std::vector<std::size_t>& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += static_cast<std::size_t>(binomial(static_cast<long>(s[i]), static_cast<long>(i + 1)));
  return r;
}

inline std::vector<std::size_t> subset_unrank(std::size_t rank, std::size_t t) {
  std::vector<std::size_t> s(t);
  for (std::size_t i = t; i-- > 0;) {
    std::size_t c = i;
    while (binomial(static_cast<long>(c + 1), static_cast<long>(i + 1)) <= rank) ++c;
    s[i] = c;
    rank -= static_cast<std::size_t>(binomial(static_cast<long>(c), static_cast<long>(i + 1)));
  }
  return s;
}

}  // namespace detail

/// Checks whether the blocks form a t-design on n points.
inline DesignCheck blocks_design_check(const SupportSet& blocks, std::size_t n, std::size_t t) {
  const auto slots = static_cast<std::size_t>(binomial(static_cast<long>(n), static_cast<long>(t)));
  std::vector<std::uint64_t> cover(slots, 0);
  std::size_t block_size = 0;
  std::vector<std::size_t> pick;
  for (const auto& b : blocks) {
    block_size = b.size();
    if (b.size() < t) continue;
    // walk all t-subsets of the block
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      pick.resize(t);
      for (std::size_t i = 0; i < t; ++i) pick[i] = b[idx[i]];
      ++cover[detail::subset_rank(pick)];
      std::size_t i = t;
      while (i > 0 && idx[i - 1] == b.size() - t + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (std::size_t r = 1; r < slots; ++r) {
    if (cover[r] != cover[0]) {
      return NotADesign{detail::subset_unrank(0, t), cover[0], detail::subset_unrank(r, t), cover[r]};
    }
  }
  return Design{n, block_size, t, slots ? cover[0] : 0, blocks.size()};
}

/// Do the supports of the weight-w codewords of C form a t-design?
inline DesignCheck supports_design_check(const LinearCode& c, std::size_t w, std::size_t t,
                                         std::uint64_t cap = enumeration_cap()) {
  return blocks_design_check(codeword_supports(c, w, cap), c.n, t);
}

/// Stirling numbers of the second kind.
inline BigInt stirling_S(long t, long j) {
  if (j < 0 || j > t) return 0;
  BigInt sum = 0;
  for (long i = 0; i <= j; ++i) {
    BigInt term = binomial(j, i);
    BigInt power = 1;
    for (long e = 0; e < t; ++e) power *= i;
    term *= power;
    if ((j - i) % 2) sum -= term; else sum += term;
  }
  BigInt fact = 1;
  for (long i = 2; i <= j; ++i) fact *= i;
  return sum / fact;
}

/// Coefficient of (-1)^i A_i^perp in the t-th power moment of an [n, k] code
/// over GF(q).
inline Rational pless_kernel(long q, long n, long k, long t, long i) {
  Rational s = 0;
  BigInt fact = 1;
  for (long j = 2; j < i; ++j) fact *= j;
  for (long j = i; j <= t; ++j) {
    if (j >= 2) fact *= j;
    s += Rational(fact * stirling_S(t, j) * binomial(n - i, n - j)) * pow_q(q, k - j) * pow_q(q - 1, j - i);
  }
  return s;
}

/// Power-moment system for an [n, k] code over GF(q). Weights not listed as
/// known or unknown are taken to be zero on their side.
struct MomentSystem {
  long q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::map<std::size_t, Rational> primal_known;
  std::map<std::size_t, Rational> dual_known;
  std::vector<std::size_t> primal_unknown;
  std::vector<std::size_t> dual_unknown;
};

struct MomentSolution {
  std::map<std::size_t, Rational> primal;
  std::map<std::size_t, Rational> dual;
};

/// Solves the first `moments` power moments (t = 0..moments-1) exactly.
inline MomentSolution pless_solve(const MomentSystem& sys, std::size_t moments) {
  const std::size_t u = sys.primal_unknown.size() + sys.dual_unknown.size();
  const long n = static_cast<long>(sys.n);
  const long k = static_cast<long>(sys.k);
  // rows: [coefficients of unknowns | rhs]
  std::vector<std::vector<Rational>> rows;
  for (std::size_t t = 0; t < moments; ++t) {
    std::vector<Rational> row(u + 1, 0);
    Rational rhs = 0;
    const long tl = static_cast<long>(t);
    std::size_t col = 0;
    for (auto w : sys.primal_unknown) row[col++] = rational_pow(Rational(static_cast<long>(w)), tl);
    for (auto i : sys.dual_unknown) {
      const auto il = static_cast<long>(i);
      row[col++] = il > tl ? Rational(0) : Rational(-neg_one_pow(il)) * pless_kernel(sys.q, n, k, tl, il);
    }
    for (const auto& [w, a] : sys.primal_known) rhs -= rational_pow(Rational(static_cast<long>(w)), tl) * a;
    for (const auto& [i, a] : sys.dual_known) {
      const auto il = static_cast<long>(i);
      if (il <= tl) rhs += Rational(neg_one_pow(il)) * a * pless_kernel(sys.q, n, k, tl, il);
    }
    row[u] = rhs;
    rows.push_back(std::move(row));
  }
  std::size_t pivot = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < u && pivot < rows.size(); ++c) {
    std::size_t r = pivot;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational lead = rows[pivot][c];
    for (auto& x : rows[pivot]) x /= lead;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == pivot || rows[rr][c] == 0) continue;
      const Rational f = rows[rr][c];
      for (std::size_t cc = c; cc <= u; ++cc) rows[rr][cc] -= f * rows[pivot][cc];
    }
    pivot_col.push_back(c);
    ++pivot;
  }
  for (std::size_t r = pivot; r < rows.size(); ++r) {
    if (rows[r][u] != 0) throw Error(ErrorCode::InconsistentMoments, "power moments contradict the given counts");
  }
  if (pivot < u) throw Error(ErrorCode::SingularSystem, "moment system does not determine every unknown");
  MomentSolution out;
  for (std::size_t r = 0; r < pivot; ++r) {
    const std::size_t c = pivot_col[r];
    if (c < sys.primal_unknown.size()) {
      out.primal[sys.primal_unknown[c]] = rows[r][u];
    } else {
      out.dual[sys.dual_unknown[c - sys.primal_unknown.size()]] = rows[r][u];
    }
  }
  return out;
}

/// Residual (lhs - rhs) of each moment t = 0..tmax given the full primal
/// distribution and the dual prefix A_0^perp..A_tmax^perp.
inline std::vector<Rational> pless_residuals(long q, std::size_t n, std::size_t k, const WeightDistribution& wd,
                                             const std::map<std::size_t, Count>& dual_prefix, std::size_t tmax) {
  std::vector<Rational> res;
  for (std::size_t t = 0; t <= tmax; ++t) {
    const long tl = static_cast<long>(t);
    Rational lhs = 0;
    for (const auto& [w, a] : wd) lhs += rational_pow(Rational(static_cast<long>(w)), tl) * Rational(static_cast<BigInt>(a));
    Rational rhs = 0;
    for (const auto& [i, a] : dual_prefix) {
      const auto il = static_cast<long>(i);
      if (il > tl) continue;
      rhs += Rational(neg_one_pow(il)) * Rational(static_cast<BigInt>(a)) *
             pless_kernel(q, static_cast<long>(n), static_cast<long>(k), tl, il);
    }
    res.push_back(lhs - rhs);
  }
  return res;
}

inline bool pless_consistent(long q, std::size_t n, std::size_t k, const WeightDistribution& wd,
                             const std::map<std::size_t, Count>& dual_prefix, std::size_t tmax) {
  for (const auto& r : pless_residuals(q, n, k, wd, dual_prefix, tmax))
    if (r != 0) return false;
  return true;
}

}  // namespace shortcode
