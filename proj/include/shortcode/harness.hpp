#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shortcode/code.hpp"
#include "shortcode/construct.hpp"
#include "shortcode/predict.hpp"
#include "shortcode/sums.hpp"

namespace shortcode {

/// One end-to-end check: build, shorten on T, enumerate, compare.
struct Scenario {
  std::string id;
  std::string code;   // code spec, e.g. "apn:p=2,m=5,e=1"
  std::string T;      // T spec, e.g. "T=alpha^1,alpha^2"
  std::string table;  // table tag, or empty for automatic selection
  std::optional<long> lambda;
  std::optional<WeightDistribution> printed;
  std::optional<std::size_t> printed_d;
  std::optional<std::size_t> printed_dual_d;
};

struct PredictionReport {
  std::string id;
  std::string code;
  std::string field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string T;
  std::string table;
  WeightDistribution predicted;
  WeightDistribution enumerated;
  std::optional<WeightDistribution> printed;
  std::optional<long> lambda_predicted;
  std::optional<long> lambda_brute;
  std::optional<std::size_t> dual_d;
  std::optional<std::size_t> printed_dual_d;
  bool pass = false;
  double seconds = 0;
  std::string note;
};

/// Table choice for a shortened code plus any lambda the choice depends on.
struct Expectation {
  std::string tag;
  std::optional<long> lambda_predicted;
  std::optional<long> lambda_brute;
  WeightDistribution wd;
  std::string note;
};

namespace detail {

inline double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// e with s = 2^e + 1 (mod q - 1) and gcd(m, e) = 1, if any.
inline std::optional<long> gold_e(const Field& fld, std::uint64_t s) {
  if (fld.p() != 2) return std::nullopt;
  const std::uint64_t q = fld.q();
  for (long e = 1; e < fld.m(); ++e) {
    if (std::gcd(static_cast<long>(fld.m()), e) != 1) continue;
    if (reduce_exponent((std::uint64_t{1} << e) + 1, q) == s) return e;
  }
  return std::nullopt;
}

/// s = 2 or s = p^e + 1 with m / gcd(m, e) odd.
inline bool quadratic_pn(const Field& fld, std::uint64_t s) {
  if (fld.p() == 2) return false;
  if (s == 2) return true;
  const auto q = static_cast<std::uint64_t>(fld.q());
  for (int e = 1; e <= fld.m(); ++e) {
    if ((fld.m() / std::gcd(fld.m(), e)) % 2 == 0) continue;
    if (reduce_exponent(static_cast<std::uint64_t>(ipow(fld.p(), e)) + 1, q) == s) return true;
  }
  return false;
}

/// T = {a c + b : c in GF(p)} for some a != 0, b.
inline bool is_affine_prime_line(const Field& fld, const CoordSet& t) {
  if (t.size() != static_cast<std::size_t>(fld.p())) return false;
  const auto base = special_T(fld, SpecialT::SubfieldP);
  const auto els = elements_of(fld, t);
  const FieldElement b = els[0];
  const FieldElement a = fld.sub(els[1], els[0]);
  return affine_image(fld, base, a, b) == t;
}

inline long lambda6_brute(const LinearCode& c, const CoordSet& t) { return static_cast<long>(lambda_T_w(c, t, 6, true)); }

}  // namespace detail

/// Picks the table for C_T of the code x^s over fld.
inline Expectation auto_expectation(const Field& fld, std::uint64_t s, const LinearCode& full, const CoordSet& t,
                                    std::optional<long> lambda_override = std::nullopt) {
  Expectation ex;
  const int p = fld.p();
  const int m = fld.m();
  const std::size_t sz = t.size();
  auto fail = [](const std::string& what) -> Expectation { throw Error(ErrorCode::GateUnsatisfied, what); };
  if (p == 2) {
    const auto e = detail::gold_e(fld, s);
    const auto listed = apn_exponents(m);
    if (std::find(listed.begin(), listed.end(), s) == listed.end()) return fail("s is not a listed APN exponent");
    if (auto tag = design_table_tag(2, m, sz)) {
      ex.tag = *tag;
    } else if (sz == 4 && m % 2 == 1) {
      if (lambda_override) {
        ex.lambda_predicted = lambda_override;
      } else if (e) {
        ex.lambda_predicted = predict_lambda_odd4(fld, *e, elements_of(fld, t)).lambda;
      }
      ex.lambda_brute = detail::lambda6_brute(full, t);
      const long l = ex.lambda_predicted.value_or(*ex.lambda_brute);
      if (l != 0 && l != 1) return fail("lambda outside {0,1}");
      ex.tag = l == 0 ? "tab8" : "tab9";
    } else if (sz == 3 && m % 2 == 0) {
      ex.lambda_brute = detail::lambda6_brute(full, t);
      if (lambda_override) {
        ex.lambda_predicted = lambda_override;
      } else if (e) {
        try {
          ex.lambda_predicted = predict_lambda_even3(fld, *e, elements_of(fld, t)).lambda;
        } catch (const Error& err) {
          if (err.code() != ErrorCode::DegenerateT) throw;
          ex.note = "degenerate T, brute lambda used";
        }
      }
      ex.tag = "tab10";
      ex.wd = table_wd("tab10", {2, m, ex.lambda_predicted.value_or(*ex.lambda_brute)}).wd;
      return ex;
    } else if (sz == 4 && m % 2 == 0 && t == special_T(fld, SpecialT::GF4)) {
      if (!e) return fail("GF(4) table needs a Gold exponent");
      ex.tag = "gf4";
    } else {
      return fail("no table covers this T");
    }
    ex.wd = table_wd(ex.tag, {2, m, ex.lambda_predicted}).wd;
    return ex;
  }
  if (!detail::quadratic_pn(fld, s)) return fail("s is not 2 or a gated p^e + 1");
  if (sz == 1 || sz == 2) {
    ex.tag = *design_table_tag(p, m, sz);
  } else if (detail::is_affine_prime_line(fld, t)) {
    ex.tag = m % 2 == 1 ? "tab15" : "tab16";
  } else {
    return fail("no table covers this T");
  }
  ex.wd = table_wd(ex.tag, {p, m, {}}).wd;
  return ex;
}

/// Builds, shortens and enumerates; compares against the table and any printed distribution.
inline PredictionReport verify_scenario(const Scenario& sc) {
  const auto t0 = std::chrono::steady_clock::now();
  PredictionReport r;
  r.id = sc.id;
  r.code = sc.code;
  const auto spec = parse_code_spec(sc.code);
  const Field fld(spec.field);
  r.field = fld.spec().to_string();
  const auto full = build_code(fld, spec.s);
  const auto t = parse_T(fld, sc.T);
  r.T = format_T(fld, t);
  const auto shortened = shorten(full, t);
  r.n = shortened.n;
  r.k = shortened.k();
  r.enumerated = weight_distribution(shortened);
  r.d = min_distance(r.enumerated);
  r.printed = sc.printed;
  r.printed_dual_d = sc.printed_dual_d;
  bool ok = true;
  std::vector<std::string> notes;
  if (sc.table.empty()) {
    const auto ex = auto_expectation(fld, spec.s, full, t, sc.lambda);
    r.table = ex.tag;
    r.predicted = ex.wd;
    r.lambda_predicted = ex.lambda_predicted;
    r.lambda_brute = ex.lambda_brute;
    if (!ex.note.empty()) notes.push_back(ex.note);
  } else {
    const auto pw = table_wd(sc.table, {fld.p(), fld.m(), sc.lambda});
    r.table = sc.table;
    r.predicted = pw.wd;
    if (pw.n != r.n || pw.k != r.k) {
      ok = false;
      notes.push_back("table parameters differ from the shortened code");
    }
  }
  if (r.predicted != r.enumerated) {
    ok = false;
    notes.push_back("prediction differs from enumeration");
  }
  if (sc.printed && *sc.printed != r.enumerated) {
    ok = false;
    notes.push_back("printed distribution differs from enumeration");
  }
  if (sc.printed_d && *sc.printed_d != r.d) {
    ok = false;
    notes.push_back("printed minimum distance differs");
  }
  if (r.lambda_predicted && r.lambda_brute && *r.lambda_predicted != *r.lambda_brute) {
    ok = false;
    notes.push_back("predicted lambda differs from brute lambda");
  }
  if (sc.printed_dual_d) {
    const auto low = dual_low_weight_supports(shortened, *sc.printed_dual_d);
    r.dual_d = low.empty() ? 0 : low.begin()->first;
    if (low.empty() || *r.dual_d != *sc.printed_dual_d) {
      ok = false;
      notes.push_back("printed dual distance differs");
    }
  }
  r.pass = ok;
  for (std::size_t i = 0; i < notes.size(); ++i) r.note += (i ? "; " : "") + notes[i];
  r.seconds = detail::elapsed(t0);
  return r;
}

inline WeightDistribution make_wd(std::initializer_list<std::pair<std::size_t, long long>> rows) {
  WeightDistribution wd{{0, 1}};
  for (auto [w, c] : rows) wd[w] = c;
  return wd;
}

/// The sixteen worked examples, with a concrete T for each "any t-subset".
inline std::vector<Scenario> worked_example_scenarios() {
  const std::string b5 = "apn:p=2,m=5,e=1";
  const std::string b4 = "apn:p=2,m=4,e=1";
  return {
      {"binary-odd/m=5/t=1", b5, "T=alpha^7", "", {}, make_wd({{12, 310}, {16, 527}, {20, 186}}), 12, 5},
      {"binary-odd/m=5/t=2", b5, "T=0,alpha^3", "", {}, make_wd({{12, 190}, {16, 255}, {20, 66}}), 12, 4},
      {"binary-odd/m=5/t=3", b5, "T=0,1,alpha^1", "", {}, make_wd({{12, 114}, {16, 119}, {20, 22}}), 12, 3},
      {"binary-even/m=4/t=1", b4, "T=alpha^2", "", {}, make_wd({{4, 15}, {6, 100}, {8, 75}, {10, 60}, {12, 5}}), 4, 5},
      {"binary-even/m=4/t=2", b4, "T=alpha^2,alpha^9", "", {}, make_wd({{4, 11}, {6, 60}, {8, 35}, {10, 20}, {12, 1}}), 4, 4},
      {"lambda-odd/m=5/lambda=0", b5, "T=alpha^1,alpha^2,alpha^4,alpha^5", "", {}, make_wd({{12, 66}, {16, 55}, {20, 6}}), 12, {}},
      {"lambda-odd/m=5/lambda=1", b5, "T=alpha^1,alpha^2,alpha^3,alpha^4", "", {}, make_wd({{12, 68}, {16, 51}, {20, 8}}), 12, {}},
      {"lambda-even/m=4/lambda=0", b4, "T=alpha^1,alpha^2,alpha^4", "", {}, make_wd({{4, 7}, {6, 36}, {8, 15}, {10, 4}, {12, 1}}), 4, 4},
      {"lambda-even/m=4/lambda=2", b4, "T=alpha^2,alpha^5,alpha^7", "", {}, make_wd({{4, 8}, {6, 34}, {8, 15}, {10, 6}}), 4, 3},
      {"gf4/m=4", b4, "T=GF(4)", "", {}, make_wd({{4, 3}, {6, 24}, {8, 3}, {12, 1}}), 4, 4},
      {"pn/p=3/m=3/t=1", "pn:p=3,m=3,s=2", "T=alpha^4", "", {}, make_wd({{15, 312}, {18, 260}, {21, 156}}), 15, 4},
      {"pn/p=3/m=4/t=1", "pn:p=3,m=4,s=2", "T=alpha^4", "", {}, make_wd({{48, 1320}, {51, 2400}, {54, 80}, {57, 1920}, {60, 840}}), 48, 4},
      {"pn/p=3/m=5/t=2", "pn:p=3,m=5,s=2", "T=alpha^4,alpha^11", "", {}, make_wd({{153, 8010}, {162, 6560}, {171, 5112}}), 153, 3},
      {"pn/p=3/m=4/t=2", "pn:p=3,m=4,s=2", "T=alpha^4,alpha^11", "", {}, make_wd({{48, 528}, {51, 870}, {54, 26}, {57, 552}, {60, 210}}), 48, 3},
      {"pn-line/p=3/m=3", "pn:p=3,m=3,s=2", "T=GF(3)", "", {}, make_wd({{15, 48}, {18, 32}}), 15, 3},
      {"pn-line/p=3/m=4", "pn:p=3,m=4,s=2", "T=GF(3)", "", {}, make_wd({{48, 240}, {51, 240}, {54, 26}, {57, 192}, {60, 30}}), 48, 2},
  };
}

namespace detail {

inline std::string label_list(const Field& fld, const CoordSet& t) { return format_T(fld, t); }

/// k distinct positions from [0, n), deterministic in the generator state.
inline CoordSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::set<std::size_t> s;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (s.size() < k) s.insert(pick(rng));
  return {s.begin(), s.end()};
}

/// Three distinct T choices of size t: a fixed pattern plus two seeded draws.
inline std::vector<CoordSet> three_choices(std::size_t n, std::size_t t, std::uint64_t seed) {
  std::vector<CoordSet> out;
  CoordSet first;
  for (std::size_t i = 0; i < t; ++i) first.push_back(i);
  out.push_back(first);
  std::mt19937_64 rng(seed);
  while (out.size() < 3) {
    auto s = random_subset(rng, n, t);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

inline std::string gold_spec(int m, long e) { return "apn:p=2,m=" + std::to_string(m) + ",e=" + std::to_string(e); }

}  // namespace detail

/// Tables 1-7 for m in 4..7 and the odd-p tables for (3,3), (3,4), (5,3), each on three T.
inline std::vector<Scenario> table_scenarios(std::uint64_t seed = 0) {
  std::vector<Scenario> out;
  for (int m = 4; m <= 7; ++m) {
    const std::size_t n = std::size_t{1} << m;
    const Field fld(default_field_spec(2, m));
    out.push_back({"full/p=2/m=" + std::to_string(m), detail::gold_spec(m, 1), "T=", "", {}, {}, {}, {}});
    const std::size_t tmax = m % 2 == 1 ? 3 : 2;
    for (std::size_t t = 1; t <= tmax; ++t) {
      int idx = 0;
      for (const auto& choice : detail::three_choices(n, t, seed + static_cast<std::uint64_t>(m * 10) + t)) {
        out.push_back({"shorten/p=2/m=" + std::to_string(m) + "/t=" + std::to_string(t) + "/#" + std::to_string(idx++),
                       detail::gold_spec(m, 1), format_T(fld, choice), "", {}, {}, {}, {}});
      }
    }
  }
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {5, 3}}) {
    const Field fld(default_field_spec(p, m));
    const std::size_t n = fld.q();
    std::vector<std::uint64_t> exps{2};
    for (int e = 1; e <= m; ++e) {
      if ((m / std::gcd(m, e)) % 2 == 0) continue;
      const auto s = reduce_exponent(static_cast<std::uint64_t>(ipow(p, e)) + 1, fld.q());
      if (s != 2) {
        exps.push_back(s);
        break;
      }
    }
    for (auto s : exps) {
      const std::string spec = "pn:p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",s=" + std::to_string(s);
      const std::string base = "pn/p=" + std::to_string(p) + "/m=" + std::to_string(m) + "/s=" + std::to_string(s);
      for (std::size_t t = 1; t <= 2; ++t) {
        int idx = 0;
        for (const auto& choice : detail::three_choices(n, t, seed + static_cast<std::uint64_t>(p * 100 + m * 10) + t)) {
          out.push_back({base + "/t=" + std::to_string(t) + "/#" + std::to_string(idx++), spec, format_T(fld, choice), "", {}, {}, {}, {}});
        }
      }
      const auto line = special_T(fld, SpecialT::SubfieldP);
      const std::vector<std::pair<FieldElement, FieldElement>> maps{
          {fld.one(), fld.zero()}, {fld.alpha_pow(1), fld.one()}, {fld.alpha_pow(5), fld.alpha_pow(2)}};
      int idx = 0;
      for (auto [a, b] : maps) {
        out.push_back({base + "/line/#" + std::to_string(idx++), spec, format_T(fld, affine_image(fld, line, a, b)), "", {}, {}, {}, {}});
      }
    }
  }
  return out;
}

/// A group of subsets sharing one enumerated distribution.
struct SubsetClass {
  WeightDistribution wd;
  std::size_t count = 0;
  std::set<std::string> tags;
};

struct SweepReport {
  std::string id;
  std::size_t size = 0;
  std::size_t subsets = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<SubsetClass> classes;
  std::size_t wd_mismatches = 0;
  std::size_t lambda_mismatches = 0;
  std::size_t lambda_checked = 0;
  std::vector<std::string> first_failures;
  bool pass = false;
  double seconds = 0;
};

struct SweepOptions {
  std::uint64_t budget = 100'000;
  std::size_t sample = 500;
  std::uint64_t seed = 0;
  bool single_class = false;
};

using Classifier = std::function<Expectation(const CoordSet&)>;

/// Shortens on every (or a seeded sample of) size-subset, groups by enumerated
/// distribution and checks each subset against the classifier's table.
inline SweepReport sweep_subsets(const LinearCode& c, std::size_t size, const Classifier& classify, const SweepOptions& opt = {},
                                 std::string id = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport r;
  r.id = std::move(id);
  r.size = size;
  r.seed = opt.seed;
  std::map<WeightDistribution, SubsetClass> groups;
  auto visit = [&](const CoordSet& t) {
    ++r.subsets;
    const auto wd = weight_distribution(shorten(c, t));
    const auto ex = classify(t);
    auto& g = groups[wd];
    g.wd = wd;
    ++g.count;
    g.tags.insert(ex.tag);
    bool bad = false;
    if (ex.wd != wd) {
      ++r.wd_mismatches;
      bad = true;
    }
    if (ex.lambda_predicted && ex.lambda_brute) {
      ++r.lambda_checked;
      if (*ex.lambda_predicted != *ex.lambda_brute) {
        ++r.lambda_mismatches;
        bad = true;
      }
    }
    if (bad && r.first_failures.size() < 10) {
      std::string s = "{";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + c.labels[t[i]];
      r.first_failures.push_back(s + "}");
    }
  };
  const auto combos = binomial(static_cast<long>(c.n), static_cast<long>(size));
  if (combos <= opt.budget) {
    CoordSet t(size);
    for (std::size_t i = 0; i < size; ++i) t[i] = i;
    while (true) {
      visit(t);
      std::size_t i = size;
      while (i > 0 && t[i - 1] == c.n - size + i - 1) --i;
      if (i == 0) break;
      ++t[i - 1];
      for (std::size_t j = i; j < size; ++j) t[j] = t[j - 1] + 1;
    }
  } else {
    r.sampled = true;
    std::mt19937_64 rng(opt.seed);
    std::set<CoordSet> seen;
    while (seen.size() < opt.sample) {
      auto t = detail::random_subset(rng, c.n, size);
      if (seen.insert(t).second) visit(t);
    }
  }
  for (auto& [wd, g] : groups) r.classes.push_back(std::move(g));
  r.pass = r.wd_mismatches == 0 && r.lambda_mismatches == 0 && (!opt.single_class || r.classes.size() == 1);
  r.seconds = detail::elapsed(t0);
  return r;
}

/// Classifier backed by auto_expectation for the code x^s.
inline Classifier table_classifier(const Field& fld, std::uint64_t s, const LinearCode& full) {
  return [&fld, s, &full](const CoordSet& t) { return auto_expectation(fld, s, full, t); };
}

/// All 4-subsets at m = 5 and all 3-subsets at m = 4, plus a 500-subset sample at m = 6.
inline std::vector<SweepReport> lambda_sweeps(std::uint64_t seed = 0, bool full_odd = true) {
  std::vector<SweepReport> out;
  {
    const Field f(default_field_spec(2, 5));
    const auto c = build_code(f, 3);
    SweepOptions o;
    o.seed = seed;
    o.budget = full_odd ? 100'000 : 0;
    o.sample = 2000;
    out.push_back(sweep_subsets(c, 4, table_classifier(f, 3, c), o, "lambda-odd/m=5/size=4"));
  }
  {
    const Field f(default_field_spec(2, 4));
    const auto c = build_code(f, 3);
    SweepOptions o;
    o.seed = seed;
    out.push_back(sweep_subsets(c, 3, table_classifier(f, 3, c), o, "lambda-even/m=4/size=3"));
  }
  {
    const Field f(default_field_spec(2, 6));
    const auto c = build_code(f, 3);
    SweepOptions o;
    o.seed = seed;
    o.budget = 0;
    o.sample = 500;
    out.push_back(sweep_subsets(c, 3, table_classifier(f, 3, c), o, "lambda-even/m=6/size=3/sampled"));
  }
  return out;
}

/// Result of one lemma family over its sweep.
struct LemmaReport {
  std::string lemma;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool pass() const { return failures.empty(); }
};

namespace detail {

class LemmaTally {
 public:
  explicit LemmaTally(std::string name) : t0_(std::chrono::steady_clock::now()) { r_.lemma = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (!ok && r_.failures.size() < 20) r_.failures.push_back(describe());
  }

  LemmaReport done() {
    r_.seconds = elapsed(t0_);
    return std::move(r_);
  }

 private:
  LemmaReport r_;
  std::chrono::steady_clock::time_point t0_;
};

inline std::string where(const Field& f, std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s = "p=" + std::to_string(f.p()) + ",m=" + std::to_string(f.m());
  for (auto [k, v] : kv) s += std::string(",") + k + "=" + std::to_string(v);
  return s;
}

inline bool odd_quotient(const Field& f, long e) { return (f.m() / std::gcd(static_cast<long>(f.m()), e)) % 2 == 1; }

}  // namespace detail

/// Every character-sum and counting identity over its full sweep.
inline std::vector<LemmaReport> sums_suite() {
  using detail::LemmaTally;
  using detail::where;
  const std::vector<std::pair<int, int>> odd{{3, 3}, {3, 4}, {5, 3}};
  const std::vector<int> binary_even{4, 6};
  auto F = [](int p, int m) { return Field(default_field_spec(p, m)); };
  auto E = [](std::uint32_t i) { return FieldElement{i}; };
  std::vector<LemmaReport> out;
  {
    LemmaTally t("gauss-sums");
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}}) {
      const auto f = F(p, m);
      const auto g = gauss_sums(f);
      t.check(g.first.agree && g.second.agree, [&] { return where(f, {}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("quadratic-character-on-prime-field");
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
      const auto f = F(p, m);
      t.check(eta_on_prime_field_holds(f), [&] { return where(f, {}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("quadratic-sum-odd");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (std::uint32_t a2 = 1; a2 < f.q(); ++a2)
        for (std::uint32_t a1 = 0; a1 < f.q(); ++a1)
          for (std::uint32_t a0 : {0u, 1u}) {
            t.check(quad_char_sum(f, E(a2), E(a1), E(a0)).agree, [&] { return where(f, {{"a2", a2}, {"a1", a1}, {"a0", a0}}); });
          }
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("quadratic-sum-even");
    for (int m : {4, 5, 6}) {
      const auto f = F(2, m);
      for (std::uint32_t b = 1; b < f.q(); ++b)
        for (std::uint32_t a2 = 1; a2 < f.q(); ++a2)
          for (std::uint32_t a1 = 0; a1 < f.q(); ++a1) {
            const std::uint32_t a0 = (a1 + a2) % f.q();
            t.check(quad_char_sum(f, E(a2), E(a1), E(a0), E(b)).agree, [&] { return where(f, {{"b", b}, {"a2", a2}, {"a1", a1}}); });
          }
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("exp-sum-binary");
    for (int m : binary_even) {
      const auto f = F(2, m);
      for (long e : {1L, 2L}) {
        if (std::gcd(static_cast<long>(m), e) != 1) continue;
        for (std::uint32_t a = 0; a < f.q(); ++a) t.check(exp_sum_Se(f, e, E(a), f.zero()).agree, [&] { return where(f, {{"e", e}, {"a", a}}); });
      }
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("power-sum-binary");
    for (int m : binary_even) {
      const auto f = F(2, m);
      for (int h : {2, 4})
        for (std::uint32_t a = 1; a < f.q(); ++a) t.check(power_sum_Se(f, 1, E(a), h).agree, [&] { return where(f, {{"h", h}, {"a", a}}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("exp-sum-odd");
    LemmaTally d("delta-sum");
    LemmaTally n("nhat0-count");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (long e : {1L, 2L}) {
        if (!detail::odd_quotient(f, e)) continue;
        for (std::uint32_t a = 0; a < f.q(); ++a)
          for (std::uint32_t b = 0; b < f.q(); ++b) {
            auto w = [&] { return where(f, {{"e", e}, {"a", a}, {"b", b}}); };
            n.check(count_Nhat0(f, e, E(a), E(b)).agree, w);
            if (a == 0 || b == 0) continue;
            t.check(exp_sum_Se(f, e, E(a), E(b)).agree, w);
            d.check(delta_sum(f, e, E(a), E(b)).agree, w);
          }
      }
    }
    out.push_back(t.done());
    out.push_back(d.done());
    out.push_back(n.done());
  }
  {
    LemmaTally t("bent-zero-sets");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (auto kind : {BentFamily::Quadratic, BentFamily::Monomial}) {
        if (kind == BentFamily::Monomial && !detail::odd_quotient(f, 1)) continue;
        for (std::uint32_t a = 1; a < f.q(); ++a) {
          const auto fn = bent_function(f, kind, E(a), 1);
          for (std::uint32_t b = 1; b < f.q(); ++b) {
            try {
              const auto r = count_bent_zero_sets(f, fn, E(b));
              t.check(r.zero.agree && r.square.agree && r.nonsquare.agree, [&] { return where(f, {{"a", a}, {"beta", b}}); });
            } catch (const Error& e) {
              if (e.code() != ErrorCode::DualNonzero) throw;
            }
          }
        }
      }
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("cubic-residue-trace-classes");
    for (int m : {4, 6, 8}) {
      const auto f = F(2, m);
      for (const auto& c : count_R3(f)) t.check(c.agree, [&] { return where(f, {}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally pair("pair-system");
    for (int m : {4, 5, 6}) {
      const auto f = F(2, m);
      std::mt19937_64 rng(static_cast<std::uint64_t>(m));
      for (int i = 0; i < 400; ++i) {
        const auto s = detail::random_subset(rng, f.q(), 4);
        pair.check(count_pair_system(f, 1, elements_of(f, s)).agree, [&] { return where(f, {{"i", i}}); });
      }
    }
    out.push_back(pair.done());
    LemmaTally triple("triple-system");
    LemmaTally quad("quadruple-system");
    for (int m : binary_even) {
      const auto f = F(2, m);
      const auto tally = triple_system_tally(f, 1);
      for (std::uint32_t a = 0; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b) {
          if (f.add(f.pow(E(a), 3), E(b)).is_zero()) continue;
          triple.check(Count(tally[a][b]) == triple_system_closed(f, 1, E(a), E(b)), [&] { return where(f, {{"a", a}, {"b", b}}); });
        }
      quad.check(count_quadruple_system(f, 1).agree, [&] { return where(f, {}); });
    }
    out.push_back(triple.done());
    out.push_back(quad.done());
  }
  {
    LemmaTally t("square-trace-zero-count");
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
      const auto f = F(p, m);
      const auto r = count_quadchar_trace(f);
      t.check(r.first.agree && r.second.agree, [&] { return where(f, {}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally t("quadratic-zero-count");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (std::uint32_t a = 0; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b) t.check(count_N0_quadratic(f, E(a), E(b)).agree, [&] { return where(f, {{"a", a}, {"b", b}}); });
    }
    out.push_back(t.done());
  }
  {
    LemmaTally q("walsh-sign-quadratic");
    LemmaTally mono("walsh-sign-monomial");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (std::uint32_t a = 1; a < f.q(); ++a) {
        q.check(walsh_sign_check(f, BentFamily::Quadratic, E(a)).agree, [&] { return where(f, {{"a", a}}); });
        for (long e : {1L, 2L}) {
          if (!detail::odd_quotient(f, e)) continue;
          mono.check(walsh_sign_check(f, BentFamily::Monomial, E(a), e).agree, [&] { return where(f, {{"e", e}, {"a", a}}); });
        }
      }
    }
    out.push_back(q.done());
    out.push_back(mono.done());
  }
  {
    LemmaTally t("ntilde-count");
    for (auto [p, m] : odd) {
      const auto f = F(p, m);
      for (long e : {1L, 2L}) {
        if (!detail::odd_quotient(f, e)) continue;
        for (std::uint32_t a = 1; a < f.q(); ++a) {
          if (f.trace(E(a)) != 0) continue;
          for (int g = 0; g < p; ++g) t.check(count_Ntilde(f, e, E(a), g).agree, [&] { return where(f, {{"e", e}, {"a", a}, {"gamma", g}}); });
        }
      }
    }
    out.push_back(t.done());
  }
  return out;
}

/// The GF(4) shortening: table, low-weight dual counts and the 8-lambda.
struct Gf4Report {
  int m = 0;
  WeightDistribution predicted;
  WeightDistribution enumerated;
  Count n01_brute = 0;
  Count n01_closed = 0;
  Count A3_brute = 0;
  Count A3_closed = 0;
  Count A4_brute = 0;
  Count A4_closed = 0;
  long lambda6_closed = 0;
  std::vector<long> lambda6_brute;
  bool pass = false;
};

inline Gf4Report verify_gf4(int m) {
  Gf4Report r;
  r.m = m;
  const Field f(default_field_spec(2, m));
  const auto c = build_code(f, 3);
  const auto t = special_T(f, SpecialT::GF4);
  const auto ct = shorten(c, t);
  r.enumerated = weight_distribution(ct);
  r.predicted = table_wd("gf4", {2, m, {}}).wd;
  const auto n01 = count_quadruple_system(f, 1);
  r.n01_brute = n01.brute;
  r.n01_closed = n01.closed;
  const auto mom = gf4_moments(m, n01.brute);
  r.A3_closed = mom.A3;
  r.A4_closed = mom.A4;
  r.lambda6_closed = gf4_lambda6(m);
  // (C^perp)^T is the dual of C_T
  const auto low = dual_low_weight_supports(ct, 4);
  r.A3_brute = low.count(3) ? Count(low.at(3).size()) : Count(0);
  r.A4_brute = low.count(4) ? Count(low.at(4).size()) : Count(0);
  bool lam_ok = true;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    CoordSet sub;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) sub.push_back(t[i]);
    r.lambda6_brute.push_back(detail::lambda6_brute(c, sub));
    lam_ok = lam_ok && r.lambda6_brute.back() == r.lambda6_closed;
  }
  r.pass = r.enumerated == r.predicted && n01.agree && r.A3_brute == r.A3_closed && r.A4_brute == r.A4_closed && lam_ok &&
           r.A3_closed == 4 * r.lambda6_closed;
  return r;
}

/// Design checks on the full binary codes, symbolic transfer, and A6 of the dual by moments.
struct DesignSuiteReport {
  std::vector<std::string> checks;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty() && !checks.empty(); }
};

inline DesignSuiteReport design_suite(int transfer_mmax = 10) {
  DesignSuiteReport r;
  auto check = [&](bool ok, std::string what) {
    if (!ok) r.failures.push_back(what);
    r.checks.push_back(std::move(what));
  };
  for (auto [m, t] : std::vector<std::pair<int, std::size_t>>{{5, 3}, {4, 2}, {6, 2}}) {
    const auto c = build_code(Field(default_field_spec(2, m)), 3);
    const auto wd = weight_distribution(c);
    check(wd == table_wd(full_table_tag(m), {2, m, {}}).wd, "full/m=" + std::to_string(m));
    for (const auto& [w, count] : wd) {
      if (w == 0 || w == c.n) continue;
      const auto res = supports_design_check(c, w, t);
      check(std::holds_alternative<Design>(res), "design/m=" + std::to_string(m) + "/t=" + std::to_string(t) + "/w=" + std::to_string(w));
    }
  }
  for (int m = 4; m <= transfer_mmax; ++m) {
    const auto full = table_wd(full_table_tag(m), {2, m, {}});
    for (std::size_t t = 1; t <= 3; ++t) {
      const auto tag = design_table_tag(2, m, t);
      if (!tag) continue;
      const auto got = design_transfer(full.wd, full.n, t, TransferMode::Shorten);
      check(got == table_wd(*tag, {2, m, {}}).wd, "transfer/m=" + std::to_string(m) + "/" + *tag);
    }
  }
  for (int m : {4, 6}) {
    const auto full = table_wd("tab2", {2, m, {}});
    MomentSystem sys;
    sys.q = 2;
    sys.n = full.n;
    sys.k = full.k;
    for (const auto& [w, c] : full.wd) sys.primal_known[w] = Rational(BigInt(c));
    sys.dual_known = {{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
    sys.dual_unknown = {6};
    const auto sol = pless_solve(sys, 7);
    const auto c = build_code(Field(default_field_spec(2, m)), 3);
    const auto low = dual_low_weight_supports(c, 6);
    const Rational brute(low.count(6) ? static_cast<long long>(low.at(6).size()) : 0LL);
    const Rational closed(BigInt(A6_dual(m)));
    check(sol.dual.at(6) == brute && brute == closed && low.size() == 1, "pless-A6/m=" + std::to_string(m));
  }
  return r;
}

/// Duality, dimension and mass checks on random (code, T) pairs.
struct DualityReport {
  std::size_t instances = 0;
  std::size_t duality_failures = 0;
  std::size_t mass_failures = 0;
  std::size_t dimension_checked = 0;
  std::size_t dimension_failures = 0;
  std::vector<std::string> first_failures;
  bool pass = false;
};

inline DualityReport duality_property_suite(std::size_t instances = 200, std::uint64_t seed = 0) {
  DualityReport r;
  std::mt19937_64 rng(seed);
  const std::vector<std::string> specs{"apn:p=2,m=4,e=1", "apn:p=2,m=5,e=1", "apn:p=2,m=5,e=2", "apn:p=2,m=6,e=1",
                                       "pn:p=3,m=2,s=2",  "pn:p=3,m=3,s=2",  "pn:p=3,m=3,s=4",  "pn:p=5,m=2,s=2"};
  std::map<std::string, std::pair<LinearCode, std::pair<std::size_t, std::size_t>>> cache;
  for (const auto& s : specs) {
    const auto c = build_code(parse_code_spec(s));
    const auto d = min_distance(weight_distribution(c));
    const auto low = dual_low_weight_supports(c, 6);
    const std::size_t dd = low.empty() ? 0 : low.begin()->first;
    cache.emplace(s, std::make_pair(c, std::make_pair(d, dd)));
  }
  std::uniform_int_distribution<std::size_t> pick_spec(0, specs.size() - 1);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto& [c, dist] = cache.at(specs[pick_spec(rng)]);
    std::uniform_int_distribution<std::size_t> pick_t(1, 5);
    const auto t = detail::random_subset(rng, c.n, pick_t(rng));
    ++r.instances;
    const auto cd = dual(c);
    const auto sh = shorten(c, t);
    const auto pu = puncture(c, t);
    const bool ok = same_code(dual(sh), puncture(cd, t)) && same_code(dual(pu), shorten(cd, t));
    auto tag = [&] {
      std::string s = "n=" + std::to_string(c.n) + ",p=" + std::to_string(c.p) + ",T={";
      for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::to_string(t[j]);
      return s + "}";
    };
    if (!ok) {
      ++r.duality_failures;
      if (r.first_failures.size() < 10) r.first_failures.push_back("duality " + tag());
    }
    for (const auto* code : {&sh, &pu}) {
      const auto wd = weight_distribution(*code);
      Count mass = 1;
      for (std::size_t j = 0; j < code->k(); ++j) mass *= code->p;
      if (total(wd) != mass) {
        ++r.mass_failures;
        if (r.first_failures.size() < 10) r.first_failures.push_back("mass " + tag());
      }
    }
    if (dist.second > 0 && t.size() < std::min(dist.first, dist.second)) {
      ++r.dimension_checked;
      if (sh.k() + t.size() != c.k() || pu.k() != c.k()) {
        ++r.dimension_failures;
        if (r.first_failures.size() < 10) r.first_failures.push_back("dimension " + tag());
      }
    }
  }
  r.pass = r.duality_failures == 0 && r.mass_failures == 0 && r.dimension_failures == 0 && r.dimension_checked > 0;
  return r;
}

}  // namespace shortcode
