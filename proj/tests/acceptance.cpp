#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shortcode/harness.hpp"

using namespace shortcode;

namespace {

struct Line {
  bool pass;
  std::string detail;
};

std::vector<PredictionReport> g_reports;

double seconds_since(std::chrono::steady_clock::time_point t0) { return detail::elapsed(t0); }

Line criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t passed = 0;
  std::string first_fail;
  const auto scenarios = worked_example_scenarios();
  for (const auto& s : scenarios) {
    auto r = verify_scenario(s);
    if (r.pass) {
      ++passed;
    } else if (first_fail.empty()) {
      first_fail = r.id + ": " + r.note;
    }
    g_reports.push_back(std::move(r));
  }
  const double secs = seconds_since(t0);
  const bool ok = passed == scenarios.size() && scenarios.size() == 16 && secs < 30;
  return {ok, std::to_string(passed) + "/" + std::to_string(scenarios.size()) + " examples" + (first_fail.empty() ? "" : ", " + first_fail) +
                  ", " + std::to_string(secs) + " s"};
}

Line criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t passed = 0;
  std::size_t total_count = 0;
  std::map<std::string, std::set<std::string>> choices;
  for (const auto& s : table_scenarios()) {
    auto r = verify_scenario(s);
    ++total_count;
    passed += r.pass ? 1 : 0;
    choices[r.table + "/" + r.code].insert(r.T);
    g_reports.push_back(std::move(r));
  }
  std::size_t thin = 0;
  for (const auto& [key, ts] : choices)
    if (!key.starts_with("tab1/") && !key.starts_with("tab2/") && ts.size() < 3) ++thin;
  const double secs = seconds_since(t0);
  const bool ok = passed == total_count && thin == 0 && secs < 300;
  return {ok, std::to_string(passed) + "/" + std::to_string(total_count) + " table scenarios over " + std::to_string(choices.size()) +
                  " (table, code) pairs, " + std::to_string(thin) + " with fewer than 3 T, " + std::to_string(secs) + " s"};
}

Line criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const Field f(default_field_spec(2, 5));
  const auto c = build_code(f, 3);
  const auto r = sweep_subsets(c, 4, table_classifier(f, 3, c));
  std::set<std::string> tags;
  for (const auto& cl : r.classes) tags.insert(cl.tags.begin(), cl.tags.end());
  const double secs = seconds_since(t0);
  const bool ok = r.pass && !r.sampled && r.subsets == 35960 && r.lambda_checked == 35960 && r.classes.size() == 2 &&
                  tags == std::set<std::string>{"tab8", "tab9"} && secs < 120;
  return {ok, std::to_string(r.subsets) + " subsets, " + std::to_string(r.classes.size()) + " classes, " + std::to_string(r.wd_mismatches) +
                  " distribution and " + std::to_string(r.lambda_mismatches) + " lambda mismatches, " + std::to_string(secs) + " s"};
}

Line criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sweeps = lambda_sweeps(0);
  bool ok = true;
  std::string detail_text;
  for (const auto& r : sweeps) {
    if (r.id.starts_with("lambda-odd")) continue;
    const bool full = r.id.find("m=4") != std::string::npos;
    const bool size_ok = full ? (!r.sampled && r.subsets == 560) : r.subsets >= 500;
    ok = ok && r.pass && size_ok && r.lambda_checked == r.subsets;
    detail_text += r.id + ": " + std::to_string(r.subsets) + " subsets, " + std::to_string(r.lambda_mismatches) + " lambda mismatches; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 120;
  return {ok, detail_text + std::to_string(secs) + " s"};
}

Line criterion5() {
  bool ok = true;
  std::string text;
  for (int m : {4, 6}) {
    const auto r = verify_gf4(m);
    ok = ok && r.pass;
    text += "m=" + std::to_string(m) + ": A3 " + to_decimal(r.A3_brute) + "/" + to_decimal(r.A3_closed) + ", A4 " + to_decimal(r.A4_brute) + "/" +
            to_decimal(r.A4_closed) + ", lambda6 " + std::to_string(r.lambda6_closed) + (r.pass ? "; " : " (mismatch); ");
  }
  text.resize(text.size() - 2);
  return {ok, text};
}

Line criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  std::size_t lemmas = 0;
  std::string failing;
  for (const auto& r : sums_suite()) {
    ++lemmas;
    cases += r.cases;
    if (!r.pass()) failing += r.lemma + " ";
  }
  const double secs = seconds_since(t0);
  return {failing.empty() && secs < 180,
          std::to_string(lemmas) + " lemma families, " + std::to_string(cases) + " cases" + (failing.empty() ? "" : ", failing: " + failing) + ", " +
              std::to_string(secs) + " s"};
}

Line criterion7() {
  const auto r = design_suite(10);
  return {r.pass(), std::to_string(r.checks.size() - r.failures.size()) + "/" + std::to_string(r.checks.size()) + " checks" +
                        (r.failures.empty() ? "" : ", first failure " + r.failures.front())};
}

Line criterion8() {
  const auto r = duality_property_suite(200, 0);
  std::size_t mass_bad = 0;
  for (const auto& rep : g_reports) {
    const int p = rep.code.starts_with("apn") ? 2 : parse_code_spec(rep.code).field.p;
    if (total(rep.enumerated) != pow_q(p, static_cast<long>(rep.k))) ++mass_bad;
  }
  const bool ok = r.pass && mass_bad == 0;
  return {ok, std::to_string(r.instances) + " instances, " + std::to_string(r.duality_failures) + " duality, " + std::to_string(r.mass_failures) +
                  " mass, " + std::to_string(r.dimension_failures) + "/" + std::to_string(r.dimension_checked) + " dimension failures; " +
                  std::to_string(g_reports.size()) + " scenario distributions, " + std::to_string(mass_bad) + " off mass"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Line (*)()>> criteria{
      {"worked examples", criterion1},       {"table suite", criterion2},        {"4-subset lambda dichotomy", criterion3},
      {"3-subset lambda formula", criterion4}, {"GF(4) shortening", criterion5},   {"character sums and counts", criterion6},
      {"design machinery", criterion7},      {"duality and mass properties", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line{false, {}};
    try {
      line = criteria[i].second();
    } catch (const std::exception& e) {
      line = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (line.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): " << line.detail << std::endl;
    failures += line.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
