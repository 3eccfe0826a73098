#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "shortcode/code.hpp"
#include "shortcode/harness.hpp"
#include "shortcode/predict.hpp"
#include "shortcode/sums.hpp"

namespace shortcode {

using Json = nlohmann::ordered_json;

/// Weights in ascending order, counts as decimal strings.
inline Json wd_to_json(const WeightDistribution& wd) {
  Json j = Json::object();
  for (const auto& [w, c] : wd) j[std::to_string(w)] = to_decimal(c);
  return j;
}

inline WeightDistribution wd_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "weight distribution must be an object");
  WeightDistribution wd;
  for (const auto& [key, value] : j.items()) {
    const auto w = static_cast<std::size_t>(parse_int(key, "weight"));
    wd[w] = value.is_string() ? parse_count(value.get<std::string>()) : Count(value.get<long long>());
  }
  return wd;
}

inline Json code_to_json(const LinearCode& c, const std::string& construction = {}) {
  Json j;
  j["p"] = c.p;
  j["n"] = c.n;
  j["k"] = c.k();
  if (!c.field.empty()) j["field"] = c.field;
  if (!construction.empty()) j["construction"] = construction;
  j["labels"] = c.labels;
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.k(); ++r) {
    Json row = Json::array();
    for (std::size_t col = 0; col < c.n; ++col) row.push_back(static_cast<int>(c.generator(r, col)));
    rows.push_back(std::move(row));
  }
  j["generator"] = std::move(rows);
  return j;
}

inline LinearCode code_from_json(const Json& j) {
  try {
    const int p = j.at("p").get<int>();
    const auto n = j.at("n").get<std::size_t>();
    MatrixGFp g(p, 0, n);
    std::vector<std::uint8_t> buf(n);
    for (const auto& row : j.at("generator")) {
      if (row.size() != n) throw Error(ErrorCode::ParseError, "generator row length differs from n");
      for (std::size_t c = 0; c < n; ++c) {
        const int v = row[c].get<int>();
        if (v < 0 || v >= p) throw Error(ErrorCode::ParseError, "generator entry outside GF(p)");
        buf[c] = static_cast<std::uint8_t>(v);
      }
      g.append_row(buf);
    }
    auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
    auto field = j.contains("field") ? j.at("field").get<std::string>() : std::string{};
    return make_code(g, std::move(labels), std::move(field));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed code JSON: ") + e.what());
  }
}

inline Json predicted_to_json(const PredictedWD& p) {
  Json j;
  j["table"] = p.tag;
  j["p"] = p.p;
  j["m"] = p.m;
  j["n"] = p.n;
  j["k"] = p.k;
  j["wd"] = wd_to_json(p.wd);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json report_to_json(const PredictionReport& r, bool timing) {
  Json j;
  j["id"] = r.id;
  j["code"] = r.code;
  j["field"] = r.field;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["T"] = r.T;
  j["table"] = r.table;
  j["predicted"] = wd_to_json(r.predicted);
  j["enumerated"] = wd_to_json(r.enumerated);
  j["printed"] = r.printed ? wd_to_json(*r.printed) : Json(nullptr);
  j["lambda_predicted"] = optional_json(r.lambda_predicted);
  j["lambda_brute"] = optional_json(r.lambda_brute);
  j["dual_d"] = optional_json(r.dual_d);
  j["printed_dual_d"] = optional_json(r.printed_dual_d);
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

inline Json sweep_to_json(const SweepReport& r, bool timing) {
  Json j;
  j["id"] = r.id;
  j["size"] = r.size;
  j["subsets"] = r.subsets;
  j["sampled"] = r.sampled;
  j["seed"] = r.seed;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json cj;
    cj["count"] = c.count;
    cj["tables"] = std::vector<std::string>(c.tags.begin(), c.tags.end());
    cj["wd"] = wd_to_json(c.wd);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  j["wd_mismatches"] = r.wd_mismatches;
  j["lambda_checked"] = r.lambda_checked;
  j["lambda_mismatches"] = r.lambda_mismatches;
  j["failures"] = r.first_failures;
  j["pass"] = r.pass;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

inline Json lemma_to_json(const LemmaReport& r, bool timing) {
  Json j;
  j["lemma"] = r.lemma;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["pass"] = r.pass();
  if (timing) j["seconds"] = r.seconds;
  return j;
}

inline Json gf4_to_json(const Gf4Report& r) {
  Json j;
  j["m"] = r.m;
  j["predicted"] = wd_to_json(r.predicted);
  j["enumerated"] = wd_to_json(r.enumerated);
  j["N01"] = {{"brute", to_decimal(r.n01_brute)}, {"closed", to_decimal(r.n01_closed)}};
  j["A3_dual"] = {{"brute", to_decimal(r.A3_brute)}, {"closed", to_decimal(r.A3_closed)}};
  j["A4_dual"] = {{"brute", to_decimal(r.A4_brute)}, {"closed", to_decimal(r.A4_closed)}};
  j["lambda6"] = {{"brute", r.lambda6_brute}, {"closed", r.lambda6_closed}};
  j["pass"] = r.pass;
  return j;
}

inline Json duality_to_json(const DualityReport& r) {
  Json j;
  j["instances"] = r.instances;
  j["duality_failures"] = r.duality_failures;
  j["mass_failures"] = r.mass_failures;
  j["dimension_checked"] = r.dimension_checked;
  j["dimension_failures"] = r.dimension_failures;
  j["failures"] = r.first_failures;
  j["pass"] = r.pass;
  return j;
}

}  // namespace shortcode
