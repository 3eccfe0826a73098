#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shortcode/construct.hpp"
#include "shortcode/harness.hpp"
#include "shortcode/json_io.hpp"
#include "shortcode/predict.hpp"

namespace shortcode::cli {

enum class Format { Json, Csv, Table };

struct CliConfig {
  std::string command;
  std::string field;
  std::string code;
  std::string T;
  std::string from_json;
  Format format = Format::Json;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
  bool timing = false;
};

namespace detail {

struct Loaded {
  LinearCode code;
  std::string construction;
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline Json read_json(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "cannot parse " + what + " as JSON: " + e.what());
  }
}

inline Loaded load_code(const CliConfig& cfg, std::istream& in) {
  if (!cfg.code.empty()) return {build_code(parse_code_spec(cfg.code)), cfg.code};
  Json j;
  if (!cfg.from_json.empty()) {
    std::ifstream f(cfg.from_json);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + cfg.from_json);
    j = read_json(f, cfg.from_json);
  } else {
    j = read_json(in, "standard input");
  }
  if (j.contains("code") && j["code"].is_object()) j = j["code"];
  Loaded l{code_from_json(j), {}};
  if (j.contains("construction")) l.construction = j["construction"].get<std::string>();
  return l;
}

/// Maps a T spec onto coordinates of `c` by label.
inline CoordSet resolve_T(const LinearCode& c, const std::string& spec) {
  std::vector<std::string> wanted;
  if (!c.field.empty()) {
    const Field fld(parse_field_spec(c.field));
    const auto labels = coordinate_labels(fld);
    for (auto pos : parse_T(fld, spec)) wanted.push_back(labels[pos]);
  } else {
    std::string_view text = spec;
    if (text.starts_with("T=")) text.remove_prefix(2);
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) wanted.push_back(item);
  }
  std::vector<std::size_t> pos;
  for (const auto& w : wanted) {
    const auto it = std::find(c.labels.begin(), c.labels.end(), w);
    if (it == c.labels.end()) throw Error(ErrorCode::ParseError, "'" + w + "' is not a coordinate of this code");
    pos.push_back(static_cast<std::size_t>(it - c.labels.begin()));
  }
  return make_coord_set(std::move(pos), c.n);
}

inline void emit_wd(std::ostream& out, Format fmt, const WeightDistribution& wd, Json header) {
  if (fmt == Format::Json) {
    header["wd"] = wd_to_json(wd);
    emit(out, header);
    return;
  }
  if (fmt == Format::Csv) {
    out << "weight,count\n";
    for (const auto& [w, c] : wd) out << w << ',' << to_decimal(c) << '\n';
    return;
  }
  std::size_t width = 5;
  for (const auto& [w, c] : wd) width = std::max(width, to_decimal(c).size());
  out << std::setw(6) << "weight" << "  " << std::setw(static_cast<int>(width)) << "count" << '\n';
  for (const auto& [w, c] : wd) out << std::setw(6) << w << "  " << std::setw(static_cast<int>(width)) << to_decimal(c) << '\n';
}

/// Gold e of a p = 2 construction, if it has one.
inline std::optional<long> construction_gold_e(const std::string& construction) {
  if (construction.empty()) return std::nullopt;
  const auto spec = parse_code_spec(construction);
  if (spec.field.p != 2) return std::nullopt;
  return shortcode::detail::gold_e(Field(spec.field), spec.s);
}

inline bool is_usage_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::MalformedFieldSpec:
    case ErrorCode::RejectsNonPrimeP:
    case ErrorCode::RejectsReducibleModulus:
    case ErrorCode::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

struct SuiteOutcome {
  Json results = Json::array();
  std::vector<std::pair<bool, std::string>> lines;
};

inline SuiteOutcome run_suite(const std::string& suite, const CliConfig& cfg) {
  SuiteOutcome o;
  auto line = [&](bool ok, std::string text) { o.lines.emplace_back(ok, std::move(text)); };
  if (suite == "examples" || suite == "paper-examples" || suite == "tables") {
    const auto scenarios = suite == "tables" ? table_scenarios(cfg.seed) : worked_example_scenarios();
    for (const auto& s : scenarios) {
      const auto r = verify_scenario(s);
      o.results.push_back(report_to_json(r, cfg.timing));
      line(r.pass, r.id + " " + r.T + " " + r.table + (r.note.empty() ? "" : " (" + r.note + ")"));
    }
  } else if (suite == "lambda-sweeps") {
    for (const auto& r : lambda_sweeps(cfg.seed)) {
      o.results.push_back(sweep_to_json(r, cfg.timing));
      line(r.pass, r.id + " subsets=" + std::to_string(r.subsets) + " classes=" + std::to_string(r.classes.size()) +
                       " lambda-mismatches=" + std::to_string(r.lambda_mismatches));
    }
  } else if (suite == "sums") {
    for (const auto& r : sums_suite()) {
      o.results.push_back(lemma_to_json(r, cfg.timing));
      line(r.pass(), r.lemma + " cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failures.size()));
    }
  } else if (suite == "gf4") {
    for (int m : {4, 6}) {
      const auto r = verify_gf4(m);
      o.results.push_back(gf4_to_json(r));
      line(r.pass, "gf4/m=" + std::to_string(m));
    }
  } else if (suite == "properties") {
    const auto r = duality_property_suite(200, cfg.seed);
    o.results.push_back(duality_to_json(r));
    line(r.pass, "duality/instances=" + std::to_string(r.instances));
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  }
  return o;
}

}  // namespace detail

/// Runs one subcommand; returns 0 on success, 1 on a failed check, 2 on a usage error.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  cfg.cap = enumeration_cap();
  CLI::App app{"Shortened linear codes from APN and PN monomials", "shortcode"};
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};
  app.add_option("--format", cfg.format, "Output format for distributions")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--cap", cfg.cap, "Enumeration cap (default SHORTCODE_CAP or 2^24)");
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_flag("--timing", cfg.timing, "Include timings in JSON reports");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--code", cfg.code, "Build this code instead of reading JSON");
    sub->add_option("--from-json", cfg.from_json, "Read the code JSON from this file instead of stdin");
  };

  auto* field_cmd = app.add_subcommand("field", "Describe GF(p^m) and its coordinate order");
  field_cmd->add_option("spec", cfg.field, "p=<p>,m=<m>[,mod=<digits>]")->required();

  auto* build_cmd = app.add_subcommand("build", "Build the code of a monomial");
  build_cmd->add_option("spec", cfg.code, "apn:p=2,m=<m>,e=<e> | apn:p=2,m=<m>,s=<s> | pn:p=<p>,m=<m>,s=<s>")->required();

  auto* wd_cmd = app.add_subcommand("wd", "Weight distribution by enumeration");
  add_input(wd_cmd);

  auto* shorten_cmd = app.add_subcommand("shorten", "Shorten on T");
  shorten_cmd->add_option("T", cfg.T, "T=GF(p) | T=GF(4) | T=<label>,...")->required();
  add_input(shorten_cmd);

  auto* puncture_cmd = app.add_subcommand("puncture", "Puncture on T");
  puncture_cmd->add_option("T", cfg.T, "T=GF(p) | T=GF(4) | T=<label>,...")->required();
  add_input(puncture_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "Dual code");
  add_input(dual_cmd);

  std::size_t lambda_w = 6;
  bool lambda_primal = false;
  auto* lambda_cmd = app.add_subcommand("lambda", "Supports of weight w containing T");
  lambda_cmd->add_option("T", cfg.T, "T spec")->required();
  lambda_cmd->add_option("--w", lambda_w, "Support weight")->capture_default_str();
  lambda_cmd->add_flag("--primal", lambda_primal, "Count in the code rather than its dual");
  add_input(lambda_cmd);

  std::size_t design_t = 0;
  std::optional<std::size_t> design_w;
  std::optional<std::size_t> design_dual_d;
  auto* designs_cmd = app.add_subcommand("designs", "Check which weight classes hold t-designs");
  designs_cmd->add_option("--t", design_t, "Design strength")->required();
  designs_cmd->add_option("--w", design_w, "Only this weight");
  designs_cmd->add_option("--dual-d", design_dual_d, "Dual distance, for the Assmus-Mattson range check");
  add_input(designs_cmd);

  std::string table_tag;
  int table_p = 2;
  int table_m = 0;
  std::optional<long> table_lambda;
  auto* predict_cmd = app.add_subcommand("predict", "Predicted weight distribution");
  predict_cmd->add_option("--table", table_tag, "Table tag (tab1..tab16, gf4)");
  predict_cmd->add_option("--p", table_p, "Characteristic")->capture_default_str();
  predict_cmd->add_option("--m", table_m, "Extension degree");
  predict_cmd->add_option("--lambda", table_lambda, "lambda for tab10");
  predict_cmd->add_option("--code", cfg.code, "Pick the table for this code shortened on --T");
  predict_cmd->add_option("--T", cfg.T, "T spec used with --code");

  std::string lemma_filter;
  auto* sums_cmd = app.add_subcommand("sums", "Check every character-sum and counting identity");
  sums_cmd->add_option("--lemma", lemma_filter, "Only this lemma name");

  std::string suite;
  std::string json_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "examples | tables | lambda-sweeps | sums | gf4 | properties")->required();
  verify_cmd->add_option("--json", json_path, "Write the JSON report here");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    if (*field_cmd) {
      const Field fld(parse_field_spec(cfg.field));
      Json j;
      j["field"] = fld.spec().to_string();
      j["p"] = fld.p();
      j["m"] = fld.m();
      j["q"] = fld.q();
      const auto labels = coordinate_labels(fld);
      Json els = Json::array();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto x = fld.at_position(i);
        els.push_back({{"label", labels[i]}, {"index", x.index}, {"trace", fld.trace(x)}});
      }
      j["elements"] = std::move(els);
      detail::emit(out, j);
      return 0;
    }
    if (*build_cmd) {
      const auto c = build_code(parse_code_spec(cfg.code));
      detail::emit(out, code_to_json(c, cfg.code));
      return 0;
    }
    if (*predict_cmd) {
      if (!cfg.code.empty()) {
        if (cfg.T.empty()) throw Error(ErrorCode::ParseError, "--code needs --T");
        const auto spec = parse_code_spec(cfg.code);
        const Field fld(spec.field);
        const auto full = build_code(fld, spec.s);
        const auto t = parse_T(fld, cfg.T);
        const auto ex = auto_expectation(fld, spec.s, full, t, table_lambda);
        Json h;
        h["table"] = ex.tag;
        h["T"] = format_T(fld, t);
        h["lambda_predicted"] = optional_json(ex.lambda_predicted);
        h["lambda_brute"] = optional_json(ex.lambda_brute);
        detail::emit_wd(out, cfg.format, ex.wd, h);
        return 0;
      }
      if (table_tag.empty() || table_m == 0) throw Error(ErrorCode::ParseError, "predict needs --table and --m, or --code and --T");
      const auto p = table_wd(table_tag, {table_p, table_m, table_lambda});
      if (cfg.format == Format::Json) {
        detail::emit(out, predicted_to_json(p));
      } else {
        detail::emit_wd(out, cfg.format, p.wd, {});
      }
      return 0;
    }
    if (*sums_cmd) {
      Json all = Json::array();
      bool ok = true;
      bool matched = false;
      for (const auto& r : sums_suite()) {
        if (!lemma_filter.empty() && r.lemma != lemma_filter) continue;
        matched = true;
        ok = ok && r.pass();
        all.push_back(lemma_to_json(r, cfg.timing));
      }
      if (!matched) throw Error(ErrorCode::ParseError, "no lemma named '" + lemma_filter + "'");
      detail::emit(out, all);
      return ok ? 0 : 1;
    }
    if (*verify_cmd) {
      const auto o = detail::run_suite(suite, cfg);
      bool ok = true;
      std::size_t passed = 0;
      for (const auto& [pass, text] : o.lines) {
        out << (pass ? "PASS " : "FAIL ") << text << '\n';
        ok = ok && pass;
        passed += pass ? 1 : 0;
      }
      out << suite << ": " << passed << "/" << o.lines.size() << " passed\n";
      if (!json_path.empty()) {
        Json j;
        j["suite"] = suite;
        j["seed"] = cfg.seed;
        j["pass"] = ok;
        j["results"] = o.results;
        std::ofstream f(json_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + json_path);
        f << j.dump(2) << '\n';
      }
      return ok ? 0 : 1;
    }

    const auto loaded = detail::load_code(cfg, in);
    const auto& c = loaded.code;
    if (*wd_cmd) {
      const auto wd = weight_distribution(c, cfg.cap);
      Json h;
      h["n"] = c.n;
      h["k"] = c.k();
      h["d"] = min_distance(wd);
      detail::emit_wd(out, cfg.format, wd, h);
      return 0;
    }
    if (*shorten_cmd || *puncture_cmd) {
      const auto t = detail::resolve_T(c, cfg.T);
      detail::emit(out, code_to_json(*shorten_cmd ? shorten(c, t) : puncture(c, t)));
      return 0;
    }
    if (*dual_cmd) {
      detail::emit(out, code_to_json(dual(c)));
      return 0;
    }
    if (*lambda_cmd) {
      const auto t = detail::resolve_T(c, cfg.T);
      Json j;
      j["T"] = cfg.T;
      j["w"] = lambda_w;
      j["space"] = lambda_primal ? "code" : "dual";
      j["lambda"] = lambda_T_w(c, t, lambda_w, !lambda_primal);
      Json pred = nullptr;
      if (!lambda_primal && lambda_w == 6 && !c.field.empty()) {
        if (const auto e = detail::construction_gold_e(loaded.construction)) {
          const Field fld(parse_field_spec(c.field));
          std::vector<FieldElement> els;
          for (auto pos : t) els.push_back(fld.parse_label(c.labels[pos]));
          try {
            std::optional<LambdaPrediction> lp;
            if (t.size() == 4 && fld.m() % 2 == 1) lp = predict_lambda_odd4(fld, *e, els);
            if (t.size() == 3 && fld.m() % 2 == 0) lp = predict_lambda_even3(fld, *e, els);
            if (lp) pred = Json{{"lambda", lp->lambda}, {"branch", lp->branch}};
          } catch (const Error& ex) {
            if (ex.code() != ErrorCode::DegenerateT) throw;
            pred = Json{{"error", "DegenerateT"}};
          }
        }
      }
      j["predicted"] = pred;
      detail::emit(out, j);
      return 0;
    }
    if (*designs_cmd) {
      if (design_t == 0) throw Error(ErrorCode::ParseError, "--t must be positive");
      const auto wd = weight_distribution(c, cfg.cap);
      Json j;
      j["t"] = design_t;
      Json classes = Json::array();
      for (const auto& [w, count] : wd) {
        if (w == 0 || (design_w && *design_w != w)) continue;
        Json cj;
        cj["w"] = w;
        cj["codewords"] = to_decimal(count);
        const auto check = supports_design_check(c, w, design_t);
        if (const auto* d = std::get_if<Design>(&check)) {
          cj["design"] = true;
          cj["blocks"] = d->b;
          cj["lambda"] = d->lambda;
        } else {
          cj["design"] = false;
        }
        classes.push_back(std::move(cj));
      }
      j["classes"] = std::move(classes);
      if (design_dual_d) {
        const auto am = assmus_mattson(wd, c.n, c.p, *design_dual_d, design_t);
        j["assmus_mattson"] = {{"holds", am.holds}, {"weights_in_range", am.weights_in_range}, {"w", am.w}, {"w_dual", am.w_dual}};
      }
      detail::emit(out, j);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::is_usage_error(e.code()) ? 2 : 1;
  }
  return 2;
}

}  // namespace shortcode::cli
