#pragma once

// softsim command-line front end. Exit codes: 0 success, 1 domain error
// (undefined value, violated precondition, failed diagnosis entry), 2 usage
// or parse error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "softsim/softsim.hpp"

#ifndef SOFTSIM_FIXTURE_DIR
#define SOFTSIM_FIXTURE_DIR "fixtures/financial"
#endif

namespace softsim::cli {

namespace detail {

class UsageError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// "3/4", "2", or a plain decimal such as "0.35", all read exactly.
inline Rational parse_rational(const std::string& text) {
  try {
    std::size_t pos = 0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const std::int64_t num = std::stoll(text.substr(0, slash), &pos);
      if (pos != slash) throw UsageError("");
      const std::string den_text = text.substr(slash + 1);
      const std::int64_t den = std::stoll(den_text, &pos);
      if (pos != den_text.size() || den == 0) throw UsageError("");
      return {num, den};
    }
    const auto dot = text.find('.');
    const std::string whole = text.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || frac.size() > 15) throw UsageError("");
    for (char ch : whole + frac) {
      if (ch < '0' || ch > '9') throw UsageError("");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t int_part = whole.empty() ? 0 : std::stoll(whole);
    const std::int64_t frac_part = frac.empty() ? 0 : std::stoll(frac);
    return Rational(int_part) + Rational(frac_part, scale);
  } catch (const std::logic_error&) {
    throw UsageError("'" + text + "' is not a number");
  } catch (const UsageError&) {
    throw UsageError("'" + text + "' is not a number");
  }
}

inline MeasureId measure_of_kind(const std::string& name, MeasureKind kind) {
  MeasureId id{};
  try {
    id = parse_measure(name);
  } catch (const UnknownMeasureError& e) {
    throw UsageError(e.what());
  }
  if (measure_kind(id) != kind) {
    throw UsageError("'" + name + "' is a " +
                     (kind == MeasureKind::Distance ? "similarity; use `sim`" : "distance; use `dist`"));
  }
  return id;
}

inline std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline Profile load_profile(const std::string& path) {
  NamedSoftSet loaded = load_soft_set(path);
  return {loaded.name.value_or(stem_of(path)), std::move(loaded.softset)};
}

struct PairOptions {
  std::string measure;
  std::string a;
  std::string b;
  bool complement = false;
  std::string convention = "same";
  bool exact = false;
  bool show_matrix = false;
  std::string output = "human";
  double steepness = 1.0;
};

struct SampleOptions {
  std::string measure;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_elements = 4;
  std::size_t max_attributes = 4;
  double steepness = 1.0;
  std::string output = "human";
};

struct DiagnoseOptions {
  std::string model;
  std::vector<std::string> profiles;
  std::string measure = "koczy-e";
  std::string threshold = "1/2";
  double steepness = 1.0;
  std::string output = "human";
  std::string fixtures = SOFTSIM_FIXTURE_DIR;
};

inline int run_pair(const PairOptions& o, MeasureKind kind, std::ostream& out) {
  const MeasureId id = measure_of_kind(o.measure, kind);
  if (o.complement == !o.b.empty()) throw UsageError("give exactly one of --b or --complement");
  const SimilarityConfig config{o.steepness};
  config.validate();

  SoftSet a = load_soft_set(o.a).softset;
  std::optional<SoftSet> b;
  std::string b_label = o.b;
  if (o.complement) {
    const auto conv = o.convention == "negated" ? ComplementConvention::NegatedAttributes
                                                : ComplementConvention::SameAttributes;
    ComplementPair pair = complement_pair(a, conv);
    a = std::move(pair.original);
    b = std::move(pair.complement);
    b_label = "complement(" + o.a + ")";
  } else {
    b = load_soft_set(o.b).softset;
  }

  const MeasureValue v = evaluate(id, a, *b, config);
  if (!v.defined) throw UndefinedMeasureError(o.measure + " is undefined (0/0) for these soft sets");

  if (o.output == "structured") {
    nlohmann::ordered_json j;
    j["measure"] = o.measure;
    j["a"] = o.a;
    j["b"] = b_label;
    j["value_exact"] = v.exact ? nlohmann::ordered_json(v.exact->str()) : nlohmann::ordered_json(nullptr);
    j["value_decimal"] = v.decimal(6);
    if (o.show_matrix) {
      j["matrix_a"] = render_matrix(to_matrix(a), a.space());
      j["matrix_b"] = render_matrix(to_matrix(*b), b->space());
    }
    out << j.dump() << '\n';
    return 0;
  }
  if (o.show_matrix) {
    out << "a:\n" << render_matrix(to_matrix(a), a.space());
    out << "b:\n" << render_matrix(to_matrix(*b), b->space());
  }
  out << (o.exact ? v.str() : trim_decimal(v.decimal(6))) << '\n';
  return 0;
}

inline nlohmann::ordered_json report_json(const AxiomReport& r, bool distance) {
  nlohmann::ordered_json j;
  j["measure"] = r.measure;
  if (distance) j["class"] = metric_class(r);
  j["axioms"] = nlohmann::ordered_json::array();
  for (const auto& a : r.axioms) {
    nlohmann::ordered_json item;
    item["axiom"] = a.axiom;
    item["verdict"] = a.held() ? "held-on-sample" : "violated";
    item["checks"] = a.checks;
    if (a.witness) {
      nlohmann::ordered_json w;
      w["sets"] = nlohmann::ordered_json::array();
      for (const auto& s : a.witness->sets) w["sets"].push_back(to_json(s));
      w["values"] = nlohmann::ordered_json::array();
      for (const auto& v : a.witness->values) w["values"].push_back(v.str());
      w["detail"] = a.witness->detail;
      item["witness"] = std::move(w);
    }
    j["axioms"].push_back(std::move(item));
  }
  return j;
}

inline int run_axioms(const SampleOptions& o, MeasureKind kind, std::ostream& out) {
  const MeasureId id = measure_of_kind(o.measure, kind);
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  if (o.max_elements < 1 || o.max_attributes < 1) throw UsageError("space bounds must be at least 1");
  SamplerOptions so;
  so.seed = o.seed;
  so.max_elements = o.max_elements;
  so.max_attributes = o.max_attributes;
  SoftSetSampler sampler(so);
  const SimilarityConfig config{o.steepness};
  const bool distance = kind == MeasureKind::Distance;
  const AxiomReport report = distance ? classify_measure(id, sampler, o.trials, config)
                                      : check_similarity_axioms(id, sampler, o.trials, config);
  if (o.output == "structured") {
    out << report_json(report, distance).dump() << '\n';
  } else {
    out << render(report, distance);
  }
  return 0;
}

inline int emit_reports(const std::vector<DiagnosisReport>& reports, const std::string& output, std::ostream& out) {
  out << (output == "structured" ? render_structured(reports) : render_table(reports));
  for (const auto& r : reports) {
    if (r.error) return 1;
  }
  return 0;
}

inline SimilarityConfig diagnosis_config(const DiagnoseOptions& o) {
  SimilarityConfig config{o.steepness};
  config.significant_threshold = parse_rational(o.threshold);
  if (config.significant_threshold <= 0 || config.significant_threshold >= 1) {
    throw UsageError("--threshold must lie strictly between 0 and 1");
  }
  config.validate();
  return config;
}

inline int run_diagnose(const DiagnoseOptions& o, std::ostream& out) {
  const MeasureId id = measure_of_kind(o.measure, MeasureKind::Similarity);
  const SimilarityConfig config = diagnosis_config(o);
  const Profile model = load_profile(o.model);
  std::vector<BatchInput> inputs;
  for (const auto& path : o.profiles) {
    try {
      Profile p = load_profile(path);
      std::string name = p.name;
      inputs.push_back({std::move(name), std::move(p)});
    } catch (const Error& e) {
      inputs.push_back({stem_of(path), std::string(e.what())});
    }
  }
  return emit_reports(batch_diagnose(inputs, model, id, config), o.output, out);
}

inline int run_demo(const DiagnoseOptions& o, std::ostream& out) {
  const MeasureId id = measure_of_kind(o.measure, MeasureKind::Similarity);
  const SimilarityConfig config = diagnosis_config(o);
  const std::filesystem::path dir(o.fixtures);
  const Profile model = load_profile((dir / "liquidity_model.ss").string());
  const std::vector<Profile> firms{load_profile((dir / "abc.ss").string()),
                                   load_profile((dir / "xyz.ss").string())};
  const auto reports = batch_diagnose(firms, model, id, config);
  const int status = emit_reports(reports, o.output, out);
  if (o.output != "structured") {
    out << '\n';
    for (const auto& r : reports) {
      if (r.error) continue;
      out << r.profile << (r.significant ? " is significantly similar to " : " is not significantly similar to ")
          << r.model << (r.significant ? ": possible liquidity problem\n" : ": liquidity problem unlikely\n");
    }
  }
  return status;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Distance and similarity measures for soft sets", "softsim"};
  app.require_subcommand(1);
  const auto output_check = CLI::IsMember({"human", "structured"});

  PairOptions dist_opts;
  PairOptions sim_opts;
  for (auto [name, desc, opts, kind] :
       {std::tuple{"dist", "distance between two soft-set files", &dist_opts, MeasureKind::Distance},
        std::tuple{"sim", "similarity between two soft-set files", &sim_opts, MeasureKind::Similarity}}) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--measure", opts->measure, "measure identifier")->required();
    sub->add_option("--a", opts->a, "first soft-set file")->required();
    sub->add_option("--b", opts->b, "second soft-set file");
    sub->add_flag("--complement", opts->complement, "use the complement of --a as the second operand");
    sub->add_option("--complement-convention", opts->convention, "same|negated")
        ->check(CLI::IsMember({"same", "negated"}));
    sub->add_flag("--exact", opts->exact, "print the exact form");
    sub->add_flag("--show-matrix", opts->show_matrix, "print both matrix representations");
    sub->add_option("--output", opts->output, "human|structured")->check(output_check);
    if (kind == MeasureKind::Similarity) {
      sub->add_option("--steepness", opts->steepness, "Williams-Steele steepness (> 0)");
    }
  }

  SampleOptions classify_opts;
  SampleOptions simax_opts;
  for (auto [name, desc, opts, kind] :
       {std::tuple{"classify", "check a distance against M1..M5", &classify_opts, MeasureKind::Distance},
        std::tuple{"check-sim-axioms", "check a similarity against s1..s4", &simax_opts,
                   MeasureKind::Similarity}}) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--measure", opts->measure, "measure identifier")->required();
    sub->add_option("--seed", opts->seed, "sampler seed");
    sub->add_option("--trials", opts->trials, "number of random trials");
    sub->add_option("--max-elements", opts->max_elements, "largest sampled universe");
    sub->add_option("--max-attributes", opts->max_attributes, "largest sampled attribute set");
    sub->add_option("--output", opts->output, "human|structured")->check(output_check);
    if (kind == MeasureKind::Similarity) {
      sub->add_option("--steepness", opts->steepness, "Williams-Steele steepness (> 0)");
    }
  }

  DiagnoseOptions diag_opts;
  CLI::App* diag = app.add_subcommand("diagnose", "compare profiles against a model soft set");
  diag->add_option("--model", diag_opts.model, "model soft-set file")->required();
  diag->add_option("--profile,profiles", diag_opts.profiles, "profile files")->required();
  DiagnoseOptions demo_opts;
  CLI::App* demo = app.add_subcommand("demo-financial", "run the bundled financial-diagnosis example");
  demo->add_option("--fixtures", demo_opts.fixtures, "directory holding abc.ss, xyz.ss, liquidity_model.ss");
  for (auto [sub, opts] : {std::pair{diag, &diag_opts}, std::pair{demo, &demo_opts}}) {
    sub->add_option("--measure", opts->measure, "similarity measure (default koczy-e)");
    sub->add_option("--threshold", opts->threshold, "significance threshold (default 1/2)");
    sub->add_option("--steepness", opts->steepness, "Williams-Steele steepness (> 0)");
    sub->add_option("--output", opts->output, "human|structured")->check(output_check);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand("dist")) return run_pair(dist_opts, MeasureKind::Distance, out);
    if (app.got_subcommand("sim")) return run_pair(sim_opts, MeasureKind::Similarity, out);
    if (app.got_subcommand("classify")) return run_axioms(classify_opts, MeasureKind::Distance, out);
    if (app.got_subcommand("check-sim-axioms")) return run_axioms(simax_opts, MeasureKind::Similarity, out);
    if (app.got_subcommand("diagnose")) return run_diagnose(diag_opts, out);
    if (app.got_subcommand("demo-financial")) return run_demo(demo_opts, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace softsim::cli
