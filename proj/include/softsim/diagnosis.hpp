#pragma once

// Similarity-based diagnosis: each coded profile is compared against a model
// soft set, and the profile is flagged when the similarity reaches the
// threshold (inclusive).

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "softsim/io.hpp"
#include "softsim/registry.hpp"

namespace softsim {

struct Profile {
  std::string name;
  SoftSet softset;
};

struct DiagnosisReport {
  std::string profile;
  std::string model;
  std::string measure;
  double value = 0.0;
  std::optional<std::string> value_exact;
  std::string value_decimal;
  std::string threshold;
  bool significant = false;
  std::optional<std::string> error;  ///< set on failed batch entries only

  friend bool operator==(const DiagnosisReport&, const DiagnosisReport&) = default;
};

/// Diagnosis with `config.significant_threshold` as the level (1/2 unless
/// changed).
inline DiagnosisReport diagnose(const Profile& profile, const Profile& model, MeasureId measure,
                                const SimilarityConfig& config = {}) {
  config.validate();
  if (measure_kind(measure) != MeasureKind::Similarity) {
    throw PreconditionError("'" + measure_name(measure) + "' is a distance; diagnosis needs a similarity");
  }
  const MeasureValue v = evaluate(measure, profile.softset, model.softset, config);
  if (!v.defined) {
    throw UndefinedMeasureError(measure_name(measure) + " is undefined (0/0) for profile '" + profile.name + "'");
  }
  DiagnosisReport r;
  r.profile = profile.name;
  r.model = model.name;
  r.measure = measure_name(measure);
  r.value = v.value;
  if (v.exact) r.value_exact = v.exact->str();
  r.value_decimal = v.decimal(6);
  r.threshold = to_string(config.significant_threshold);
  r.significant = compare(v, ExactValue(config.significant_threshold)) >= 0;
  return r;
}

/// A batch entry is either a profile or the reason it could not be loaded.
struct BatchInput {
  std::string name;
  std::variant<Profile, std::string> entry;
};

/// Reports in input order. A failing entry carries its error and does not
/// stop the rest.
inline std::vector<DiagnosisReport> batch_diagnose(const std::vector<BatchInput>& inputs, const Profile& model,
                                                   MeasureId measure, const SimilarityConfig& config = {}) {
  std::vector<DiagnosisReport> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) {
    DiagnosisReport failed;
    failed.profile = in.name;
    failed.model = model.name;
    failed.measure = measure_name(measure);
    failed.threshold = to_string(config.significant_threshold);
    if (const auto* message = std::get_if<std::string>(&in.entry)) {
      failed.error = *message;
      out.push_back(std::move(failed));
      continue;
    }
    try {
      out.push_back(diagnose(std::get<Profile>(in.entry), model, measure, config));
    } catch (const Error& e) {
      failed.error = e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

inline std::vector<DiagnosisReport> batch_diagnose(const std::vector<Profile>& profiles, const Profile& model,
                                                   MeasureId measure, const SimilarityConfig& config = {}) {
  std::vector<BatchInput> inputs;
  inputs.reserve(profiles.size());
  for (const auto& p : profiles) inputs.push_back({p.name, p});
  return batch_diagnose(inputs, model, measure, config);
}

inline nlohmann::ordered_json to_json(const DiagnosisReport& r) {
  nlohmann::ordered_json out;
  out["name"] = r.profile;
  out["model"] = r.model;
  out["measure"] = r.measure;
  if (r.error) {
    out["error"] = *r.error;
    out["threshold"] = r.threshold;
    return out;
  }
  out["value"] = r.value;
  out["value_exact"] = r.value_exact ? nlohmann::ordered_json(*r.value_exact) : nlohmann::ordered_json(nullptr);
  out["value_decimal"] = r.value_decimal;
  out["threshold"] = r.threshold;
  out["significant"] = r.significant;
  return out;
}

/// One JSON object per line.
inline std::string render_structured(const std::vector<DiagnosisReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += to_json(r).dump() + "\n";
  return out;
}

inline DiagnosisReport parse_report(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    DiagnosisReport r;
    r.profile = j.at("name").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.measure = j.at("measure").get<std::string>();
    r.threshold = j.at("threshold").get<std::string>();
    if (j.contains("error")) {
      r.error = j.at("error").get<std::string>();
      return r;
    }
    r.value = j.at("value").get<double>();
    if (!j.at("value_exact").is_null()) r.value_exact = j.at("value_exact").get<std::string>();
    r.value_decimal = j.at("value_decimal").get<std::string>();
    r.significant = j.at("significant").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed diagnosis report: ") + e.what());
  }
}

inline std::vector<DiagnosisReport> parse_reports(const std::string& text) {
  std::vector<DiagnosisReport> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(parse_report(line));
  }
  return out;
}

/// Aligned table for terminals.
inline std::string render_table(const std::vector<DiagnosisReport>& reports) {
  const std::vector<std::string> header{"profile", "model", "measure", "similarity", "exact", "threshold",
                                        "significant"};
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : reports) {
    if (r.error) {
      rows.push_back({r.profile, r.model, r.measure, "error", *r.error, r.threshold, "-"});
    } else {
      rows.push_back({r.profile, r.model, r.measure, r.value_decimal, r.value_exact.value_or("-"), r.threshold,
                      r.significant ? "yes" : "no"});
    }
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(c + 1 == row.size() ? 0 : width[c] + 2)) << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace softsim
