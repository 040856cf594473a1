#pragma once

// Experiment configuration: JSON documents validated against a fixed schema,
// with field elements parsed against the pinned tower representation.
//
// Element grammar (per target field F with base B):
//   integer n          n * 1
//   "a/b", "-a/b"      prime-field quotient
//   "g", "g^k"         power of the canonical primitive of F (k may be negative)
//   [c_0, ..., c_{d-1}] coefficients over B, lowest first, each an element of B

#include "qfcodes/code.hpp"
#include "qfcodes/cyclotomic.hpp"
#include "qfcodes/gf_tower.hpp"
#include "qfcodes/quadform.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qfcodes {

enum class Task { WeightDistribution, Cwe, Ghw, Descend, VerifyLemmas };
enum class OutputFormat { Text, Csv, Json };

std::string to_string(Task t);
std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

/// Reference values an experiment is compared against.
struct ReferenceValues {
  std::optional<std::vector<std::uint64_t>> params;  // n, k, d
  std::optional<WeightDistribution> wd;
  std::optional<CWE> cwe;                            // in the reference labeling
  std::optional<std::vector<int>> eta_pattern;       // eta values of that labeling, positions 1..q-1
  bool eta_of_negated = true;                        // pattern lists eta(-omega_i) rather than eta(omega_i)
  std::vector<std::uint64_t> hierarchy;
  std::optional<int> rank;
  std::optional<int> eps_Q;
};

struct DescentConfig {
  unsigned N = 1;
  std::optional<Index> theta;
};

struct ExperimentConfig {
  std::string name;
  std::string description;
  FieldTower tower;
  QuadFormSpec form;
  Variant variant = Variant::Homogeneous;
  std::optional<DescentConfig> descent;
  std::vector<Task> tasks;
  std::uint64_t budget = kDefaultBudget;
  OutputFormat format = OutputFormat::Text;
  bool audit = false;
  unsigned ghw_r_max = 0;
  unsigned descent_ghw_r_max = 0;
  ReferenceValues reference;
};

/// Parses an element of `field`; ParameterError names `where` on failure.
Index parse_element(const Field& field, const nlohmann::json& v, const std::string& where = "element");

/// Validates every key; unknown keys and malformed values raise ParameterError naming the key path.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

struct PresetInfo {
  std::string name;
  std::string summary;
};
std::vector<PresetInfo> list_presets();
nlohmann::json preset_document(const std::string& name);
ExperimentConfig preset(const std::string& name);

}  // namespace qfcodes
