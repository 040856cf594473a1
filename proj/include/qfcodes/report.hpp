#pragma once

// Experiment runner and report rendering. A report is a list of sections,
// each a table with an optional summary; text, CSV and JSON renderings are
// derived from the same records, so repeated runs are byte-identical.

#include "qfcodes/config.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qfcodes {

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  bool disagreement = false;
};

struct Report {
  std::string experiment;
  std::vector<Section> sections;

  bool disagreement() const;
  nlohmann::ordered_json to_json() const;
};

/// Executes cfg.tasks in order. Progress and budget notes go to `log` when given.
/// Exceptions from construction (ParameterError, ResourceError, ...) propagate.
Report run(const ExperimentConfig& cfg, std::ostream* log = nullptr);

/// Field moduli, primitives and sizes of a tower.
Section field_section(const FieldTower& tower);

std::string render(const Report& report, OutputFormat format);

/// 0 when every comparison agrees, 2 otherwise.
int exit_code(const Report& report);

}  // namespace qfcodes
