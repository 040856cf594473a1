#include "qfcodes/config.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/report.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>

using namespace qfcodes;

namespace {

struct Globals {
  std::string config_path;
  std::string preset_name;
  std::uint64_t budget = 0;
  int threads = 0;
  bool audit = false;
  std::string format;
};

ExperimentConfig load_experiment(const Globals& g) {
  if (g.config_path.empty() == g.preset_name.empty())
    throw ParameterError("select an experiment with exactly one of --config FILE or --preset NAME");
  ExperimentConfig cfg = g.preset_name.empty() ? load_config(g.config_path) : preset(g.preset_name);
  if (g.budget) cfg.budget = g.budget;
  if (g.audit) cfg.audit = true;
  if (!g.format.empty()) cfg.format = parse_format(g.format);
  return cfg;
}

int emit(const Report& rep, OutputFormat fmt) {
  std::cout << render(rep, fmt);
  if (rep.disagreement()) std::cerr << "qfcodes: brute force, closed forms and reference values disagree (exit 2)\n";
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes from quadratic forms over finite-field towers: construction, enumerators, hierarchies, descent"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "JSON experiment configuration");
  app.add_option("--preset", g.preset_name, "Named built-in experiment (see `preset list`)");
  app.add_option("--budget", g.budget, "Work budget for exhaustive enumerations");
  app.add_option("--threads", g.threads, "OpenMP thread count");
  app.add_flag("--audit", g.audit, "Recount with literal evaluation and character sums");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  unsigned fp = 0, fm = 1, fm1 = 1, fm2 = 1;
  auto* field_info = app.add_subcommand("field-info", "Pinned tower representation: moduli and primitives");
  field_info->add_option("--p", fp, "Characteristic");
  field_info->add_option("--m", fm, "Degree of F_q over F_p");
  field_info->add_option("--m1", fm1, "Degree of the quadratic-form field over F_q");
  field_info->add_option("--m2", fm2, "Degree of the trace field over F_q");

  auto* qf = app.add_subcommand("qf", "Rank, discriminant character and sign of the quadratic form");
  auto* code = app.add_subcommand("code", "Parameters and weight distribution (brute vs closed form)");
  auto* cwe = app.add_subcommand("cwe", "Complete weight enumerator (brute vs closed form)");
  unsigned r_max = 0;
  auto* ghw = app.add_subcommand("ghw", "Weight hierarchy (brute vs closed form)");
  ghw->add_option("--r-max", r_max, "Largest r (default: code dimension)");

  unsigned N = 0, desc_r_max = 0;
  std::string theta;
  auto* descend = app.add_subcommand("descend", "Descent to F_p: parameters, weights, identities, hierarchy");
  descend->add_option("--N", N, "Descent index N (default: from the experiment)");
  descend->add_option("--theta-override", theta, "Explicit theta of order (q-1)/N, element grammar");
  descend->add_option("--ghw-r-max", desc_r_max, "Largest descended r");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Character-sum and solution-count oracles");
  verify->add_option("suite", suite, "Suite")->required()->check(CLI::IsMember({"lemma-basic", "lemma-gauss", "counts", "all"}));

  std::string preset_action, preset_arg;
  app.add_subcommand("run", "Every task listed in the experiment");
  auto* preset_cmd = app.add_subcommand("preset", "Built-in experiments");
  preset_cmd->add_option("action", preset_action, "list | show NAME | run NAME")
      ->required()
      ->check(CLI::IsMember({"list", "show", "run"}));
  preset_cmd->add_option("name", preset_arg, "Preset name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (g.threads > 0) omp_set_num_threads(g.threads);
    const OutputFormat fmt = g.format.empty() ? OutputFormat::Text : parse_format(g.format);

    if (*field_info) {
      FieldTower tower = fp ? build_tower(fp, fm, fm1, fm2) : load_experiment(g).tower;
      Report rep;
      rep.experiment = "field-info";
      rep.sections.push_back(field_section(tower));
      std::cout << render(rep, fmt);
      return 0;
    }
    if (*preset_cmd) {
      if (preset_action == "list") {
        for (const auto& p : list_presets()) std::cout << p.name << "\t" << p.summary << '\n';
        return 0;
      }
      if (preset_arg.empty()) throw ParameterError("preset " + preset_action + " needs a preset name");
      if (preset_action == "show") {
        std::cout << preset_document(preset_arg).dump(2) << '\n';
        return 0;
      }
      g.preset_name = preset_arg;
      g.config_path.clear();
      ExperimentConfig cfg = load_experiment(g);
      const Report rep = run(cfg, &std::cerr);
      return emit(rep, g.format.empty() ? cfg.format : fmt);
    }

    ExperimentConfig cfg = load_experiment(g);
    const OutputFormat out_fmt = g.format.empty() ? cfg.format : fmt;
    if (*qf) cfg.tasks = {};
    if (*code) cfg.tasks = {Task::WeightDistribution};
    if (*cwe) cfg.tasks = {Task::Cwe};
    if (*ghw) {
      cfg.tasks = {Task::Ghw};
      if (r_max) cfg.ghw_r_max = r_max;
    }
    if (*descend) {
      cfg.tasks = {Task::Descend};
      DescentConfig d = cfg.descent.value_or(DescentConfig{});
      if (N) d.N = N;
      if (!theta.empty()) d.theta = parse_element(*cfg.tower.fq, nlohmann::json(theta), "--theta-override");
      cfg.descent = d;
      if (desc_r_max) cfg.descent_ghw_r_max = desc_r_max;
    }
    if (*verify) cfg.tasks = {Task::VerifyLemmas};

    Report rep = run(cfg, &std::cerr);
    if (*verify && suite != "all") {
      for (auto& s : rep.sections) {
        if (s.name != "lemma-checks") continue;
        std::erase_if(s.rows, [&](const auto& row) { return row[0] != suite; });
        s.disagreement = false;
        for (const auto& row : s.rows) s.disagreement |= row[3] != 0;
      }
    }
    return emit(rep, out_fmt);
  } catch (const ResourceError& e) {
    std::cerr << "qfcodes: resource limit: " << e.what() << '\n';
    return 1;
  } catch (const ParameterError& e) {
    std::cerr << "qfcodes: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedInput& e) {
    std::cerr << "qfcodes: unsupported input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qfcodes: error: " << e.what() << '\n';
    return 1;
  }
}
