#include "qfcodes/report.hpp"

#include "qfcodes/cyclotomic.hpp"
#include "qfcodes/descent.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/ghw.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace qfcodes {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

json num(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, BigInt>) return num(*v);
  else return *v;
}

std::string comp_str(const Composition& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::string matrix_str(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

std::string yes(bool b) { return b ? "yes" : "NO"; }

void note(std::ostream* log, const std::string& msg) {
  if (log) *log << "[qfcodes] " << msg << '\n';
}

Section form_section(const ExperimentConfig& cfg, const QuadForm& Q, const QuadFormAnalysis& an) {
  Section s{"quadratic-form", {"quantity", "computed", "reference", "agree"}, {}, {}, false};
  auto row = [&](const char* what, int value, std::optional<int> ref) {
    const bool ok = !ref || *ref == value;
    s.disagreement |= !ok;
    s.rows.push_back({what, value, opt(ref), yes(ok)});
  };
  row("rank", int(an.rank), cfg.reference.rank);
  row("eps_Q", an.eps_Q, cfg.reference.eps_Q);
  row("eps", an.eps, std::nullopt);
  s.summary["delta"] = an.delta;
  s.summary["diagonal"] = an.diagonal;
  s.summary["radical_dimension"] = radical(Q).size();
  s.summary["gram"] = an.gram;
  return s;
}

WeightDistribution reference_wd(const ExperimentConfig& cfg, std::uint64_t length) {
  if (cfg.reference.wd) {
    WeightDistribution wd = *cfg.reference.wd;
    wd[0] = 1;
    return wd;
  }
  if (cfg.reference.cwe) return marginalize(*cfg.reference.cwe, length);
  return {};
}

void wd_rows(Section& s, const WeightDistribution& brute, const WeightDistribution& predicted,
             const WeightDistribution& ref) {
  std::set<std::uint64_t> weights;
  for (const auto* wd : {&brute, &predicted, &ref})
    for (const auto& [w, f] : *wd) weights.insert(w);
  for (auto w : weights) {
    auto get = [&](const WeightDistribution& wd) -> json {
      auto it = wd.find(w);
      return it == wd.end() ? json(0) : num(it->second);
    };
    const bool ok = get(brute) == get(predicted) && (ref.empty() || get(ref) == get(brute));
    s.disagreement |= !ok;
    s.rows.push_back({w, get(brute), get(predicted), ref.empty() ? json(nullptr) : get(ref), yes(ok)});
  }
}

Section code_section(const ExperimentConfig& cfg, const Code& code, const std::vector<Composition>& comps) {
  Section s{"weight-distribution", {"weight", "brute", "predicted", "reference", "agree"}, {}, {}, false};
  const WeightDistribution brute = weight_distribution_from(code, comps);
  const WeightDistribution pred = weight_distribution_predicted(code);
  wd_rows(s, brute, pred, reference_wd(cfg, code.length()));
  const std::uint64_t d = min_distance(brute);
  s.summary["variant"] = to_string(code.variant());
  s.summary["n"] = code.length();
  s.summary["k"] = code.dimension();
  s.summary["d"] = d;
  s.summary["d_predicted"] = min_distance(pred);
  if (cfg.reference.params) {
    const auto& p = *cfg.reference.params;
    const bool ok = p[0] == code.length() && p[1] == code.dimension() && p[2] == d;
    s.summary["reference_params"] = p;
    s.summary["params_agree"] = ok;
    s.disagreement |= !ok;
  }
  const auto g = griesmer_check(code.length(), code.dimension(), d, code.q());
  s.summary["griesmer_bound"] = num(g.bound);
  s.summary["griesmer_meets"] = g.meets;
  s.summary["griesmer_slack"] = num(g.slack);
  s.summary["minimality"] = to_string(ab_minimality(brute, code.q()));
  return s;
}

Section cwe_section(const ExperimentConfig& cfg, const Code& code, const std::vector<Composition>& comps) {
  Section s{"complete-weight-enumerator", {"composition", "brute", "predicted", "reference", "agree"}, {}, {}, false};
  const CWE brute = cwe_from(comps);
  const CWE pred = cwe_predicted(code);
  std::optional<CWE> ref;
  if (cfg.reference.cwe) {
    ref = *cfg.reference.cwe;
    if (cfg.reference.eta_pattern) {
      auto perm = relabeling_for_eta_pattern(*code.tower().fq, *cfg.reference.eta_pattern, cfg.reference.eta_of_negated);
      if (!perm) {
        s.summary["relabeling"] = "reference eta pattern has the wrong value counts";
        s.disagreement = true;
      } else {
        ref = relabel(*ref, *perm);
        s.summary["relabeling"] = *perm;
      }
    }
  }
  std::set<Composition> keys;
  for (const CWE* c : std::initializer_list<const CWE*>{&brute, &pred, ref ? &*ref : nullptr})
    if (c)
      for (const auto& [k, f] : *c) keys.insert(k);
  for (const auto& k : keys) {
    auto get = [&](const CWE* c) -> json {
      if (!c) return nullptr;
      auto it = c->find(k);
      return it == c->end() ? json(0) : num(it->second);
    };
    const bool ok = get(&brute) == get(&pred) && (!ref || get(&*ref) == get(&brute));
    s.disagreement |= !ok;
    s.rows.push_back({comp_str(k), get(&brute), get(&pred), get(ref ? &*ref : nullptr), yes(ok)});
  }
  s.summary["codewords"] = num(total(brute));
  s.summary["ordering"] = code.tower().fq->ordering();
  return s;
}

Section ghw_section(const ExperimentConfig& cfg, const Code& code, std::ostream* log) {
  Section s{"weight-hierarchy", {"r", "brute", "closed", "reference", "agree", "witness"}, {}, {}, false};
  const unsigned k = code.dimension();
  for (unsigned r = 1; r <= (cfg.ghw_r_max ? std::min(cfg.ghw_r_max, k) : k); ++r)
    note(log, "r = " + std::to_string(r) + ": [" + std::to_string(k) + " choose " + std::to_string(r) + "]_" +
                  std::to_string(code.q()) + " = " + gaussian_binomial(code.q(), k, r).str() + " subspaces");
  const GhwReport rep = hierarchy(code, cfg.ghw_r_max, cfg.reference.hierarchy, cfg.budget);
  for (const auto& row : rep.rows) {
    json brute = row.brute ? json(*row.brute) : json(nullptr);
    s.rows.push_back({row.r, brute, num(row.closed), opt(row.reference), yes(row.agree()),
                      row.error.empty() ? matrix_str(row.witness) : "skipped: " + row.error});
    s.disagreement |= !row.agree();
    if (cfg.audit && row.brute) {
      const std::uint64_t audit = support_defect_audit(code, row.witness);
      const bool ok = code.length() - audit == *row.brute;
      s.summary["audit_r" + std::to_string(row.r)] = ok ? "character-sum recount agrees" : "character-sum recount DISAGREES";
      s.disagreement |= !ok;
    }
  }
  s.summary["strictly_increasing"] = rep.strictly_increasing();
  s.disagreement |= !rep.strictly_increasing();
  return s;
}

std::vector<Section> descend_sections(const ExperimentConfig& cfg, const Code& code, std::ostream* log) {
  const FieldTower& t = code.tower();
  const DescentConfig dcfg = cfg.descent.value_or(DescentConfig{});
  const DescentParams params = make_descent(t, dcfg.N, dcfg.theta);
  const DescendedCode dc(code, params);
  const unsigned p = t.params.p;
  std::vector<Section> out;

  Section ps{"descent-parameters", {"quantity", "value"}, {}, {}, false};
  ps.rows.push_back({"N", params.N});
  ps.rows.push_back({"theta", params.theta});
  ps.rows.push_back({"L", params.L});
  ps.rows.push_back({"source [n, k]_q", "[" + std::to_string(code.length()) + ", " + std::to_string(code.dimension()) +
                                           "]_" + std::to_string(code.q())});
  const std::size_t rank = dc.rank();
  ps.rows.push_back({"descended [n, k]_p", "[" + std::to_string(dc.length()) + ", " + std::to_string(rank) + "]_" +
                                               std::to_string(p)});
  std::set<std::uint64_t> col_weights;
  for (Index g = 1; g < t.q(); ++g) col_weights.insert(dc.column_weights()[g]);
  const BigInt expected_col = BigInt(p - 1) * ipow(p, t.params.m - 1) / params.N;
  ps.summary["psi_weights"] = col_weights;
  ps.summary["psi_weight_expected"] = num(expected_col);
  ps.summary["rank_equals_m_times_k"] = rank == dc.dimension();
  ps.disagreement |= rank != dc.dimension() || col_weights.size() != 1 || BigInt(*col_weights.begin()) != expected_col;
  const OrbitVerdict ov = orbit_check(t, params);
  ps.summary["stabilizer"] = ov.stabilizer;
  ps.summary["stabilizer_expected"] = ov.expected_stabilizer;
  ps.summary["transitive"] = ov.transitive();
  ps.disagreement |= !ov.ok();
  std::uint64_t first_fail = 0, second_fail = 0, pairs = 0;
  for (Index a = 1; a < t.q(); ++a)
    for (Index c = 1; c < t.q(); ++c) {
      const auto v = char_identity_check(t, params, c, a);
      first_fail += !v.first_ok();
      second_fail += !v.second_ok();
      ++pairs;
    }
  ps.summary["identity_pairs"] = pairs;
  ps.summary["identity_first_failures"] = first_fail;
  ps.summary["identity_second_failures"] = second_fail;
  ps.disagreement |= first_fail || second_fail;
  out.push_back(std::move(ps));

  Section ws{"descended-weight-distribution", {"weight", "brute", "predicted", "reference", "agree"}, {}, {}, false};
  wd_rows(ws, descended_wd_brute(dc, cfg.audit ? DescentWdMode::Audit : DescentWdMode::Fast, cfg.budget),
          descended_wd_predicted(t, code.analysis(), code.variant(), params.N), {});
  out.push_back(std::move(ws));

  Section gs{"descended-weight-hierarchy", {"r", "brute", "closed", "reference", "agree", "witness"}, {}, {}, false};
  const unsigned k = dc.dimension();
  const unsigned r_max = cfg.descent_ghw_r_max ? std::min(cfg.descent_ghw_r_max, k) : k;
  std::optional<kernels::ZeroSets> zs;
  std::optional<BigInt> prev;
  bool increasing = true;
  for (unsigned r = 1; r <= r_max; ++r) {
    const BigInt count = gaussian_binomial(p, k, r);
    note(log, "descended r = " + std::to_string(r) + ": [" + std::to_string(k) + " choose " + std::to_string(r) + "]_" +
                  std::to_string(p) + " = " + count.str() + " subspaces");
    const BigInt closed = descended_ghw_closed(t, code.analysis(), code.variant(), params.N, r);
    json brute = nullptr;
    std::string witness;
    BigInt value = closed;
    bool ok = true;
    try {
      if (count * dc.length() <= cfg.budget && !zs) zs.emplace(descended_zero_sets(dc));
      const GhwResult res = descended_ghw_brute(dc, r, true, cfg.budget, zs ? &*zs : nullptr);
      brute = res.d;
      value = res.d;
      ok = BigInt(res.d) == closed;
      witness = matrix_str(res.witness);
    } catch (const ResourceError& e) {
      witness = std::string("skipped: ") + e.what();
    }
    gs.disagreement |= !ok;
    if (prev && !(*prev < value)) increasing = false;
    prev = value;
    gs.rows.push_back({r, brute, num(closed), nullptr, yes(ok), witness});
  }
  gs.summary["strictly_increasing"] = increasing;
  gs.disagreement |= !increasing;
  if (code.variant() == Variant::Affine) {
    json checks = json::array();
    for (unsigned r = t.params.m * (t.params.m2 + 1) + 1; r <= r_max; ++r) {
      try {
        const OptimizerCheck oc = affine_optimizer(dc, r, cfg.budget);
        const BigInt closed = descended_ghw_closed(t, code.analysis(), code.variant(), params.N, r);
        const bool ok = BigInt(oc.d) == closed;
        gs.disagreement |= !ok;
        checks.push_back({{"r", r}, {"structured_d", oc.d}, {"closed", num(closed)}, {"agree", ok}});
      } catch (const ResourceError& e) {
        checks.push_back({{"r", r}, {"skipped", e.what()}});
      }
    }
    gs.summary["structured_optimizers"] = checks;
  }
  out.push_back(std::move(gs));
  return out;
}

Section verify_section(const ExperimentConfig& cfg, const QuadForm& Q, const QuadFormAnalysis& an) {
  Section s{"lemma-checks", {"suite", "check", "cases", "failures"}, {}, {}, false};
  const FieldTower& t = Q.tower();
  const Field& fq = *t.fq;
  auto add = [&](const char* suite, const std::string& name, std::uint64_t cases, std::uint64_t failures) {
    s.rows.push_back({suite, name, cases, failures});
    s.disagreement |= failures != 0;
  };
  std::uint64_t fails = 0;
  for (unsigned k : {1u, 2u})
    for (Index b = 0; b < fq.size(); ++b) fails += to_rational(eta_twisted_sum(fq, k, b)) != eta_twisted_sum_closed(fq, k, b);
  add("lemma-basic", "eta-twisted sum, k in {1,2}, all b", 2 * fq.size(), fails);
  fails = 0;
  for (Index z = 1; z < fq.size(); ++z) fails += to_rational(qf_exp_sum(Q, z)) != qf_exp_sum_closed(t, an, z);
  add("lemma-gauss", "quadratic-form exponential sum, all z != 0", fq.size() - 1, fails);
  const unsigned p = t.params.p;
  const CycInt g = gauss_sum_prime(p);
  add("lemma-gauss", "prime Gauss sum squared equals p*", 1, (g * g) == CycInt(p, BigInt(p_star(p))) ? 0 : 1);

  const std::uint64_t q = t.q(), s2 = t.f2->size();
  const BigInt triples = BigInt(q) * s2 * q;
  const BigInt exhaustive_work = triples * ipow(q, t.M());
  fails = 0;
  std::uint64_t cases = 0;
  const bool affine = cfg.variant == Variant::Affine;
  auto check = [&](Index a, Index b, Index beta, std::optional<Index> c) {
    ++cases;
    fails += count_solutions(t, an, a, b, beta, c) != count_solutions_brute(Q, a, b, beta, c, cfg.budget);
  };
  if (exhaustive_work <= cfg.budget / 10) {
    for (Index a = 0; a < q; ++a)
      for (Index b = 0; b < s2; ++b)
        for (Index beta = 0; beta < q; ++beta) check(a, b, beta, affine ? std::optional<Index>(Index(1)) : std::nullopt);
    add("counts", "solution counts, exhaustive (a, b, beta)", cases, fails);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 200; ++i) {
      const Index a = Index(rng() % q), b = Index(rng() % s2), beta = Index(rng() % q);
      check(a, b, beta, affine ? std::optional<Index>(Index(rng() % q)) : std::nullopt);
    }
    add("counts", "solution counts, 200 seeded samples", cases, fails);
  }
  return s;
}

}  // namespace

Section field_section(const FieldTower& tower) {
  Section s{"field", {"field", "size", "degree over base", "modulus", "primitive"}, {}, {}, false};
  auto row = [&](const char* name, const FieldPtr& f) {
    const bool same = f == tower.fq && std::string(name) != "F_q";  // degree-1 level reuses F_q
    s.rows.push_back({name, f->size(), same ? 1u : f->degree(), same ? Poly{} : f->modulus(), f->coeffs(f->primitive())});
  };
  row("F_p", tower.fp);
  row("F_q", tower.fq);
  row("F_q^m1", tower.f1);
  row("F_q^m2", tower.f2);
  const json d = describe(tower);
  for (const auto& [k, v] : d.items()) s.summary[k] = v;
  return s;
}

bool Report::disagreement() const {
  for (const auto& s : sections)
    if (s.disagreement) return true;
  return false;
}

ojson Report::to_json() const {
  ojson out;
  out["experiment"] = experiment;
  out["agree"] = !disagreement();
  out["sections"] = ojson::array();
  for (const auto& s : sections) {
    ojson j;
    j["section"] = s.name;
    j["agree"] = !s.disagreement;
    j["summary"] = s.summary;
    ojson rows = ojson::array();
    for (const auto& r : s.rows) {
      ojson row;
      for (std::size_t i = 0; i < s.columns.size() && i < r.size(); ++i) row[s.columns[i]] = ojson::parse(r[i].dump());
      rows.push_back(row);
    }
    j["rows"] = rows;
    out["sections"].push_back(j);
  }
  return out;
}

Report run(const ExperimentConfig& cfg, std::ostream* log) {
  Report rep;
  rep.experiment = cfg.name;
  rep.sections.push_back(field_section(cfg.tower));
  QuadForm Q(cfg.tower, cfg.form);
  const Code code(Q, cfg.variant);
  rep.sections.push_back(form_section(cfg, Q, code.analysis()));
  std::optional<std::vector<Composition>> comps;
  auto compositions = [&]() -> const std::vector<Composition>& {
    if (!comps) {
      note(log, "enumerating " + std::to_string(code.message_count()) + " codewords of length " +
                    std::to_string(code.length()));
      comps = all_compositions(code, cfg.audit ? EnumMode::Audit : EnumMode::Fast, true, cfg.budget);
    }
    return *comps;
  };
  for (Task task : cfg.tasks) {
    switch (task) {
      case Task::WeightDistribution: rep.sections.push_back(code_section(cfg, code, compositions())); break;
      case Task::Cwe: rep.sections.push_back(cwe_section(cfg, code, compositions())); break;
      case Task::Ghw: rep.sections.push_back(ghw_section(cfg, code, log)); break;
      case Task::Descend:
        for (auto& s : descend_sections(cfg, code, log)) rep.sections.push_back(std::move(s));
        break;
      case Task::VerifyLemmas: rep.sections.push_back(verify_section(cfg, Q, code.analysis())); break;
    }
  }
  return rep;
}

namespace {

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    os << report.to_json().dump(2) << '\n';
    return os.str();
  }
  if (format == OutputFormat::Csv) {
    for (const auto& s : report.sections) {
      os << "section";
      for (const auto& c : s.columns) os << ',' << csv_cell(c);
      os << '\n';
      for (const auto& r : s.rows) {
        os << s.name;
        for (const auto& v : r) os << ',' << csv_cell(v);
        os << '\n';
      }
    }
    return os.str();
  }
  os << "experiment: " << report.experiment << '\n';
  for (const auto& s : report.sections) {
    os << "\n== " << s.name << (s.disagreement ? "  [DISAGREEMENT]" : "") << " ==\n";
    for (const auto& [k, v] : s.summary.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    if (s.rows.empty()) continue;
    std::vector<std::size_t> width(s.columns.size());
    for (std::size_t i = 0; i < s.columns.size(); ++i) width[i] = s.columns[i].size();
    for (const auto& r : s.rows)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], cell(r[i]).size());
    auto line = [&](const std::vector<std::string>& cells) {
      os << ' ';
      for (std::size_t i = 0; i < cells.size(); ++i) os << ' ' << std::left << std::setw(int(width[i])) << cells[i];
      os << '\n';
    };
    line(s.columns);
    for (const auto& r : s.rows) {
      std::vector<std::string> cells;
      for (const auto& v : r) cells.push_back(cell(v));
      line(cells);
    }
  }
  os << "\nresult: " << (report.disagreement() ? "DISAGREEMENT (see flagged sections)" : "all comparisons agree") << '\n';
  return os.str();
}

int exit_code(const Report& report) { return report.disagreement() ? 2 : 0; }

}  // namespace qfcodes
