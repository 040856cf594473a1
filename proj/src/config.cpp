#include "qfcodes/config.hpp"

#include "qfcodes/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qfcodes {

using nlohmann::json;

std::string to_string(Task t) {
  switch (t) {
    case Task::WeightDistribution: return "wd";
    case Task::Cwe: return "cwe";
    case Task::Ghw: return "ghw";
    case Task::Descend: return "descend";
    case Task::VerifyLemmas: return "verify-lemmas";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json" || s == "structured-records") return OutputFormat::Json;
  throw ParameterError("unknown output format '" + s + "' (expected text, csv or json)");
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParameterError("config: " + where + ": " + what);
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      fail(where, "unknown key '" + k + "'");
  }
}

std::uint64_t get_uint(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

long long parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(where, "malformed integer '" + s + "'");
  }
}

}  // namespace

Index parse_element(const Field& field, const json& v, const std::string& where) {
  if (v.is_number_integer()) return field.from_int(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s == "g" || s.rfind("g^", 0) == 0) {
      long long k = s == "g" ? 1 : parse_int(s.substr(2), where);
      const long long order = field.size() - 1;
      k %= order;
      if (k < 0) k += order;
      return field.exp(std::uint64_t(k));
    }
    const auto slash = s.find('/');
    if (slash == std::string::npos) return field.from_int(parse_int(s, where));
    const Index num = field.from_int(parse_int(s.substr(0, slash), where));
    const Index den = field.from_int(parse_int(s.substr(slash + 1), where));
    if (den == 0) fail(where, "denominator vanishes in characteristic " + std::to_string(field.characteristic()));
    return field.div(num, den);
  }
  if (v.is_array()) {
    if (field.is_prime()) {
      if (v.size() != 1) fail(where, "prime-field coefficient arrays have length 1");
      return parse_element(field, v[0], where + "[0]");
    }
    if (v.size() != field.degree())
      fail(where, "expected " + std::to_string(field.degree()) + " coefficients over the base field");
    std::vector<Index> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(parse_element(*field.base(), v[i], where + "[" + std::to_string(i) + "]"));
    return field.from_coeffs(c);
  }
  fail(where, "expected an integer, a string or a coefficient array");
}

ExperimentConfig parse_config(const json& doc) {
  allow_keys(doc, "<root>",
             {"name", "description", "tower", "form", "variant", "descent", "tasks", "budget", "format", "audit",
              "ghw_r_max", "descent_ghw_r_max", "reference"});
  ExperimentConfig cfg;
  cfg.name = doc.value("name", "custom");
  cfg.description = doc.value("description", "");

  if (!doc.contains("tower")) fail("<root>", "missing 'tower'");
  const json& tw = doc["tower"];
  allow_keys(tw, "tower", {"p", "m", "m1", "m2"});
  for (const char* k : {"p", "m1", "m2"})
    if (!tw.contains(k)) fail("tower", std::string("missing '") + k + "'");
  cfg.tower = build_tower(unsigned(get_uint(tw["p"], "tower.p")), unsigned(get_uint(tw.value("m", json(1)), "tower.m")),
                          unsigned(get_uint(tw["m1"], "tower.m1")), unsigned(get_uint(tw["m2"], "tower.m2")));
  const Field& fq = *cfg.tower.fq;
  const Field& f1 = *cfg.tower.f1;

  if (!doc.contains("form")) fail("<root>", "missing 'form'");
  const json& form = doc["form"];
  allow_keys(form, "form", {"frob", "trace_square", "gram"});
  if (form.contains("frob")) {
    if (!form["frob"].is_array()) fail("form.frob", "expected an array");
    for (std::size_t i = 0; i < form["frob"].size(); ++i) {
      const std::string w = "form.frob[" + std::to_string(i) + "]";
      const json& t = form["frob"][i];
      allow_keys(t, w, {"coeff", "i"});
      cfg.form.frob.push_back({parse_element(f1, t.value("coeff", json(1)), w + ".coeff"),
                               unsigned(get_uint(t.value("i", json(0)), w + ".i"))});
    }
  }
  if (form.contains("trace_square")) {
    if (!form["trace_square"].is_array()) fail("form.trace_square", "expected an array");
    for (std::size_t i = 0; i < form["trace_square"].size(); ++i) {
      const std::string w = "form.trace_square[" + std::to_string(i) + "]";
      const json& t = form["trace_square"][i];
      allow_keys(t, w, {"c", "b"});
      cfg.form.trsq.push_back({parse_element(fq, t.value("c", json(1)), w + ".c"),
                               parse_element(f1, t.value("b", json(1)), w + ".b")});
    }
  }
  if (form.contains("gram")) {
    const json& g = form["gram"];
    if (!g.is_array()) fail("form.gram", "expected an array of rows");
    Matrix G;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_array()) fail("form.gram[" + std::to_string(i) + "]", "expected a row array");
      std::vector<Index> row;
      for (std::size_t j = 0; j < g[i].size(); ++j)
        row.push_back(parse_element(fq, g[i][j], "form.gram[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
      G.push_back(std::move(row));
    }
    cfg.form.gram = std::move(G);
  }

  if (doc.contains("variant")) {
    if (!doc["variant"].is_string()) fail("variant", "expected a string");
    try {
      cfg.variant = parse_variant(doc["variant"].get<std::string>());
    } catch (const ParameterError& e) {
      fail("variant", e.what());
    }
  }
  if (doc.contains("descent")) {
    const json& d = doc["descent"];
    allow_keys(d, "descent", {"N", "theta"});
    DescentConfig dc;
    dc.N = unsigned(get_uint(d.value("N", json(1)), "descent.N"));
    if (d.contains("theta")) dc.theta = parse_element(fq, d["theta"], "descent.theta");
    cfg.descent = dc;
  }
  if (doc.contains("tasks")) {
    if (!doc["tasks"].is_array()) fail("tasks", "expected an array");
    for (const auto& t : doc["tasks"]) {
      const std::string s = t.is_string() ? t.get<std::string>() : "";
      if (s == "wd") cfg.tasks.push_back(Task::WeightDistribution);
      else if (s == "cwe") cfg.tasks.push_back(Task::Cwe);
      else if (s == "ghw") cfg.tasks.push_back(Task::Ghw);
      else if (s == "descend") cfg.tasks.push_back(Task::Descend);
      else if (s == "verify-lemmas") cfg.tasks.push_back(Task::VerifyLemmas);
      else fail("tasks", "unknown task " + t.dump() + " (expected wd, cwe, ghw, descend, verify-lemmas)");
    }
  } else {
    cfg.tasks = {Task::WeightDistribution, Task::Cwe, Task::Ghw};
    if (cfg.descent) cfg.tasks.push_back(Task::Descend);
  }
  if (doc.contains("budget")) cfg.budget = get_uint(doc["budget"], "budget");
  if (doc.contains("format")) {
    try {
      cfg.format = parse_format(doc["format"].get<std::string>());
    } catch (const std::exception& e) {
      fail("format", e.what());
    }
  }
  if (doc.contains("audit")) {
    if (!doc["audit"].is_boolean()) fail("audit", "expected a boolean");
    cfg.audit = doc["audit"].get<bool>();
  }
  if (doc.contains("ghw_r_max")) cfg.ghw_r_max = unsigned(get_uint(doc["ghw_r_max"], "ghw_r_max"));
  if (doc.contains("descent_ghw_r_max"))
    cfg.descent_ghw_r_max = unsigned(get_uint(doc["descent_ghw_r_max"], "descent_ghw_r_max"));

  if (doc.contains("reference")) {
    const json& ref = doc["reference"];
    allow_keys(ref, "reference", {"params", "wd", "cwe", "eta_pattern", "eta_of", "hierarchy", "rank", "eps_Q"});
    ReferenceValues& rv = cfg.reference;
    if (ref.contains("params")) {
      std::vector<std::uint64_t> p;
      for (const auto& v : ref["params"]) p.push_back(get_uint(v, "reference.params"));
      if (p.size() != 3) fail("reference.params", "expected [n, k, d]");
      rv.params = p;
    }
    if (ref.contains("wd")) {
      if (!ref["wd"].is_object()) fail("reference.wd", "expected an object of weight: frequency");
      WeightDistribution wd;
      for (const auto& [k, v] : ref["wd"].items()) wd[std::uint64_t(parse_int(k, "reference.wd"))] = get_uint(v, "reference.wd." + k);
      rv.wd = wd;
    }
    if (ref.contains("cwe")) {
      CWE cwe;
      for (std::size_t i = 0; i < ref["cwe"].size(); ++i) {
        const std::string w = "reference.cwe[" + std::to_string(i) + "]";
        const json& e = ref["cwe"][i];
        allow_keys(e, w, {"k", "count"});
        Composition k;
        for (const auto& v : e.at("k")) k.push_back(get_uint(v, w + ".k"));
        if (k.size() != cfg.tower.q()) fail(w + ".k", "expected q entries");
        cwe[k] += get_uint(e.at("count"), w + ".count");
      }
      rv.cwe = cwe;
    }
    if (ref.contains("eta_pattern")) {
      std::vector<int> pat;
      for (const auto& v : ref["eta_pattern"]) {
        if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
          fail("reference.eta_pattern", "entries must be 1 or -1");
        pat.push_back(v.get<int>());
      }
      if (pat.size() != cfg.tower.q() - 1) fail("reference.eta_pattern", "expected q-1 entries");
      rv.eta_pattern = pat;
    }
    if (ref.contains("eta_of")) {
      const std::string s = ref["eta_of"].get<std::string>();
      if (s != "negated" && s != "plain") fail("reference.eta_of", "expected 'negated' or 'plain'");
      rv.eta_of_negated = s == "negated";
    }
    if (ref.contains("hierarchy"))
      for (const auto& v : ref["hierarchy"]) rv.hierarchy.push_back(get_uint(v, "reference.hierarchy"));
    if (ref.contains("rank")) rv.rank = int(get_uint(ref["rank"], "reference.rank"));
    if (ref.contains("eps_Q")) rv.eps_Q = ref["eps_Q"].get<int>();
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError("config: " + path + ": " + e.what());
  }
  return parse_config(doc);
}

namespace {

json cwe_entries(std::initializer_list<std::pair<std::uint64_t, std::vector<std::uint64_t>>> rows) {
  json out = json::array();
  for (const auto& [count, k] : rows) out.push_back({{"count", count}, {"k", k}});
  return out;
}

std::vector<std::uint64_t> repeat(std::initializer_list<std::pair<std::uint64_t, std::size_t>> runs) {
  std::vector<std::uint64_t> out;
  for (const auto& [v, n] : runs) out.insert(out.end(), n, v);
  return out;
}

struct PresetDef {
  const char* name;
  const char* summary;
  json doc;
};

const std::vector<PresetDef>& presets() {
  static const std::vector<PresetDef> defs = [] {
    std::vector<PresetDef> d;
    d.push_back({"example-3.1", "(q,m1,m2) = (3,4,3), Q = Tr(x^2), homogeneous code [2186,4,1458]_3",
                 json{{"name", "example-3.1"},
                      {"tower", {{"p", 3}, {"m", 1}, {"m1", 4}, {"m2", 3}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}}},
                      {"variant", "homogeneous"},
                      {"reference",
                       {{"params", {2186, 4, 1458}},
                        {"rank", 4},
                        {"eps_Q", -1},
                        {"wd", {{"1458", 78}, {"1620", 2}}},
                        {"cwe", cwe_entries({{1, {2186, 0, 0}}, {78, {728, 729, 729}}, {2, {566, 810, 810}}})},
                        {"hierarchy", {1458, 1944, 2106, 2166}}}}}});
    d.push_back({"example-3.2", "(q,m1,m2) = (5,3,2), Q = Tr(x^2) - (1/3) Tr(x)^2, homogeneous code [3124,3,2500]_5",
                 json{{"name", "example-3.2"},
                      {"tower", {{"p", 5}, {"m", 1}, {"m1", 3}, {"m2", 2}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}, {"trace_square", {{{"c", "-1/3"}, {"b", 1}}}}}},
                      {"variant", "homogeneous"},
                      {"reference",
                       {{"params", {3124, 3, 2500}},
                        {"rank", 2},
                        {"eps_Q", -1},
                        {"cwe", cwe_entries({{1, repeat({{3124, 1}, {0, 4}})},
                                             {120, repeat({{624, 1}, {625, 4}})},
                                             {4, repeat({{124, 1}, {750, 4}})}})},
                        {"hierarchy", {2500, 3000, 3120}}}}}});
    d.push_back({"example-3.3", "(q,m1,m2) = (9,3,2), Q = Tr(g x^2) with g primitive in F_729, homogeneous code [59048,3,52488]_9",
                 json{{"name", "example-3.3"},
                      {"tower", {{"p", 3}, {"m", 2}, {"m1", 3}, {"m2", 2}}},
                      {"form", {{"frob", {{{"coeff", "g"}, {"i", 0}}}}}},
                      {"variant", "homogeneous"},
                      {"reference",
                       {{"params", {59048, 3, 52488}},
                        {"rank", 3},
                        {"eps_Q", -1},
                        {"eta_pattern", {1, 1, 1, 1, -1, -1, -1, -1}},
                        {"eta_of", "negated"},
                        {"cwe", cwe_entries({{1, repeat({{59048, 1}, {0, 8}})},
                                             {720, repeat({{6560, 1}, {6561, 8}})},
                                             {4, repeat({{6560, 1}, {5832, 4}, {7290, 4}})},
                                             {4, repeat({{6560, 1}, {7290, 4}, {5832, 4}})}})},
                        {"hierarchy", {52488, 52830, 58968}}}}}});
    d.push_back({"example-3.4", "(q,m1,m2) = (5,2,3), Q = Tr(x^2) - (1/2) Tr(x)^2, homogeneous code [3124,4,2500]_5",
                 json{{"name", "example-3.4"},
                      {"tower", {{"p", 5}, {"m", 1}, {"m1", 2}, {"m2", 3}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}, {"trace_square", {{{"c", "-1/2"}, {"b", 1}}}}}},
                      {"variant", "homogeneous"},
                      {"reference",
                       {{"params", {3124, 4, 2500}},
                        {"rank", 1},
                        {"eps_Q", 1},
                        {"eta_pattern", {1, 1, -1, -1}},
                        {"eta_of", "negated"},
                        {"cwe", cwe_entries({{1, {3124, 0, 0, 0, 0}},
                                             {620, {624, 625, 625, 625, 625}},
                                             {2, {624, 1250, 1250, 0, 0}},
                                             {2, {624, 0, 0, 1250, 1250}}})},
                        {"hierarchy", {2500, 3000, 3100, 3120}}}}}});
    d.push_back({"example-3.5", "(q,m1,m2) = (3,5,3), Q = Tr(2x^10 + x^2), affine code [6561,5,4131]_3",
                 json{{"name", "example-3.5"},
                      {"tower", {{"p", 3}, {"m", 1}, {"m1", 5}, {"m2", 3}}},
                      {"form", {{"frob", {{{"coeff", 2}, {"i", 2}}, {{"coeff", 1}, {"i", 0}}}}}},
                      {"variant", "affine"},
                      {"reference",
                       {{"params", {6561, 5, 4131}},
                        {"rank", 4},
                        {"eps_Q", -1},
                        {"cwe", cwe_entries({{1, {6561, 0, 0}},
                                             {1, {0, 6561, 0}},
                                             {1, {0, 0, 6561}},
                                             {234, {2187, 2187, 2187}},
                                             {2, {1701, 2430, 2430}},
                                             {2, {2430, 1701, 2430}},
                                             {2, {2430, 2430, 1701}}})},
                        {"hierarchy", {4131, 5741, 6291, 6471, 6561}}}}}});
    d.push_back({"example-3.6", "(q,m1,m2) = (3,3,4), Q = Tr(theta x^2) with theta primitive in F_27, affine code [2187,6,1215]_3",
                 json{{"name", "example-3.6"},
                      {"tower", {{"p", 3}, {"m", 1}, {"m1", 3}, {"m2", 4}}},
                      {"form", {{"frob", {{{"coeff", "g"}, {"i", 0}}}}}},
                      {"variant", "affine"},
                      {"reference",
                       {{"params", {2187, 6, 1215}},
                        {"rank", 3},
                        {"eps_Q", -1},
                        {"eta_pattern", {1, -1}},
                        {"eta_of", "plain"},
                        {"cwe", cwe_entries({{1, {2187, 0, 0}},
                                             {1, {0, 2187, 0}},
                                             {1, {0, 0, 2187}},
                                             {720, {729, 729, 729}},
                                             {1, {729, 972, 486}},
                                             {1, {486, 729, 972}},
                                             {1, {972, 486, 729}},
                                             {1, {729, 486, 972}},
                                             {1, {972, 729, 486}},
                                             {1, {486, 972, 729}}})},
                        {"hierarchy", {1215, 1863, 2079, 2151, 2175, 2187}}}}}});
    d.push_back({"descent-5-2-1-1-N2", "(p,m,m1,m2,N) = (5,2,1,1,2), Q = x^2 over F_25, descent to F_5 (inadmissible: gcd(2,6) = 2)",
                 json{{"name", "descent-5-2-1-1-N2"},
                      {"tower", {{"p", 5}, {"m", 2}, {"m1", 1}, {"m2", 1}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}}},
                      {"variant", "homogeneous"},
                      {"descent", {{"N", 2}}},
                      {"tasks", {"wd", "descend"}}}});
    d.push_back({"descent-5-2-1-1-N1", "(p,m,m1,m2,N) = (5,2,1,1,1), Q = x^2 over F_25, descended code [14976,4]_5",
                 json{{"name", "descent-5-2-1-1-N1"},
                      {"tower", {{"p", 5}, {"m", 2}, {"m1", 1}, {"m2", 1}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}}},
                      {"variant", "homogeneous"},
                      {"descent", {{"N", 1}}},
                      {"tasks", {"wd", "ghw", "descend"}}}});
    d.push_back({"descent-3-2-1-1-affine", "(p,m,m1,m2,N) = (3,2,1,1,1), Q = x^2 over F_9, affine code descended to [648,6]_3",
                 json{{"name", "descent-3-2-1-1-affine"},
                      {"tower", {{"p", 3}, {"m", 2}, {"m1", 1}, {"m2", 1}}},
                      {"form", {{"frob", {{{"coeff", 1}, {"i", 0}}}}}},
                      {"variant", "affine"},
                      {"descent", {{"N", 1}}},
                      {"tasks", {"wd", "ghw", "descend"}}}});
    return d;
  }();
  return defs;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const auto& p : presets()) out.push_back({p.name, p.summary});
  return out;
}

json preset_document(const std::string& name) {
  for (const auto& p : presets())
    if (name == p.name) return p.doc;
  throw ParameterError("unknown preset '" + name + "'");
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig cfg = parse_config(preset_document(name));
  for (const auto& p : presets())
    if (name == p.name) cfg.description = p.summary;
  return cfg;
}

}  // namespace qfcodes
