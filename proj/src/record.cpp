#include "qbch/record.hpp"

#include <sstream>

#include "qbch/errors.hpp"

namespace qbch {

namespace {

using nlohmann::json;

const char* const kCsvColumns[] = {"family",       "q",           "n",      "k",            "d_lower",
                                   "d_exact",      "mds",         "defining_set_c1", "defining_set_c2",
                                   "subset",       "euclidean_dc", "hermitian_dc",    "oracle",
                                   "construction", "classical",   "formula_k"};

std::string join(const std::vector<Residue>& v) {
  std::string s;
  for (Residue r : v) s += (s.empty() ? "" : " ") + std::to_string(r);
  return s;
}

std::vector<Residue> split_residues(const std::string& s) {
  std::vector<Residue> out;
  std::istringstream is(s);
  Residue r = 0;
  while (is >> r) out.push_back(r);
  if (!is.eof()) throw DomainError("bad residue list '" + s + "'");
  return out;
}

std::string classical_csv(const std::vector<ClassicalParams>& cs) {
  std::string s;
  for (const auto& c : cs) {
    s += (s.empty() ? "" : " ") + std::to_string(c.n) + ":" + std::to_string(c.k) + ":" + std::to_string(c.delta) +
         ":" + std::to_string(c.q);
  }
  return s;
}

std::vector<ClassicalParams> classical_from_csv(const std::string& s) {
  std::vector<ClassicalParams> out;
  std::istringstream is(s);
  std::string item;
  while (is >> item) {
    ClassicalParams c;
    char a = 0, b = 0, d = 0;
    std::istringstream fs(item);
    if (!(fs >> c.n >> a >> c.k >> b >> c.delta >> d >> c.q) || a != ':' || b != ':' || d != ':') {
      throw DomainError("bad classical entry '" + item + "'");
    }
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV line");
  return fields;
}

std::string opt_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

std::optional<bool> parse_opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw DomainError("bad boolean '" + s + "'");
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw DomainError("bad integer '" + s + "'");
  return v;
}

Family family_from(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw DomainError("unknown family '" + name + "'");
  return *f;
}

}  // namespace

json to_json(const QuantumParams& p) {
  json j;
  j["family"] = family_name(p.family);
  j["q"] = p.q;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d_lower"] = p.d_lower;
  if (p.d_exact) j["d_exact"] = *p.d_exact;
  j["mds"] = p.mds;
  j["defining_set_c1"] = p.defining_set_c1;
  if (!p.defining_set_c2.empty()) j["defining_set_c2"] = p.defining_set_c2;
  json checks = json::object();
  if (p.checks.subset) checks["subset"] = *p.checks.subset;
  if (p.checks.euclidean_dc) checks["euclidean_dc"] = *p.checks.euclidean_dc;
  if (p.checks.hermitian_dc) checks["hermitian_dc"] = *p.checks.hermitian_dc;
  if (p.checks.oracle) checks["oracle"] = *p.checks.oracle;
  j["checks"] = checks;
  if (!p.construction.empty()) j["construction"] = p.construction;
  json classical = json::array();
  for (const auto& c : p.classical) classical.push_back({{"n", c.n}, {"k", c.k}, {"delta", c.delta}, {"q", c.q}});
  j["classical"] = classical;
  if (p.formula_k) j["formula_k"] = *p.formula_k;
  return j;
}

QuantumParams params_from_json(const json& j) {
  try {
    QuantumParams p;
    p.family = family_from(j.at("family").get<std::string>());
    p.q = j.at("q").get<std::int64_t>();
    p.n = j.at("n").get<std::int64_t>();
    p.k = j.at("k").get<std::int64_t>();
    p.d_lower = j.at("d_lower").get<int>();
    if (j.contains("d_exact")) p.d_exact = j["d_exact"].get<int>();
    p.mds = j.at("mds").get<bool>();
    p.defining_set_c1 = j.at("defining_set_c1").get<std::vector<Residue>>();
    if (j.contains("defining_set_c2")) p.defining_set_c2 = j["defining_set_c2"].get<std::vector<Residue>>();
    const json& checks = j.at("checks");
    if (checks.contains("subset")) p.checks.subset = checks["subset"].get<bool>();
    if (checks.contains("euclidean_dc")) p.checks.euclidean_dc = checks["euclidean_dc"].get<bool>();
    if (checks.contains("hermitian_dc")) p.checks.hermitian_dc = checks["hermitian_dc"].get<bool>();
    if (checks.contains("oracle")) p.checks.oracle = checks["oracle"].get<std::string>();
    if (j.contains("construction")) p.construction = j["construction"].get<std::string>();
    for (const json& c : j.value("classical", json::array())) {
      p.classical.push_back({.n = c.at("n").get<std::int64_t>(),
                             .k = c.at("k").get<std::int64_t>(),
                             .delta = c.at("delta").get<int>(),
                             .q = c.at("q").get<std::int64_t>()});
    }
    if (j.contains("formula_k")) p.formula_k = j["formula_k"].get<std::int64_t>();
    return p;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_header() {
  std::string s;
  for (const char* c : kCsvColumns) s += (s.empty() ? "" : ",") + std::string(c);
  return s;
}

std::string to_csv(const QuantumParams& p) {
  const std::vector<std::string> fields = {
      std::string(family_name(p.family)),
      std::to_string(p.q),
      std::to_string(p.n),
      std::to_string(p.k),
      std::to_string(p.d_lower),
      p.d_exact ? std::to_string(*p.d_exact) : "",
      p.mds ? "true" : "false",
      join(p.defining_set_c1),
      join(p.defining_set_c2),
      opt_bool(p.checks.subset),
      opt_bool(p.checks.euclidean_dc),
      opt_bool(p.checks.hermitian_dc),
      p.checks.oracle.value_or(""),
      p.construction,
      classical_csv(p.classical),
      p.formula_k ? std::to_string(*p.formula_k) : "",
  };
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_quote(fields[i]);
  return line;
}

QuantumParams params_from_csv(const std::string& line) {
  const auto f = split_csv(line);
  if (f.size() != std::size(kCsvColumns)) {
    throw DomainError("CSV record has " + std::to_string(f.size()) + " fields, expected " +
                      std::to_string(std::size(kCsvColumns)));
  }
  try {
    QuantumParams p;
    p.family = family_from(f[0]);
    p.q = parse_int(f[1]);
    p.n = parse_int(f[2]);
    p.k = parse_int(f[3]);
    p.d_lower = static_cast<int>(parse_int(f[4]));
    if (!f[5].empty()) p.d_exact = static_cast<int>(parse_int(f[5]));
    p.mds = parse_opt_bool(f[6]).value_or(false);
    p.defining_set_c1 = split_residues(f[7]);
    p.defining_set_c2 = split_residues(f[8]);
    p.checks.subset = parse_opt_bool(f[9]);
    p.checks.euclidean_dc = parse_opt_bool(f[10]);
    p.checks.hermitian_dc = parse_opt_bool(f[11]);
    if (!f[12].empty()) p.checks.oracle = f[12];
    p.construction = f[13];
    p.classical = classical_from_csv(f[14]);
    if (!f[15].empty()) p.formula_k = parse_int(f[15]);
    return p;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError(std::string("malformed CSV record: ") + e.what());
  }
}

std::string to_text(const QuantumParams& p) {
  std::ostringstream os;
  os << p.to_string() << "  (" << family_name(p.family) << ")";
  if (p.mds) os << " MDS";
  os << '\n';
  if (!p.construction.empty()) os << "  construction: " << p.construction << '\n';
  os << "  classical:";
  for (std::size_t i = 0; i < p.classical.size(); ++i) os << (i ? ", " : " ") << p.classical[i].to_string();
  os << '\n';
  os << "  Z1: {" << join(p.defining_set_c1) << "}\n";
  if (!p.defining_set_c2.empty()) os << "  Z2: {" << join(p.defining_set_c2) << "}\n";
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
  os << "  checks: subset " << flag(p.checks.subset) << ", euclidean_dc " << flag(p.checks.euclidean_dc)
     << ", hermitian_dc " << flag(p.checks.hermitian_dc) << '\n';
  if (p.checks.oracle) os << "  oracle: " << *p.checks.oracle << '\n';
  if (p.formula_k) os << "  K by formula: " << *p.formula_k << '\n';
  os << "  singleton slack: " << singleton_check(p).slack << '\n';
  return os.str();
}

}  // namespace qbch
