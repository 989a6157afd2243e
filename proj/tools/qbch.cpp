#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbch/errors.hpp"
#include "qbch/record.hpp"
#include "qbch/search.hpp"
#include "qbch/tables.hpp"
#include "qbch/verify.hpp"

using nlohmann::json;
using namespace qbch;

namespace {

enum class Format { text, json, csv };

struct CodeOptions {
  std::string family;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::optional<int> c;
  std::optional<int> r;
  std::optional<std::int64_t> s;
  std::string scheme = "hermitian";
  std::vector<Residue> cosets;
  std::vector<Residue> cosets2;
  std::optional<int> verify_weight;
};

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
}

void add_code_options(CLI::App* cmd, CodeOptions& o) {
  cmd->add_option("--family", o.family, "css-I, css-II, steane-III, hermitian-IV or manual")->required();
  cmd->add_option("--q", o.q, "Alphabet size (quantum q)")->required();
  cmd->add_option("--n", o.n, "Code length")->required();
  cmd->add_option("--c", o.c, "Number of cosets for n = r(q-1) or r(q^2-1) families");
  cmd->add_option("--r", o.r, "Number of cosets for prime-length families");
  cmd->add_option("--s", o.s, "Coset containing s and s+1 (default: solution of (q-1)s = 1 mod n)");
  cmd->add_option("--scheme", o.scheme, "manual family: css, steane or hermitian")
      ->check(CLI::IsMember({"css", "steane", "hermitian"}));
  cmd->add_option("--cosets", o.cosets, "manual family: coset representatives of C (or C1, L)")->delimiter(',');
  cmd->add_option("--cosets2", o.cosets2, "manual family: coset representatives of C2 (or L')")->delimiter(',');
}

GeneratorArgs to_args(const CodeOptions& o) {
  const auto family = parse_family(o.family);
  if (!family) throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
  GeneratorArgs a;
  a.family = *family;
  a.q = o.q;
  a.n = o.n;
  a.c = o.c;
  a.r = o.r;
  a.s = o.s;
  a.scheme = *parse_scheme(o.scheme);
  a.cosets = o.cosets;
  a.cosets2 = o.cosets2;
  return a;
}

void print_records(const std::vector<QuantumParams>& records, Format format, bool as_array) {
  switch (format) {
    case Format::text:
      for (const auto& p : records) std::cout << to_text(p);
      break;
    case Format::json: {
      if (!as_array && records.size() == 1) {
        std::cout << to_json(records.front()).dump(2) << '\n';
        break;
      }
      json arr = json::array();
      for (const auto& p : records) arr.push_back(to_json(p));
      std::cout << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << csv_header() << '\n';
      for (const auto& p : records) std::cout << to_csv(p) << '\n';
      break;
  }
}

std::string join(const std::vector<Residue>& v) {
  std::string s;
  for (Residue r : v) s += (s.empty() ? "" : " ") + std::to_string(r);
  return s;
}

int cmd_cosets(std::int64_t q, std::int64_t n, Format format) {
  if (!as_prime_power(q)) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  const CosetPartition part = partition(q, n);
  std::optional<Residue> consecutive;
  try {
    consecutive = find_consecutive_coset(q, n);
  } catch (const HypothesisError&) {
  }
  // Singletons C_[l r], 1 <= l <= q-2, when n = r(q-1).
  std::vector<bool> lemma(static_cast<std::size_t>(n), false);
  if (n % (q - 1) == 0) {
    const std::int64_t r = n / (q - 1);
    for (std::int64_t l = 1; l <= q - 2 && l * r < n; ++l) lemma[static_cast<std::size_t>(l * r)] = true;
  }

  json rows = json::array();
  for (const Coset& c : part.cosets) {
    json row = {{"rep", c.rep},
                {"size", c.size()},
                {"elements", c.elems},
                {"singleton", c.size() == 1},
                {"lemma_singleton", lemma[static_cast<std::size_t>(c.rep)]},
                {"consecutive", consecutive && c.contains(*consecutive)}};
    rows.push_back(row);
  }

  switch (format) {
    case Format::json: {
      json out = {{"q", q}, {"n", n}, {"m", part.m}, {"cosets", rows}};
      if (consecutive) out["consecutive_rep"] = *consecutive;
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "q,n,m,rep,size,elements,singleton,lemma_singleton,consecutive\n";
      for (const json& row : rows) {
        std::cout << q << ',' << n << ',' << part.m << ',' << row["rep"] << ',' << row["size"] << ','
                  << join(row["elements"].get<std::vector<Residue>>()) << ',' << row["singleton"] << ','
                  << row["lemma_singleton"] << ',' << row["consecutive"] << '\n';
      }
      break;
    case Format::text: {
      std::cout << part.cosets.size() << " cosets of " << q << " mod " << n << ", ord_n(q) = " << part.m << '\n';
      for (const Coset& c : part.cosets) {
        std::cout << "  C_" << c.rep << " = {";
        for (std::size_t i = 0; i < c.elems.size(); ++i) std::cout << (i ? ", " : "") << c.elems[i];
        std::cout << '}';
        if (lemma[static_cast<std::size_t>(c.rep)]) std::cout << "  [singleton l*r]";
        else if (c.size() == 1) std::cout << "  [singleton]";
        if (consecutive && c.contains(*consecutive)) std::cout << "  [contains " << *consecutive << ", " << *consecutive + 1 << ']';
        std::cout << '\n';
      }
      std::cout << "singletons:";
      for (const Coset& c : part.cosets) {
        if (c.size() == 1) std::cout << ' ' << c.rep;
      }
      std::cout << '\n';
      if (consecutive) {
        std::cout << "consecutive rep: " << *consecutive << '\n';
      } else {
        std::cout << "consecutive rep: none (gcd(q-1, n) != 1)\n";
      }
      break;
    }
  }
  return 0;
}

int cmd_construct(const CodeOptions& o, Format format, bool always_verify) {
  Construction c = generate(to_args(o));
  bool ok = true;
  std::string status;
  if (always_verify || o.verify_weight) {
    const int w = o.verify_weight.value_or(c.params.d_lower);
    const VerifyResult v = verify_distance(c, w);
    ok = v.passed;
    status = v.status;
  }
  print_records({c.params}, format, false);
  if (!ok) std::cerr << "verification failed: " << status << '\n';
  return ok ? 0 : 1;
}

int cmd_search(const std::vector<std::int64_t>& qs, const std::string& n_range, const std::vector<std::string>& fams,
               bool explain, Format format) {
  SearchSpec spec;
  spec.qs = qs;
  const auto colon = n_range.find(':');
  try {
    spec.n_min = std::stoll(n_range.substr(0, colon));
    spec.n_max = colon == std::string::npos ? spec.n_min : std::stoll(n_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected N or A:B");
  }
  for (const auto& f : fams) {
    const auto fam = parse_family(f);
    if (!fam || *fam == Family::manual) throw CLI::ValidationError("--family", "search family '" + f + "'");
    spec.families.push_back(*fam);
  }
  const SearchOutcome out = run_search(spec);
  print_records(out.records, format, true);
  if (explain) {
    for (const auto& d : out.diagnostics) std::cerr << "skipped " << d << '\n';
  }
  return 0;
}

std::string expected_string(const TableRow& row) {
  std::ostringstream os;
  os << "[[" << row.n << ", " << row.k << ", " << (row.mds ? "" : ">=") << row.d << "]]_" << row.args.q;
  return os.str();
}

int cmd_table(int id, Format format) {
  const auto results = regenerate_table(id);
  bool all = true;
  for (const auto& r : results) all = all && r.matched;

  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : results) {
        json row = {{"table", id},
                    {"expected", expected_string(r.row)},
                    {"generator", r.row.args.describe()},
                    {"reference", r.row.reference},
                    {"matched", r.matched}};
        if (!r.problem.empty()) row["problem"] = r.problem;
        if (r.built) row["record"] = to_json(r.built->params);
        arr.push_back(row);
      }
      std::cout << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "table,expected,generator,reference,matched,problem," << csv_header() << '\n';
      for (const auto& r : results) {
        std::cout << id << ',' << csv_quote(expected_string(r.row)) << ',' << csv_quote(r.row.args.describe()) << ','
                  << csv_quote(r.row.reference) << ',' << (r.matched ? "true" : "false") << ',' << csv_quote(r.problem)
                  << ',';
        if (r.built) std::cout << to_csv(r.built->params);
        std::cout << '\n';
      }
      break;
    case Format::text: {
      std::cout << "Table " << id << ": new codes regenerated by the generators; reference column is static data\n";
      for (const auto& r : results) {
        std::cout << "  " << std::left << std::setw(24) << (r.built ? r.built->params.to_string() : expected_string(r.row))
                  << std::setw(40) << r.row.args.describe() << std::setw(48)
                  << (r.row.reference.empty() ? "---" : r.row.reference) << (r.matched ? "ok" : "MISMATCH");
        if (!r.problem.empty()) std::cout << " (" << r.problem << ')';
        std::cout << '\n';
      }
      break;
    }
  }
  if (!all) std::cerr << "table " << id << ": regeneration mismatch\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum BCH code constructions over cyclotomic cosets"};
  app.require_subcommand(1);
  Format format = Format::text;

  auto* cosets = app.add_subcommand("cosets", "List the q-ary cyclotomic cosets mod n");
  std::int64_t cq = 0, cn = 0;
  cosets->add_option("--q", cq, "Base field size")->required();
  cosets->add_option("--n", cn, "Modulus")->required()->check(CLI::PositiveNumber);
  add_format(cosets, format);

  CodeOptions construct_opts;
  auto* construct = app.add_subcommand("construct", "Build one quantum code");
  add_code_options(construct, construct_opts);
  construct->add_option("--verify-distance", construct_opts.verify_weight, "Run the distance oracle up to weight W");
  add_format(construct, format);

  CodeOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Build one quantum code and confirm its distance with the oracle");
  add_code_options(verify, verify_opts);
  verify->add_option("--verify-distance", verify_opts.verify_weight, "Search weight (default: d_lower)");
  add_format(verify, format);

  auto* search = app.add_subcommand("search", "Try every family parameter over a (q, n) grid");
  std::vector<std::int64_t> sq;
  std::string sn;
  std::vector<std::string> sf;
  bool explain = false;
  search->add_option("--q", sq, "Alphabet sizes")->required()->delimiter(',');
  search->add_option("--n", sn, "Length N or range A:B")->required();
  search->add_option("--family", sf, "Families to try (default: all four)")->delimiter(',');
  search->add_flag("--explain", explain, "Report rejected grid points on stderr");
  add_format(search, format);

  auto* table = app.add_subcommand("table", "Regenerate a code comparison table");
  int table_id = 0;
  table->add_option("--id", table_id, "Table 1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  add_format(table, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cosets) return cmd_cosets(cq, cn, format);
    if (*construct) return cmd_construct(construct_opts, format, false);
    if (*verify) return cmd_construct(verify_opts, format, true);
    if (*search) return cmd_search(sq, sn, sf, explain, format);
    if (*table) return cmd_table(table_id, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failed: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
