#include "qbch/tables.hpp"

#include "qbch/errors.hpp"

namespace qbch {

namespace {

GeneratorArgs args(Family f, std::int64_t q, std::int64_t n) {
  GeneratorArgs a;
  a.family = f;
  a.q = q;
  a.n = n;
  return a;
}
GeneratorArgs with_r(Family f, std::int64_t q, std::int64_t n, int r) {
  GeneratorArgs a = args(f, q, n);
  a.r = r;
  return a;
}
GeneratorArgs with_c(Family f, std::int64_t q, std::int64_t n, int c) {
  GeneratorArgs a = args(f, q, n);
  a.c = c;
  return a;
}
GeneratorArgs css_ii(std::int64_t q, std::int64_t n, int r) { return with_r(Family::css_II, q, n, r); }
GeneratorArgs steane_prime(std::int64_t q, std::int64_t n, int r) { return with_r(Family::steane_III, q, n, r); }
GeneratorArgs steane_c(std::int64_t q, std::int64_t n, int c) { return with_c(Family::steane_III, q, n, c); }
GeneratorArgs herm_prime(std::int64_t q, std::int64_t n, int r) { return with_r(Family::hermitian_IV, q, n, r); }
GeneratorArgs herm_c(std::int64_t q, std::int64_t n, int c) { return with_c(Family::hermitian_IV, q, n, c); }
GeneratorArgs herm_manual(std::int64_t q, std::int64_t n, Residue first, Residue last) {
  GeneratorArgs a = args(Family::manual, q, n);
  a.scheme = Scheme::hermitian;
  for (Residue s = first; s <= last; ++s) a.cosets.push_back(s);
  return a;
}

std::vector<TableRow> build_rows(int id) {
  std::vector<TableRow> rows;
  auto add = [&](GeneratorArgs a, std::int64_t n, std::int64_t k, int d, std::string ref, bool mds = false,
                 std::optional<int> verify = std::nullopt) {
    rows.push_back({.table = id, .args = std::move(a), .n = n, .k = k, .d = d, .mds = mds,
                    .reference = std::move(ref), .verify_weight = verify});
  };
  switch (id) {
    case 1:
      add(css_ii(3, 11, 1), 11, 1, 4, "---", false, 4);
      add(css_ii(3, 13, 2), 13, 1, 4, "---", false, 4);
      add(css_ii(3, 1093, 1), 1093, 1079, 3, "[[1093, 1065, >=3]]_3");
      add(css_ii(5, 31, 2), 31, 19, 4, "[[31, 13, >=4]]_5");
      add(css_ii(5, 31, 3), 31, 13, 5, "[[31, 7, >=5]]_5");
      add(css_ii(5, 71, 1), 71, 61, 3, "[[71, 51, >=3]]_5");
      add(css_ii(5, 71, 2), 71, 51, 4, "[[71, 41, >=4]]_5");
      add(css_ii(8, 73, 2), 73, 61, 4, "[[73, 55, >=4]]_8");
      add(css_ii(8, 73, 3), 73, 55, 5, "[[73, 49, >=5]]_8");
      add(css_ii(8, 73, 4), 73, 49, 6, "[[73, 43, >=6]]_8");
      add(css_ii(8, 73, 5), 73, 43, 7, "[[73, 37, >=7]]_8");
      break;
    case 2:
      add(css_ii(5, 31, 2), 31, 19, 4, "[[31, 16, >=4]]_5: [31, 22, 4]_5, [31, 25, 3]_5");
      add(css_ii(5, 31, 3), 31, 13, 5, "[[31, 10, >=5]]_5: [31, 19, 5]_5, [31, 22, 4]_5");
      add(css_ii(8, 73, 2), 73, 61, 4, "[[73, 58, >=4]]_8: [73, 64, 4]_8, [73, 67, 3]_8");
      add(css_ii(8, 73, 3), 73, 55, 5, "[[73, 52, >=5]]_8: [73, 61, 5]_8, [73, 64, 4]_8");
      add(css_ii(8, 73, 4), 73, 49, 6, "[[73, 46, >=6]]_8: [73, 58, 6]_8, [73, 61, 5]_8");
      add(css_ii(8, 73, 5), 73, 43, 7, "[[73, 40, >=7]]_8: [73, 55, 7]_8, [73, 58, 6]_8");
      break;
    case 3:
      add(steane_prime(5, 31, 2), 31, 22, 4, "[[31, 16, >=4]]_5");
      add(steane_prime(5, 31, 3), 31, 16, 5, "[[31, 10, >=5]]_5");
      add(steane_prime(5, 71, 2), 71, 56, 4, "[[71, 46, >=4]]_5");
      add(steane_prime(8, 73, 2), 73, 64, 4, "[[73, 58, >=4]]_8");
      add(steane_prime(8, 73, 3), 73, 58, 5, "[[73, 52, >=5]]_8");
      add(steane_c(9, 40, 1), 40, 36, 3, "", true, 3);
      add(steane_c(11, 60, 1), 60, 56, 3, "", true, 3);
      break;
    case 4:
      add(herm_prime(4, 17, 1), 17, 13, 3, "", true, 3);
      add(herm_prime(4, 17, 2), 17, 9, 5, "", true, 5);
      add(herm_prime(5, 13, 1), 13, 9, 3, "", true, 3);
      for (int c = 3; c <= 10; ++c) {
        const std::int64_t k = 312 - 4 * c - 2;
        add(herm_c(5, 312, c), 312, k, c + 2,
            "[[312, " + std::to_string(k - 2) + ", >=" + std::to_string(c + 2) + "]]_5");
      }
      {
        const std::int64_t ks[] = {128, 122, 116, 114, 108, 102, 100};
        const std::int64_t refs[] = {120, 114, 108, 102, 96, 90, 84};
        for (int d = 5; d <= 11; ++d) {
          add(herm_manual(7, 144, 3, d + 1), 144, ks[d - 5], d,
              "[[144, " + std::to_string(refs[d - 5]) + ", >=" + std::to_string(d) + "]]_7");
        }
      }
      break;
    default:
      throw DomainError("table id must be 1, 2, 3 or 4");
  }
  return rows;
}

void check_row(RowResult& res, bool run_oracle) {
  const TableRow& row = res.row;
  res.built = generate(row.args);
  QuantumParams& p = res.built->params;
  if (p.n != row.n || p.k != row.k) {
    res.problem = "regenerated " + p.to_string();
    return;
  }
  if (p.d_lower < row.d) {
    res.problem = "designed distance " + std::to_string(p.d_lower) + " below " + std::to_string(row.d);
    return;
  }
  if (run_oracle && row.verify_weight) {
    res.verified = verify_distance(*res.built, *row.verify_weight);
    if (!res.verified->passed) {
      res.problem = "oracle: " + res.verified->status;
      return;
    }
  }
  if (row.mds) {
    if (res.built->scheme == Scheme::steane) {
      if (row.k + 2 * row.d != row.n + 2) {
        res.problem = "tabulated MDS parameters miss the Singleton bound";
        return;
      }
    } else if (run_oracle && (!p.d_exact || *p.d_exact != row.d || !p.mds)) {
      res.problem = "oracle did not confirm MDS distance " + std::to_string(row.d);
      return;
    }
  }
  res.matched = true;
}

}  // namespace

const std::vector<TableRow>& table_rows(int id) {
  static const std::vector<std::vector<TableRow>> all = {build_rows(1), build_rows(2), build_rows(3), build_rows(4)};
  if (id < 1 || id > 4) throw DomainError("table id must be 1, 2, 3 or 4");
  return all[static_cast<std::size_t>(id - 1)];
}

std::vector<RowResult> regenerate_table(int id, bool run_oracle) {
  const auto& rows = table_rows(id);
  std::vector<RowResult> out(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].row = rows[i];
    try {
      check_row(out[i], run_oracle);
    } catch (const std::exception& e) {
      out[i].problem = e.what();
    }
  }
  return out;
}

}  // namespace qbch
