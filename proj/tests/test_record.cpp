#include <doctest.h>

#include <vector>

#include "qbch/errors.hpp"
#include "qbch/record.hpp"
#include "qbch/verify.hpp"

using namespace qbch;

namespace {

std::vector<QuantumParams> samples() {
  std::vector<QuantumParams> out;
  out.push_back(construct_css_II(7, 19, 1).params);
  out.push_back(construct_steane_III(5, 31, 3).params);
  out.push_back(construct_hermitian_IV(5, 312, 3).params);
  Construction verified = construct_hermitian_prime(5, 13, 1);
  verify_distance(verified, 3);
  out.push_back(verified.params);
  QuantumParams odd = construct_css_I(7, 24, 4).params;
  odd.construction = "quoted \"text\", with commas\nand a newline";
  odd.checks.oracle = "a, b";
  out.push_back(odd);
  return out;
}

}  // namespace

TEST_CASE("JSON round trip") {
  for (const QuantumParams& p : samples()) {
    CAPTURE(p.to_string());
    const nlohmann::json j = to_json(p);
    CHECK(params_from_json(j) == p);
    CHECK(params_from_json(nlohmann::json::parse(j.dump())) == p);
    CHECK(j.at("q") == p.q);
    CHECK(j.at("k") == p.k);
  }
}

TEST_CASE("JSON omits absent values") {
  const QuantumParams p = construct_hermitian_IV(5, 312, 3).params;
  const nlohmann::json j = to_json(p);
  CHECK_FALSE(j.contains("d_exact"));
  CHECK_FALSE(j.contains("defining_set_c2"));
  CHECK_FALSE(j.at("checks").contains("oracle"));
  CHECK(j.at("family") == "hermitian-IV");
  CHECK(j.at("formula_k") == 298);
  CHECK(j.dump().find("null") == std::string::npos);
}

TEST_CASE("CSV round trip agrees with JSON") {
  const std::string header = csv_header();
  CHECK(header.rfind("family,q,n,k,d_lower,d_exact,mds", 0) == 0);
  for (const QuantumParams& p : samples()) {
    CAPTURE(p.to_string());
    const std::string line = to_csv(p);
    CHECK(params_from_csv(line) == p);
    CHECK(params_from_csv(line) == params_from_json(to_json(p)));
  }
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"q": 5})")), DomainError);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"([1, 2])")), DomainError);
  CHECK_THROWS_AS(params_from_csv("css-II,7"), DomainError);
  CHECK_THROWS_AS(params_from_csv("\"unterminated"), DomainError);
}

TEST_CASE("text block") {
  Construction c = construct_hermitian_prime(5, 13, 1);
  verify_distance(c, 3);
  const std::string text = to_text(c.params);
  CHECK(text.find("[[13, 9, 3]]_5") != std::string::npos);
  CHECK(text.find("MDS") != std::string::npos);
}
