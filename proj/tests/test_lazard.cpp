#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "lazwitt/lazard.hpp"
#include "lazwitt/serialize.hpp"

using namespace lazwitt;

namespace {

Polynomial fpoly(const std::string& text, long p) {
  return parse_polynomial(text, fp_domain(p));
}

}  // namespace

TEST_CASE("the constant p expands along the defining relation") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 4);
  LazardElement e = normalize(RawSeries::constant(prm, 2));
  CHECK(e.pi_coefficient(0).is_zero());
  CHECK(e.pi_coefficient(1) == fpoly("w1", 2));
  CHECK(e.pi_coefficient(2) == fpoly("w2", 2));
  CHECK(e.pi_coefficient(3) == fpoly("w3", 2));
  CHECK(e.to_text() == "w1*pi + w2*pi^2 + w3*pi^3");

  // twist moves into the omega exponents
  Params twisted = Params::make(2, 2, 1, std::nullopt, 3);
  LazardElement et = normalize(RawSeries::constant(twisted, 2));
  CHECK(et.pi_coefficient(1) == fpoly("w1^2", 2));
  CHECK(et.pi_coefficient(2) == fpoly("w2^2", 2));
}

TEST_CASE("p squared and the normalizer as a ring hom") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  LazardElement p2 = normalize(RawSeries::constant(prm, 4));
  CHECK(p2.pi_coefficient(0).is_zero());
  CHECK(p2.pi_coefficient(1).is_zero());
  CHECK(p2.pi_coefficient(2) == fpoly("w1^2", 2));

  LazardElement p1 = normalize(RawSeries::constant(prm, 2));
  CHECK(lz_mul(p1, p1) == p2);
}

TEST_CASE("constants and units") {
  Params prm = Params::make(3, 3, 0, std::nullopt, 3);
  CHECK(normalize(RawSeries::constant(prm, 1)) == lz_one(prm));
  CHECK(normalize(RawSeries::constant(prm, 0)).is_zero());
  LazardElement a = normalize(RawSeries::constant(prm, 7));
  CHECK(lz_add(a, lz_zero(prm)) == a);
}

TEST_CASE("pi-class products truncate at the precision") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 2);
  RawSeries s = RawSeries::zero(prm);
  s.coeffs[1] = parse_polynomial("X0", z_domain(2));
  LazardElement picls = normalize(s);
  CHECK(lz_mul(picls, picls).is_zero());
}

TEST_CASE("teichmuller lift basics") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  Domain fd = fp_domain(2);
  CHECK(teichmuller(Polynomial::zero(fd), prm).is_zero());
  CHECK(teichmuller(Polynomial::constant(fd, 1), prm) == lz_one(prm));

  // section property at pi^0
  LazardElement tx = teichmuller(fpoly("X0", 2), prm);
  CHECK(tx.pi_coefficient(0) == fpoly("X0", 2));

  // multiplicativity on the named example
  LazardElement tw = teichmuller(fpoly("w1", 2), prm);
  CHECK(lz_mul(tw, tw) == teichmuller(fpoly("w1^2", 2), prm));

  // a sum acquires pi-corrections but still starts at the input
  LazardElement ts = teichmuller(fpoly("X0 + Y0", 2), prm);
  CHECK(ts.pi_coefficient(0) == fpoly("X0 + Y0", 2));
  CHECK(ts.pi_coefficient(1) == fpoly("w1*X0^(1/2)*Y0^(1/2)", 2));
}

TEST_CASE("pi coefficient extraction") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  LazardElement p1 = normalize(RawSeries::constant(prm, 2));
  CHECK(p1.pi_coefficient(1) == fpoly("w1", 2));
  CHECK(lz_one(prm).pi_coefficient(1).is_zero());
  CHECK_THROWS_AS(p1.pi_coefficient(3), std::out_of_range);
  CHECK_THROWS_AS(p1.pi_coefficient(-1), std::out_of_range);

  // shift moves the teichmuller lift up one degree
  LazardElement shifted = shift_pi(teichmuller(fpoly("X0", 2), prm), 1);
  CHECK(shifted.pi_coefficient(0).is_zero());
  CHECK(shifted.pi_coefficient(1) == fpoly("X0", 2));
}

TEST_CASE("pi-expansion coordinates round trip") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 4);
  LazardElement p1 = normalize(RawSeries::constant(prm, 2));
  std::vector<Polynomial> coords = pi_expansion_coordinates(p1);
  CHECK(coords[0].is_zero());
  CHECK(coords[1] == fpoly("w1^2", 2));
  CHECK(coords[2] == fpoly("w2^4", 2));
  CHECK(coords[3] == fpoly("w3^8", 2));
  CHECK(pi_expansion_value(prm, coords) == p1);
}

TEST_CASE("lazard elements serialize deterministically") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  LazardElement e = normalize(RawSeries::constant(prm, 6));
  std::string once = canonical_json(lazard_to_json(e));
  CHECK(once == canonical_json(lazard_to_json(e)));
  nlohmann::json j = nlohmann::json::parse(once);
  CHECK(params_from_json(j.at("params")) == prm);
  CHECK(polynomial_from_json(j.at("coeffs")[1]) == e.pi_coefficient(1));
}

TEST_CASE("params are validated") {
  CHECK_THROWS_AS(Params::make(4, 4, 0, std::nullopt, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Params::make(2, 3, 0, std::nullopt, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Params::make(2, 2, 0, std::nullopt, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Params::make(2, 2, 0, 1, 3), std::invalid_argument);
  CHECK_NOTHROW(Params::make(2, 2, 0, 1, 2));
}
