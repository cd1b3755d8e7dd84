#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <random>

#include "lazwitt/serialize.hpp"
#include "lazwitt/witt.hpp"

using namespace lazwitt;

namespace {

Polynomial fpoly(const std::string& text, long p) {
  return parse_polynomial(text, fp_domain(p));
}

WittVector vec(std::shared_ptr<const ResidueRing> ring, long t,
               const std::vector<std::string>& coords) {
  WittVector v = witt_zero(ring, t, static_cast<long>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    v.coords[i] = ring->reduce(parse_polynomial(coords[i], ring->domain()));
  return v;
}

}  // namespace

TEST_CASE("additive and multiplicative identities") {
  auto ring = ResidueRing::perfected(2, 2, {"u"});
  WittVector a = vec(ring, 0, {"u", "w1", "u^2 + w2"});
  CHECK(witt_add(a, witt_zero(ring, 0, 3)) == a);
  CHECK(witt_mul(a, witt_one(ring, 0, 3)) == a);
  CHECK(witt_add(a, witt_neg(a)) == witt_zero(ring, 0, 3));
}

TEST_CASE("teichmuller scaling law") {
  auto ring = ResidueRing::perfected(2, 2, {"u", "v"});
  Polynomial alpha = fpoly("u", 2);
  WittVector b = vec(ring, 0, {"v", "w1", "v^2"});
  WittVector lhs = witt_mul(teichmuller_section(alpha, ring, 0, 3), b);
  // [u](b_i) = (u^{2^i} b_i)
  WittVector expect = vec(ring, 0, {"u*v", "u^2*w1", "u^4*v^2"});
  CHECK(lhs == expect);
}

TEST_CASE("products of section elements stay concentrated") {
  auto ring = ResidueRing::perfected(3, 3, {"u", "v"});
  WittVector x = teichmuller_section(fpoly("u", 3), ring, 0, 3);
  WittVector y = teichmuller_section(fpoly("v", 3), ring, 0, 3);
  CHECK(witt_mul(x, y) == teichmuller_section(fpoly("u*v", 3), ring, 0, 3));
}

TEST_CASE("structure map sends the generators as stated") {
  auto ring = ResidueRing::universal(2, 2);
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);

  RawSeries omega = RawSeries::zero(prm);
  omega.coeffs[0] = parse_polynomial("w2", z_domain(2));
  WittVector womega = structure_map(omega, ring, 3);
  CHECK(womega == vec(ring, 0, {"w2", "0", "0"}));

  RawSeries pi_series = RawSeries::zero(prm);
  pi_series.coeffs[1] = parse_polynomial("1", z_domain(2));
  CHECK(structure_map(pi_series, ring, 3) == pi_vector(ring, 0, 3));

  // p = witt-sum of p ones: residue zero, next coordinate w1^q
  WittVector wp = structure_map(RawSeries::constant(prm, 2), ring, 3);
  CHECK(wp.at(0).is_zero());
  CHECK(wp.at(1) == fpoly("w1^2", 2));

  // oracle: coordinates recombine to normalize(p) through the pi-expansion
  CHECK(pi_expansion_value(prm, wp.coords) ==
        normalize(RawSeries::constant(prm, 2)));

  RawSeries bad = RawSeries::zero(prm);
  bad.coeffs[0] = parse_polynomial("X0", z_domain(2));
  CHECK_THROWS_AS(structure_map(bad, ring, 3), std::invalid_argument);
}

TEST_CASE("frobenius and verschiebung move the twist") {
  auto ring = ResidueRing::perfected(2, 2, {"u"});
  WittVector a = vec(ring, 0, {"u", "w1*u"});
  WittVector fa = frobenius_op(a);
  CHECK(fa.t == 1);
  CHECK(fa.at(0) == fpoly("u^2", 2));
  CHECK(fa.at(1) == fpoly("w1^2*u^2", 2));

  WittVector va = verschiebung(a);
  CHECK(va.t == -1);
  CHECK(va.window() == 3);
  CHECK(va.at(0).is_zero());
  CHECK(va.at(1) == a.at(0));

  CHECK(frobenius_op(qth_root_op(a)) == a);
}

TEST_CASE("pi iota equals F after V") {
  std::mt19937_64 rng(3);
  auto ring = ResidueRing::perfected(2, 2, {"u", "v"});
  for (int i = 0; i < 20; ++i) {
    WittVector a = vec(ring, 0,
                       {i % 2 ? "u" : "u + v", "w1*v", i % 3 ? "v^2" : "u*v"});
    WittVector lhs = witt_mul(pi_vector(ring, 0, 4), iota(a));
    WittVector rhs = frobenius_op(verschiebung(a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact sequence bookkeeping") {
  auto ring = ResidueRing::perfected(2, 2, {"u"});
  WittVector a = vec(ring, 0, {"u", "w1", "u*w1"});
  WittVector v2 = verschiebung(verschiebung(a));
  CHECK(v2.t == -2);
  CHECK(truncate(v2, 2) == witt_zero(ring, -2, 2));
  CHECK(shift_down(v2, 2) == a);
  CHECK(truncate(a, 3) == a);
}

TEST_CASE("unit and counit on a perfect ring") {
  auto ring = ResidueRing::perfected(2, 2, {"u", "v"});
  Polynomial alpha = fpoly("u + w1*v", 2);
  WittVector ea = unit_eta(alpha, ring, 0, 3);
  CHECK(uw_residue(ea) == alpha);

  // (0, a1, a2) = pi * (a1^{1/q}, a2^{1/q}, *)
  WittVector a = vec(ring, 0, {"0", "u^2", "v^4*w1^2"});
  WittVector c = vec(ring, 0, {"u", "v^2*w1", "0"});
  CHECK(witt_mul(pi_vector(ring, 0, 3), c) == a);

  WittVector b = vec(ring, 0, {"u", "v", "u*v"});
  CHECK(counit_epsilon_expansion(b) == b);
  CHECK(counit_epsilon_expansion(teichmuller_section(alpha, ring, 0, 3)) ==
        teichmuller_section(alpha, ring, 0, 3));
  CHECK(counit_epsilon_expansion(pi_vector(ring, 0, 3)) ==
        pi_vector(ring, 0, 3));
}

TEST_CASE("eta and epsilon are unavailable on imperfect rings") {
  auto ring = ResidueRing::with_nilpotent(2, 2, {"x"}, {{"x", 2}});
  CHECK_FALSE(ring->is_perfect());
  WittVector a = vec(ring, 0, {"x", "0"});
  CHECK_THROWS_AS(counit_epsilon_expansion(a), std::domain_error);
  CHECK_THROWS_AS(unit_eta(fpoly("x", 2), ring, 0, 2), std::domain_error);
  CHECK_THROWS_AS(qth_root_op(a), std::domain_error);
}

TEST_CASE("nilpotency relations truncate products") {
  auto ring = ResidueRing::with_nilpotent(2, 2, {"x"}, {{"x", 2}});
  WittVector a = vec(ring, 0, {"x", "x"});
  WittVector sq = witt_mul(a, a);
  CHECK(sq.at(0).is_zero());  // x^2 = 0
  CHECK(ring->reduce(fpoly("x^2 + x", 2)) == fpoly("x", 2));
}

TEST_CASE("omega specialization reaches the classical polynomials") {
  // w1 = 1, all other w_i = 0: Q1+ degenerates to the classical
  // S1 = X1 + Y1 + C_q(X0, Y0)
  Domain fd = fp_domain(2);
  auto ring = ResidueRing::specialized(
      2, 2, {"a", "b"}, {{1, Polynomial::constant(fd, 1)}}, true);
  WittVector x = vec(ring, 0, {"a", "0"});
  WittVector y = vec(ring, 0, {"b", "0"});
  WittVector s = witt_add(x, y);
  CHECK(s.at(0) == fpoly("a + b", 2));
  CHECK(s.at(1) == fpoly("a*b", 2));  // C_2 mod 2 at (a, b)
}

TEST_CASE("naturality of the section, F and V under generator maps") {
  auto from = ResidueRing::perfected(2, 2, {"u", "v"});
  auto to = ResidueRing::perfected(2, 2, {"z"});
  RingHom h{from, to,
            {{"u", fpoly("z^2", 2)}, {"v", fpoly("z + w1", 2)}}};
  WittVector a = vec(from, 0, {"u", "v", "u*v"});
  WittVector b = vec(from, 0, {"v", "u^2", "w1"});

  CHECK(apply_hom(h, witt_add(a, b)) ==
        witt_add(apply_hom(h, a), apply_hom(h, b)));
  CHECK(apply_hom(h, witt_mul(a, b)) ==
        witt_mul(apply_hom(h, a), apply_hom(h, b)));
  CHECK(apply_hom(h, frobenius_op(a)) == frobenius_op(apply_hom(h, a)));
  CHECK(apply_hom(h, verschiebung(a)) == verschiebung(apply_hom(h, a)));
  CHECK(apply_hom(h, teichmuller_section(fpoly("u", 2), from, 0, 3)) ==
        teichmuller_section(h.apply(fpoly("u", 2)), to, 0, 3));
}

TEST_CASE("witt vectors round trip through the JSON schema") {
  Domain fd = fp_domain(2);
  std::vector<std::shared_ptr<const ResidueRing>> rings{
      ResidueRing::perfected(2, 2, {"u", "v"}),
      ResidueRing::with_nilpotent(2, 2, {"x"}, {{"x", 2}}),
      ResidueRing::specialized(2, 2, {"a"},
                               {{1, Polynomial::constant(fd, 1)}}, true)};
  for (auto& ring : rings) {
    WittVector v = witt_zero(ring, -1, 3);
    v.coords[0] = ring->reduce(
        parse_polynomial(ring->generators[0], ring->domain()));
    nlohmann::json j = witt_to_json(v);
    WittVector back = witt_from_json(j);
    CHECK(back == v);
    CHECK(canonical_json(witt_to_json(back)) == canonical_json(j));
  }
}

TEST_CASE("operand validation") {
  auto r1 = ResidueRing::perfected(2, 2, {"u"});
  auto r2 = ResidueRing::perfected(2, 2, {"z"});
  WittVector a = vec(r1, 0, {"u", "0"});
  WittVector b = vec(r2, 0, {"z", "0"});
  CHECK_THROWS_AS(witt_add(a, b), std::invalid_argument);
  WittVector c = vec(r1, 1, {"u", "0"});
  CHECK_THROWS_AS(witt_add(a, c), std::invalid_argument);
  WittVector d = vec(r1, 0, {"u"});
  CHECK_THROWS_AS(witt_add(a, d), std::invalid_argument);
}
