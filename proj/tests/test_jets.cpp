#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "lazwitt/jets.hpp"
#include "lazwitt/lazjet.hpp"

using namespace lazwitt;

namespace {

Polynomial zpoly(const std::string& text) {
  return parse_polynomial(text, z_domain(2));
}

Polynomial fpoly(const std::string& text, long p) {
  return parse_polynomial(text, fp_domain(p));
}

}  // namespace

TEST_CASE("order zero is the inclusion") {
  JetRing jr{z_domain(2), {"t1", "t2"}, 3};
  Polynomial f = zpoly("t1^2*t2 + 3*t1 + 5");
  CHECK(hs_derive(jr, f, 0) == f);
}

TEST_CASE("divided Leibniz rule on the named examples") {
  JetRing jr{z_domain(2), {"t1", "t2"}, 3};
  CHECK(hs_derive(jr, zpoly("t1*t2"), 1) ==
        zpoly("t1*d1:t2 + d1:t1*t2"));
  CHECK(hs_derive(jr, zpoly("t1^2"), 2) ==
        zpoly("2*t1*d2:t1 + d1:t1^2"));
  CHECK(hs_derive(jr, zpoly("7"), 2).is_zero());
  CHECK(hs_derive(jr, zpoly("7"), 0) == zpoly("7"));
  CHECK_THROWS_AS(hs_derive(jr, zpoly("t1"), 4), std::out_of_range);
}

TEST_CASE("series coordinates drive d^{[n]} on A") {
  JetRing jr{z_domain(2), {"t1"}, 3};
  // a = pi^s: d^{[n]} a = delta_{ns}
  for (long s = 0; s <= 3; ++s) {
    TruncatedSeries a = TruncatedSeries::zero(jr.base, 3);
    a.coeffs[s] = Polynomial::constant(jr.base, 1);
    for (long n = 0; n <= 3; ++n) {
      Polynomial expect = n == s ? Polynomial::constant(jr.base, 1)
                                 : Polynomial::zero(jr.base);
      CHECK(dn_on_a(jr, a, n) == expect);
    }
  }
  // constants from k keep their own jets
  TruncatedSeries c = TruncatedSeries::zero(jr.base, 3);
  c.coeffs[0] = zpoly("t1^2");
  CHECK(dn_on_a(jr, c, 2) == hs_derive(jr, zpoly("t1^2"), 2));
  // a = t1*pi at n = 2
  TruncatedSeries tp = TruncatedSeries::zero(jr.base, 3);
  tp.coeffs[1] = zpoly("t1");
  CHECK(dn_on_a(jr, tp, 2) == zpoly("d1:t1"));
}

TEST_CASE("phi on the generator and on pi") {
  JetRing jr{z_domain(2), {"t1"}, 2};
  TruncatedSeries t1 = TruncatedSeries::zero(jr.base, 2);
  t1.coeffs[0] = zpoly("t1");
  TruncatedSeries image = phi_map(jr, t1);
  CHECK(image.at(0) == zpoly("t1"));
  CHECK(image.at(1) == zpoly("d1:t1"));
  CHECK(image.at(2) == zpoly("d2:t1"));
  CHECK(image.to_text() == "t1 + d1:t1*pi + d2:t1*pi^2");

  TruncatedSeries pi1 = TruncatedSeries::zero(jr.base, 2);
  pi1.coeffs[1] = Polynomial::constant(jr.base, 1);
  CHECK(phi_map(jr, pi1) == pi1);

  // t1*pi at m=2: t1*pi + d1:t1*pi^2
  TruncatedSeries tp = TruncatedSeries::zero(jr.base, 2);
  tp.coeffs[1] = zpoly("t1");
  TruncatedSeries tp_img = phi_map(jr, tp);
  CHECK(tp_img.at(0).is_zero());
  CHECK(tp_img.at(1) == zpoly("t1"));
  CHECK(tp_img.at(2) == zpoly("d1:t1"));

  CHECK(phi_map(jr, TruncatedSeries::constant(jr.base, 2, 1)) ==
        TruncatedSeries::constant(jr.base, 2, 1));
}

TEST_CASE("phi is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(21);
  for (Domain base : {z_domain(2), fp_domain(3)}) {
    JetRing jr{base, {"t1", "t2"}, 3};
    auto random_series = [&]() {
      TruncatedSeries s = TruncatedSeries::zero(base, 3);
      for (long i = 0; i <= 3; ++i) {
        Polynomial f(base);
        for (int k = 0; k < 2; ++k) {
          Monomial m;
          for (long d = rng() % 3; d > 0; --d)
            m = m.times(Monomial::of(Variable::gen(rng() % 2 ? "t1" : "t2")),
                        base.p);
          mpz_class c = base.is_fp() ? mpz_class(1 + rng() % (base.p - 1))
                                     : mpz_class(static_cast<long>(rng() % 7)) - 3;
          f.add_term(m, c);
        }
        s.coeffs[i] = f;
      }
      return s;
    };
    for (int i = 0; i < 40; ++i) {
      TruncatedSeries a = random_series();
      TruncatedSeries b = random_series();
      CHECK(phi_map(jr, ts_add(a, b)) ==
            ts_add(phi_map(jr, a), phi_map(jr, b)));
      CHECK(phi_map(jr, ts_mul(a, b)) ==
            ts_mul(phi_map(jr, a), phi_map(jr, b)));
    }
  }
}

TEST_CASE("the reindexing identity holds for small n") {
  for (long n = 0; n <= 6; ++n) CHECK(lemma_identity_check(n));
}

TEST_CASE("retraction fixes HS(k) and kills pi jets") {
  JetRing jr{fp_domain(2), {"t1", "t2"}, 3};
  Polynomial hk = fpoly("d2:t1*d1:t2 + t1*d3:t2 + t2", 2);
  CHECK(retraction_phibar(jr, hk, {}) == hk);

  // named element a = pi^2: d^{[n]}a maps to delta_{n2}
  TruncatedSeries pi2 = TruncatedSeries::zero(jr.base, 3);
  pi2.coeffs[2] = Polynomial::constant(jr.base, 1);
  std::map<std::string, TruncatedSeries> named{{"a", pi2}};
  CHECK(retraction_phibar(jr, fpoly("d2:a", 2), named) ==
        Polynomial::constant(jr.base, 1));
  CHECK(retraction_phibar(jr, fpoly("d1:a", 2), named).is_zero());
  CHECK(retraction_phibar(jr, fpoly("d3:a", 2), named).is_zero());

  // d^{[2]}(t1 + pi) -> d2:t1
  TruncatedSeries mix = TruncatedSeries::zero(jr.base, 3);
  mix.coeffs[0] = fpoly("t1", 2);
  mix.coeffs[1] = Polynomial::constant(jr.base, 1);
  std::map<std::string, TruncatedSeries> named2{{"b", mix}};
  CHECK(retraction_phibar(jr, fpoly("d2:b", 2), named2) == fpoly("d2:t1", 2));
}

TEST_CASE("jet coordinates of the distinguished leaves") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  // d^{[n]} pi = delta_{n1}
  auto pi = JetExpr::pi();
  CHECK(lazardian_jet_relations(*pi, 0, prm).is_zero());
  CHECK(lazardian_jet_relations(*pi, 1, prm) ==
        Polynomial::constant(fp_domain(2), 1));
  CHECK(lazardian_jet_relations(*pi, 2, prm).is_zero());

  // free generator: d^{[n]}x is the jet variable
  auto x = JetExpr::gen("x");
  CHECK(lazardian_jet_relations(*x, 0, prm) == fpoly("x", 2));
  CHECK(lazardian_jet_relations(*x, 2, prm) == fpoly("d2:x", 2));

  // omega leaf: concentrated at order zero
  auto w = JetExpr::omega(1);
  CHECK(lazardian_jet_relations(*w, 0, prm) == fpoly("w1", 2));
  CHECK(lazardian_jet_relations(*w, 1, prm).is_zero());
}

TEST_CASE("first-order jet relations at m = 1") {
  for (long p : {2L, 3L}) {
    Params p1 = Params::make(p, p, 0, 1, 2);
    Domain fd = fp_domain(p);
    auto sum = JetExpr::add(JetExpr::gen("x"), JetExpr::gen("y"));
    Polynomial d1 = lazardian_jet_relations(*sum, 1, p1);
    Polynomial cbar = reduce_mod_p(cq_polynomial(p, p), p);
    Polynomial cxy = substitute(
        cbar, [&](const Variable& v) -> std::optional<Polynomial> {
          if (v.tag == VarTag::X)
            return Polynomial::variable(fd, Variable::gen("x"));
          if (v.tag == VarTag::Y)
            return Polynomial::variable(fd, Variable::gen("y"));
          return std::nullopt;
        });
    Polynomial expected =
        fpoly("d1:x + d1:y", p) +
        Polynomial::monomial(
            fd, Monomial::of(Variable::omega(1), PExponent::integer(p)), 1) *
            cxy;
    CHECK(d1 == expected);

    // dp = w^p and d(pi) = 1
    CHECK(lazardian_jet_relations(*JetExpr::integer(p), 1, p1) ==
          Polynomial::monomial(
              fd, Monomial::of(Variable::omega(1), PExponent::integer(p)),
              1));
    CHECK(lazardian_jet_relations(*JetExpr::pi(), 1, p1) ==
          Polynomial::constant(fd, 1));

    // multiplicative relation d(xy) = x^p dy + y^p dx
    auto prod = JetExpr::mul(JetExpr::gen("x"), JetExpr::gen("y"));
    std::ostringstream os;
    os << "x^" << p << "*d1:y + d1:x*y^" << p;
    CHECK(lazardian_jet_relations(*prod, 1, p1) == fpoly(os.str(), p));
  }
}

TEST_CASE("eta-prime agrees with the jet rewriting and is a morphism") {
  Params prm = Params::make(2, 2, 0, std::nullopt, 3);
  auto x = JetExpr::gen("x");
  auto y = JetExpr::gen("y");
  auto expr = JetExpr::mul(JetExpr::add(x, JetExpr::pi()), y);
  WittVector w = eta_prime(*expr, prm);
  for (long n = 0; n < 3; ++n)
    CHECK(eps_prime(w, n) == lazardian_jet_relations(*expr, n, prm));

  CHECK(eta_prime(*JetExpr::pi(), prm) ==
        pi_vector(jet_carrier_ring(prm), 0, 3));

  // eta'(x*y) = eta'(x) * eta'(y)
  CHECK(eta_prime(*JetExpr::mul(x, y), prm) ==
        witt_mul(eta_prime(*x, prm), eta_prime(*y, prm)));
  CHECK(eta_prime(*JetExpr::add(x, y), prm) ==
        witt_add(eta_prime(*x, prm), eta_prime(*y, prm)));
}
