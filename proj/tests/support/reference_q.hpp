#pragma once

// Test-only oracle for the arithmetic polynomials: checks the defining
// congruence  sum_{i<=n} [Q_i(X,Y)^{q^{-i}}] pi^i == A * B  mod pi^{n+1}
// directly, with every multiplicative lift produced by the teichmuller
// routine (canonical lift of the deep Frobenius root, powered back). No
// shared code with the P-lift extraction shortcut inside QTable::compute.

#include "lazwitt/lazard.hpp"
#include "lazwitt/qpolys.hpp"

namespace lazwitt::testing {

inline bool q_defining_congruence_holds(WittOp op, long n, long p, long q,
                                        long t) {
  Params prm = Params::make(p, q, t, std::nullopt, n + 1);
  Domain zd = z_domain(p);
  int e = prm.e();

  RawSeries araw = RawSeries::zero(prm);
  RawSeries braw = RawSeries::zero(prm);
  for (long i = 0; i <= n; ++i) {
    PExponent exp = PExponent::one().times_p_power(static_cast<int>(-e * i), p);
    araw.coeffs[i] =
        Polynomial::monomial(zd, Monomial::of(Variable::x(i), exp), 1);
    braw.coeffs[i] =
        Polynomial::monomial(zd, Monomial::of(Variable::y(i), exp), 1);
  }
  LazardElement lhs = op == WittOp::Add
                          ? lz_add(normalize(araw), normalize(braw))
                          : lz_mul(normalize(araw), normalize(braw));

  LazardElement rhs = lz_zero(prm);
  for (long i = 0; i <= n; ++i) {
    const Polynomial& qi = compute_q(op, i, p, q, t);
    Polynomial root = frobenius(qi, q, -i);
    rhs = lz_add(rhs, teichmuller_shifted(root, prm, i));
  }
  return lhs == rhs;
}

}  // namespace lazwitt::testing
