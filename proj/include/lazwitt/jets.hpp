#pragma once

#include <map>
#include <string>
#include <vector>

#include "lazwitt/polynomial.hpp"

namespace lazwitt {

// Order-m Hasse-Schmidt derivation algebra of a polynomial ring
// k[t_1..t_r]: free on the jet variables d^{[n]}t_j, so elements are
// plain polynomials. Base is Z or F_p.
struct JetRing {
  Domain base;
  std::vector<std::string> generators;
  long order = 0;  // m

  void validate_source(const Polynomial& f) const;
};

// d^{[n]}f via additivity and the divided Leibniz rule.
Polynomial hs_derive(const JetRing& jr, const Polynomial& f, long n);

// Element of A = k[t_1..t_r][pi]/(pi^{m+1}) as a coordinate vector.
struct TruncatedSeries {
  long order = 0;
  std::vector<Polynomial> coeffs;  // size order+1

  static TruncatedSeries zero(Domain d, long m);
  static TruncatedSeries constant(Domain d, long m, const mpz_class& c);
  // split a polynomial containing pi into coordinates; degrees > m drop
  static TruncatedSeries from_pi_polynomial(const Polynomial& f, long m);

  const Polynomial& at(long i) const;
  bool operator==(const TruncatedSeries& o) const;
  std::string to_text() const;
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_neg(const TruncatedSeries& a);

// d^{[n]} of a series: sum_{i<=n} d^{[n-i]}a_i
Polynomial dn_on_a(const JetRing& jr, const TruncatedSeries& a, long n);

// structure map of the universal residual perfection of A:
// a -> sum_n (sum_{i<=n} d^{[n-i]}a_i) pi^n, a ring homomorphism
TruncatedSeries phi_map(const JetRing& jr, const TruncatedSeries& a);
inline TruncatedSeries urp_structure_map(const JetRing& jr,
                                         const TruncatedSeries& a) {
  return phi_map(jr, a);
}

// the triple-sum reindexing identity behind multiplicativity of phi
bool lemma_identity_check(long n);

// Transpose of phi on jets of named A-elements: substitutes
// d^{[n]}a -> sum_{i<=n} d^{[n-i]}a_i; jets of plain k-generators are
// fixed, so the restriction to HS^m(k) is the identity.
Polynomial retraction_phibar(const JetRing& jr, const Polynomial& x,
                             const std::map<std::string, TruncatedSeries>&
                                 named_elements);

}  // namespace lazwitt
