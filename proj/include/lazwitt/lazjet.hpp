#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lazwitt/params.hpp"
#include "lazwitt/witt.hpp"

namespace lazwitt {

// Expression over a free algebra on named generators adjoined to Lazard's
// ring: leaves are generators, omegas, pi and integers; nodes are + and x.
struct JetExpr {
  enum class Kind { Gen, Omega, Pi, Int, Add, Mul };
  Kind kind = Kind::Int;
  std::string name;       // Gen
  long index = 0;         // Omega
  long value = 0;         // Int
  std::shared_ptr<const JetExpr> lhs, rhs;

  static std::shared_ptr<const JetExpr> gen(std::string name);
  static std::shared_ptr<const JetExpr> omega(long i);
  static std::shared_ptr<const JetExpr> pi();
  static std::shared_ptr<const JetExpr> integer(long v);
  static std::shared_ptr<const JetExpr> add(std::shared_ptr<const JetExpr> a,
                                            std::shared_ptr<const JetExpr> b);
  static std::shared_ptr<const JetExpr> mul(std::shared_ptr<const JetExpr> a,
                                            std::shared_ptr<const JetExpr> b);
  std::string to_text() const;
};

// The full jet vector (d^{[0]}E, ..., d^{[N-1]}E) by direct rewriting:
// generators produce free jet variables, sums/products expand through the
// Q polynomials, constants through their pi-expansion coordinates.
// Coefficients live in F_p[w]^pf with jets of generators adjoined.
std::vector<Polynomial> jet_coordinates(const JetExpr& e, const Params& prm);

// d^{[n]}E, the n-th entry of the jet vector
Polynomial lazardian_jet_relations(const JetExpr& e, long n,
                                   const Params& prm);

// unit: E -> (d^{[n]}E)_n evaluated with witt operations over the free
// jet carrier ring
WittVector eta_prime(const JetExpr& e, const Params& prm);

// counit on concrete vectors: extract the n-th coordinate
Polynomial eps_prime(const WittVector& w, long n);

// the ring the jet vectors live over
std::shared_ptr<const ResidueRing> jet_carrier_ring(const Params& prm);

}  // namespace lazwitt
