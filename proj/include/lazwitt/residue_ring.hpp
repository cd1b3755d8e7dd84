#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lazwitt/polynomial.hpp"

namespace lazwitt {

// A concrete residue-ring class over F_p[w_i]^pf: perfected polynomial
// rings on named generators, optionally with nilpotency relations
// gen^k = 0 and/or specializations w_i -> polynomial in the generators.
// Elements are F_p polynomials kept relation-reduced.
struct ResidueRing {
  long p = 2;
  long q = 2;
  std::vector<std::string> generators;
  std::map<std::string, long> nilpotency;
  std::map<long, Polynomial> omega_images;
  bool unlisted_omega_zero = false;

  static std::shared_ptr<const ResidueRing> universal(long p, long q);
  static std::shared_ptr<const ResidueRing> perfected(
      long p, long q, std::vector<std::string> gens);
  static std::shared_ptr<const ResidueRing> with_nilpotent(
      long p, long q, std::vector<std::string> gens,
      std::map<std::string, long> nil);
  static std::shared_ptr<const ResidueRing> specialized(
      long p, long q, std::vector<std::string> gens,
      std::map<long, Polynomial> omega, bool zero_default);

  Domain domain() const { return fp_domain(p); }
  // nilpotents break Frobenius injectivity
  bool is_perfect() const { return nilpotency.empty(); }

  Polynomial omega_value(long i) const;
  Polynomial reduce(const Polynomial& f) const;
  Polynomial zero() const { return Polynomial::zero(domain()); }
  Polynomial one() const { return Polynomial::constant(domain(), 1); }

  bool operator==(const ResidueRing& o) const;
};

// Generator-image morphism between residue rings; omegas map through the
// target's own specialization.
struct RingHom {
  std::shared_ptr<const ResidueRing> from;
  std::shared_ptr<const ResidueRing> to;
  std::map<std::string, Polynomial> gen_images;

  Polynomial apply(const Polynomial& f) const;
};

}  // namespace lazwitt
