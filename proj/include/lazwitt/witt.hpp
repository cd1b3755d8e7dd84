#pragma once

#include <memory>
#include <vector>

#include "lazwitt/lazard.hpp"
#include "lazwitt/residue_ring.hpp"

namespace lazwitt {

// Tuple of residue-ring elements with ring operations evaluated through
// the arithmetic polynomials. The window is the tuple length (m+1 for
// finite truncation order, or a finite precision window when m = inf);
// the twist t selects which Q family acts.
struct WittVector {
  std::shared_ptr<const ResidueRing> ring;
  long t = 0;
  std::vector<Polynomial> coords;

  long window() const { return static_cast<long>(coords.size()); }
  const Polynomial& at(long i) const;
  bool operator==(const WittVector& o) const;
};

WittVector witt_zero(std::shared_ptr<const ResidueRing> ring, long t,
                     long window);
WittVector witt_one(std::shared_ptr<const ResidueRing> ring, long t,
                    long window);

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);

// [alpha] = (alpha, 0, ...)
WittVector teichmuller_section(const Polynomial& alpha,
                               std::shared_ptr<const ResidueRing> ring, long t,
                               long window);

// coordinatewise q-th power; twist t -> t+1
WittVector frobenius_op(const WittVector& a);
// coordinatewise q-th root on perfect rings; twist t -> t-1
WittVector qth_root_op(const WittVector& a);
// (a_0,...) -> (0,a_0,...); window +1, twist t -> t-1
WittVector verschiebung(const WittVector& a);
// append a zero coordinate, same twist
WittVector iota(const WittVector& a);
// first r coordinates
WittVector truncate(const WittVector& a, long r);
// drop the first r coordinates (kernel recovery for the exact sequence);
// twist t -> t+r
WittVector shift_down(const WittVector& a, long r);

// pi -> (0,1,0,...) and its witt powers
WittVector pi_vector(std::shared_ptr<const ResidueRing> ring, long t,
                     long window);
WittVector pi_power_vector(std::shared_ptr<const ResidueRing> ring, long t,
                           long window, long k);

// c * 1 by double-and-add
WittVector integer_image(long c, std::shared_ptr<const ResidueRing> ring,
                         long t, long window);

// structure map on elements of Lazard's ring presented as raw pi-series
// in omega, pi and integers (twist taken from x.params)
WittVector structure_map(const RawSeries& x,
                         std::shared_ptr<const ResidueRing> ring, long window);

// unit of the Section-3 equivalence: alpha -> class of (alpha,0,...) in
// UW(k) = W(k)/pi W(k); requires a perfect ring
WittVector unit_eta(const Polynomial& alpha,
                    std::shared_ptr<const ResidueRing> ring, long t,
                    long window);
// equality in UW(k): agreement of 0th coordinates (pi W(k) is exactly the
// tuples with vanishing 0th coordinate when k is perfect)
bool uw_equal(const WittVector& a, const WittVector& b);
// 0th coordinate, the inverse of unit_eta on classes
Polynomial uw_residue(const WittVector& a);

// sum_i [a_i^{q^{-i}}] pi^i computed entirely with witt operations;
// equals the input on perfect rings
WittVector counit_epsilon_expansion(const WittVector& a);

WittVector apply_hom(const RingHom& h, const WittVector& a);

}  // namespace lazwitt
