#pragma once

#include <vector>

#include "lazwitt/params.hpp"
#include "lazwitt/polynomial.hpp"

namespace lazwitt {

// Z-coefficient pi-series prior to normalization; coeffs[j] is the
// pi^j coefficient and may contain arbitrary integers but no pi.
struct RawSeries {
  Params params;
  std::vector<Polynomial> coeffs;

  static RawSeries zero(const Params& prm);
  static RawSeries constant(const Params& prm, const mpz_class& c);
  static RawSeries from_poly(const Params& prm, const Polynomial& pi0);

  const Polynomial& at(long j) const;
  void add_at(long j, const Polynomial& f);
};

RawSeries raw_add(const RawSeries& a, const RawSeries& b);
RawSeries raw_mul(const RawSeries& a, const RawSeries& b);

// Normal form in Lazard's pi-ring at precision N: every pi-coefficient is
// an F_p polynomial, integer carries eliminated through the defining
// relation p = sum_i w_i^{q^t} pi^i.
class LazardElement {
 public:
  const Params& params() const { return params_; }
  long precision() const { return static_cast<long>(coeffs_.size()); }
  const Polynomial& pi_coefficient(long j) const;
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool operator==(const LazardElement& o) const;
  std::string to_text() const;

 private:
  Params params_{};
  std::vector<Polynomial> coeffs_;
  friend LazardElement normalize(const RawSeries& s);
};

// Carry-elimination normalizer; terminates within N substitution rounds.
LazardElement normalize(const RawSeries& s);

RawSeries lift(const LazardElement& a);

LazardElement lz_zero(const Params& prm);
LazardElement lz_one(const Params& prm);
LazardElement lz_add(const LazardElement& a, const LazardElement& b);
LazardElement lz_sub(const LazardElement& a, const LazardElement& b);
LazardElement lz_neg(const LazardElement& a);
LazardElement lz_mul(const LazardElement& a, const LazardElement& b);
LazardElement lz_pow(const LazardElement& a, unsigned long k);

// multiply by pi^k (coefficients shift up, truncating at N)
LazardElement shift_pi(const LazardElement& a, long k);
LazardElement truncate_precision(const LazardElement& a, long n);

// Multiplicative lift [r] mod pi^N: the q^{N-1}th power of the canonical
// integer lift of r^{q^{-(N-1)}}.
LazardElement teichmuller(const Polynomial& r, const Params& prm);

// re-read a precision-(N-k) element as x * pi^k at precision N
LazardElement embed_shift(const LazardElement& low, const Params& prm, long k);

// [r] * pi^k at precision N; the lift is computed at precision N-k, which
// is all that survives the shift
LazardElement teichmuller_shifted(const Polynomial& r, const Params& prm,
                                  long k);

// Coordinates (x_i)_i with a = sum_i [x_i^{q^{-i}}] pi^i, by greedy
// Teichmuller peeling; always succeeds on finite-precision normal forms.
std::vector<Polynomial> pi_expansion_coordinates(const LazardElement& a);

// sum_i [coords[i]^{q^{-i}}] pi^i
LazardElement pi_expansion_value(const Params& prm,
                                 const std::vector<Polynomial>& coords);

}  // namespace lazwitt
