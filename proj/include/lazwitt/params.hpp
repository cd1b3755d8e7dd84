#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace lazwitt {

bool is_prime(long n);
long ipow(long base, int exp);

// e >= 1 with q == p^e, or -1 if q is not a power of p.
int power_exponent(long q, long p);

// Ambient parameters shared across the library: prime p, q = p^e, the
// Frobenius twist t, the truncation order m (nullopt = infinite) and the
// pi-adic working precision (number of pi-coordinates kept, called N in
// normal-form arithmetic).
struct Params {
  long p = 2;
  long q = 2;
  long t = 0;
  std::optional<long> m = std::nullopt;
  long precision = 1;

  int e() const { return power_exponent(q, p); }
  bool m_finite() const { return m.has_value(); }

  // q-adic valuation v_q(x) = v_p(x)/e as an exact fraction
  // (numerator, denominator); nullopt for x = 0
  std::optional<std::pair<long, long>> q_valuation(const mpz_class& x) const;

  // throws std::invalid_argument on violated invariants
  void validate() const;

  static Params make(long p, long q, long t, std::optional<long> m,
                     long precision);

  bool operator==(const Params&) const = default;
  std::string describe() const;
};

}  // namespace lazwitt
