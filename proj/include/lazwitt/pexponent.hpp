#pragma once

#include <string>

namespace lazwitt {

// Nonnegative exponent in Z[1/p]: num / p^den_exp, kept in lowest terms
// (p never divides num while den_exp > 0). Every exponent the library
// manipulates lives here, so comparisons stay integral.
class PExponent {
 public:
  PExponent() = default;  // zero
  PExponent(long long num, int den_exp, long p);

  static PExponent integer(long long n);
  static PExponent one() { return integer(1); }

  long long num() const { return num_; }
  int den_exp() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 0; }
  long long as_integer() const;  // throws when fractional

  PExponent plus(const PExponent& o, long p) const;
  PExponent minus(const PExponent& o, long p) const;  // throws if negative
  PExponent times(const PExponent& o, long p) const;
  PExponent times_integer(long long k, long p) const;
  // scale by p^k; k may be negative
  PExponent times_p_power(int k, long p) const;

  // exponent lies in p^k * Z>=0 (k may be negative)
  bool is_multiple_of_p_power(int k, long p) const;

  int compare(const PExponent& o, long p) const;  // -1 / 0 / 1, exact
  bool operator==(const PExponent&) const = default;

  std::string to_string(long p) const;  // "3" or "3/4"

 private:
  long long num_ = 0;
  int den_ = 0;
  void reduce(long p);
};

}  // namespace lazwitt
