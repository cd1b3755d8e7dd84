#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lazwitt/pexponent.hpp"
#include "lazwitt/variable.hpp"

namespace lazwitt {

// Finite product of variable powers; factors sorted by variable order,
// zero exponents never stored.
class Monomial {
 public:
  using Factor = std::pair<Variable, PExponent>;

  Monomial() = default;  // the unit monomial
  static Monomial of(const Variable& v, const PExponent& e);
  static Monomial of(const Variable& v);  // exponent 1

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  PExponent exponent_of(const Variable& v) const;

  Monomial times(const Monomial& o, long p) const;
  // raise to a Z[1/p] power: every exponent scales
  Monomial pexp_pow(const PExponent& e, long p) const;
  // scale exponents of selected variables by p^k
  Monomial scale_exponents(int p_power, long p,
                           const std::function<bool(const Variable&)>& sel) const;

  // total exponent over the non-omega variables / over everything
  PExponent main_degree(long p) const;
  PExponent total_degree(long p) const;

  bool operator==(const Monomial&) const = default;

  std::string to_string(long p) const;

  // internal: push a factor already known to respect ordering/nonzero
  void append_factor(const Variable& v, const PExponent& e);

 private:
  std::vector<Factor> factors_;
};

// Canonical emission order ("a comes before b"). Ascending total degree
// over the main (non-omega) variables; ties broken by scanning the main
// variables in variable order and then the omegas, larger exponent first.
// This is the one order used by storage, text, LaTeX and JSON output.
struct MonomialOrder {
  long p = 2;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace lazwitt
