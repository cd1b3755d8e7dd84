#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "lazwitt/monomial.hpp"

namespace lazwitt {

// Coefficient domain: F_p or Z. The prime is carried in both cases since
// exponent denominators are powers of p regardless of the coefficients.
struct Domain {
  enum class Kind { Fp, Z };
  Kind kind = Kind::Z;
  long p = 2;

  bool is_fp() const { return kind == Kind::Fp; }
  bool operator==(const Domain&) const = default;
  std::string to_string() const;
};

Domain fp_domain(long p);
Domain z_domain(long p);

// Sparse multivariate polynomial with exponents in Z[1/p]. No zero
// coefficients stored; F_p coefficients reduced to [1, p-1]; term map
// iterates in the canonical emission order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

  explicit Polynomial(Domain d);
  static Polynomial zero(Domain d) { return Polynomial(d); }
  static Polynomial constant(Domain d, const mpz_class& c);
  static Polynomial variable(Domain d, const Variable& v);
  static Polynomial monomial(Domain d, const Monomial& m, const mpz_class& c);

  const Domain& domain() const { return dom_; }
  long p() const { return dom_.p; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  mpz_class coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const;

  Polynomial scaled(const mpz_class& c) const;
  Polynomial pow(unsigned long k) const;

  // multiply exponents of selected variables by p^k (all variables when
  // sel is null); structural, domain-agnostic
  Polynomial scale_exponents(
      int p_power,
      const std::function<bool(const Variable&)>& sel = nullptr) const;

  bool contains_tag(VarTag tag) const;
  long max_index(VarTag tag) const;  // -1 when the tag is absent
  bool exponents_integral(
      const std::function<bool(const Variable&)>& sel = nullptr) const;

  std::string to_text() const;
  std::string to_latex() const;

 private:
  Domain dom_;
  TermMap terms_;
  void check_same_domain(const Polynomial& o) const;
};

// F_p Frobenius f -> f^{q^s}: scales every exponent by q^s (coefficients
// are Frobenius-fixed). s may be negative; Z domain is rejected.
Polynomial frobenius(const Polynomial& f, long q, long s);

// Coefficient-ring Frobenius: scales only the omega exponents.
Polynomial coefficient_frobenius(const Polynomial& f, long q, long s);

// f^e for e in Z[1/p]>=0 over F_p (fractional part via inverse Frobenius).
Polynomial pexp_power(const Polynomial& f, const PExponent& e);

// Coefficientwise reduction Z -> F_p and the canonical lift back.
Polynomial reduce_mod_p(const Polynomial& f, long p);
Polynomial lift_to_z(const Polynomial& f);

// C_q over Z, defined by p*C_q = X0^q + Y0^q - (X0+Y0)^q.
Polynomial cq_polynomial(long p, long q);

// variable -> replacement; nullopt means "maps to itself"
using Substitution = std::function<std::optional<Polynomial>(const Variable&)>;
Polynomial substitute(const Polynomial& f, const Substitution& images);

// Small expression parser for tests and the CLI: identifiers per
// Variable::parse, integer literals, + - * ^ ( ), exponents "a" or
// "(a/b)" with b a power of p.
Polynomial parse_polynomial(const std::string& text, Domain d);

}  // namespace lazwitt
