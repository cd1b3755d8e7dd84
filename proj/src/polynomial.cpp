#include "lazwitt/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lazwitt/params.hpp"

namespace lazwitt {

std::string Domain::to_string() const {
  return kind == Kind::Fp ? "Fp" : "Z";
}

Domain fp_domain(long p) { return Domain{Domain::Kind::Fp, p}; }
Domain z_domain(long p) { return Domain{Domain::Kind::Z, p}; }

Polynomial::Polynomial(Domain d) : dom_(d), terms_(MonomialOrder{d.p}) {}

Polynomial Polynomial::constant(Domain d, const mpz_class& c) {
  Polynomial f(d);
  f.add_term(Monomial(), c);
  return f;
}

Polynomial Polynomial::variable(Domain d, const Variable& v) {
  Polynomial f(d);
  f.add_term(Monomial::of(v), 1);
  return f;
}

Polynomial Polynomial::monomial(Domain d, const Monomial& m,
                                const mpz_class& c) {
  Polynomial f(d);
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (dom_.is_fp()) {
    mpz_class r = it->second % dom_.p;
    if (r < 0) r += dom_.p;
    it->second = r;
  }
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_same_domain(const Polynomial& o) const {
  if (!(dom_ == o.dom_)) throw std::domain_error("coefficient domain mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dom_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_domain(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_domain(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_domain(b);
  Polynomial r(a.dom_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(ma.times(mb, a.dom_.p), ca * cb);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(dom_ == o.dom_) || terms_.size() != o.terms_.size()) return false;
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  for (; i != terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || i->second != j->second) return false;
  return true;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r(dom_);
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial acc = Polynomial::constant(dom_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::scale_exponents(
    int p_power, const std::function<bool(const Variable&)>& sel) const {
  Polynomial r(dom_);
  for (const auto& [m, c] : terms_)
    r.add_term(m.scale_exponents(p_power, dom_.p, sel), c);
  return r;
}

bool Polynomial::contains_tag(VarTag tag) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.tag == tag) return true;
  return false;
}

long Polynomial::max_index(VarTag tag) const {
  long mx = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.tag == tag && v.index > mx) mx = v.index;
  return mx;
}

bool Polynomial::exponents_integral(
    const std::function<bool(const Variable&)>& sel) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if ((!sel || sel(v)) && !e.is_integer()) return false;
  return true;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else if (a == 1) {
      os << m.to_string(dom_.p);
    } else {
      os << a.get_str() << "*" << m.to_string(dom_.p);
    }
  }
  return os.str();
}

namespace {

std::string latex_variable(const Variable& v) {
  switch (v.tag) {
    case VarTag::Omega: return "\\omega_{" + std::to_string(v.index) + "}";
    case VarTag::X: return "X_{" + std::to_string(v.index) + "}";
    case VarTag::Y: return "Y_{" + std::to_string(v.index) + "}";
    case VarTag::Pi: return "\\pi";
    case VarTag::Gen: return "\\mathrm{" + v.name + "}";
    case VarTag::Jet:
      return "d^{[" + std::to_string(v.index) + "]}\\mathrm{" + v.name + "}";
  }
  return "?";
}

}  // namespace

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << " ";
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << " ";
      first_factor = false;
      os << latex_variable(v);
      if (!(e.is_integer() && e.num() == 1))
        os << "^{" << e.to_string(dom_.p) << "}";
    }
  }
  return os.str();
}

Polynomial frobenius(const Polynomial& f, long q, long s) {
  if (!f.domain().is_fp())
    throw std::domain_error("frobenius requires F_p coefficients");
  int e = power_exponent(q, f.p());
  if (e < 1) throw std::invalid_argument("q is not a power of p");
  return f.scale_exponents(static_cast<int>(e * s));
}

Polynomial coefficient_frobenius(const Polynomial& f, long q, long s) {
  if (!f.domain().is_fp())
    throw std::domain_error("coefficient_frobenius requires F_p coefficients");
  int e = power_exponent(q, f.p());
  if (e < 1) throw std::invalid_argument("q is not a power of p");
  return f.scale_exponents(static_cast<int>(e * s), [](const Variable& v) {
    return v.tag == VarTag::Omega;
  });
}

Polynomial pexp_power(const Polynomial& f, const PExponent& e) {
  if (e.is_zero()) return Polynomial::constant(f.domain(), 1);
  if (e.is_integer()) return f.pow(static_cast<unsigned long>(e.as_integer()));
  if (!f.domain().is_fp())
    throw std::domain_error("fractional power requires F_p coefficients");
  // f^{a/p^k} = (f^a)^{1/p^k}; the root is the inverse Frobenius
  Polynomial g = f.pow(static_cast<unsigned long>(e.num()));
  return g.scale_exponents(-e.den_exp());
}

Polynomial reduce_mod_p(const Polynomial& f, long p) {
  if (f.domain().is_fp())
    throw std::domain_error("reduce_mod_p expects Z coefficients");
  if (f.p() != p)
    throw std::domain_error("exponent base differs from target prime");
  Polynomial r(fp_domain(p));
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

Polynomial lift_to_z(const Polynomial& f) {
  if (!f.domain().is_fp())
    throw std::domain_error("lift_to_z expects F_p coefficients");
  Polynomial r(z_domain(f.p()));
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

Polynomial cq_polynomial(long p, long q) {
  if (power_exponent(q, p) < 1)
    throw std::invalid_argument("q is not a power of p");
  Domain d = z_domain(p);
  // X0^q + Y0^q - (X0 + Y0)^q, then exact division by p
  Polynomial f(d);
  f.add_term(Monomial::of(Variable::x(0), PExponent::integer(q)), 1);
  f.add_term(Monomial::of(Variable::y(0), PExponent::integer(q)), 1);
  for (long k = 0; k <= q; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), q, k);
    Monomial m = Monomial::of(Variable::x(0), PExponent::integer(q - k))
                     .times(Monomial::of(Variable::y(0), PExponent::integer(k)),
                            p);
    f.add_term(m, -binom);
  }
  Polynomial r(d);
  for (const auto& [m, c] : f.terms()) {
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(),
                mpz_class(p).get_mpz_t());
    if (rem != 0) throw std::logic_error("C_q defining sum not divisible by p");
    r.add_term(m, quot);
  }
  return r;
}

Polynomial substitute(const Polynomial& f, const Substitution& images) {
  Polynomial result(f.domain());
  long p = f.p();
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(f.domain(), c);
    Monomial passthrough;
    for (const auto& [v, e] : m.factors()) {
      std::optional<Polynomial> img = images(v);
      if (!img.has_value()) {
        passthrough = passthrough.times(Monomial::of(v, e), p);
        continue;
      }
      if (!(img->domain() == f.domain()))
        throw std::domain_error("substitution image domain mismatch");
      // single unit-coefficient monomial: raise directly
      if (img->term_count() == 1 && img->terms().begin()->second == 1) {
        passthrough =
            passthrough.times(img->terms().begin()->first.pexp_pow(e, p), p);
        continue;
      }
      term = term * pexp_power(*img, e);
    }
    Polynomial piece(f.domain());
    for (const auto& [tm, tc] : term.terms())
      piece.add_term(tm.times(passthrough, p), tc);
    result += piece;
  }
  return result;
}

// ---- expression parser ------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  Domain dom;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  mpz_class parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  PExponent parse_exponent() {
    skip_ws();
    if (consume('(')) {
      mpz_class a = parse_int();
      long long num = a.get_si();
      if (consume('/')) {
        mpz_class b = parse_int();
        long long den = b.get_si();
        int k = 0;
        long long r = den;
        while (r > 1 && r % dom.p == 0) {
          r /= dom.p;
          ++k;
        }
        if (r != 1) fail("exponent denominator must be a power of p");
        if (!consume(')')) fail("expected ')'");
        return PExponent(num, k, dom.p);
      }
      if (!consume(')')) fail("expected ')'");
      return PExponent::integer(num);
    }
    mpz_class a = parse_int();
    return PExponent::integer(a.get_si());
  }

  Polynomial parse_factor() {
    skip_ws();
    Polynomial base(dom);
    if (consume('(')) {
      base = parse_expr();
      if (!consume(')')) fail("expected ')'");
    } else if (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
      base = Polynomial::constant(dom, parse_int());
    } else {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_' || s[pos] == ':'))
        ++pos;
      if (start == pos) fail("expected variable or number");
      auto v = Variable::parse(s.substr(start, pos - start));
      if (!v) fail("unknown variable '" + s.substr(start, pos - start) + "'");
      base = Polynomial::variable(dom, *v);
    }
    skip_ws();
    if (consume('^')) {
      PExponent e = parse_exponent();
      base = pexp_power(base, e);
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial r = parse_factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        r = r * parse_factor();
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                  s[pos] == '(')) {
        r = r * parse_factor();  // implicit product
      } else {
        break;
      }
    }
    return r;
  }

  Polynomial parse_expr() {
    bool neg = false;
    skip_ws();
    if (consume('-'))
      neg = true;
    else
      consume('+');
    Polynomial r = parse_term();
    if (neg) r = -r;
    while (true) {
      skip_ws();
      if (consume('+')) {
        r += parse_term();
      } else if (consume('-')) {
        r -= parse_term();
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, Domain d) {
  Parser parser{text, 0, d};
  Polynomial r = parser.parse_expr();
  if (!parser.eof()) parser.fail("trailing input");
  return r;
}

}  // namespace lazwitt
