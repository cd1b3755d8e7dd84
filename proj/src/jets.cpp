#include "lazwitt/jets.hpp"

#include <sstream>
#include <stdexcept>

namespace lazwitt {

void JetRing::validate_source(const Polynomial& f) const {
  if (!(f.domain() == base)) throw std::domain_error("base domain mismatch");
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.factors()) {
      if (v.tag != VarTag::Gen)
        throw std::invalid_argument("source elements live in k[t_1..t_r]");
      if (!e.is_integer())
        throw std::invalid_argument("source exponents must be integers");
    }
}

namespace {

// d^{[n]} of gen^k (k >= 1): divided Leibniz, recursively
Polynomial dn_of_power(const JetRing& jr, const Variable& gen, long k,
                       long n) {
  if (n == 0) {
    return Polynomial::monomial(jr.base,
                                Monomial::of(gen, PExponent::integer(k)), 1);
  }
  if (k == 0) return Polynomial::zero(jr.base);
  if (k == 1) {
    return Polynomial::variable(jr.base, Variable::jet(gen.name, n));
  }
  // d^{[n]}(g * g^{k-1}) = sum_{i+j=n} d^{[i]}g d^{[j]}g^{k-1}
  Polynomial acc = Polynomial::zero(jr.base);
  for (long i = 0; i <= n; ++i) {
    Polynomial left =
        i == 0 ? Polynomial::variable(jr.base, gen)
               : Polynomial::variable(jr.base, Variable::jet(gen.name, i));
    acc += left * dn_of_power(jr, gen, k - 1, n - i);
  }
  return acc;
}

// d^{[n]} of a monomial: fold the divided Leibniz rule over the factors
Polynomial dn_of_monomial(const JetRing& jr, const Monomial& m, long n) {
  std::vector<std::pair<Variable, long>> powers;
  for (const auto& [v, e] : m.factors())
    powers.push_back({v, e.as_integer()});
  // recursive over factor list
  std::function<Polynomial(std::size_t, long)> go =
      [&](std::size_t idx, long nn) -> Polynomial {
    if (idx == powers.size()) {
      return nn == 0 ? Polynomial::constant(jr.base, 1)
                     : Polynomial::zero(jr.base);
    }
    Polynomial acc = Polynomial::zero(jr.base);
    for (long i = 0; i <= nn; ++i) {
      Polynomial head = dn_of_power(jr, powers[idx].first, powers[idx].second, i);
      if (head.is_zero()) continue;
      acc += head * go(idx + 1, nn - i);
    }
    return acc;
  };
  return go(0, n);
}

}  // namespace

Polynomial hs_derive(const JetRing& jr, const Polynomial& f, long n) {
  if (n < 0 || n > jr.order)
    throw std::out_of_range("jet order out of range");
  jr.validate_source(f);
  Polynomial acc = Polynomial::zero(jr.base);
  for (const auto& [m, c] : f.terms()) {
    if (m.is_one()) {
      if (n == 0) acc.add_term(m, c);  // d^{[n]}c = c delta_{n0}
      continue;
    }
    acc += dn_of_monomial(jr, m, n).scaled(c);
  }
  return acc;
}

TruncatedSeries TruncatedSeries::zero(Domain d, long m) {
  if (m < 0) throw std::invalid_argument("order must be >= 0");
  return TruncatedSeries{
      m, std::vector<Polynomial>(m + 1, Polynomial::zero(d))};
}

TruncatedSeries TruncatedSeries::constant(Domain d, long m,
                                          const mpz_class& c) {
  TruncatedSeries s = zero(d, m);
  s.coeffs[0] = Polynomial::constant(d, c);
  return s;
}

TruncatedSeries TruncatedSeries::from_pi_polynomial(const Polynomial& f,
                                                    long m) {
  TruncatedSeries s = zero(f.domain(), m);
  long p = f.p();
  for (const auto& [mono, c] : f.terms()) {
    long deg = 0;
    Monomial rest;
    for (const auto& [v, e] : mono.factors()) {
      if (v.tag == VarTag::Pi) {
        deg = e.as_integer();
      } else {
        rest = rest.times(Monomial::of(v, e), p);
      }
    }
    if (deg <= m) s.coeffs[deg].add_term(rest, c);
  }
  return s;
}

const Polynomial& TruncatedSeries::at(long i) const {
  if (i < 0 || i > order) throw std::out_of_range("series coordinate");
  return coeffs[i];
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (order != o.order) return false;
  for (long i = 0; i <= order; ++i)
    if (!(coeffs[i] == o.coeffs[i])) return false;
  return true;
}

std::string TruncatedSeries::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= order; ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs[i].to_text();
    if (i == 0) {
      os << c;
      continue;
    }
    if (c == "1")
      ;  // bare pi power
    else if (coeffs[i].term_count() > 1)
      os << "(" << c << ")*";
    else
      os << c << "*";
    os << "pi";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("order mismatch");
  TruncatedSeries r = a;
  for (long i = 0; i <= a.order; ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

TruncatedSeries ts_neg(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("order mismatch");
  TruncatedSeries r = TruncatedSeries::zero(a.coeffs[0].domain(), a.order);
  for (long i = 0; i <= a.order; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (long j = 0; i + j <= a.order; ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

Polynomial dn_on_a(const JetRing& jr, const TruncatedSeries& a, long n) {
  if (n < 0 || n > jr.order)
    throw std::out_of_range("jet order out of range");
  Polynomial acc = Polynomial::zero(jr.base);
  for (long i = 0; i <= n && i <= a.order; ++i)
    acc += hs_derive(jr, a.at(i), n - i);
  return acc;
}

TruncatedSeries phi_map(const JetRing& jr, const TruncatedSeries& a) {
  TruncatedSeries r = TruncatedSeries::zero(jr.base, jr.order);
  for (long n = 0; n <= jr.order; ++n) r.coeffs[n] = dn_on_a(jr, a, n);
  return r;
}

bool lemma_identity_check(long n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Domain d = z_domain(2);
  auto xv = [&](long i, long j) {
    return Polynomial::variable(
        d, Variable::gen("x" + std::to_string(i) + "_" + std::to_string(j)));
  };
  auto yv = [&](long i, long j) {
    return Polynomial::variable(
        d, Variable::gen("y" + std::to_string(i) + "_" + std::to_string(j)));
  };
  Polynomial lhs = Polynomial::zero(d);
  for (long g = 0; g <= n; ++g)
    for (long e = 0; e <= g; ++e)
      for (long a = 0; a <= n - g; ++a)
        lhs += xv(a, e) * yv(n - g - a, g - e);
  Polynomial rhs = Polynomial::zero(d);
  for (long t = 0; t <= n; ++t)
    for (long i = 0; i <= t; ++i)
      for (long j = 0; j <= n - t; ++j)
        rhs += xv(t - i, i) * yv(n - t - j, j);
  return lhs == rhs;
}

Polynomial retraction_phibar(
    const JetRing& jr, const Polynomial& x,
    const std::map<std::string, TruncatedSeries>& named_elements) {
  return substitute(x, [&](const Variable& v) -> std::optional<Polynomial> {
    if (v.tag == VarTag::Gen) {
      auto it = named_elements.find(v.name);
      if (it == named_elements.end()) return std::nullopt;
      return dn_on_a(jr, it->second, 0);
    }
    if (v.tag == VarTag::Jet) {
      auto it = named_elements.find(v.name);
      if (it == named_elements.end()) return std::nullopt;
      return dn_on_a(jr, it->second, v.index);
    }
    throw std::invalid_argument("unexpected variable in a jet element");
  });
}

}  // namespace lazwitt
