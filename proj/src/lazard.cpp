#include "lazwitt/lazard.hpp"

#include <sstream>
#include <stdexcept>

namespace lazwitt {

namespace {

void check_no_pi(const Polynomial& f) {
  if (f.contains_tag(VarTag::Pi))
    throw std::invalid_argument("pi-series coefficients must not contain pi");
}

void check_params_match(const Params& a, const Params& b) {
  if (!(a == b)) throw std::invalid_argument("params mismatch");
}

}  // namespace

RawSeries RawSeries::zero(const Params& prm) {
  RawSeries s{prm, {}};
  s.coeffs.assign(prm.precision, Polynomial::zero(z_domain(prm.p)));
  return s;
}

RawSeries RawSeries::constant(const Params& prm, const mpz_class& c) {
  RawSeries s = zero(prm);
  s.coeffs[0] = Polynomial::constant(z_domain(prm.p), c);
  return s;
}

RawSeries RawSeries::from_poly(const Params& prm, const Polynomial& pi0) {
  if (pi0.domain().is_fp() || pi0.p() != prm.p)
    throw std::invalid_argument("expected Z polynomial with matching p");
  check_no_pi(pi0);
  RawSeries s = zero(prm);
  s.coeffs[0] = pi0;
  return s;
}

const Polynomial& RawSeries::at(long j) const {
  if (j < 0 || j >= static_cast<long>(coeffs.size()))
    throw std::out_of_range("pi-degree out of range");
  return coeffs[j];
}

void RawSeries::add_at(long j, const Polynomial& f) {
  if (j < 0 || j >= static_cast<long>(coeffs.size()))
    throw std::out_of_range("pi-degree out of range");
  check_no_pi(f);
  coeffs[j] += f;
}

RawSeries raw_add(const RawSeries& a, const RawSeries& b) {
  check_params_match(a.params, b.params);
  RawSeries r = a;
  for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] += b.coeffs[j];
  return r;
}

RawSeries raw_mul(const RawSeries& a, const RawSeries& b) {
  check_params_match(a.params, b.params);
  RawSeries r = RawSeries::zero(a.params);
  long n = a.params.precision;
  for (long i = 0; i < n; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (long j = 0; i + j < n; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

const Polynomial& LazardElement::pi_coefficient(long j) const {
  if (j < 0 || j >= precision())
    throw std::out_of_range("pi-degree out of range");
  return coeffs_[j];
}

bool LazardElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool LazardElement::operator==(const LazardElement& o) const {
  if (!(params_ == o.params_)) return false;
  for (long j = 0; j < precision(); ++j)
    if (!(coeffs_[j] == o.coeffs_[j])) return false;
  return true;
}

std::string LazardElement::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (long j = 0; j < precision(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << coeffs_[j].to_text();
    } else {
      std::string c = coeffs_[j].to_text();
      if (c == "1")
        os << "";
      else if (coeffs_[j].term_count() > 1)
        os << "(" << c << ")*";
      else
        os << c << "*";
      os << "pi";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) return "0";
  return os.str();
}

LazardElement normalize(const RawSeries& s) {
  s.params.validate();
  const Params& prm = s.params;
  long n = prm.precision;
  if (static_cast<long>(s.coeffs.size()) != n)
    throw std::invalid_argument("coefficient count differs from precision");

  std::vector<Polynomial> z = s.coeffs;
  for (const auto& f : z) check_no_pi(f);

  Domain zd = z_domain(prm.p);
  mpz_class pz(prm.p);
  // carries only ever move up in pi-degree, so one increasing pass settles
  for (long j = 0; j < n; ++j) {
    Polynomial residue(zd);
    Polynomial carry(zd);
    for (const auto& [mono, c] : z[j].terms()) {
      mpz_class r = c % pz;
      if (r < 0) r += pz;
      residue.add_term(mono, r);
      mpz_class k = (c - r) / pz;
      carry.add_term(mono, k);
    }
    z[j] = residue;
    if (carry.is_zero()) continue;
    // p = sum_{i>=1} w_i^{q^t} pi^i, truncated at precision
    for (long i = 1; j + i < n; ++i) {
      if (prm.m_finite() && i > *prm.m) break;
      PExponent we = PExponent::one().times_p_power(
          static_cast<int>(prm.e() * prm.t), prm.p);
      Polynomial omega_pow = Polynomial::monomial(
          zd, Monomial::of(Variable::omega(i), we), 1);
      z[j + i] += omega_pow * carry;
    }
  }

  LazardElement out;
  out.params_ = prm;
  out.coeffs_.reserve(n);
  for (long j = 0; j < n; ++j) out.coeffs_.push_back(reduce_mod_p(z[j], prm.p));
  return out;
}

RawSeries lift(const LazardElement& a) {
  RawSeries s = RawSeries::zero(a.params());
  for (long j = 0; j < a.precision(); ++j)
    s.coeffs[j] = lift_to_z(a.pi_coefficient(j));
  return s;
}

LazardElement lz_zero(const Params& prm) {
  return normalize(RawSeries::zero(prm));
}

LazardElement lz_one(const Params& prm) {
  return normalize(RawSeries::constant(prm, 1));
}

LazardElement lz_add(const LazardElement& a, const LazardElement& b) {
  check_params_match(a.params(), b.params());
  return normalize(raw_add(lift(a), lift(b)));
}

LazardElement lz_neg(const LazardElement& a) {
  RawSeries s = lift(a);
  for (auto& c : s.coeffs) c = -c;
  return normalize(s);
}

LazardElement lz_sub(const LazardElement& a, const LazardElement& b) {
  return lz_add(a, lz_neg(b));
}

LazardElement lz_mul(const LazardElement& a, const LazardElement& b) {
  check_params_match(a.params(), b.params());
  return normalize(raw_mul(lift(a), lift(b)));
}

LazardElement lz_pow(const LazardElement& a, unsigned long k) {
  LazardElement acc = lz_one(a.params());
  LazardElement base = a;
  while (k > 0) {
    if (k & 1) acc = lz_mul(acc, base);
    k >>= 1;
    if (k > 0) base = lz_mul(base, base);
  }
  return acc;
}

LazardElement shift_pi(const LazardElement& a, long k) {
  if (k < 0) throw std::invalid_argument("negative pi-shift");
  RawSeries s = RawSeries::zero(a.params());
  for (long j = 0; j + k < a.precision(); ++j)
    s.coeffs[j + k] = lift_to_z(a.pi_coefficient(j));
  return normalize(s);
}

LazardElement truncate_precision(const LazardElement& a, long n) {
  if (n < 1 || n > a.precision())
    throw std::out_of_range("bad truncation precision");
  Params prm = a.params();
  prm.precision = n;
  RawSeries s = RawSeries::zero(prm);
  for (long j = 0; j < n; ++j) s.coeffs[j] = lift_to_z(a.pi_coefficient(j));
  return normalize(s);
}

LazardElement teichmuller(const Polynomial& r, const Params& prm) {
  if (!r.domain().is_fp() || r.p() != prm.p)
    throw std::invalid_argument("teichmuller expects an F_p polynomial");
  long n = prm.precision;
  Polynomial root = frobenius(r, prm.q, -(n - 1));
  RawSeries s = RawSeries::from_poly(prm, lift_to_z(root));
  LazardElement e = normalize(s);
  unsigned long power = 1;
  for (long i = 0; i < n - 1; ++i) power *= static_cast<unsigned long>(prm.q);
  return lz_pow(e, power);
}

LazardElement embed_shift(const LazardElement& low, const Params& prm,
                          long k) {
  if (k < 0 || low.precision() != prm.precision - k)
    throw std::invalid_argument("embed_shift precision mismatch");
  RawSeries s = RawSeries::zero(prm);
  for (long j = 0; j < low.precision(); ++j)
    s.coeffs[j + k] = lift_to_z(low.pi_coefficient(j));
  return normalize(s);
}

LazardElement teichmuller_shifted(const Polynomial& r, const Params& prm,
                                  long k) {
  if (k < 0) throw std::invalid_argument("negative pi-shift");
  if (k >= prm.precision) return lz_zero(prm);
  Params low = prm;
  low.precision = prm.precision - k;
  return embed_shift(teichmuller(r, low), prm, k);
}

std::vector<Polynomial> pi_expansion_coordinates(const LazardElement& a) {
  const Params& prm = a.params();
  std::vector<Polynomial> coords;
  coords.reserve(a.precision());
  LazardElement rest = a;
  for (long i = 0; i < a.precision(); ++i) {
    // rest == [x_i^{q^{-i}}] pi^i mod pi^{i+1}
    Polynomial c = rest.pi_coefficient(i);
    for (long j = 0; j < i; ++j)
      if (!rest.pi_coefficient(j).is_zero())
        throw std::logic_error("pi-expansion residue below current degree");
    Polynomial xi = frobenius(c, prm.q, i);
    coords.push_back(xi);
    if (!c.is_zero())
      rest = lz_sub(rest, teichmuller_shifted(c, prm, i));
  }
  if (!rest.is_zero())
    throw std::logic_error("pi-expansion did not terminate");
  return coords;
}

LazardElement pi_expansion_value(const Params& prm,
                                 const std::vector<Polynomial>& coords) {
  LazardElement acc = lz_zero(prm);
  for (long i = 0;
       i < std::min<long>(prm.precision, static_cast<long>(coords.size()));
       ++i) {
    if (coords[i].is_zero()) continue;
    Polynomial root = frobenius(coords[i], prm.q, -i);
    acc = lz_add(acc, teichmuller_shifted(root, prm, i));
  }
  return acc;
}

}  // namespace lazwitt
