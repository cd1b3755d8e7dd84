#include "lazwitt/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lazwitt {

Monomial Monomial::of(const Variable& v, const PExponent& e) {
  Monomial m;
  if (!e.is_zero()) m.factors_.push_back({v, e});
  return m;
}

Monomial Monomial::of(const Variable& v) { return of(v, PExponent::one()); }

void Monomial::append_factor(const Variable& v, const PExponent& e) {
  if (e.is_zero()) return;
  if (!factors_.empty() && compare(factors_.back().first, v) >= 0)
    throw std::logic_error("monomial factors out of order");
  factors_.push_back({v, e});
}

PExponent Monomial::exponent_of(const Variable& v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return PExponent();
}

Monomial Monomial::times(const Monomial& o, long p) const {
  Monomial r;
  auto a = factors_.begin(), ae = factors_.end();
  auto b = o.factors_.begin(), be = o.factors_.end();
  while (a != ae && b != be) {
    int c = compare(a->first, b->first);
    if (c < 0) {
      r.factors_.push_back(*a++);
    } else if (c > 0) {
      r.factors_.push_back(*b++);
    } else {
      PExponent e = a->second.plus(b->second, p);
      if (!e.is_zero()) r.factors_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  return r;
}

Monomial Monomial::pexp_pow(const PExponent& e, long p) const {
  if (e.is_zero()) return Monomial();
  Monomial r;
  for (const auto& [v, x] : factors_) r.factors_.push_back({v, x.times(e, p)});
  return r;
}

Monomial Monomial::scale_exponents(
    int p_power, long p,
    const std::function<bool(const Variable&)>& sel) const {
  Monomial r;
  for (const auto& [v, x] : factors_) {
    if (!sel || sel(v))
      r.factors_.push_back({v, x.times_p_power(p_power, p)});
    else
      r.factors_.push_back({v, x});
  }
  return r;
}

PExponent Monomial::main_degree(long p) const {
  PExponent d;
  for (const auto& [v, e] : factors_)
    if (v.is_main()) d = d.plus(e, p);
  return d;
}

PExponent Monomial::total_degree(long p) const {
  PExponent d;
  for (const auto& [v, e] : factors_) d = d.plus(e, p);
  return d;
}

std::string Monomial::to_string(long p) const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << v.to_string();
    if (!(e.is_integer() && e.num() == 1)) {
      if (e.is_integer())
        os << "^" << e.num();
      else
        os << "^(" << e.to_string(p) << ")";
    }
  }
  return os.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  PExponent da = a.main_degree(p), db = b.main_degree(p);
  int c = da.compare(db, p);
  if (c != 0) return c < 0;

  // scan main variables first, then omegas; larger exponent emits earlier
  auto scan = [&](bool main_pass) -> int {
    auto i = a.factors().begin(), ie = a.factors().end();
    auto j = b.factors().begin(), je = b.factors().end();
    if (main_pass) {
      while (i != ie && !i->first.is_main()) ++i;
      while (j != je && !j->first.is_main()) ++j;
    }
    auto relevant = [&](const Variable& v) {
      return main_pass ? v.is_main() : !v.is_main();
    };
    while (true) {
      while (i != ie && !relevant(i->first)) ++i;
      while (j != je && !relevant(j->first)) ++j;
      if (i == ie && j == je) return 0;
      if (i == ie) return -1;  // a lacks the variable: exponent 0, smaller
      if (j == je) return 1;
      int vc = compare(i->first, j->first);
      if (vc < 0) return 1;   // a has a power of an earlier variable
      if (vc > 0) return -1;
      int ec = i->second.compare(j->second, p);
      if (ec != 0) return ec;
      ++i;
      ++j;
    }
  };
  int main_cmp = scan(true);
  if (main_cmp != 0) return main_cmp > 0;  // larger exponent first
  int omega_cmp = scan(false);
  return omega_cmp > 0;
}

}  // namespace lazwitt
