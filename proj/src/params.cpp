#include "lazwitt/params.hpp"

#include <sstream>
#include <stdexcept>

namespace lazwitt {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (1L << 62) / base)
      throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

int power_exponent(long q, long p) {
  if (q < p || p < 2) return -1;
  int e = 0;
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return (r == 1 && e >= 1) ? e : -1;
}

std::optional<std::pair<long, long>> Params::q_valuation(
    const mpz_class& x) const {
  if (x == 0) return std::nullopt;
  mpz_class r = x;
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
    r /= p;
    ++v;
  }
  return std::make_pair(v, static_cast<long>(e()));
}

void Params::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (power_exponent(q, p) < 1)
    throw std::invalid_argument("q must be a positive power of p, q > 1");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (m.has_value()) {
    if (*m < 0) throw std::invalid_argument("m must be >= 0");
    if (precision > *m + 1)
      throw std::invalid_argument("precision must be <= m+1 for finite m");
  }
}

Params Params::make(long p, long q, long t, std::optional<long> m,
                    long precision) {
  Params prm{p, q, t, m, precision};
  prm.validate();
  return prm;
}

std::string Params::describe() const {
  std::ostringstream os;
  os << "p=" << p << " q=" << q << " t=" << t << " m=";
  if (m.has_value())
    os << *m;
  else
    os << "inf";
  os << " N=" << precision;
  return os.str();
}

}  // namespace lazwitt
