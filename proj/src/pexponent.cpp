#include "lazwitt/pexponent.hpp"

#include <sstream>
#include <stdexcept>

namespace lazwitt {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow");
  return r;
}

long long pow_ll(long p, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, p);
  return r;
}

}  // namespace

PExponent::PExponent(long long num, int den_exp, long p)
    : num_(num), den_(den_exp) {
  if (num < 0 || den_exp < 0)
    throw std::invalid_argument("PExponent must be nonnegative");
  reduce(p);
}

void PExponent::reduce(long p) {
  if (num_ == 0) {
    den_ = 0;
    return;
  }
  while (den_ > 0 && num_ % p == 0) {
    num_ /= p;
    --den_;
  }
}

PExponent PExponent::integer(long long n) {
  if (n < 0) throw std::invalid_argument("PExponent must be nonnegative");
  PExponent e;
  e.num_ = n;
  e.den_ = 0;
  return e;
}

long long PExponent::as_integer() const {
  if (den_ != 0) throw std::domain_error("fractional exponent");
  return num_;
}

PExponent PExponent::plus(const PExponent& o, long p) const {
  int d = std::max(den_, o.den_);
  long long a = checked_mul(num_, pow_ll(p, d - den_));
  long long b = checked_mul(o.num_, pow_ll(p, d - o.den_));
  return PExponent(a + b, d, p);
}

PExponent PExponent::minus(const PExponent& o, long p) const {
  int d = std::max(den_, o.den_);
  long long a = checked_mul(num_, pow_ll(p, d - den_));
  long long b = checked_mul(o.num_, pow_ll(p, d - o.den_));
  if (a < b) throw std::domain_error("negative exponent");
  return PExponent(a - b, d, p);
}

PExponent PExponent::times(const PExponent& o, long p) const {
  return PExponent(checked_mul(num_, o.num_), den_ + o.den_, p);
}

PExponent PExponent::times_integer(long long k, long p) const {
  if (k < 0) throw std::invalid_argument("negative scale");
  return PExponent(checked_mul(num_, k), den_, p);
}

PExponent PExponent::times_p_power(int k, long p) const {
  if (num_ == 0) return PExponent();
  if (k >= 0) {
    int cancel = std::min(den_, k);
    return PExponent(checked_mul(num_, pow_ll(p, k - cancel)), den_ - cancel,
                     p);
  }
  return PExponent(num_, den_ - k, p);
}

bool PExponent::is_multiple_of_p_power(int k, long p) const {
  if (num_ == 0) return true;
  // num / p^(den + k) must be a nonnegative integer
  int d = den_ + k;
  if (d <= 0) return true;
  long long n = num_;
  for (int i = 0; i < d; ++i) {
    if (n % p != 0) return false;
    n /= p;
  }
  return true;
}

int PExponent::compare(const PExponent& o, long p) const {
  int d = std::max(den_, o.den_);
  __int128 a = static_cast<__int128>(num_);
  for (int i = 0; i < d - den_; ++i) a *= p;
  __int128 b = static_cast<__int128>(o.num_);
  for (int i = 0; i < d - o.den_; ++i) b *= p;
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

std::string PExponent::to_string(long p) const {
  std::ostringstream os;
  if (den_ == 0) {
    os << num_;
  } else {
    os << num_ << "/" << pow_ll(p, den_);
  }
  return os.str();
}

}  // namespace lazwitt
