#include "lazwitt/witt.hpp"

#include <stdexcept>

#include "lazwitt/qpolys.hpp"

namespace lazwitt {

namespace {

void check_compatible(const WittVector& a, const WittVector& b) {
  if (!a.ring || !b.ring) throw std::invalid_argument("null ring");
  if (!(*a.ring == *b.ring)) throw std::invalid_argument("ring mismatch");
  if (a.t != b.t) throw std::invalid_argument("twist mismatch");
  if (a.window() != b.window())
    throw std::invalid_argument("window length mismatch");
}

// evaluate Q_i at the coordinates of a and b, omegas through the ring
Polynomial eval_q(WittOp op, long i, const WittVector& a,
                  const WittVector& b) {
  const ResidueRing& ring = *a.ring;
  const Polynomial& qi = compute_q(op, i, ring.p, ring.q, a.t);
  Polynomial v =
      substitute(qi, [&](const Variable& var) -> std::optional<Polynomial> {
        switch (var.tag) {
          case VarTag::X: return a.at(var.index);
          case VarTag::Y: return b.at(var.index);
          case VarTag::Omega: return ring.omega_value(var.index);
          default:
            throw std::logic_error("unexpected variable in Q polynomial");
        }
      });
  return ring.reduce(v);
}

}  // namespace

const Polynomial& WittVector::at(long i) const {
  if (i < 0 || i >= window()) throw std::out_of_range("coordinate index");
  return coords[i];
}

bool WittVector::operator==(const WittVector& o) const {
  if (!(*ring == *o.ring) || t != o.t || window() != o.window()) return false;
  for (long i = 0; i < window(); ++i)
    if (!(coords[i] == o.coords[i])) return false;
  return true;
}

WittVector witt_zero(std::shared_ptr<const ResidueRing> ring, long t,
                     long window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  return WittVector{ring, t,
                    std::vector<Polynomial>(window, ring->zero())};
}

WittVector witt_one(std::shared_ptr<const ResidueRing> ring, long t,
                    long window) {
  WittVector v = witt_zero(ring, t, window);
  v.coords[0] = ring->one();
  return v;
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  check_compatible(a, b);
  WittVector r{a.ring, a.t, {}};
  r.coords.reserve(a.window());
  for (long i = 0; i < a.window(); ++i)
    r.coords.push_back(eval_q(WittOp::Add, i, a, b));
  return r;
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  check_compatible(a, b);
  WittVector r{a.ring, a.t, {}};
  r.coords.reserve(a.window());
  for (long i = 0; i < a.window(); ++i)
    r.coords.push_back(eval_q(WittOp::Mul, i, a, b));
  return r;
}

WittVector witt_neg(const WittVector& a) {
  const ResidueRing& ring = *a.ring;
  // Q_n^+ = X_n + Y_n + R_n with R_n free of X_n, Y_n: solve coordinatewise
  WittVector b = witt_zero(a.ring, a.t, a.window());
  for (long n = 0; n < a.window(); ++n) {
    if (!leading_linearity_check(n, ring.p, ring.q, a.t))
      throw std::logic_error("additive leading linearity failed at index " +
                             std::to_string(n));
    Polynomial en = eval_q(WittOp::Add, n, a, b);  // a_n + R_n(a, b_{<n})
    b.coords[n] = ring.reduce(en.scaled(ring.p - 1));
  }
  return b;
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return witt_add(a, witt_neg(b));
}

WittVector teichmuller_section(const Polynomial& alpha,
                               std::shared_ptr<const ResidueRing> ring, long t,
                               long window) {
  WittVector v = witt_zero(ring, t, window);
  v.coords[0] = ring->reduce(alpha);
  return v;
}

WittVector frobenius_op(const WittVector& a) {
  WittVector r{a.ring, a.t + 1, {}};
  r.coords.reserve(a.window());
  for (const auto& c : a.coords)
    r.coords.push_back(
        a.ring->reduce(c.pow(static_cast<unsigned long>(a.ring->q))));
  return r;
}

WittVector qth_root_op(const WittVector& a) {
  if (!a.ring->is_perfect())
    throw std::domain_error("q-th roots require a perfect ring");
  WittVector r{a.ring, a.t - 1, {}};
  r.coords.reserve(a.window());
  for (const auto& c : a.coords)
    r.coords.push_back(a.ring->reduce(frobenius(c, a.ring->q, -1)));
  return r;
}

WittVector verschiebung(const WittVector& a) {
  WittVector r{a.ring, a.t - 1, {}};
  r.coords.reserve(a.window() + 1);
  r.coords.push_back(a.ring->zero());
  for (const auto& c : a.coords) r.coords.push_back(c);
  return r;
}

WittVector iota(const WittVector& a) {
  WittVector r = a;
  r.coords.push_back(a.ring->zero());
  return r;
}

WittVector truncate(const WittVector& a, long r) {
  if (r < 1 || r > a.window()) throw std::out_of_range("truncation length");
  WittVector v{a.ring, a.t, {}};
  v.coords.assign(a.coords.begin(), a.coords.begin() + r);
  return v;
}

WittVector shift_down(const WittVector& a, long r) {
  if (r < 0 || r >= a.window()) throw std::out_of_range("shift length");
  WittVector v{a.ring, a.t + r, {}};
  v.coords.assign(a.coords.begin() + r, a.coords.end());
  return v;
}

WittVector pi_vector(std::shared_ptr<const ResidueRing> ring, long t,
                     long window) {
  WittVector v = witt_zero(ring, t, window);
  if (window >= 2) v.coords[1] = ring->one();
  return v;
}

WittVector pi_power_vector(std::shared_ptr<const ResidueRing> ring, long t,
                           long window, long k) {
  WittVector acc = witt_one(ring, t, window);
  WittVector base = pi_vector(ring, t, window);
  for (long i = 0; i < k; ++i) acc = witt_mul(acc, base);
  return acc;
}

WittVector integer_image(long c, std::shared_ptr<const ResidueRing> ring,
                         long t, long window) {
  bool neg = c < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-c)
                        : static_cast<unsigned long>(c);
  WittVector acc = witt_zero(ring, t, window);
  WittVector base = witt_one(ring, t, window);
  while (k > 0) {
    if (k & 1) acc = witt_add(acc, base);
    k >>= 1;
    if (k > 0) base = witt_add(base, base);
  }
  return neg ? witt_neg(acc) : acc;
}

WittVector structure_map(const RawSeries& x,
                         std::shared_ptr<const ResidueRing> ring,
                         long window) {
  const Params& prm = x.params;
  if (prm.p != ring->p || prm.q != ring->q)
    throw std::invalid_argument("params mismatch with ring");
  long t = prm.t;
  Domain fd = ring->domain();

  auto coeff_image = [&](const Polynomial& zc) -> WittVector {
    WittVector acc = witt_zero(ring, t, window);
    for (const auto& [mono, c] : zc.terms()) {
      for (const auto& [v, e] : mono.factors())
        if (v.tag != VarTag::Omega)
          throw std::invalid_argument(
              "structure map input must be a series in omega, pi and "
              "integers");
      if (!c.fits_slong_p())
        throw std::invalid_argument("structure map integer too large");
      WittVector term = integer_image(c.get_si(), ring, t, window);
      if (!mono.is_one()) {
        Polynomial alpha = Polynomial::monomial(fd, mono, 1);
        term = witt_mul(term, teichmuller_section(alpha, ring, t, window));
      }
      acc = witt_add(acc, term);
    }
    return acc;
  };

  // Horner in pi
  WittVector acc = witt_zero(ring, t, window);
  WittVector pi = pi_vector(ring, t, window);
  for (long j = static_cast<long>(x.coeffs.size()) - 1; j >= 0; --j) {
    acc = witt_mul(acc, pi);
    acc = witt_add(acc, coeff_image(x.coeffs[j]));
  }
  return acc;
}

WittVector unit_eta(const Polynomial& alpha,
                    std::shared_ptr<const ResidueRing> ring, long t,
                    long window) {
  if (!ring->is_perfect())
    throw std::domain_error("unit requires a perfect residue ring");
  return teichmuller_section(alpha, ring, t, window);
}

Polynomial uw_residue(const WittVector& a) { return a.at(0); }

bool uw_equal(const WittVector& a, const WittVector& b) {
  if (!a.ring->is_perfect())
    throw std::domain_error("UW comparison requires a perfect ring");
  check_compatible(a, b);
  return a.at(0) == b.at(0);
}

WittVector counit_epsilon_expansion(const WittVector& a) {
  if (!a.ring->is_perfect())
    throw std::domain_error("pi-expansion requires a perfect ring");
  const ResidueRing& ring = *a.ring;
  WittVector acc = witt_zero(a.ring, a.t, a.window());
  for (long i = 0; i < a.window(); ++i) {
    if (a.at(i).is_zero()) continue;
    Polynomial root = ring.reduce(frobenius(a.at(i), ring.q, -i));
    WittVector term = teichmuller_section(root, a.ring, a.t, a.window());
    term = witt_mul(term, pi_power_vector(a.ring, a.t, a.window(), i));
    acc = witt_add(acc, term);
  }
  return acc;
}

WittVector apply_hom(const RingHom& h, const WittVector& a) {
  WittVector r{h.to, a.t, {}};
  r.coords.reserve(a.window());
  for (const auto& c : a.coords) r.coords.push_back(h.apply(c));
  return r;
}

}  // namespace lazwitt
