#include "lazwitt/lazjet.hpp"

#include <stdexcept>

#include "lazwitt/lazard.hpp"
#include "lazwitt/qpolys.hpp"

namespace lazwitt {

std::shared_ptr<const JetExpr> JetExpr::gen(std::string name) {
  JetExpr e;
  e.kind = Kind::Gen;
  e.name = std::move(name);
  return std::make_shared<const JetExpr>(std::move(e));
}

std::shared_ptr<const JetExpr> JetExpr::omega(long i) {
  if (i < 1) throw std::invalid_argument("omega index must be >= 1");
  JetExpr e;
  e.kind = Kind::Omega;
  e.index = i;
  return std::make_shared<const JetExpr>(std::move(e));
}

std::shared_ptr<const JetExpr> JetExpr::pi() {
  JetExpr e;
  e.kind = Kind::Pi;
  return std::make_shared<const JetExpr>(std::move(e));
}

std::shared_ptr<const JetExpr> JetExpr::integer(long v) {
  JetExpr e;
  e.kind = Kind::Int;
  e.value = v;
  return std::make_shared<const JetExpr>(std::move(e));
}

std::shared_ptr<const JetExpr> JetExpr::add(
    std::shared_ptr<const JetExpr> a, std::shared_ptr<const JetExpr> b) {
  JetExpr e;
  e.kind = Kind::Add;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return std::make_shared<const JetExpr>(std::move(e));
}

std::shared_ptr<const JetExpr> JetExpr::mul(
    std::shared_ptr<const JetExpr> a, std::shared_ptr<const JetExpr> b) {
  JetExpr e;
  e.kind = Kind::Mul;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return std::make_shared<const JetExpr>(std::move(e));
}

std::string JetExpr::to_text() const {
  switch (kind) {
    case Kind::Gen: return name;
    case Kind::Omega: return "w" + std::to_string(index);
    case Kind::Pi: return "pi";
    case Kind::Int: return std::to_string(value);
    case Kind::Add: return "(" + lhs->to_text() + " + " + rhs->to_text() + ")";
    case Kind::Mul: return "(" + lhs->to_text() + " * " + rhs->to_text() + ")";
  }
  return "?";
}

std::shared_ptr<const ResidueRing> jet_carrier_ring(const Params& prm) {
  return ResidueRing::universal(prm.p, prm.q);
}

namespace {

// coordinates of an integer constant through the Lazard-side greedy
// pi-expansion (independent of the witt-operation route)
std::vector<Polynomial> integer_coordinates(long v, const Params& prm) {
  if (v >= 0) {
    return pi_expansion_coordinates(
        normalize(RawSeries::constant(prm, mpz_class(v))));
  }
  // negative constants still have pi-expansion coordinates
  return pi_expansion_coordinates(
      normalize(RawSeries::constant(prm, mpz_class(v))));
}

}  // namespace

std::vector<Polynomial> jet_coordinates(const JetExpr& e, const Params& prm) {
  long n = prm.precision;
  Domain fd = fp_domain(prm.p);
  std::vector<Polynomial> out(n, Polynomial::zero(fd));
  switch (e.kind) {
    case JetExpr::Kind::Gen:
      for (long i = 0; i < n; ++i)
        out[i] = Polynomial::variable(fd, Variable::jet(e.name, i));
      return out;
    case JetExpr::Kind::Omega:
      out[0] = Polynomial::variable(fd, Variable::omega(e.index));
      return out;
    case JetExpr::Kind::Pi:
      if (n >= 2) out[1] = Polynomial::constant(fd, 1);
      return out;
    case JetExpr::Kind::Int:
      return integer_coordinates(e.value, prm);
    case JetExpr::Kind::Add:
    case JetExpr::Kind::Mul: {
      std::vector<Polynomial> a = jet_coordinates(*e.lhs, prm);
      std::vector<Polynomial> b = jet_coordinates(*e.rhs, prm);
      WittOp op =
          e.kind == JetExpr::Kind::Add ? WittOp::Add : WittOp::Mul;
      for (long i = 0; i < n; ++i) {
        const Polynomial& qi = compute_q(op, i, prm.p, prm.q, prm.t);
        out[i] = substitute(
            qi, [&](const Variable& v) -> std::optional<Polynomial> {
              switch (v.tag) {
                case VarTag::X: return a[v.index];
                case VarTag::Y: return b[v.index];
                default: return std::nullopt;  // omegas stay free
              }
            });
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Polynomial lazardian_jet_relations(const JetExpr& e, long n,
                                   const Params& prm) {
  if (n < 0 || n >= prm.precision)
    throw std::out_of_range("jet order outside the window");
  return jet_coordinates(e, prm)[n];
}

WittVector eta_prime(const JetExpr& e, const Params& prm) {
  auto ring = jet_carrier_ring(prm);
  long window = prm.precision;
  Domain fd = ring->domain();
  switch (e.kind) {
    case JetExpr::Kind::Gen: {
      WittVector v = witt_zero(ring, prm.t, window);
      for (long i = 0; i < window; ++i)
        v.coords[i] = Polynomial::variable(fd, Variable::jet(e.name, i));
      return v;
    }
    case JetExpr::Kind::Omega:
      return teichmuller_section(
          Polynomial::variable(fd, Variable::omega(e.index)), ring, prm.t,
          window);
    case JetExpr::Kind::Pi:
      return pi_vector(ring, prm.t, window);
    case JetExpr::Kind::Int:
      return integer_image(e.value, ring, prm.t, window);
    case JetExpr::Kind::Add:
      return witt_add(eta_prime(*e.lhs, prm), eta_prime(*e.rhs, prm));
    case JetExpr::Kind::Mul:
      return witt_mul(eta_prime(*e.lhs, prm), eta_prime(*e.rhs, prm));
  }
  throw std::logic_error("unreachable");
}

Polynomial eps_prime(const WittVector& w, long n) { return w.at(n); }

}  // namespace lazwitt
