#include "lazwitt/residue_ring.hpp"

#include <stdexcept>

#include "lazwitt/params.hpp"

namespace lazwitt {

namespace {

std::shared_ptr<const ResidueRing> finish(ResidueRing r) {
  if (!is_prime(r.p) || power_exponent(r.q, r.p) < 1)
    throw std::invalid_argument("bad residue ring parameters");
  for (const auto& [name, k] : r.nilpotency)
    if (k < 1) throw std::invalid_argument("nilpotency order must be >= 1");
  for (const auto& [i, img] : r.omega_images) {
    if (i < 1) throw std::invalid_argument("omega index must be >= 1");
    if (!(img.domain() == fp_domain(r.p)))
      throw std::invalid_argument("omega image domain mismatch");
    if (img.contains_tag(VarTag::Omega) || img.contains_tag(VarTag::Pi))
      throw std::invalid_argument(
          "omega images must be polynomials in the named generators");
  }
  return std::make_shared<const ResidueRing>(std::move(r));
}

}  // namespace

std::shared_ptr<const ResidueRing> ResidueRing::universal(long p, long q) {
  return finish(ResidueRing{p, q, {}, {}, {}, false});
}

std::shared_ptr<const ResidueRing> ResidueRing::perfected(
    long p, long q, std::vector<std::string> gens) {
  return finish(ResidueRing{p, q, std::move(gens), {}, {}, false});
}

std::shared_ptr<const ResidueRing> ResidueRing::with_nilpotent(
    long p, long q, std::vector<std::string> gens,
    std::map<std::string, long> nil) {
  return finish(ResidueRing{p, q, std::move(gens), std::move(nil), {}, false});
}

std::shared_ptr<const ResidueRing> ResidueRing::specialized(
    long p, long q, std::vector<std::string> gens,
    std::map<long, Polynomial> omega, bool zero_default) {
  return finish(ResidueRing{p, q, std::move(gens), {}, std::move(omega),
                            zero_default});
}

Polynomial ResidueRing::omega_value(long i) const {
  if (i < 1) throw std::invalid_argument("omega index must be >= 1");
  auto it = omega_images.find(i);
  if (it != omega_images.end()) return it->second;
  if (unlisted_omega_zero) return zero();
  return Polynomial::variable(domain(), Variable::omega(i));
}

Polynomial ResidueRing::reduce(const Polynomial& f) const {
  if (!(f.domain() == domain()))
    throw std::domain_error("element domain mismatch");
  Polynomial g = f;
  if (!omega_images.empty() || unlisted_omega_zero) {
    g = substitute(g, [&](const Variable& v) -> std::optional<Polynomial> {
      if (v.tag != VarTag::Omega) return std::nullopt;
      return omega_value(v.index);
    });
  }
  if (nilpotency.empty()) return g;
  Polynomial out(domain());
  for (const auto& [m, c] : g.terms()) {
    bool dead = false;
    for (const auto& [v, e] : m.factors()) {
      if (v.tag != VarTag::Gen) continue;
      auto it = nilpotency.find(v.name);
      if (it != nilpotency.end() &&
          e.compare(PExponent::integer(it->second), p) >= 0) {
        dead = true;
        break;
      }
    }
    if (!dead) out.add_term(m, c);
  }
  return out;
}

bool ResidueRing::operator==(const ResidueRing& o) const {
  return p == o.p && q == o.q && generators == o.generators &&
         nilpotency == o.nilpotency && omega_images == o.omega_images &&
         unlisted_omega_zero == o.unlisted_omega_zero;
}

Polynomial RingHom::apply(const Polynomial& f) const {
  Polynomial g =
      substitute(f, [&](const Variable& v) -> std::optional<Polynomial> {
        if (v.tag == VarTag::Gen) {
          auto it = gen_images.find(v.name);
          if (it != gen_images.end()) return it->second;
          return std::nullopt;
        }
        if (v.tag == VarTag::Omega) return to->omega_value(v.index);
        return std::nullopt;
      });
  return to->reduce(g);
}

}  // namespace lazwitt
