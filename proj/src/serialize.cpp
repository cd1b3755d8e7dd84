#include "lazwitt/serialize.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace lazwitt {

using nlohmann::json;

json polynomial_to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : m.factors()) {
      mono.push_back({{"var", v.to_string()},
                      {"num", e.num()},
                      {"pden", e.den_exp()}});
    }
    terms.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
  }
  return json{{"domain", f.domain().to_string()},
              {"p", f.p()},
              {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  std::string dom = j.at("domain").get<std::string>();
  long p = j.at("p").get<long>();
  Domain d = dom == "Fp" ? fp_domain(p) : z_domain(p);
  if (dom != "Fp" && dom != "Z")
    throw std::invalid_argument("unknown polynomial domain '" + dom + "'");
  Polynomial f(d);
  for (const auto& term : j.at("terms")) {
    Monomial m;
    for (const auto& fac : term.at("monomial")) {
      auto v = Variable::parse(fac.at("var").get<std::string>());
      if (!v) throw std::invalid_argument("bad variable in JSON monomial");
      m = m.times(Monomial::of(*v, PExponent(fac.at("num").get<long long>(),
                                             fac.at("pden").get<int>(), p)),
                  p);
    }
    f.add_term(m, mpz_class(term.at("coeff").get<std::string>()));
  }
  return f;
}

json params_to_json(const Params& prm) {
  json j{{"p", prm.p},
         {"q", prm.q},
         {"t", prm.t},
         {"precision", prm.precision}};
  if (prm.m.has_value())
    j["m"] = *prm.m;
  else
    j["m"] = nullptr;
  return j;
}

Params params_from_json(const json& j) {
  std::optional<long> m;
  if (j.contains("m") && !j.at("m").is_null()) m = j.at("m").get<long>();
  return Params::make(j.at("p").get<long>(), j.at("q").get<long>(),
                      j.at("t").get<long>(), m, j.at("precision").get<long>());
}

json lazard_to_json(const LazardElement& a) {
  json coeffs = json::array();
  for (long i = 0; i < a.precision(); ++i)
    coeffs.push_back(polynomial_to_json(a.pi_coefficient(i)));
  return json{{"params", params_to_json(a.params())}, {"coeffs", coeffs}};
}

json ring_to_json(const ResidueRing& ring) {
  json nil = json::object();
  for (const auto& [name, k] : ring.nilpotency) nil[name] = k;
  json omega = json::object();
  for (const auto& [i, img] : ring.omega_images)
    omega[std::to_string(i)] = polynomial_to_json(img);
  return json{{"p", ring.p},
              {"q", ring.q},
              {"generators", ring.generators},
              {"nilpotency", nil},
              {"omega", omega},
              {"omega_default_zero", ring.unlisted_omega_zero}};
}

std::shared_ptr<const ResidueRing> ring_from_json(const json& j) {
  long p = j.at("p").get<long>();
  std::vector<std::string> gens =
      j.at("generators").get<std::vector<std::string>>();
  std::map<std::string, long> nil;
  for (const auto& [name, k] : j.at("nilpotency").items())
    nil[name] = k.get<long>();
  std::map<long, Polynomial> omega;
  for (const auto& [idx, img] : j.at("omega").items())
    omega.emplace(std::stol(idx), polynomial_from_json(img));
  long q = j.at("q").get<long>();
  if (!nil.empty())
    return ResidueRing::with_nilpotent(p, q, std::move(gens), std::move(nil));
  if (!omega.empty() || j.at("omega_default_zero").get<bool>())
    return ResidueRing::specialized(p, q, std::move(gens), std::move(omega),
                                    j.at("omega_default_zero").get<bool>());
  return ResidueRing::perfected(p, q, std::move(gens));
}

json witt_to_json(const WittVector& v) {
  json coords = json::array();
  for (long i = 0; i < v.window(); ++i)
    coords.push_back(polynomial_to_json(v.at(i)));
  return json{{"ring", ring_to_json(*v.ring)}, {"t", v.t}, {"coords", coords}};
}

WittVector witt_from_json(const json& j) {
  auto ring = ring_from_json(j.at("ring"));
  WittVector v{ring, j.at("t").get<long>(), {}};
  for (const auto& c : j.at("coords"))
    v.coords.push_back(polynomial_from_json(c));
  if (v.coords.empty()) throw std::invalid_argument("empty witt vector");
  return v;
}

std::string canonical_json(const json& j) { return j.dump() + "\n"; }

}  // namespace lazwitt
