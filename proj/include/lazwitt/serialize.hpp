#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "lazwitt/lazard.hpp"
#include "lazwitt/polynomial.hpp"
#include "lazwitt/witt.hpp"

namespace lazwitt {

// JSON schema (keys are emitted sorted, output is byte-deterministic):
//   polynomial: {"domain":"Fp"|"Z","p":int,
//                "terms":[{"coeff":string,
//                          "monomial":[{"var":string,"num":int,"pden":int}]}]}
//   lazard:     {"params":{...},"coeffs":[<polynomial>...]}
//   witt:       {"ring":{...},"t":int,"coords":[<polynomial>...]}
nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const Params& prm);
Params params_from_json(const nlohmann::json& j);

nlohmann::json lazard_to_json(const LazardElement& a);

nlohmann::json ring_to_json(const ResidueRing& ring);
std::shared_ptr<const ResidueRing> ring_from_json(const nlohmann::json& j);

nlohmann::json witt_to_json(const WittVector& v);
WittVector witt_from_json(const nlohmann::json& j);

std::string canonical_json(const nlohmann::json& j);  // compact dump + '\n'

}  // namespace lazwitt
