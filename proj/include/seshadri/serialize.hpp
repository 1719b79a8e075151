#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "seshadri/demazure.hpp"
#include "seshadri/nok.hpp"

namespace seshadri {

using Json = nlohmann::json;

Json to_json(const CartanData& cd);
CartanData cartan_from_json(const Json& j);

/// {cartan, lambda, tau, qset, extended, vertices, edges}.
Json to_json(const StratPoset& p);
/// Rebuilds the poset from cartan, lambda, tau, qset and checks the stored
/// vertices and edges against it (ValidationError on mismatch).
StratPoset poset_from_json(const Json& j);

Json to_json(const Chain& chain, const StratPoset& p);
Json to_json(const StratPoset& p, const FanElement& a);
Json to_json(const StratPoset& p, const LSPath& path);
/// [{weight, mult}] sorted by weight.
Json to_json(const Character& chi);
Json to_json(const DividedPowerMonomial& mono);
/// {chains, degree, hilbert}.
Json nok_to_json(const StratPoset& p, const std::vector<std::int64_t>& ms);

Json rational_to_json(const Rational& q);
Json integer_to_json(const Integer& n);

/// One row per element, columns are the vertex labels in vertex order.
std::string fan_to_csv(const StratPoset& p, const std::vector<FanElement>& elements);
std::string character_to_csv(const Character& chi);

}  // namespace seshadri
