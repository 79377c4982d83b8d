#pragma once

// JSON encodings. Polynomials are {"terms": [{"q":..,"t":..,"x":..,"c":..}]}
// with terms in ascending (e_q, e_t, e_x) order, so equal polynomials
// serialize to identical bytes.

#include <nlohmann/json.hpp>

#include "setpart/genfun.hpp"
#include "setpart/oeis.hpp"
#include "setpart/poly.hpp"
#include "setpart/stats.hpp"

namespace setpart {

nlohmann::json to_json(const MultiPoly& p);
/// Throws std::invalid_argument on a malformed document.
MultiPoly multipoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StatProfile& s);
nlohmann::json to_json(const VerifyRecord& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const MaxSpreadReport& r);
nlohmann::json to_json(const CrosscheckReport& r);
nlohmann::json to_json(const OeisSequence& s);

}  // namespace setpart
