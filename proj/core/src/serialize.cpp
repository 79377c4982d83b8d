#include "setpart/serialize.hpp"

#include <stdexcept>

namespace setpart {

using nlohmann::json;

namespace {

json rgf_list(const std::vector<Rgf>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_rgf(w));
  return out;
}

}  // namespace

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e.q}, {"t", e.t}, {"x", e.x}, {"c", c}});
  return {{"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
  try {
    MultiPoly out;
    for (const auto& term : j.at("terms")) {
      out.add_term(Exponents{term.at("q").get<int>(), term.at("t").get<int>(), term.at("x").get<int>()},
                   term.at("c").get<MultiPoly::Coeff>());
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json to_json(const StatProfile& s) {
  json out = json::object();
  for (const auto& [name, value] : s.values()) out[name] = value;
  return out;
}

json to_json(const VerifyRecord& r) {
  return {{"n", r.n},
          {"formula_terms", to_json(r.formula)["terms"]},
          {"oracle_terms", to_json(r.oracle)["terms"]},
          {"equal", r.equal},
          {"difference_terms", to_json(r.difference)["terms"]},
          {"mode", std::string(to_string(r.mode))}};
}

json to_json(const VerifyReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  json out{{"id", r.name}, {"expected_pass", r.expected_pass}, {"passed", r.all_equal()}, {"records", records}};
  if (auto f = r.first_failure()) out["first_failure"] = *f;
  return out;
}

json to_json(const MaxSpreadReport& r) {
  json out{{"n", r.n},
           {"expected_max", r.expected_max},
           {"max_spread", r.max_spread},
           {"max_matches", r.max_matches},
           {"maximizers", rgf_list(r.maximizers)},
           {"blocks_match", r.blocks_match},
           {"prefix_form", r.prefix_form},
           {"family_exact", r.family_exact},
           {"max_spread_all", r.max_spread_all},
           {"all_max_matches", r.all_max_matches},
           {"maximizers_all_count", r.maximizers_all.size()}};
  if (r.odd_family_exact) {
    out["odd_family_exact"] = *r.odd_family_exact;
    out["unexplained"] = rgf_list(r.unexplained);
  }
  return out;
}

json to_json(const CrosscheckReport& r) {
  return {{"id", r.id}, {"matched", r.matched}, {"offset", r.offset}, {"compared_terms", r.compared_terms}};
}

json to_json(const OeisSequence& s) {
  return {{"id", s.id}, {"offset", s.offset}, {"terms", s.terms}, {"truncated", s.truncated}};
}

}  // namespace setpart
