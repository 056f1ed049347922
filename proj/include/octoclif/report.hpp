#pragma once

// JSON forms of values and verdict reports.

#include "octoclif/examples.hpp"
#include "octoclif/laws.hpp"

#include <nlohmann/json.hpp>

#include <string>

#ifndef OCTOCLIF_VERSION
#define OCTOCLIF_VERSION "0.0.0"
#endif

namespace octoclif {

using nlohmann::ordered_json;

/// {"blades": {"<decimal mask>": "<rational>"}} with keys in canonical order.
inline ordered_json to_json(const Multivector& x) {
  ordered_json blades = ordered_json::object();
  for (const auto& t : x.terms()) blades[std::to_string(t.blade.mask())] = to_string(t.coeff);
  return {{"blades", blades}};
}

inline Multivector multivector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blades") || !j.at("blades").is_object())
    throw std::invalid_argument("multivector JSON must be an object with a 'blades' object");
  std::vector<Term> terms;
  for (const auto& [key, value] : j.at("blades").items()) {
    if (!value.is_string()) throw std::invalid_argument("blade coefficient for mask " + key + " must be a string");
    std::size_t used = 0;
    unsigned long mask = 0;
    try {
      mask = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || mask >= kBladeCount) throw std::invalid_argument("invalid blade mask '" + key + "'");
    terms.push_back({BladeIndex(static_cast<unsigned>(mask)), parse_rational(value.get<std::string>())});
  }
  return Multivector::from_terms(terms);
}

/// {"x0": "...", ..., "x7": "..."}
inline ordered_json to_json(const Octonion& x) {
  ordered_json out = ordered_json::object();
  for (int a = 0; a < 8; ++a) out["x" + std::to_string(a)] = to_string(x[a]);
  return out;
}

inline Octonion octonion_from_json(const nlohmann::json& j) {
  Octonion out;
  for (int a = 0; a < 8; ++a) {
    const std::string key = "x" + std::to_string(a);
    if (!j.contains(key) || !j.at(key).is_string()) throw std::invalid_argument("octonion JSON lacks string " + key);
    out[a] = parse_rational(j.at(key).get<std::string>());
  }
  return out;
}

inline ordered_json to_json(const Conventions& c) {
  return {{"fold_left", to_string(c.fold.left_order)},
          {"fold_right", to_string(c.fold.right_order)},
          {"odot", to_string(c.odot)},
          {"e7", to_string(c.e7)}};
}

inline ordered_json to_json(const SignGroup& g) {
  return {{"group", g.key}, {"cases", g.cases}, {"plus", g.plus}, {"minus", g.minus}, {"other", g.other},
          {"sign", g.pattern()}};
}

inline ordered_json to_json(const Witness& w) {
  return {{"group", w.group}, {"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

/// `elapsed` is only emitted on request so that reports stay byte-identical
/// across runs.
inline ordered_json to_json(const LawVerdict& v, bool with_elapsed = false) {
  ordered_json pattern = ordered_json::array(), witnesses = ordered_json::array();
  for (const auto& g : v.sign_pattern) pattern.push_back(to_json(g));
  for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
  ordered_json out = {{"law", v.law},
                      {"scope", v.scope},
                      {"status", to_string(v.status)},
                      {"claim", v.claim},
                      {"matches_claim", v.matches_claim},
                      {"sign_pattern", pattern},
                      {"witnesses", witnesses},
                      {"case_count", v.case_count}};
  if (with_elapsed) out["elapsed_ms"] = v.elapsed_ms;
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

inline ordered_json report_header(const Conventions& c, std::uint64_t seed) {
  return {{"conventions", to_json(c)}, {"seed", seed}, {"version", OCTOCLIF_VERSION}};
}

inline ordered_json make_report(const Conventions& c, std::uint64_t seed, const std::vector<LawVerdict>& body,
                                bool with_elapsed = false) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : body) arr.push_back(to_json(v, with_elapsed));
  return {{"header", report_header(c, seed)}, {"body", arr}};
}

}  // namespace octoclif
