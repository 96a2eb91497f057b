#pragma once

#include "hypernum/ambient.hpp"
#include "hypernum/hyperaxioms.hpp"
#include "hypernum/signlayer.hpp"

#include <json.hpp>

#include <string>

namespace hypernum {

/// JSON forms used by every CLI command:
///   Hyper      {"sign": "0|+|-|L", "mag": "p/q"}
///   HyperSet   array of Hyper in canonical (sign, magnitude) order
///   SignSet    array of sign tokens in canonical order
/// Rationals are always strings ("p" or "p/q"), never floats.
inline nlohmann::json to_json(const Hyper& h) {
    return {{"sign", std::string(sign_token(h.sign()))}, {"mag", h.magnitude().str()}};
}

inline nlohmann::json to_json(const HyperSet& set) {
    nlohmann::json out = nlohmann::json::array();
    for (const Hyper& h : set) out.push_back(to_json(h));
    return out;
}

inline nlohmann::json to_json(const SignSet& set) {
    nlohmann::json out = nlohmann::json::array();
    for (Sign s : set.to_vector()) out.push_back(std::string(sign_token(s)));
    return out;
}

inline nlohmann::json to_json(const AmbientElem& u) {
    return {{"shadow", u.shadow().str()}, {"mass", u.mass().str()}};
}

inline nlohmann::json to_json(const AxiomReport& r) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        counterexamples.push_back({{"axiom", c.axiom}, {"witness", c.witness}, {"note", c.note}});
    return {{"commutative", r.commutative},
            {"associative", r.associative},
            {"neutral", r.neutral ? nlohmann::json(*r.neutral) : nlohmann::json(nullptr)},
            {"unique_inverses", r.unique_inverses},
            {"reversible", r.reversible},
            {"counterexamples", counterexamples}};
}

inline nlohmann::json to_json(const HyperfieldReport& r) {
    nlohmann::json out = to_json(r.additive);
    out["zero_absorbing"] = r.zero_absorbing;
    out["units_group"] = r.units_group;
    out["distributive"] = r.distributive;
    for (const auto& c : r.counterexamples)
        out["counterexamples"].push_back(
            {{"axiom", c.axiom}, {"witness", c.witness}, {"note", c.note}});
    return out;
}

} // namespace hypernum
