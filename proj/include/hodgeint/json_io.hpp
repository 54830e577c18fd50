#pragma once

#include <json.hpp>

#include "hodgeint/kpoly.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

inline void to_json(nlohmann::json& j, const Rat& r) { j = r.str(); }

inline void to_json(nlohmann::json& j, const KPoly& p) {
    j = nlohmann::json::array();
    for (const Rat& c : p.coeffs()) j.push_back(c.str());
}

inline void to_json(nlohmann::json& j, const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(c.str());
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline void to_json(nlohmann::json& j, const KSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const KPoly& p : s.coeffs()) {
        nlohmann::json jp;
        to_json(jp, p);
        coeffs.push_back(std::move(jp));
    }
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

} // namespace hodgeint
