#pragma once

#include <json.hpp>

#include "sumn/laurent.hpp"
#include "sumn/rational.hpp"
#include "sumn/series.hpp"

namespace sumn {

using json = nlohmann::json;

inline json to_json(const LaurentUni& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms)
        terms.push_back({{"e", e}, {"re", rational_str(c.re)}, {"im", rational_str(c.im)}});
    return {{"var", "u"}, {"terms", terms}};
}

inline LaurentUni laurent_uni_from_json(const json& j) {
    LaurentUni p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("e").get<long>(),
                   {parse_rational(t.at("re").get<std::string>()),
                    parse_rational(t.at("im").get<std::string>())});
    return p;
}

inline json to_json(const LaurentBi& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms)
        terms.push_back({{"et", k.first},
                         {"ez", k.second},
                         {"re", rational_str(c.re)},
                         {"im", rational_str(c.im)}});
    return {{"var", "tz"}, {"terms", terms}};
}

inline LaurentBi laurent_bi_from_json(const json& j) {
    LaurentBi p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("et").get<long>(), t.at("ez").get<long>(),
                   {parse_rational(t.at("re").get<std::string>()),
                    parse_rational(t.at("im").get<std::string>())});
    return p;
}

inline json to_json(const EpsSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.c)
        coeffs.push_back({{"re", rational_str(c.re)}, {"im", rational_str(c.im)}});
    return {{"order", s.order}, {"coeffs", coeffs}};
}

}  // namespace sumn
