#pragma once

#include <string>

#include "json.hpp"
#include "minknot/braid.hpp"
#include "minknot/invariants.hpp"
#include "minknot/oracle.hpp"

namespace minknot {

using nlohmann::json;

inline json rational_json(const Rational& r) { return r.str(); }

// {exponent: coefficient}; coefficients that do not fit int64 are emitted as
// decimal strings.
inline json poly_json(const LaurentPoly& p) {
    json j = json::object();
    for (auto& [e, c] : p.coeffs()) {
        if (c <= BigInt(std::numeric_limits<std::int64_t>::max()) &&
            c >= BigInt(std::numeric_limits<std::int64_t>::min()))
            j[std::to_string(e)] = static_cast<std::int64_t>(c);
        else
            j[std::to_string(e)] = c.str();
    }
    return j;
}

inline LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object()) throw schema_error("polynomial must be an object {exp: coeff}");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e;
        try {
            e = std::stoi(it.key());
        } catch (...) {
            throw schema_error("polynomial exponent not an integer: " + it.key());
        }
        if (it->is_number_integer())
            p.set(e, BigInt(it->get<std::int64_t>()));
        else if (it->is_string())
            p.set(e, BigInt(it->get<std::string>()));
        else
            throw schema_error("polynomial coefficient must be integer or string");
    }
    return p;
}

// Letter g with exponent +1 serializes as +g, with -1 as -g.
inline json word_json(const BraidWord& w) {
    json j = json::object();
    j["strands"] = w.strands;
    j["letters"] = w.letters;
    return j;
}

inline json crossing_json(const Crossing& c) {
    return json{{"ordinal", c.ordinal}, {"t", c.time.str()}, {"k", c.k},
                {"l", c.l},             {"m", c.m},          {"level", c.level},
                {"sign", c.sign}};
}

inline json report_json(const CrossingReport& r) {
    json j;
    j["matched"] = r.matched;
    j["max_time_error"] = r.max_time_error;
    j["time_tolerance"] = r.time_tolerance;
    j["missing"] = json::array();
    for (auto& m : r.missing) j["missing"].push_back({{"t", m.t}, {"k", m.k}, {"l", m.l}});
    j["extra"] = json::array();
    for (auto& x : r.extra) j["extra"].push_back({{"t", x.t}, {"k", x.k}, {"l", x.l}});
    j["sign_disagreements"] = json::array();
    for (auto& d : r.sign_disagreements)
        j["sign_disagreements"].push_back(
            {{"t", d.t}, {"k", d.k}, {"l", d.l}, {"analytic", d.analytic}, {"numeric", d.numeric}});
    j["clean"] = r.clean();
    return j;
}

}  // namespace minknot
