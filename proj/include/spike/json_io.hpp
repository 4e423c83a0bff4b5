#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spike/laurent.hpp"
#include "spike/measure.hpp"

namespace spike {

namespace detail {

inline std::int64_t to_json_int(const mpz_class& c) {
    if (!c.fits_slong_p())
        throw std::overflow_error("laurent JSON: coefficient exceeds the integer range");
    return c.get_si();
}

inline nlohmann::ordered_json coeff_array(const std::vector<mpz_class>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : v) arr.push_back(to_json_int(c));
    return arr;
}

}  // namespace detail

/// {"pos": [...], "neg": [...]} with the canonical no-trailing-zero rule.
inline nlohmann::ordered_json to_json(const LaurentSeries& f) {
    nlohmann::ordered_json j;
    j["pos"] = detail::coeff_array(f.pos());
    j["neg"] = detail::coeff_array(f.neg());
    return j;
}

inline LaurentSeries laurent_from_json(const nlohmann::json& j) {
    std::vector<mpz_class> pos, neg;
    for (const auto& c : j.at("pos")) pos.emplace_back(c.get<std::int64_t>());
    for (const auto& c : j.at("neg")) neg.emplace_back(c.get<std::int64_t>());
    return {std::move(pos), std::move(neg)};
}

inline nlohmann::ordered_json to_json(const PiScalar& v) {
    nlohmann::ordered_json j;
    j["rat"] = v.rat.str();
    j["pi"] = v.pi.str();
    return j;
}

inline PiScalar pi_scalar_from_json(const nlohmann::json& j) {
    return {Rational::from_string(j.at("rat").get<std::string>()),
            Rational::from_string(j.at("pi").get<std::string>())};
}

/// {"dim": n, "l": l, "ks": [...], "matrix": [[{"rat","pi"}]],
///  "partition": [[k,...],...] or "none"}.
inline nlohmann::ordered_json to_json(const GramReport& report) {
    nlohmann::ordered_json j;
    j["dim"] = report.dim;
    j["l"] = report.l;
    j["ks"] = report.ks;
    auto matrix = nlohmann::ordered_json::array();
    for (const auto& row : report.matrix) {
        auto jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) jrow.push_back(to_json(cell));
        matrix.push_back(std::move(jrow));
    }
    j["matrix"] = std::move(matrix);
    if (report.partition)
        j["partition"] = *report.partition;
    else
        j["partition"] = "none";
    return j;
}

}  // namespace spike
