#pragma once

// JSON (de)serialization for divisor classes and reports.
//
// Class format:
//
//   {"space": "Mg" | "Mg1",
//    "genus": n,
//    "coeffs": {"lambda": "p/q", "psi": "p/q", "delta0": "p/q", ...}}
//
// Coefficient keys omitted from "coeffs" are exactly zero; the literal string
// "unknown" is the Unknown marker. Values are rational strings; exact JSON
// integers are also accepted. Floating-point numbers are rejected — nothing
// in this library is approximate except final display rendering.

#include <string>
#include <utility>

#include <json.hpp>

#include "mslope/classes.hpp"
#include "mslope/errors.hpp"
#include "mslope/rational.hpp"
#include "mslope/theorems.hpp"

namespace mslope {

namespace detail {

inline std::string coeff_key(const Basis& b) {
    switch (b.kind) {
    case Basis::Kind::lambda: return "lambda";
    case Basis::Kind::psi: return "psi";
    case Basis::Kind::delta: return "delta" + std::to_string(b.index);
    }
    throw validation_error("json: unreachable basis kind");
}

inline Basis coeff_key_to_basis(const std::string& key) {
    if (key == "lambda") return Basis::lambda();
    if (key == "psi") return Basis::psi();
    if (key.rfind("delta", 0) == 0 && key.size() > 5) {
        const std::string digits = key.substr(5);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 9)
            return Basis::delta(std::stoi(digits));
    }
    throw validation_error("json: unrecognized coefficient key \"" + key + "\"");
}

inline Coeff coeff_from_json(const std::string& key, const nlohmann::json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "unknown") return Coeff::unknown();
        return Coeff(Rational::parse(s));
    }
    if (v.is_number_integer() || v.is_number_unsigned()) return Coeff(Rational(static_cast<long>(v.get<long long>())));
    if (v.is_number_float())
        throw validation_error("json: coefficient \"" + key +
                               "\" is a floating-point number; use an exact \"p/q\" string");
    throw validation_error("json: coefficient \"" + key + "\" must be a rational string, \"unknown\", or an integer");
}

} // namespace detail

inline nlohmann::json class_to_json(const PartialDivisorClass& d) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const Basis& b : basis_of(d.space, d.genus)) {
        const Coeff c = coefficient(d, b);
        if (c.is_zero()) continue;
        coeffs[detail::coeff_key(b)] = c.is_unknown() ? "unknown" : c.value().str();
    }
    return {{"space", space_tag(d.space)}, {"genus", d.genus}, {"coeffs", std::move(coeffs)}};
}

inline nlohmann::json class_to_json(const DivisorClass& d) { return class_to_json(PartialDivisorClass::from(d)); }
inline nlohmann::json class_to_json(const PointedDivisorClass& d) {
    return class_to_json(PartialDivisorClass::from(d));
}

inline PartialDivisorClass class_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("json: class must be an object");
    if (!j.contains("space") || !j["space"].is_string())
        throw validation_error("json: class needs a \"space\" string (\"Mg\" or \"Mg1\")");
    const std::string tag = j["space"].get<std::string>();
    Space space;
    if (tag == "Mg") space = Space::Mg;
    else if (tag == "Mg1") space = Space::Mg1;
    else throw validation_error("json: unknown space \"" + tag + "\" (expected \"Mg\" or \"Mg1\")");
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw validation_error("json: class needs an integer \"genus\"");
    const int genus = j["genus"].get<int>();
    validate_genus(genus);

    PartialDivisorClass d(space, genus);
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) throw validation_error("json: \"coeffs\" must be an object");
        for (const auto& [key, value] : j["coeffs"].items()) {
            const Basis b = detail::coeff_key_to_basis(key);
            validate_basis(space, genus, b);
            const Coeff c = detail::coeff_from_json(key, value);
            if (b.kind == Basis::Kind::lambda) d.lambda = c;
            else if (b.kind == Basis::Kind::psi) d.psi = c;
            else d.delta[static_cast<size_t>(b.index)] = c;
        }
    }
    return d;
}

inline PartialDivisorClass class_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("json: parse failure: ") + e.what());
    }
    return class_from_json(j);
}

// --- reports -------------------------------------------------------------------

inline nlohmann::json report_to_json(const CheckReport& r) {
    return {{"id", r.statement_id},     {"left", r.left.str()},   {"relation", relation_tag(r.relation)},
            {"right", r.right.str()},   {"witness", r.witness},   {"verdict", verdict_tag(r.verdict)}};
}

inline nlohmann::json row_to_json(const EpsilonRow& r) {
    return {{"g", r.g},
            {"source", upper_bound_source_tag(r.source)},
            {"u", r.u.str()},
            {"binding_i", r.binding_i},
            {"threshold", r.threshold.str()},
            {"epsilon", r.epsilon.str()}};
}

inline nlohmann::json report_to_json(const KodairaReport& r) {
    return {{"genus", r.genus},
            {"convention", convention_tag(r.convention)},
            {"class", class_to_json(r.pushed)},
            {"slope", r.slope_value.str()},
            {"published_slope", r.published_slope.str()},
            {"lambda_match", r.lambda_match}};
}

} // namespace mslope
