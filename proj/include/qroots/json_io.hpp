#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qroots/errors.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"
#include "qroots/real_polynomial.hpp"
#include "qroots/solver.hpp"
#include "qroots/testgen.hpp"
#include "qroots/vieta.hpp"

namespace qroots {

/// Input that does not match the documented JSON schema.
struct SchemaError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Emission. Reports are assembled by hand so that the bytes are a pure
// function of the values: fixed key order, no locale, every number printed
// with up to 17 significant digits (exact double round-trip).

inline std::string json_number(double v) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string json_number(std::int64_t v) { return std::to_string(v); }

inline std::string json_quaternion(const Quaternion& q) {
    return "[" + json_number(q.s) + "," + json_number(q.x) + "," +
           json_number(q.y) + "," + json_number(q.z) + "]";
}

inline std::string json_real_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += json_number(values[i]);
    }
    return out + "]";
}

inline std::string json_polynomial(const QuatPolynomial& poly) {
    std::string out = "{\"side\":\"";
    out += poly.side == Side::right ? "right" : "left";
    out += "\",\"coefficients\":[";
    for (std::size_t m = 0; m < poly.coeffs.size(); ++m) {
        if (m > 0) out += ",";
        out += json_quaternion(poly.coeffs[m]);
    }
    return out + "]}";
}

inline std::string json_root(const QuatRoot& root) {
    if (const auto* iso = std::get_if<IsolatedRoot>(&root))
        return "{\"type\":\"isolated\",\"point\":" + json_quaternion(iso->point) +
               ",\"multiplicity\":" + std::to_string(iso->multiplicity) + "}";
    const auto& sphere = std::get<SphericalRoot>(root);
    return "{\"type\":\"spherical\",\"x0\":" + json_number(sphere.x0) +
           ",\"r\":" + json_number(sphere.r) +
           ",\"multiplicity\":" + std::to_string(sphere.multiplicity) + "}";
}

inline std::string json_rootset(const RootSet& rs) {
    std::string out = "{\"roots\":[";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (i > 0) out += ",";
        out += json_root(rs.roots[i]);
    }
    out += "],\"zero_root_multiplicity\":" +
           std::to_string(rs.zero_root_multiplicity) +
           ",\"degree\":" + std::to_string(rs.degree) + "}";
    return out;
}

inline std::string json_identity(const IdentityCheck& check) {
    return "{\"lhs\":" + json_number(check.lhs) +
           ",\"rhs\":" + json_number(check.rhs) +
           ",\"residual\":" + json_number(check.residual) + "}";
}

inline std::string json_vieta(const VietaReport& report) {
    std::string out = "{\"product_moduli\":" + json_identity(report.product_moduli);
    out += ",\"sum_scalars\":" + json_identity(report.sum_scalars);
    out += ",\"sum_sc_over_modsq\":";
    out += report.sum_sc_over_modsq ? json_identity(*report.sum_sc_over_modsq)
                                    : "null";
    out += ",\"pure_vector\":{\"applies\":";
    out += report.pure_vector.applies ? "true" : "false";
    out += ",\"dot_top\":" + json_number(report.pure_vector.dot_top);
    out += ",\"dot_bottom\":" + json_number(report.pure_vector.dot_bottom);
    out += "},\"zero_root_multiplicity\":" +
           std::to_string(report.zero_root_multiplicity) + "}";
    return out;
}

// ---------------------------------------------------------------------------
// Parsing, via nlohmann. Shape violations raise SchemaError.

inline Quaternion quaternion_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw SchemaError("quaternion must be an array of 4 numbers");
    for (const auto& c : j)
        if (!c.is_number()) throw SchemaError("quaternion components must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
            j[3].get<double>()};
}

inline QuatPolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("polynomial must be an object");
    if (!j.contains("side") || !j["side"].is_string())
        throw SchemaError("polynomial needs a \"side\" of \"right\" or \"left\"");
    const std::string side = j["side"].get<std::string>();
    if (side != "right" && side != "left")
        throw SchemaError("polynomial side must be \"right\" or \"left\"");
    if (!j.contains("coefficients") || !j["coefficients"].is_array() ||
        j["coefficients"].empty())
        throw SchemaError("polynomial needs a nonempty \"coefficients\" array");
    QuatPolynomial poly;
    poly.side = side == "right" ? Side::right : Side::left;
    for (const auto& c : j["coefficients"])
        poly.coeffs.push_back(quaternion_from_json(c));
    return poly;
}

inline GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("generator spec must be an object");
    GeneratorSpec spec;
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.degree_bound = j.value("degree_bound", 6);
    spec.coefficient_scale = j.value("coefficient_scale", 2.0);
    if (j.contains("planted")) {
        if (!j["planted"].is_array())
            throw SchemaError("\"planted\" must be an array");
        for (const auto& action : j["planted"]) {
            const std::string type = action.value("type", "");
            if (type == "sphere") {
                spec.planted.emplace_back(PlantSphere{
                    action.at("x0").get<double>(), action.at("r").get<double>()});
            } else if (type == "isolated") {
                spec.planted.emplace_back(
                    PlantIsolated{quaternion_from_json(action.at("point"))});
            } else {
                throw SchemaError("plant type must be \"sphere\" or \"isolated\"");
            }
        }
    }
    return spec;
}

inline std::string json_generator_spec(const GeneratorSpec& spec) {
    std::string out = "{\"seed\":" + std::to_string(spec.seed);
    out += ",\"degree_bound\":" + std::to_string(spec.degree_bound);
    out += ",\"coefficient_scale\":" + json_number(spec.coefficient_scale);
    out += ",\"planted\":[";
    for (std::size_t i = 0; i < spec.planted.size(); ++i) {
        if (i > 0) out += ",";
        if (const auto* sphere = std::get_if<PlantSphere>(&spec.planted[i]))
            out += "{\"type\":\"sphere\",\"x0\":" + json_number(sphere->x0) +
                   ",\"r\":" + json_number(sphere->r) + "}";
        else
            out += "{\"type\":\"isolated\",\"point\":" +
                   json_quaternion(std::get<PlantIsolated>(spec.planted[i]).point) +
                   "}";
    }
    return out + "]}";
}

}  // namespace qroots
