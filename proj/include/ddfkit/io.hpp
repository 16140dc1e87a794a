#pragma once

#include <ddfkit/core.hpp>
#include <ddfkit/technology.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace ddfkit::io {

using nlohmann::json;

/// Malformed technology document.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"kind": "quadratic_separable", "b": [...], "a": [...], "B": [[...], ...]} or
/// {"kind": "staircase" | "polyhedral_a" | "polyhedral_b"}. Parameters are validated; invalid
/// quadratic parameters raise InvalidParameters with the full report.
inline Technology technology_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("technology must be an object with a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    const bool has_params = j.contains("b") || j.contains("a") || j.contains("B");
    if (kind == "quadratic_separable") {
        if (!j.contains("b") || !j.contains("a") || !j.contains("B"))
            throw SchemaError("quadratic_separable needs \"b\", \"a\" and \"B\"");
        QuadraticSeparableParams p;
        try {
            p.b = j["b"].get<Vec>();
            p.a = j["a"].get<Vec>();
            p.B = j["B"].get<Matrix>();
        } catch (const json::exception& e) {
            throw SchemaError(std::string("quadratic_separable parameters must be numeric arrays: ") + e.what());
        }
        return Technology::quadratic_separable(std::move(p));
    }
    if (has_params) throw SchemaError("\"b\", \"a\", \"B\" are only allowed for quadratic_separable");
    if (kind == "staircase") return Technology::staircase();
    if (kind == "polyhedral_a") return Technology::polyhedral_a();
    if (kind == "polyhedral_b") return Technology::polyhedral_b();
    throw SchemaError("unknown technology kind \"" + kind + "\"");
}

inline json to_json(const Technology& tech) {
    json j;
    j["kind"] = std::string(tech.name());
    if (tech.is_quadratic()) {
        const auto& p = tech.quadratic_params();
        j["b"] = p.b;
        j["a"] = p.a;
        j["B"] = p.B;
    }
    return j;
}

inline Technology read_technology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open technology file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("technology file " + path + " is not valid JSON: " + e.what());
    }
    return technology_from_json(j);
}

/// Finite values as numbers, negative infinity as the string "-inf".
inline json to_json(const ExtendedValue& v) {
    if (v.is_neg_infinity()) return "-inf";
    return v.value();
}

inline ExtendedValue extended_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "-inf") return ExtendedValue::neg_infinity();
    if (j.is_number()) return ExtendedValue::finite(j.get<double>());
    throw SchemaError("extended value must be a number or \"-inf\"");
}

/// "0.5,0.5" -> {0.5, 0.5}.
inline Vec parse_vector(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw SchemaError("not a number: \"" + item + "\"");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw SchemaError("not a number: \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw SchemaError("empty vector");
    return out;
}

} // namespace ddfkit::io
