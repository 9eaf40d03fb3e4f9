#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "complex.hpp"
#include "errors.hpp"
#include "morse_function.hpp"
#include "vector_field.hpp"

namespace morsenorm {

/// The JSON interchange document:
///
///     {"facets":   [[0,1],[1,2],[0,2]],
///      "matching": [[[0],[0,1]], [[1],[1,2]]],       (optional)
///      "morse":    [[[0],5], [[0,1],"9/2"], ...]}    (optional)
///
/// Morse values are JSON integers or strings holding an exact decimal
/// ("-2.75") or fraction ("11/4"). Serialization writes integers as JSON
/// numbers and everything else as "p/q".
struct ComplexDocument {
    Complex complex;
    std::optional<VectorField> matching;
    std::optional<RationalFunction> morse;
};

/// Parses "12", "-3", "2.50" or "5/2" exactly. Throws ParseError.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational { throw ParseError("invalid number \"" + std::string(text) + "\""); };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    auto read_digits = [&](std::int64_t& acc, int& count) {
        constexpr auto max = std::numeric_limits<std::int64_t>::max();
        for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos, ++count) {
            int d = text[pos] - '0';
            if (acc > (max - d) / 10) throw ParseError("number out of range \"" + std::string(text) + "\"");
            acc = acc * 10 + d;
        }
    };
    std::int64_t whole = 0;
    int whole_digits = 0;
    read_digits(whole, whole_digits);
    if (whole_digits == 0) return fail();

    Rational value(whole);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::int64_t den = 0;
        int den_digits = 0;
        read_digits(den, den_digits);
        if (den_digits == 0 || den == 0) return fail();
        value = Rational(whole, den);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::int64_t frac = 0;
        int frac_digits = 0;
        read_digits(frac, frac_digits);
        if (frac_digits == 0 || frac_digits > 18) return fail();
        std::int64_t scale = 1;
        for (int i = 0; i < frac_digits; ++i) scale *= 10;
        value += Rational(frac, scale);
    }
    if (pos != text.size()) return fail();
    return negative ? -value : value;
}

namespace detail {

inline std::vector<VertexId> vertex_list(const nlohmann::json& j, std::string_view where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected a vertex list");
    std::vector<VertexId> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
            v.get<std::int64_t>() > std::numeric_limits<VertexId>::max()) {
            throw ParseError(std::string(where) + ": vertex ids must be non-negative integers, got " + v.dump());
        }
        out.push_back(static_cast<VertexId>(v.get<std::int64_t>()));
    }
    return out;
}

inline Simplex known_simplex(const Complex& k, const nlohmann::json& j, std::string_view where) {
    auto vertices = vertex_list(j, where);
    if (vertices.empty()) throw ParseError(std::string(where) + ": empty simplex");
    Simplex s;
    try {
        s = Simplex::from_vertices(std::move(vertices));
    } catch (const Error& e) {
        throw ParseError(std::string(where) + ": " + e.what() + " " + j.dump());
    }
    if (!k.contains(s)) throw ParseError("unknown simplex " + s.to_list_string());
    return s;
}

inline Rational json_value(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("morse values must be integers or exact number strings, got " + j.dump());
}

inline nlohmann::json simplex_json(const Simplex& s) {
    return nlohmann::json(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()));
}

inline nlohmann::json value_json(const Rational& v) {
    if (v.denominator() == 1) return v.numerator();
    return to_string(v);
}

inline nlohmann::json value_json(std::int64_t v) { return v; }

}  // namespace detail

/// Parses and validates a document. Simplices are normalized to sorted
/// vertex lists. Syntax errors carry the position reported by the JSON
/// parser; semantic errors name the offending simplex.
inline ComplexDocument parse_document(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& [key, _] : root.items()) {
        if (key != "facets" && key != "matching" && key != "morse") {
            throw ParseError("unknown key \"" + key + "\"");
        }
    }
    if (!root.contains("facets") || !root["facets"].is_array()) {
        throw ParseError("missing \"facets\" array");
    }
    std::vector<std::vector<VertexId>> facets;
    for (const auto& f : root["facets"]) {
        facets.push_back(detail::vertex_list(f, "facet"));
        if (facets.back().empty()) throw ParseError("empty facet");
    }
    std::optional<Complex> k;
    try {
        k = Complex::from_facets(facets);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }

    ComplexDocument doc{std::move(*k), std::nullopt, std::nullopt};
    if (root.contains("matching")) {
        const auto& m = root["matching"];
        if (!m.is_array()) throw ParseError("\"matching\" must be an array of pairs");
        VectorField field;
        for (const auto& pair : m) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("matching entry must be [simplex, simplex]");
            auto src = detail::known_simplex(doc.complex, pair[0], "matching");
            auto dst = detail::known_simplex(doc.complex, pair[1], "matching");
            if (field.is_source(src)) throw ParseError("duplicate matching source " + src.to_list_string());
            field.set(std::move(src), std::move(dst));
        }
        doc.matching = std::move(field);
    }
    if (root.contains("morse")) {
        const auto& m = root["morse"];
        if (!m.is_array()) throw ParseError("\"morse\" must be an array of [simplex, value] entries");
        RationalFunction f;
        for (const auto& entry : m) {
            if (!entry.is_array() || entry.size() != 2) throw ParseError("morse entry must be [simplex, value]");
            auto s = detail::known_simplex(doc.complex, entry[0], "morse");
            if (f.defined_at(s)) throw ParseError("duplicate morse entry " + s.to_list_string());
            f.set(std::move(s), detail::json_value(entry[1]));
        }
        doc.morse = std::move(f);
    }
    return doc;
}

/// `[[simplex, value], ...]` in canonical simplex order, compact JSON.
template <class Value>
std::string serialize_function(const Complex& k, const MorseFunction<Value>& f) {
    auto out = nlohmann::json::array();
    for (const auto& s : k.simplices()) {
        out.push_back({detail::simplex_json(s), detail::value_json(f(s))});
    }
    return out.dump();
}

inline std::string serialize_field(const VectorField& w) {
    auto out = nlohmann::json::array();
    for (const auto& [src, dst] : w.pairs()) {
        out.push_back({detail::simplex_json(src), detail::simplex_json(dst)});
    }
    return out.dump();
}

/// Normalized form: facets are the maximal simplices in canonical order,
/// matching pairs sorted by source, morse entries in canonical order.
inline std::string serialize_document(const ComplexDocument& doc) {
    nlohmann::json root;
    root["facets"] = nlohmann::json::array();
    for (const auto& s : doc.complex.facets()) root["facets"].push_back(detail::simplex_json(s));
    if (doc.matching) root["matching"] = nlohmann::json::parse(serialize_field(*doc.matching));
    if (doc.morse) {
        auto arr = nlohmann::json::array();
        for (const auto& [s, v] : doc.morse->values()) {
            arr.push_back({detail::simplex_json(s), detail::value_json(v)});
        }
        root["morse"] = std::move(arr);
    }
    return root.dump();
}

}  // namespace morsenorm
