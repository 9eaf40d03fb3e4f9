#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace morsenorm {

using VertexId = std::uint32_t;

/// A simplex is a non-empty, strictly increasing list of vertex ids.
///
/// Simplices are ordered canonically by (dimension, vertex sequence); all
/// deterministic output in the library follows this order.
class Simplex {
public:
    Simplex() = default;

    /// Builds a simplex from an arbitrary vertex list, sorting it first.
    /// Throws on an empty list or a repeated vertex.
    static Simplex from_vertices(std::vector<VertexId> vertices) {
        if (vertices.empty()) {
            throw Error("empty simplex");
        }
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
            throw Error("degenerate facet");
        }
        Simplex s;
        s.vertices_ = std::move(vertices);
        return s;
    }

    static Simplex from_vertices(std::initializer_list<VertexId> vertices) {
        return from_vertices(std::vector<VertexId>(vertices));
    }

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// The codimension-one faces, i.e. this simplex with one vertex dropped,
    /// in canonical order. Empty for a vertex.
    std::vector<Simplex> boundary() const {
        std::vector<Simplex> out;
        if (vertices_.size() < 2) {
            return out;
        }
        out.reserve(vertices_.size());
        // Dropping the last vertex first yields lexicographic order.
        for (std::size_t skip = vertices_.size(); skip-- > 0;) {
            Simplex face;
            face.vertices_.reserve(vertices_.size() - 1);
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                if (i != skip) {
                    face.vertices_.push_back(vertices_[i]);
                }
            }
            out.push_back(std::move(face));
        }
        return out;
    }

    /// True iff this simplex is an immediate face of `other`.
    bool is_immediate_face_of(const Simplex& other) const {
        return other.size() == size() + 1 &&
               std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;

    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                      b.vertices_.begin(), b.vertices_.end());
    }

    /// "{0,1,2}"
    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) os << ',';
            os << vertices_[i];
        }
        os << '}';
        return os.str();
    }

    /// "[0,1,2]", the JSON spelling.
    std::string to_list_string() const {
        std::string s = to_string();
        s.front() = '[';
        s.back() = ']';
        return s;
    }

private:
    std::vector<VertexId> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << s.to_string(); }

/// Shorthand used heavily in tests and examples: `simplex({0, 1})`.
inline Simplex simplex(std::initializer_list<VertexId> vertices) {
    return Simplex::from_vertices(vertices);
}

}  // namespace morsenorm
