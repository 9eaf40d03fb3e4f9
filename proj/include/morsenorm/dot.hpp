#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "complex.hpp"
#include "hasse.hpp"
#include "morse_function.hpp"
#include "vector_field.hpp"

namespace morsenorm {

// Graphviz rendering of H_M. Nodes are named s<index> in canonical order;
// matched (reversed) edges are dashed.
inline std::string emit_dot(const Complex& k, const VectorField& w,
                            const std::optional<HeightFunction>& h = std::nullopt) {
    auto g = modified_hasse(k, w);
    std::ostringstream os;
    os << "digraph modified_hasse {\n";
    os << "  node [shape=box];\n";
    for (SimplexIndex i = 0; i < k.size(); ++i) {
        os << "  s" << i << " [label=\"" << k.at(i).to_string();
        if (h) os << " : " << (*h)(k.at(i));
        os << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  s" << e.from << " -> s" << e.to;
        if (e.matched) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace morsenorm
