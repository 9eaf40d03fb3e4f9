#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "vector_field.hpp"

namespace morsenorm {

/// Directed graph on the simplices of a complex. Node i is simplex i of
/// the complex it was built from.
class Digraph {
public:
    struct Edge {
        SimplexIndex from;
        SimplexIndex to;
        bool matched = false;

        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge& a, const Edge& b) {
            return std::tie(a.from, a.to, a.matched) <=> std::tie(b.from, b.to, b.matched);
        }
    };

    Digraph(std::vector<Simplex> nodes, std::vector<Edge> edges)
        : nodes_(std::move(nodes)), edges_(std::move(edges)), out_(nodes_.size()) {
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            out_[edges_[e].from].push_back(e);
        }
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Simplex>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge ids leaving `node`, ordered by target index.
    const std::vector<std::size_t>& out_edges(SimplexIndex node) const { return out_[node]; }
    const Edge& edge(std::size_t id) const { return edges_[id]; }

    std::size_t matched_count() const {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.matched; }));
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Simplex> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

/// H_K: one edge τ → σ for every σ ≺ τ.
inline Digraph hasse_diagram(const Complex& k) {
    std::vector<Digraph::Edge> edges;
    edges.reserve(k.incidence_count());
    for (SimplexIndex t = 0; t < k.size(); ++t) {
        for (SimplexIndex s : k.faces(t)) {
            edges.push_back({t, s, false});
        }
    }
    return Digraph(k.simplices(), std::move(edges));
}

/// H_M: the Hasse diagram with each matched edge reversed (σ → W(σ)) and
/// flagged. Throws InvalidField if `w` is not a valid field over `k`.
inline Digraph modified_hasse(const Complex& k, const VectorField& w) {
    IndexedField field(k, w);
    std::vector<Digraph::Edge> edges;
    edges.reserve(k.incidence_count());
    for (SimplexIndex t = 0; t < k.size(); ++t) {
        for (SimplexIndex s : k.faces(t)) {
            if (field.up[s] == t) {
                edges.push_back({s, t, true});
            } else {
                edges.push_back({t, s, false});
            }
        }
    }
    return Digraph(k.simplices(), std::move(edges));
}

/// Result of a depth-first traversal over every node of a digraph.
struct DfsResult {
    /// Nodes in post-order (every node after all nodes reachable from it),
    /// complete only when `cycle` is empty.
    std::vector<SimplexIndex> postorder;
    /// A directed cycle v0 → v1 → … → v_{n-1} → v0, if one exists.
    std::optional<std::vector<SimplexIndex>> cycle;
};

/// Iterative DFS. Roots are taken in increasing node index and successors
/// in increasing target index, so the result is fully deterministic.
inline DfsResult depth_first_postorder(const Digraph& g) {
    enum class Color : unsigned char { White, Grey, Black };
    std::vector<Color> color(g.node_count(), Color::White);
    DfsResult result;
    result.postorder.reserve(g.node_count());

    // Stack frames: node and position within its out-edge list.
    std::vector<std::pair<SimplexIndex, std::size_t>> stack;
    for (SimplexIndex root = 0; root < g.node_count(); ++root) {
        if (color[root] != Color::White) continue;
        color[root] = Color::Grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [node, pos] = stack.back();
            const auto& out = g.out_edges(node);
            if (pos == out.size()) {
                color[node] = Color::Black;
                result.postorder.push_back(node);
                stack.pop_back();
                continue;
            }
            SimplexIndex next = g.edge(out[pos++]).to;
            if (color[next] == Color::White) {
                color[next] = Color::Grey;
                stack.emplace_back(next, 0);
            } else if (color[next] == Color::Grey) {
                // Back edge: the cycle is the stack suffix starting at `next`.
                std::vector<SimplexIndex> cycle;
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [next](const auto& frame) { return frame.first == next; });
                for (; it != stack.end(); ++it) cycle.push_back(it->first);
                result.cycle = std::move(cycle);
                return result;
            }
        }
    }
    return result;
}

}  // namespace morsenorm
