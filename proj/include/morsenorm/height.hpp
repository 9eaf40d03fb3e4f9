#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "admissibility.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "hasse.hpp"
#include "morse_function.hpp"
#include "vector_field.hpp"

namespace morsenorm {

/// The height function of an admissible field W: for each σ, the largest
/// number of unmatched edges on a directed path of H_M starting at σ.
///
/// H_M is acyclic, so this is a longest-path dynamic program over a DFS
/// post-order: h(v) = max over out-edges v→u of h(u) + [edge unmatched],
/// with sinks at 0. Linear in nodes + edges.
///
/// Throws InvalidField or InadmissibleField (with a witness V-path).
inline HeightFunction height(const Complex& k, const VectorField& w) {
    auto g = modified_hasse(k, w);
    auto dfs = depth_first_postorder(g);
    if (dfs.cycle) {
        throw InadmissibleField(detail::cycle_to_vpath(k, *dfs.cycle));
    }
    std::vector<std::int64_t> h(k.size(), 0);
    for (SimplexIndex v : dfs.postorder) {
        for (auto e : g.out_edges(v)) {
            const auto& edge = g.edge(e);
            h[v] = std::max(h[v], h[edge.to] + (edge.matched ? 0 : 1));
        }
    }
    return function_from_index(k, h);
}

inline constexpr std::size_t default_oracle_limit = 64;

/// The oracle size bound: NORMALIZE_ORACLE_LIMIT if set to a positive
/// integer, else 64 simplices.
inline std::size_t oracle_limit_from_env() {
    if (const char* env = std::getenv("NORMALIZE_ORACLE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_oracle_limit;
}

namespace detail {

// Walks every simple path out of `node`, tracking the unmatched-edge count.
inline void enumerate_paths(const Digraph& g, SimplexIndex node, std::int64_t count,
                            std::vector<bool>& on_path, std::int64_t& best) {
    best = std::max(best, count);
    on_path[node] = true;
    for (auto e : g.out_edges(node)) {
        const auto& edge = g.edge(e);
        if (!on_path[edge.to]) {
            enumerate_paths(g, edge.to, count + (edge.matched ? 0 : 1), on_path, best);
        }
    }
    on_path[node] = false;
}

}  // namespace detail

/// Reference computation of height(): enumerates every simple directed
/// path of H_M from each simplex and counts its non-matching edges.
/// Exponential; refuses complexes above `limit` simplices ("oracle size
/// limit"). When `limit` is not given, oracle_limit_from_env() applies.
inline HeightFunction height_oracle(const Complex& k, const VectorField& w,
                                    std::optional<std::size_t> limit = std::nullopt) {
    std::size_t bound = limit.value_or(oracle_limit_from_env());
    if (k.size() > bound) {
        throw Error("oracle size limit: " + std::to_string(k.size()) + " simplices exceeds " +
                    std::to_string(bound));
    }
    require_admissible(k, w);
    auto g = modified_hasse(k, w);
    std::vector<std::int64_t> h(k.size(), 0);
    std::vector<bool> on_path(k.size(), false);
    for (SimplexIndex v = 0; v < k.size(); ++v) {
        detail::enumerate_paths(g, v, 0, on_path, h[v]);
    }
    return function_from_index(k, h);
}

}  // namespace morsenorm
