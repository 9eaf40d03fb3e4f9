#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "admissibility.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "hasse.hpp"
#include "morse_function.hpp"
#include "vector_field.hpp"

// Seeded generators of complexes, admissible fields and Morse functions.
// Every generator is a deterministic function of its arguments.

namespace morsenorm {

using Rng = std::mt19937_64;

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// All (size)-subsets of {0, …, n-1} in lexicographic order.
inline std::vector<std::vector<VertexId>> subsets(int n, int size) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) cur[i] = static_cast<VertexId>(i);
    if (size > n || size <= 0) return out;
    while (true) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[i] == static_cast<VertexId>(n - size + i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// Closure of a random facet set on vertices 0 … n-1.
///
/// Every `dim`-subset (dim clamped to n-1) is kept with probability
/// `density`; lower-dimensional subsets of positive dimension with
/// probability density/4, so complexes of mixed dimension appear. Vertices
/// left uncovered are added as isolated points.
inline Complex random_complex(int n_vertices, int dim, double density, std::uint64_t seed) {
    if (n_vertices < 1 || dim < 0 || !(density >= 0.0 && density <= 1.0)) {
        throw Error("invalid parameters: need n_vertices >= 1, dim >= 0, density in [0,1]");
    }
    int top = std::min(dim, n_vertices - 1);
    Rng rng(seed);
    std::vector<std::vector<VertexId>> facets;
    std::vector<bool> covered(static_cast<std::size_t>(n_vertices), false);
    for (int d = top; d >= 1; --d) {
        std::bernoulli_distribution keep(d == top ? density : density / 4.0);
        for (auto& s : detail::subsets(n_vertices, d + 1)) {
            if (keep(rng)) {
                for (auto v : s) covered[v] = true;
                facets.push_back(std::move(s));
            }
        }
    }
    for (int v = 0; v < n_vertices; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) facets.push_back({static_cast<VertexId>(v)});
    }
    return Complex::from_facets(facets);
}

/// A random admissible field, built greedily: every immediate face pair is
/// visited once in shuffled order and kept iff both simplices are still
/// unpaired and reversing its edge leaves H_M acyclic.
inline VectorField random_field(const Complex& k, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<SimplexIndex, SimplexIndex>> candidates;
    std::vector<std::vector<SimplexIndex>> out(k.size());
    for (SimplexIndex t = 0; t < k.size(); ++t) {
        for (auto s : k.faces(t)) {
            candidates.emplace_back(s, t);
            out[t].push_back(s);
        }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    std::vector<bool> paired(k.size(), false);
    std::vector<bool> seen(k.size());
    std::vector<SimplexIndex> stack;
    // Is `target` reachable from `from` without using the edge from → target?
    auto reaches = [&](SimplexIndex from, SimplexIndex target) {
        std::fill(seen.begin(), seen.end(), false);
        stack.clear();
        for (auto n : out[from]) {
            if (n != target && !seen[n]) {
                seen[n] = true;
                stack.push_back(n);
            }
        }
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (v == target) return true;
            for (auto n : out[v]) {
                if (!seen[n]) {
                    seen[n] = true;
                    stack.push_back(n);
                }
            }
        }
        return false;
    };

    VectorField w;
    for (auto [s, t] : candidates) {
        if (paired[s] || paired[t] || reaches(t, s)) continue;
        paired[s] = paired[t] = true;
        std::erase(out[t], s);
        out[s].push_back(t);
        w.set(k.at(s), k.at(t));
    }
    return w;
}

/// A random rational Morse function whose gradient is exactly `w`.
///
/// Values are assigned sinks-first along H_M: each simplex gets the max
/// over its out-edges of (successor value + step), the step being a random
/// positive rational on unmatched edges and 0 on the matched edge, plus a
/// random non-negative bump; a random integer shift is applied at the end.
/// Throws if `w` is invalid or inadmissible.
inline RationalFunction random_morse_for_field(const Complex& k, const VectorField& w, std::uint64_t seed) {
    auto g = modified_hasse(k, w);
    auto dfs = depth_first_postorder(g);
    if (dfs.cycle) throw InadmissibleField(detail::cycle_to_vpath(k, *dfs.cycle));
    Rng rng(seed);
    std::vector<Rational> f(k.size());
    for (SimplexIndex v : dfs.postorder) {
        Rational value(detail::uniform(rng, 0, 2));
        bool first = true;
        for (auto e : g.out_edges(v)) {
            const auto& edge = g.edge(e);
            Rational step = edge.matched ? Rational(0)
                                         : Rational(detail::uniform(rng, 1, 6), detail::uniform(rng, 1, 3));
            Rational candidate = f[edge.to] + step;
            if (first || candidate > value) value = candidate;
            first = false;
        }
        f[v] = value + Rational(detail::uniform(rng, 0, 3), 4);
    }
    Rational shift(detail::uniform(rng, -3, 3));
    for (auto& x : f) x += shift;
    return function_from_index(k, f);
}

/// random_field(k, seed) followed by random_morse_for_field.
inline RationalFunction random_morse(const Complex& k, std::uint64_t seed) {
    return random_morse_for_field(k, random_field(k, seed), detail::mix_seed(seed, 1));
}

/// Composes `f` with a random strictly increasing map on its distinct
/// values, starting at a value in [0, 2] with gaps in [1, 3]. The result
/// is equivalent to `f` and non-negative.
inline HeightFunction random_monotone_inflation(const HeightFunction& f, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int64_t> distinct;
    for (const auto& [s, v] : f.values()) distinct.push_back(v);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::int64_t> image(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        image[i] = (i == 0 ? 0 : image[i - 1]) + detail::uniform(rng, i == 0 ? 0 : 1, i == 0 ? 2 : 3);
    }
    HeightFunction::Map out;
    for (const auto& [s, v] : f.values()) {
        auto pos = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
        out.emplace(s, image[static_cast<std::size_t>(pos)]);
    }
    return HeightFunction(std::move(out));
}

}  // namespace morsenorm
