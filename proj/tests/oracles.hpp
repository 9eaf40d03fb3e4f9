#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through the modified Hasse diagram or the library's DFS; they work
// straight from the definitions on the face poset.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <morsenorm/complex.hpp>
#include <morsenorm/morse_function.hpp>
#include <morsenorm/vector_field.hpp>

namespace morsenorm::oracle {

/// Height from its definition: the transitive closure of the atomic
/// relations (τ ⋗ σ for σ ≺ τ, and σ ⋗ W(σ)), then the longest chain
/// σ = σ_n ⋗ … ⋗ σ_0 with no two consecutive members equivalent.
inline std::map<Simplex, std::int64_t> definition_height(const Complex& k, const VectorField& w) {
    const std::size_t n = k.size();
    std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));  // above[a][b]: a ⋗ b
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (k.at(s).is_immediate_face_of(k.at(t))) above[t][s] = true;
        }
    }
    for (const auto& [src, dst] : w.pairs()) above[k.index_of(src)][k.index_of(dst)] = true;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!above[a][m]) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (above[m][b]) above[a][b] = true;
            }
        }
    }
    std::vector<std::optional<std::int64_t>> memo(n);
    std::function<std::int64_t(std::size_t)> chain = [&](std::size_t a) -> std::int64_t {
        if (memo[a]) return *memo[a];
        std::int64_t best = 0;
        for (std::size_t b = 0; b < n; ++b) {
            bool equivalent = above[a][b] && above[b][a];
            if (above[a][b] && !equivalent) best = std::max(best, 1 + chain(b));
        }
        memo[a] = best;
        return best;
    };
    std::map<Simplex, std::int64_t> out;
    for (std::size_t a = 0; a < n; ++a) out.emplace(k.at(a), chain(a));
    return out;
}

/// True iff some matched simplex starts a non-stationary closed V-path.
/// Searches the V-path successor relation σ → σ' (σ' ≺ W(σ), σ' ≠ σ,
/// σ' matched) directly.
inline bool has_closed_vpath(const Complex& k, const VectorField& w) {
    std::function<bool(const Simplex&, const Simplex&, std::vector<Simplex>&)> walk =
        [&](const Simplex& start, const Simplex& cur, std::vector<Simplex>& seen) {
            auto head = w(cur);
            for (const auto& next : k.immediate_faces(*head)) {
                if (next == cur || !w.is_source(next)) continue;
                if (next == start) return true;
                if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
                seen.push_back(next);
                if (walk(start, next, seen)) return true;
            }
            return false;
        };
    for (const auto& [src, dst] : w.pairs()) {
        std::vector<Simplex> seen;
        if (walk(src, src, seen)) return true;
    }
    return false;
}

/// Every valid discrete vector field on `k` (subsets of immediate face
/// pairs satisfying W1–W3). Exponential in the number of pairs.
inline std::vector<VectorField> all_valid_fields(const Complex& k) {
    std::vector<std::pair<Simplex, Simplex>> incidences;
    for (const auto& t : k.simplices()) {
        for (const auto& s : k.immediate_faces(t)) incidences.emplace_back(s, t);
    }
    std::vector<VectorField> out;
    const std::uint64_t total = std::uint64_t{1} << incidences.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VectorField w;
        bool duplicate_source = false;
        for (std::size_t i = 0; i < incidences.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                if (w.is_source(incidences[i].first)) duplicate_source = true;
                w.set(incidences[i].first, incidences[i].second);
            }
        }
        if (!duplicate_source && validate_field(k, w).empty()) out.push_back(std::move(w));
    }
    return out;
}

/// Pointwise comparison helper for maps keyed by simplex.
template <class Value>
std::map<Simplex, std::int64_t> as_map(const MorseFunction<Value>& f) {
    std::map<Simplex, std::int64_t> out;
    for (const auto& [s, v] : f.values()) out.emplace(s, static_cast<std::int64_t>(v));
    return out;
}

}  // namespace morsenorm::oracle
