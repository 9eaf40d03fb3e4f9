#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "hasse.hpp"
#include "vector_field.hpp"

namespace morsenorm {

/// A V-path of index k: matched k-simplices σ₀, …, σ_r with
/// σ_{i+1} ≺ W(σ_i) and σ_i ≠ σ_{i+1}.
struct VPath {
    int index = 0;
    std::vector<Simplex> simplices;

    bool closed() const { return simplices.size() > 1 && simplices.front() == simplices.back(); }

    std::string to_string() const {
        std::string out = "index " + std::to_string(index) + ":";
        for (const auto& s : simplices) out += " " + s.to_string();
        return out;
    }

    friend bool operator==(const VPath&, const VPath&) = default;
};

struct Admissibility {
    bool admissible = true;
    /// Closed non-stationary V-path, present iff not admissible.
    std::optional<VPath> witness;

    explicit operator bool() const { return admissible; }
};

class InadmissibleField : public Error {
public:
    explicit InadmissibleField(VPath witness)
        : Error("inadmissible vector field: closed V-path " + witness.to_string()),
          witness_(std::move(witness)) {}
    const VPath& witness() const { return witness_; }

private:
    VPath witness_;
};

namespace detail {

/// A directed cycle of H_M alternates σ_i → W(σ_i) → σ_{i+1}; keep the
/// lower-dimensional nodes, rotate so the canonically smallest comes first,
/// and close the path.
inline VPath cycle_to_vpath(const Complex& k, const std::vector<SimplexIndex>& cycle) {
    int low = k.at(cycle.front()).dimension();
    for (auto v : cycle) low = std::min(low, k.at(v).dimension());

    std::vector<SimplexIndex> path;
    for (auto v : cycle) {
        if (k.at(v).dimension() == low) path.push_back(v);
    }
    std::rotate(path.begin(), std::min_element(path.begin(), path.end()), path.end());

    VPath out{low, {}};
    for (auto v : path) out.simplices.push_back(k.at(v));
    out.simplices.push_back(out.simplices.front());
    return out;
}

}  // namespace detail

/// A field is admissible iff it has no non-stationary closed V-path, which
/// holds iff H_M is acyclic. On failure a witness V-path is extracted from
/// the first directed cycle found. Throws InvalidField for an invalid field.
inline Admissibility is_admissible(const Complex& k, const VectorField& w) {
    auto dfs = depth_first_postorder(modified_hasse(k, w));
    if (!dfs.cycle) return {};
    return {false, detail::cycle_to_vpath(k, *dfs.cycle)};
}

inline void require_admissible(const Complex& k, const VectorField& w) {
    if (auto a = is_admissible(k, w); !a) {
        throw InadmissibleField(*a.witness);
    }
}

}  // namespace morsenorm
