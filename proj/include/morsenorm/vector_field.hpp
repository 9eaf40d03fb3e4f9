#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "simplex.hpp"

namespace morsenorm {

/// A discrete vector field, stored as its non-zero values σ ↦ W(σ).
/// Simplices absent from the map have W(σ) = 0.
///
/// The container itself accepts any pairs; validate_field() decides
/// whether they form a legal field over a given complex.
class VectorField {
public:
    using Map = std::map<Simplex, Simplex>;

    VectorField() = default;
    explicit VectorField(Map pairs) : pairs_(std::move(pairs)) {}
    VectorField(std::initializer_list<std::pair<const Simplex, Simplex>> pairs) : pairs_(pairs) {}

    /// Later assignments to the same source overwrite earlier ones.
    void set(Simplex source, Simplex target) { pairs_[std::move(source)] = std::move(target); }

    std::optional<Simplex> operator()(const Simplex& s) const {
        auto it = pairs_.find(s);
        if (it == pairs_.end()) return std::nullopt;
        return it->second;
    }

    bool is_source(const Simplex& s) const { return pairs_.contains(s); }
    const Map& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    Map pairs_;
};

struct FieldViolation {
    enum class Kind { UnknownSimplex, W1, W2, W3 };
    Kind kind;
    std::vector<Simplex> witnesses;

    std::string message() const {
        std::string w;
        for (const auto& s : witnesses) {
            if (!w.empty()) w += ' ';
            w += s.to_list_string();
        }
        switch (kind) {
            case Kind::UnknownSimplex: return "unknown simplex " + w;
            case Kind::W1: return "W1 violated: not an immediate face pair: " + w;
            case Kind::W2: return "W2 violated: two sources share a target: " + w;
            case Kind::W3: return "W3 violated: target is itself paired: " + w;
        }
        return w;
    }
};

class InvalidField : public Error {
public:
    explicit InvalidField(std::vector<FieldViolation> violations)
        : Error(summarize(violations)), violations_(std::move(violations)) {}
    const std::vector<FieldViolation>& violations() const { return violations_; }

private:
    static std::string summarize(const std::vector<FieldViolation>& v) {
        std::string out = "invalid vector field";
        for (const auto& x : v) out += "; " + x.message();
        return out;
    }
    std::vector<FieldViolation> violations_;
};

/// Checks (W1) σ ≺ W(σ), (W2) injectivity and (W3) W² = 0. Every violated
/// condition is reported with its witnesses; an empty result means valid.
inline std::vector<FieldViolation> validate_field(const Complex& k, const VectorField& w) {
    using Kind = FieldViolation::Kind;
    std::vector<FieldViolation> out;
    for (const auto& [src, dst] : w.pairs()) {
        for (const Simplex* s : {&src, &dst}) {
            if (!k.contains(*s)) {
                out.push_back({Kind::UnknownSimplex, {*s}});
            }
        }
    }
    if (!out.empty()) return out;

    std::map<Simplex, Simplex> first_source_of;
    for (const auto& [src, dst] : w.pairs()) {
        if (!src.is_immediate_face_of(dst)) {
            out.push_back({Kind::W1, {src, dst}});
        }
        auto [it, inserted] = first_source_of.emplace(dst, src);
        if (!inserted) {
            out.push_back({Kind::W2, {it->second, src, dst}});
        }
        if (auto next = w(dst)) {
            out.push_back({Kind::W3, {src, dst, *next}});
        }
    }
    return out;
}

inline void require_valid(const Complex& k, const VectorField& w) {
    if (auto v = validate_field(k, w); !v.empty()) {
        throw InvalidField(std::move(v));
    }
}

/// Index-based view of a valid field: `up[i]` is W(σ_i), `down[j]` is the
/// unique σ with W(σ) = σ_j.
struct IndexedField {
    std::vector<std::optional<SimplexIndex>> up;
    std::vector<std::optional<SimplexIndex>> down;

    IndexedField(const Complex& k, const VectorField& w) : up(k.size()), down(k.size()) {
        require_valid(k, w);
        for (const auto& [src, dst] : w.pairs()) {
            auto i = k.index_of(src);
            auto j = k.index_of(dst);
            up[i] = j;
            down[j] = i;
        }
    }

    bool is_critical(SimplexIndex i) const { return !up[i] && !down[i]; }
};

/// Simplices in neither the domain nor the image of W, in canonical order.
inline std::vector<Simplex> critical_simplices(const Complex& k, const VectorField& w) {
    IndexedField f(k, w);
    std::vector<Simplex> out;
    for (SimplexIndex i = 0; i < k.size(); ++i) {
        if (f.is_critical(i)) out.push_back(k.at(i));
    }
    return out;
}

}  // namespace morsenorm
