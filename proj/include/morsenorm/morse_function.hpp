#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "complex.hpp"
#include "errors.hpp"
#include "vector_field.hpp"

namespace morsenorm {

/// Exact value type for general Morse functions.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

inline std::string to_string(std::int64_t v) { return std::to_string(v); }

/// A real-valued (here: exactly valued) function on the simplices of a
/// complex. `Value` is `std::int64_t` or `Rational`.
template <class Value>
class MorseFunction {
public:
    using value_type = Value;
    using Map = std::map<Simplex, Value>;

    MorseFunction() = default;
    explicit MorseFunction(Map values) : values_(std::move(values)) {}
    MorseFunction(std::initializer_list<std::pair<const Simplex, Value>> values) : values_(values) {}

    void set(Simplex s, Value v) { values_[std::move(s)] = std::move(v); }

    /// Throws "partial function" when `s` has no value.
    const Value& operator()(const Simplex& s) const {
        auto it = values_.find(s);
        if (it == values_.end()) {
            throw Error("partial function: no value for " + s.to_list_string());
        }
        return it->second;
    }

    bool defined_at(const Simplex& s) const { return values_.contains(s); }
    const Map& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    friend bool operator==(const MorseFunction&, const MorseFunction&) = default;

private:
    Map values_;
};

using HeightFunction = MorseFunction<std::int64_t>;
using RationalFunction = MorseFunction<Rational>;

/// Function values laid out by simplex index. Throws "partial function" if
/// some simplex of `k` has no value and "unknown simplex" if `f` carries a
/// value for a simplex outside `k`.
template <class Value>
std::vector<Value> values_by_index(const Complex& k, const MorseFunction<Value>& f) {
    for (const auto& [s, v] : f.values()) {
        (void)k.index_of(s);
    }
    std::vector<Value> out;
    out.reserve(k.size());
    for (const auto& s : k.simplices()) out.push_back(f(s));
    return out;
}

template <class Value>
MorseFunction<Value> function_from_index(const Complex& k, const std::vector<Value>& values) {
    typename MorseFunction<Value>::Map m;
    for (SimplexIndex i = 0; i < k.size(); ++i) m.emplace(k.at(i), values[i]);
    return MorseFunction<Value>(std::move(m));
}

/// σ ↦ dim σ. The height function of the null field.
inline HeightFunction dimension_function(const Complex& k) {
    HeightFunction::Map m;
    for (const auto& s : k.simplices()) m.emplace(s, s.dimension());
    return HeightFunction(std::move(m));
}

struct MorseViolation {
    enum class Kind {
        M1,         ///< more than one face η ≺ σ with f(η) ≥ f(σ)
        M2,         ///< more than one coface τ ≻ σ with f(τ) ≤ f(σ)
        Collision,  ///< σ has both such a face and such a coface
    };
    Kind kind;
    Simplex simplex;
    std::vector<Simplex> offenders;

    std::string message() const {
        std::string w;
        for (const auto& s : offenders) w += " " + s.to_list_string();
        switch (kind) {
            case Kind::M1: return "M1 violated at " + simplex.to_list_string() + "; faces:" + w;
            case Kind::M2: return "M2 violated at " + simplex.to_list_string() + "; cofaces:" + w;
            case Kind::Collision:
                return "face and coface both paired with " + simplex.to_list_string() + ":" + w;
        }
        return w;
    }
};

class NotMorse : public Error {
public:
    explicit NotMorse(std::vector<MorseViolation> v) : Error(summarize(v)), violations_(std::move(v)) {}
    const std::vector<MorseViolation>& violations() const { return violations_; }

private:
    static std::string summarize(const std::vector<MorseViolation>& v) {
        std::string out = "not a Morse function";
        for (const auto& x : v) out += "; " + x.message();
        return out;
    }
    std::vector<MorseViolation> violations_;
};

namespace detail {

template <class Value>
std::vector<MorseViolation> morse_violations(const Complex& k, const std::vector<Value>& f) {
    using Kind = MorseViolation::Kind;
    std::vector<MorseViolation> out;
    for (SimplexIndex i = 0; i < k.size(); ++i) {
        std::vector<Simplex> low_faces, high_cofaces;
        for (auto j : k.faces(i)) {
            if (f[j] >= f[i]) low_faces.push_back(k.at(j));
        }
        for (auto j : k.cofaces(i)) {
            if (f[j] <= f[i]) high_cofaces.push_back(k.at(j));
        }
        if (low_faces.size() > 1) out.push_back({Kind::M1, k.at(i), low_faces});
        if (high_cofaces.size() > 1) out.push_back({Kind::M2, k.at(i), high_cofaces});
        if (!low_faces.empty() && !high_cofaces.empty()) {
            std::vector<Simplex> both = low_faces;
            both.insert(both.end(), high_cofaces.begin(), high_cofaces.end());
            out.push_back({Kind::Collision, k.at(i), std::move(both)});
        }
    }
    return out;
}

/// up[i] = the coface τ ≻ σ_i with f(σ_i) ≥ f(τ), if any. Assumes f Morse.
template <class Value>
std::vector<std::optional<SimplexIndex>> gradient_by_index(const Complex& k, const std::vector<Value>& f) {
    std::vector<std::optional<SimplexIndex>> up(k.size());
    for (SimplexIndex i = 0; i < k.size(); ++i) {
        for (auto j : k.cofaces(i)) {
            if (f[i] >= f[j]) up[i] = j;
        }
    }
    return up;
}

}  // namespace detail

/// Checks (M1) and (M2) at every simplex, and that no simplex is paired
/// both downward and upward (which would make V_f violate W² = 0).
/// An empty result means `f` is a combinatorial Morse function on `k`.
template <class Value>
std::vector<MorseViolation> is_morse(const Complex& k, const MorseFunction<Value>& f) {
    return detail::morse_violations(k, values_by_index(k, f));
}

template <class Value>
void require_morse(const Complex& k, const MorseFunction<Value>& f) {
    if (auto v = is_morse(k, f); !v.empty()) throw NotMorse(std::move(v));
}

/// V_f(σ) = τ when τ ≻ σ and f(σ) ≥ f(τ). Throws NotMorse.
template <class Value>
VectorField gradient(const Complex& k, const MorseFunction<Value>& f) {
    auto values = values_by_index(k, f);
    if (auto v = detail::morse_violations(k, values); !v.empty()) throw NotMorse(std::move(v));
    VectorField::Map pairs;
    auto up = detail::gradient_by_index(k, values);
    for (SimplexIndex i = 0; i < k.size(); ++i) {
        if (up[i]) pairs.emplace(k.at(i), k.at(*up[i]));
    }
    return VectorField(std::move(pairs));
}

/// f ~ g iff f(σ) < f(τ) ⇔ g(σ) < g(τ) for every σ ≺ τ. Both must be Morse.
template <class A, class B>
bool equivalent(const Complex& k, const MorseFunction<A>& f, const MorseFunction<B>& g) {
    require_morse(k, f);
    require_morse(k, g);
    auto fv = values_by_index(k, f);
    auto gv = values_by_index(k, g);
    for (SimplexIndex t = 0; t < k.size(); ++t) {
        for (auto s : k.faces(t)) {
            if ((fv[s] < fv[t]) != (gv[s] < gv[t])) return false;
        }
    }
    return true;
}

}  // namespace morsenorm
