#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "morse_function.hpp"

namespace morsenorm {

/// Dense ranking: each value becomes its position among the sorted
/// distinct values of f, starting at 0. Preserves every comparison, hence
/// the gradient. Throws NotMorse.
template <class Value>
HeightFunction to_integer_ranks(const Complex& k, const MorseFunction<Value>& f) {
    require_morse(k, f);
    std::vector<Value> distinct;
    for (const auto& [s, v] : f.values()) distinct.push_back(v);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    HeightFunction::Map out;
    for (const auto& [s, v] : f.values()) {
        auto rank = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
        out.emplace(s, static_cast<std::int64_t>(rank));
    }
    return HeightFunction(std::move(out));
}

struct SweepOptions {
    /// Stop once a full pass leaves every value unchanged. Off by default,
    /// in which case exactly r passes run (r = number of simplices).
    bool early_exit = false;
    /// After every step, confirm that the updated simplex keeps its order
    /// relations with all faces and cofaces (i.e. the function stays Morse
    /// with the original gradient). Violations throw std::logic_error.
    bool check_invariants = true;
    /// Break ties among simplices of equal value and dimension by a seeded
    /// shuffle instead of canonical order. Any such order is legal.
    std::optional<std::uint64_t> tie_break_seed = std::nullopt;
};

/// Value-driven normalization of an integer Morse function f with min 0.
///
/// The simplices are ordered once, by increasing f and, among equal
/// values, by decreasing dimension (remaining ties: canonical order). Each
/// pass then revisits every simplex in that order and lowers its value:
///   - critical:           1 + max over faces (0 for a vertex)
///   - σ paired up with τ: the current value of τ
///   - σ paired down to η: 1 + max over the faces other than η
/// After r passes the result is the normalization h_f.
///
/// Exposed step by step so callers can observe the intermediate functions.
class Sweep {
public:
    Sweep(const Complex& k, const HeightFunction& f, SweepOptions options = {})
        : complex_(&k), options_(options) {
        current_ = values_by_index(k, f);
        if (auto v = detail::morse_violations(k, current_); !v.empty()) throw NotMorse(std::move(v));
        if (!current_.empty() && *std::min_element(current_.begin(), current_.end()) != 0) {
            throw Error("precondition: minimum value must be 0");
        }
        up_ = detail::gradient_by_index(k, current_);
        down_.assign(k.size(), std::nullopt);
        for (SimplexIndex i = 0; i < k.size(); ++i) {
            if (up_[i]) down_[*up_[i]] = i;
        }
        order_.resize(k.size());
        for (SimplexIndex i = 0; i < k.size(); ++i) order_[i] = i;
        std::vector<SimplexIndex> tie_key = order_;
        if (options_.tie_break_seed) {
            std::shuffle(tie_key.begin(), tie_key.end(), std::mt19937_64(*options_.tie_break_seed));
        }
        std::sort(order_.begin(), order_.end(), [&](SimplexIndex a, SimplexIndex b) {
            if (current_[a] != current_[b]) return current_[a] < current_[b];
            int da = k.at(a).dimension(), db = k.at(b).dimension();
            if (da != db) return da > db;
            return tie_key[a] < tie_key[b];
        });
    }

    /// The fixed visiting order σ₁, …, σ_r.
    const std::vector<SimplexIndex>& order() const { return order_; }
    /// Current values by simplex index.
    const std::vector<std::int64_t>& values() const { return current_; }
    HeightFunction current() const { return function_from_index(*complex_, current_); }

    std::size_t pass_index() const { return pass_; }
    /// Steps completed within the current pass (0 ≤ k ≤ r).
    std::size_t step_index() const { return step_; }
    std::size_t passes_required() const { return order_.size(); }
    bool done() const { return done_; }

    /// Updates the next simplex in order. Returns false once the sweep is
    /// finished.
    bool step() {
        if (done_) return false;
        if (order_.empty()) {
            done_ = true;
            return false;
        }
        SimplexIndex s = order_[step_];
        std::int64_t before = current_[s];
        current_[s] = next_value(s);
        if (current_[s] != before) changed_in_pass_ = true;
        if (options_.check_invariants) check_local(s);

        if (++step_ == order_.size()) {
            step_ = 0;
            ++pass_;
            bool stable = !changed_in_pass_;
            changed_in_pass_ = false;
            if (pass_ == order_.size() || (options_.early_exit && stable)) done_ = true;
        }
        return !done_;
    }

    HeightFunction run() {
        while (step()) {
        }
        return current();
    }

private:
    std::int64_t max_face(SimplexIndex s, std::optional<SimplexIndex> skip) const {
        std::int64_t best = -1;
        for (auto f : complex_->faces(s)) {
            if (f != skip) best = std::max(best, current_[f]);
        }
        return best;
    }

    std::int64_t next_value(SimplexIndex s) const {
        if (up_[s]) return current_[*up_[s]];
        if (down_[s]) return max_face(s, down_[s]) + 1;
        return max_face(s, std::nullopt) + 1;
    }

    void check_local(SimplexIndex s) const {
        auto fail = [&](SimplexIndex other) {
            throw std::logic_error("normalization sweep broke the gradient at " +
                                   complex_->at(s).to_string() + " against " +
                                   complex_->at(other).to_string());
        };
        for (auto f : complex_->faces(s)) {
            bool paired = up_[f] == s;
            if (paired != (current_[f] >= current_[s])) fail(f);
        }
        for (auto c : complex_->cofaces(s)) {
            bool paired = up_[s] == c;
            if (paired != (current_[s] >= current_[c])) fail(c);
        }
    }

    const Complex* complex_;
    SweepOptions options_;
    std::vector<std::int64_t> current_;
    std::vector<std::optional<SimplexIndex>> up_;
    std::vector<std::optional<SimplexIndex>> down_;
    std::vector<SimplexIndex> order_;
    std::size_t pass_ = 0;
    std::size_t step_ = 0;
    bool changed_in_pass_ = false;
    bool done_ = false;
};

inline HeightFunction normalize_sweep(const Complex& k, const HeightFunction& f, SweepOptions options = {}) {
    return Sweep(k, f, options).run();
}

/// Accepts a rational-valued function provided every value is an integer.
inline HeightFunction normalize_sweep(const Complex& k, const RationalFunction& f, SweepOptions options = {}) {
    HeightFunction::Map m;
    for (const auto& [s, v] : f.values()) {
        if (v.denominator() != 1) {
            throw Error("precondition: non-integer value " + to_string(v) + " at " + s.to_list_string());
        }
        m.emplace(s, v.numerator());
    }
    return normalize_sweep(k, HeightFunction(std::move(m)), options);
}

}  // namespace morsenorm
