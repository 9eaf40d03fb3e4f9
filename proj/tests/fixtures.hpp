#pragma once

#include <morsenorm/morsenorm.hpp>

namespace morsenorm::testing {

// ∂Δ²: three vertices, three edges.
inline Complex triangle_boundary() { return build_complex({{0, 1}, {1, 2}, {0, 2}}); }
inline Complex full_triangle() { return build_complex({{0, 1, 2}}); }
inline Complex point() { return build_complex({{0}}); }

// {0}↦{0,1}, {1}↦{1,2} on ∂Δ².
inline VectorField running_field() {
    return {{simplex({0}), simplex({0, 1})}, {simplex({1}), simplex({1, 2})}};
}

// A Morse function on ∂Δ² whose gradient is running_field().
inline RationalFunction running_morse() {
    return {{simplex({2}), Rational(0)},    {simplex({1, 2}), Rational(2)}, {simplex({1}), Rational(3)},
            {simplex({0, 1}), Rational(4)}, {simplex({0}), Rational(5)},    {simplex({0, 2}), Rational(7)}};
}

// Expected normalization of the running example.
inline HeightFunction running_height() {
    return {{simplex({0}), 2}, {simplex({1}), 1},    {simplex({2}), 0},
            {simplex({0, 1}), 2}, {simplex({0, 2}), 3}, {simplex({1, 2}), 1}};
}

}  // namespace morsenorm::testing
