#pragma once

// Umbrella header.

#include "admissibility.hpp"
#include "complex.hpp"
#include "document.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "hasse.hpp"
#include "height.hpp"
#include "morse_function.hpp"
#include "normalize.hpp"
#include "random.hpp"
#include "simplex.hpp"
#include "vector_field.hpp"
