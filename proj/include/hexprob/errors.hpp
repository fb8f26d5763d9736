#pragma once

#include <stdexcept>

namespace hexprob {

// Rational-function evaluation hit a zero of the denominator.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hexagon side came out < 1 (e.g. a family instantiated at too small an n).
struct DegenerateHexagon : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rhombus position lies outside the range the probability formula covers.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probability argument was outside [0, 1].
struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive computation refused to run past its configured budget.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every algebraic interpolation candidate had a denominator vanishing at a
// sample point, so no candidate could even be tested.
struct DegenerateSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hexprob
