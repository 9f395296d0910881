// Error types shared across the simulator library.
#pragma once

#include <stdexcept>
#include <string>

namespace jncsim {

// Base class for all jncsim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// xor_combine over an empty id set (or a combination that cancels to nothing).
struct EmptyCombination : Error {
    using Error::Error;
};

// xor_combine over ids belonging to different APs.
struct MixedSource : Error {
    using Error::Error;
};

// anc_decode with a packet that matches neither layer of the collision.
struct UnknownLayer : Error {
    using Error::Error;
};

// Invalid NetworkConfig / sweep parameters.
struct ConfigError : Error {
    using Error::Error;
};

// Operation applied outside its domain (e.g. collided delivery to a
// receiver that is not in the overlap region).
struct DomainError : Error {
    using Error::Error;
};

// Malformed reception-matrix file.
struct ParseError : Error {
    using Error::Error;
};

// Analytic expectation does not converge (p = 1).
struct DivergentExpectation : Error {
    using Error::Error;
};

// A trial exceeded its slot budget (p too close to 1).
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace jncsim
