#pragma once

#include <stdexcept>
#include <string>

namespace sucktac {

// Actuation outside the model's validity envelope (distinct from a malformed
// argument: the request is well-formed but the model does not cover it).
struct validity_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct no_bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file content; message carries line/column where known.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_energy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sucktac
