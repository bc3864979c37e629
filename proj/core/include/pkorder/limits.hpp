#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pkorder {

// Thrown on malformed or inconsistent input (bad syntax, mixed rings,
// ill-defined maps). CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed its configured budget. The result is
// never silently truncated. CLI exit code 2.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Injective-hull classification is only available for codivisorial modules.
struct NotCodivisorial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation precondition (torsion input, hereditary order, ...) not met.
struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Limits {
    int max_factor_bits = 128;    // refuse to hunt integer factors past this
    int max_degree = 24;          // polynomial factorization degree budget
    long gb_step_limit = 100000;  // reduction steps per basis computation
    std::uint64_t seed = 0;       // seeds all randomized splitting
};

// Deterministic work counters, reported by the CLI.
struct Counters {
    long gb_steps = 0;
    long factorizations = 0;
    void reset() { gb_steps = 0; factorizations = 0; }
};

Counters& counters();

}  // namespace pkorder
