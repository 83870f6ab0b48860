#pragma once

#include <stdexcept>
#include <string>

namespace gammahom {

// Error categories map 1:1 onto CLI exit codes (see tools/).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad table, bad matrix, schema violation).
struct input_error : error {
    using error::error;
};

// A computation would exceed the configured size budget.
struct budget_error : error {
    using error::error;
};

// An internal invariant failed (d*d != 0, non-unimodular transform, ...).
// Indicates a bug, surfaced loudly instead of returning garbage.
struct invariant_error : error {
    using error::error;
};

// Two independently computed answers disagree.
struct mismatch_error : error {
    using error::error;
};

}  // namespace gammahom
