#pragma once

#include <stdexcept>
#include <string>

namespace arcalc {

// Malformed or inconsistent user input (bad JSON, non-invariant subspace,
// composite modulus, ...).  The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A request that is mathematically undefined (translating a projective
// object forward, inverse-translating an injective, ...).  Exit code 3.
struct UndefinedOperation : std::runtime_error {
    explicit UndefinedOperation(const std::string& what) : std::runtime_error(what) {}
};

// A resource budget ran out before the computation finished.  Exit code 4.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed.  Always a bug, never a user error.
struct InternalCheckFailure : std::logic_error {
    explicit InternalCheckFailure(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalCheckFailure(what);
}

} // namespace arcalc
