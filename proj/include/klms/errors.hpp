#pragma once

#include <stdexcept>
#include <string>

namespace klms {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (permutations, multisegments, polynomials, ...).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

// A documented precondition of an operation does not hold.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what)
        : error("precondition violated: " + what) {}
};

// A poset enumeration exceeded the configured element cap.
class enumeration_cap_error : public error {
public:
    explicit enumeration_cap_error(const std::string& what)
        : error("enumeration cap exceeded: " + what) {}
};

// The interval-realization verification failed; carries a counterexample.
class realization_error : public error {
public:
    explicit realization_error(const std::string& what)
        : error("realization failure: " + what) {}
};

// A structural invariant the library relies on was found to be false.
// These indicate either a bug or a genuine mathematical finding; they are
// surfaced loudly instead of being patched over.
class invariant_violation : public error {
public:
    explicit invariant_violation(const std::string& what)
        : error("invariant violation: " + what) {}
};

} // namespace klms
