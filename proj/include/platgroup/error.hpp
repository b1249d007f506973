#pragma once

#include <stdexcept>
#include <string>

namespace platgroup {

/// Bad input: malformed files, invalid diagrams, out-of-range indices.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word or substitution touched a generator it is not defined on.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded search ran past its node budget.
class limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace platgroup
