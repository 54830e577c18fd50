#pragma once

#include <stdexcept>
#include <string>

namespace hodgeint {

/// A fixed table or truncation limit was exceeded.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mathematical precondition violation (instability, order mismatch, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Division by a power series whose constant term vanishes.
class singularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent constructions of the same value disagree, or a
/// write-once cache slot was asked to change.  Always a bug.
class integrity_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hodgeint
