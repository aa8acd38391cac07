#pragma once

#include <stdexcept>
#include <string>

namespace towers {

/// Malformed caller input (bad interval, too few terms, unparsable file).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A rule/size combination the algebraic machinery does not cover.
class UnsupportedConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed: two routes that must agree did not.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Leading recurrence coefficient vanishes at an index needed for unrolling.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, long long index)
        : std::runtime_error(what), index_(index) {}
    long long index() const noexcept { return index_; }

private:
    long long index_;
};

/// Factor search exceeded the configured degree cap.
class FactorizationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace towers
