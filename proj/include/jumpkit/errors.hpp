#pragma once

#include <stdexcept>
#include <string>

namespace jumpkit {

// Precondition violated by the caller. CLI exit code 2.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation that should converge did not. CLI exit code 3.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

}  // namespace jumpkit
