#pragma once

#include <stdexcept>
#include <string>

namespace tropflux {

// Malformed input: unparsable text, bad file, impossible degrees.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropflux
