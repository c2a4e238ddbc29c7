#pragma once

#include <stdexcept>
#include <string>

namespace eulergraph {

// Malformed input: unreadable files, syntax errors, bad flag values.
// Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that violates a mathematical precondition
// or fails a validation check. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eulergraph
