#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qspec {

/// Input data violated a structural axiom. Carries the axiom name and a
/// printable witness for the first violation found.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string axiom, std::string witness)
        : std::runtime_error(axiom + ": " + witness),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

/// Malformed input document or unusable command arguments.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independently computed values that must coincide did not. This always
/// signals a defect in the engine itself, never bad user input.
class InternalCheckError : public std::logic_error {
public:
    InternalCheckError(std::string check, std::string detail)
        : std::logic_error(check + ": " + detail), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

}  // namespace qspec
