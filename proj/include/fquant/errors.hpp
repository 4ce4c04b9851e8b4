#pragma once

#include <stdexcept>
#include <string>

namespace fquant {

/// Input file or JSON document does not match the expected schema.
/// `what()` carries the field path of the offending entry.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values that must live on the same universe do not.
class UniverseMismatchError : public std::invalid_argument {
public:
    explicit UniverseMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The exact evaluator was asked for an instance beyond its hard size guard.
class SizeGuardError : public std::length_error {
public:
    explicit SizeGuardError(const std::string& msg) : std::length_error(msg) {}
};

/// An evaluator was forced onto a quantifier whose kernel it cannot handle.
class EvaluatorMismatchError : public std::invalid_argument {
public:
    explicit EvaluatorMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace fquant
