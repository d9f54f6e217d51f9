#pragma once

#include <stdexcept>
#include <string>

namespace aml {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural mismatch: wrong arity, wrong dimension, wrong point length.
struct arity_error : error {
    using error::error;
};

/// Substitution of a negative power of a non-monomial argument.
struct substitution_error : error {
    using error::error;
};

/// Evaluation outside the domain (zero raised to a negative power).
struct evaluation_error : error {
    using error::error;
};

/// Invalid parameters: incompatible quadruple, bad descriptor, out-of-range input.
struct domain_error : error {
    using error::error;
};

/// A declared unit fails the two-sided unit identity.
struct unit_error : error {
    using error::error;
};

/// Text input rejected; carries 1-based line/column of the offending token.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : error(what + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_),
          column(column_) {}
};

}  // namespace aml
