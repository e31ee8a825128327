#pragma once

#include <stdexcept>
#include <string>

namespace uf {

/// Operands of incompatible dimensions or shapes.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// The operation is only implemented for low dimensions (general cones need k <= 2).
class UnsupportedDimension : public std::invalid_argument {
public:
    explicit UnsupportedDimension(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace uf
