#pragma once

#include <stdexcept>
#include <string>

namespace regio {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or invalid input data (bad CSV, invariant violations). CLI exit 3.
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

// Invalid operation parameters (k out of range, dimension mismatch). CLI exit 2.
class ParamError : public Error {
public:
    explicit ParamError(const std::string& what) : Error(what) {}
};

// Degenerate numerics (zero variance, zero total sum of squares). CLI exit 4.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace regio
