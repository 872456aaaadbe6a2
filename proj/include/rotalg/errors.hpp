#pragma once

#include <stdexcept>
#include <string>

namespace rotalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or structurally invalid inputs (mismatched theta, caps exceeded).
class ParameterError : public Error {
public:
    using Error::Error;
};

// A decision that cannot be made from the stored precision (decimal theta past
// its cf_depth_cap, sign of a + b*theta below resolution).
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Operation called outside its contract (e.g. classify on a non-simple spec).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Iterative kernel failed to converge; carries the last iterate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last)
        : Error(what), last_iterate(last) {}
    double last_iterate;
};

// Evaluation requested at (or too close to) a pole; names the offending factor.
class PoleError : public Error {
public:
    PoleError(const std::string& what, long long factor)
        : Error(what), factor_index(factor) {}
    long long factor_index;
};

}  // namespace rotalg
