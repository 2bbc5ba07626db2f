#pragma once

#include <stdexcept>
#include <string>

namespace freeid {

// Base of every error raised by the library. The CLI maps these to exit
// status 1; mathematical findings are reported as values, never thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

// Request exceeds a documented enumeration or arithmetic budget.
class BoundError : public Error {
public:
    BoundError(const std::string& what, long long bound)
        : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
    long long bound() const noexcept { return bound_; }
    const char* kind() const noexcept override { return "bound"; }

private:
    long long bound_;
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parse"; }
};

// Incomparable elements handed to an order-theoretic routine.
class OrderError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "order"; }
};

// Structural precondition failure (reducible chain, unreconstructible tree).
class StructureError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "structure"; }
};

// Floating-point evaluation could not reach the requested accuracy.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const noexcept { return residual_; }
    const char* kind() const noexcept override { return "precision"; }

private:
    double residual_;
};

// Evaluation point too close to a pole of a meromorphic transform.
class PoleError : public Error {
public:
    PoleError(const std::string& what, double re, double im)
        : Error(what), re_(re), im_(im) {}
    double re() const noexcept { return re_; }
    double im() const noexcept { return im_; }
    const char* kind() const noexcept override { return "pole"; }

private:
    double re_;
    double im_;
};

// Newton continuation lost track of the inverse branch.
class ContinuationError : public Error {
public:
    ContinuationError(const std::string& what, double re, double im)
        : Error(what), re_(re), im_(im) {}
    double last_re() const noexcept { return re_; }
    double last_im() const noexcept { return im_; }
    const char* kind() const noexcept override { return "continuation"; }

private:
    double re_;
    double im_;
};

}  // namespace freeid
