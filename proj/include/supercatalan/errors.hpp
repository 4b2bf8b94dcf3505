#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercatalan {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violated an operation's domain (index out of range, zero denominator, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Exact division was requested but the divisor does not divide the dividend.
class non_divisible_error : public error {
public:
    using error::error;
};

/// A brute-force request exceeds the configured cap.
class cap_exceeded_error : public error {
public:
    using error::error;
};

/// The eigen-equation A*chi_S = lambda*chi_S failed at some vertex.
/// Firing means a computation bug or a falsified spectral claim.
class eigen_mismatch_error : public error {
public:
    eigen_mismatch_error(std::uint32_t vertex, const std::string& what)
        : error(what), vertex_(vertex) {}

    std::uint32_t vertex() const { return vertex_; }

private:
    std::uint32_t vertex_;
};

/// An exact identity that is a theorem failed to hold. Must never fire.
class claim_failed_error : public error {
public:
    using error::error;
};

}  // namespace supercatalan
