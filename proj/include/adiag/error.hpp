#pragma once

#include <stdexcept>
#include <string>

namespace adiag {

// Bad user input: malformed expressions, out-of-range parameters, unreadable
// files. CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical check failed (group axioms, unitarity, orthogonality...).
// CLI maps this to exit code 1.
struct VerifyError : std::runtime_error {
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerics refused to converge or a resource cap was hit. Exit code 3.
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace adiag
