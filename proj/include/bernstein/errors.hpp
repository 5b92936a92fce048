#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

/// Quadrature or iteration failed to reach the requested tolerance.
struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file, flag, or parameter outside a precondition.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Naive evaluation would exceed the double exponent range; use the
/// log-scale entry points instead.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation precondition was violated (e.g. nonzero center coefficient
/// after reduction).
struct PrecondViolated : std::runtime_error {
  explicit PrecondViolated(const std::string& what) : std::runtime_error(what) {}
};

/// Atom validation failures.
struct NotMeanZero : InputError {
  explicit NotMeanZero(const std::string& what) : InputError(what) {}
};
struct SupTooLarge : InputError {
  explicit SupTooLarge(const std::string& what) : InputError(what) {}
};
struct NonContiguousSupport : InputError {
  explicit NonContiguousSupport(const std::string& what) : InputError(what) {}
};

/// A grid symbol without enough spectral information for band reduction.
struct UnknownSpectrum : InputError {
  explicit UnknownSpectrum(const std::string& what) : InputError(what) {}
};

/// Symbol tail model required but absent.
struct MissingTailModel : InputError {
  explicit MissingTailModel(const std::string& what) : InputError(what) {}
};

/// Operator/vector window disagreement.
struct WindowMismatch : InputError {
  explicit WindowMismatch(const std::string& what) : InputError(what) {}
};

}  // namespace bernstein
