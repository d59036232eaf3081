#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all library errors, so callers can catch in one place.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: out-of-range ramification index, mismatched contexts,
/// schema violations and the like.
class input_error : public error {
 public:
  using error::error;
};

/// An operation was requested in a mode its operand does not support
/// (e.g. exact evaluation of a series with an undetermined tail).
class mode_error : public error {
 public:
  using error::error;
};

/// Evaluation point outside the region the requested guarantee needs.
class region_error : public error {
 public:
  using error::error;
};

/// The vectors handed to a full-rank operation are linearly dependent.
class not_independent_error : public error {
 public:
  using error::error;
};

/// The claimed basis is linearly dependent and is rejected rather than reduced.
class dependent_basis_error : public error {
 public:
  using error::error;
};

/// A computation needs series coefficients beyond the trusted truncation degree.
class truncation_error : public error {
 public:
  using error::error;
};

/// Malformed JSON input; message carries location information.
class parse_error : public input_error {
 public:
  using input_error::input_error;
};

}  // namespace padic
