#pragma once

#include <stdexcept>
#include <string>

namespace qdst {

enum class errc {
  empty_focal,
  duplicate_focal,
  negative_component,
  not_normalized,
  zero_total,
  frame_mismatch,
  too_few_sources,
  domain_error,
  total_conflict,
  all_zero_support,
  degenerate_class,
  invalid_fraction,
  invalid_keep_count,
  kept_mismatch,
  zero_norm,
  single_class_only,
  too_few_positives,
  too_few_validation_rows,
  bad_input,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_focal: return "EmptyFocal";
    case errc::duplicate_focal: return "DuplicateFocal";
    case errc::negative_component: return "NegativeComponent";
    case errc::not_normalized: return "NotNormalized";
    case errc::zero_total: return "ZeroTotal";
    case errc::frame_mismatch: return "FrameMismatch";
    case errc::too_few_sources: return "TooFew";
    case errc::domain_error: return "DomainError";
    case errc::total_conflict: return "TotalConflict";
    case errc::all_zero_support: return "AllZeroSupport";
    case errc::degenerate_class: return "DegenerateClass";
    case errc::invalid_fraction: return "InvalidFraction";
    case errc::invalid_keep_count: return "InvalidKeepCount";
    case errc::kept_mismatch: return "KeptMismatch";
    case errc::zero_norm: return "ZeroNorm";
    case errc::single_class_only: return "SingleClassOnly";
    case errc::too_few_positives: return "TooFewPositives";
    case errc::too_few_validation_rows: return "TooFewValidationRows";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Malformed or inconsistent inputs (files, arguments, preconditions).
class input_error : public error {
 public:
  using error::error;
};

/// Failures arising during an otherwise well-posed computation
/// (e.g. total conflict under Dempster combination).
class computation_error : public error {
 public:
  using error::error;
};

[[noreturn]] inline void throw_input(errc c, const std::string& what) {
  throw input_error(c, what);
}

[[noreturn]] inline void throw_computation(errc c, const std::string& what) {
  throw computation_error(c, what);
}

}  // namespace qdst
