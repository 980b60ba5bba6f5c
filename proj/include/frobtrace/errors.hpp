#pragma once

#include <stdexcept>
#include <string>

namespace frobtrace {

enum class ErrorCode {
  non_prime,
  too_large,
  bad_residue,
  bad_argument,
  singular,
  bad_parameter,
  bad_weight,
  missing_prior,
  bad_discriminant,
  out_of_range,
  unsupported_weight,
  internal_error,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::non_prime: return "NonPrime";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::bad_residue: return "BadResidue";
    case ErrorCode::bad_argument: return "BadArgument";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::bad_weight: return "BadWeight";
    case ErrorCode::missing_prior: return "MissingPrior";
    case ErrorCode::bad_discriminant: return "BadDiscriminant";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::unsupported_weight: return "UnsupportedWeight";
    case ErrorCode::internal_error: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace frobtrace
