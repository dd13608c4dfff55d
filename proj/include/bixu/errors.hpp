#ifndef BIXU_ERRORS_HPP_
#define BIXU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bixu {

// Matrix too small for the requested statistic, or no valid index tuple.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside the operation's domain (c not in (0,1), negative weight, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// All-zero or single-support matrices where a denominator U-statistic vanishes.
struct degenerate_input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A variance estimate required for a confidence interval is <= 0 or flagged.
struct invalid_variance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed matrix or config file.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bixu

#endif  // BIXU_ERRORS_HPP_
