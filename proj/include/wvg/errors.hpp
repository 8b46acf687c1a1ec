#pragma once

#include <stdexcept>
#include <string>

namespace wvg {

// Domain errors: malformed games, coalitions, transforms and configs. The CLI
// maps every error derived from domain_error to exit status 1.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_game : domain_error {
  using domain_error::domain_error;
};

struct invalid_coalition : domain_error {
  using domain_error::domain_error;
};

struct invalid_split : domain_error {
  using domain_error::domain_error;
};

struct invalid_merge : domain_error {
  using domain_error::domain_error;
};

struct precondition_error : domain_error {
  using domain_error::domain_error;
};

struct invalid_config : domain_error {
  using domain_error::domain_error;
};

struct size_limit_error : domain_error {
  using domain_error::domain_error;
};

struct resource_limit_error : domain_error {
  using domain_error::domain_error;
};

// Raised when an estimator has nothing to normalize by.
struct degenerate_normalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A state that valid inputs can never reach, e.g. all-zero critical counts.
struct impossible_state : std::logic_error {
  using std::logic_error::logic_error;
};

// A proven bound failed to hold. Always a bug.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wvg
