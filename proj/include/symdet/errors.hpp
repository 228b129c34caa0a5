#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

// Malformed user input: bad JSON, invalid group tables, non-prime moduli,
// member sets that fail to be subgroups, unparseable rationals.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A redundant internal cross-check failed: an identity that must always hold
// does not hold on computed data. Indicates a bug, never bad input.
class internal_inconsistency : public std::runtime_error {
 public:
  explicit internal_inconsistency(const std::string& what)
      : std::runtime_error(what) {}
};

// Polynomial division with a nonzero remainder where exactness was required.
class inexact_division : public std::runtime_error {
 public:
  explicit inexact_division(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace symdet
