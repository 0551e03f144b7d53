#pragma once

#include <stdexcept>
#include <string>

namespace minsing {

// Unsupported type/rank combination or malformed configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The layer search hit its cap without finding a nonzero layer.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, int d_max)
      : std::runtime_error(what), d_max_(d_max) {}
  int d_max() const noexcept { return d_max_; }

 private:
  int d_max_;
};

// Report preconditions violated (empty weights, non-unit multiplicity, gcd).
class AssemblyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result contradicted an invariant that must hold by construction.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minsing
