#pragma once

#include <stdexcept>
#include <string>

namespace scalartail {

// Requested worldline data outside the recorded history (and no uniform
// closure covers it).
class HistoryExhausted : public std::runtime_error {
 public:
  explicit HistoryExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Field evaluation requested on (or numerically indistinguishable from) the
// source worldline, where the direct field genuinely diverges.
class OnWorldlineError : public std::runtime_error {
 public:
  explicit OnWorldlineError(const std::string& what)
      : std::runtime_error(what) {}
};

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Integrator step rejection escalated past the minimum-step guard.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace scalartail
