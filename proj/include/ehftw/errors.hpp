#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace ehftw {

struct PatternWitness;

// Malformed input: bad vertex ids, unparsable files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard was exceeded or a step is outside what the toolkit can decide.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input graph is outside the class an operation requires.
class ClassViolation : public std::runtime_error {
 public:
  explicit ClassViolation(const std::string& what,
                          std::shared_ptr<const PatternWitness> witness = nullptr)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const PatternWitness* witness() const noexcept { return witness_.get(); }

 private:
  std::shared_ptr<const PatternWitness> witness_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns max(default_limit, EHFTW_GUARD_OVERRIDE). Guards can be raised
// from the environment but never lowered.
int guard_limit(int default_limit);

}  // namespace ehftw
