#pragma once

#include <stdexcept>

namespace immcensus {

// Bad caller input (degree mismatch, malformed text, wrong class).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size lies outside what an exact sweep can handle here.
class OutOfEnvelope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotBicolourable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An orbit outgrew its group: the action is not closed, i.e. a bug.
class OrbitOverflow : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace immcensus
