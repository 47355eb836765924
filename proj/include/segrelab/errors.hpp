#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segrelab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings (variables, characteristic, or order differ).
class ring_mismatch_error : public error {
 public:
  using error::error;
};

// Violated operation precondition: characteristic 3, singular cubic,
// improper ideal, non-homogeneous input, and the like.
class precondition_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A computation hit its resource cap.  Always an explicit failure, never a
// wrong answer.
class budget_exhausted : public error {
 public:
  using error::error;
};

// A proved statement came out false in the engine.  This is never a fact
// about mathematics; it means the implementation is broken, and callers
// should abort loudly rather than continue.
class claim_failure : public error {
 public:
  using error::error;
};

}  // namespace segrelab
