#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "segrelab/errors.hpp"

namespace segrelab {

// Resource caps for basis computations.  max_seconds <= 0 disables the wall
// clock; the pair and term caps are deterministic and are what reproducible
// runs should pin.
struct budget {
  std::uint64_t max_pairs = 4'000'000;
  std::uint64_t max_terms = 64'000'000;
  double max_seconds = 0.0;
};

inline const budget& default_budget() {
  static const budget b{};
  return b;
}

// Running tally checked inside the Groebner engine.  One meter is shared by
// all basis computations belonging to a single logical operation, so caps
// apply to the operation as a whole.
class budget_meter {
 public:
  explicit budget_meter(const budget& b)
      : b_(b), start_(std::chrono::steady_clock::now()) {}

  void count_pair() {
    if (++pairs_ > b_.max_pairs)
      throw budget_exhausted("budget exhausted: " + std::to_string(b_.max_pairs) +
                             " S-pairs processed");
    if (b_.max_seconds > 0) check_clock();
  }

  void count_terms(std::uint64_t n) {
    terms_ += n;
    if (terms_ > b_.max_terms)
      throw budget_exhausted("budget exhausted: term cap " +
                             std::to_string(b_.max_terms) + " exceeded");
  }

  std::uint64_t pairs() const { return pairs_; }

 private:
  void check_clock() const {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    if (elapsed > b_.max_seconds)
      throw budget_exhausted("budget exhausted: wall clock limit " +
                             std::to_string(b_.max_seconds) + "s exceeded");
  }

  budget b_;
  std::uint64_t pairs_ = 0;
  std::uint64_t terms_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace segrelab
