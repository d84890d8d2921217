#pragma once

#include <stdexcept>
#include <string>

namespace stabminor {

// Domain errors: the input is well-formed but violates a mathematical
// precondition. Parse/shape problems use std::invalid_argument instead.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCommuting : DomainError {
  NotCommuting(int i_, int j_)
      : DomainError("generators " + std::to_string(i_ + 1) + " and " +
                    std::to_string(j_ + 1) + " do not commute"),
        i(i_),
        j(j_) {}
  int i, j;  // 0-based generator indices
};

struct NotIndependent : DomainError {
  NotIndependent() : DomainError("generators are not independent") {}
};

struct WrongCount : DomainError {
  WrongCount(std::size_t got, std::size_t want)
      : DomainError("expected " + std::to_string(want) + " generators, got " +
                    std::to_string(got)) {}
};

struct NotAStabilizerStateGroup : DomainError {
  NotAStabilizerStateGroup()
      : DomainError("group contains -I (not a stabilizer-state group)") {}
};

struct NotChartPoint : DomainError {
  NotChartPoint() : DomainError("point has z_emptyset = 0") {}
};

struct InconsistentPoint : DomainError {
  InconsistentPoint()
      : DomainError("higher minors disagree with the reconstructed matrix") {}
};

struct NotOnVariety : DomainError {
  NotOnVariety() : DomainError("point does not lie on the minor variety") {}
};

struct BoundExceeded : DomainError {
  explicit BoundExceeded(const std::string& what) : DomainError(what) {}
};

}  // namespace stabminor
