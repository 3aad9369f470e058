#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperring/structure.hpp"

namespace hyperring {

/// Outcome of a predicate check. A failed verdict always carries the witness
/// that refutes it: an element tuple, or a tuple of hyperideals for the
/// setwise predicates.
struct Verdict {
  bool holds = true;
  Tuple witness;
  std::vector<Subset> ideal_witness;
  std::string detail;

  static Verdict pass(std::string detail = {}) { return {true, {}, {}, std::move(detail)}; }
  static Verdict fail(Tuple witness, std::string detail) {
    return {false, std::move(witness), {}, std::move(detail)};
  }
  static Verdict fail_ideals(std::vector<Subset> witness, std::string detail) {
    return {false, {}, std::move(witness), std::move(detail)};
  }

  explicit operator bool() const { return holds; }
};

}  // namespace hyperring
