#pragma once

#include <string>
#include <vector>

#include "hyperring/error.hpp"
#include "hyperring/structure.hpp"

namespace hyperring {

/// One failed axiom with a concrete witness. Elements are given by name.
struct AxiomViolation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string observed;
  std::string expected;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  /// Assumptions the validator enforces beyond the bare definition.
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
};

/// Thrown by Hyperring::from when validation fails.
class AxiomError : public Error {
 public:
  AxiomError(AxiomReport report, const std::string& name);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Evaluation budget for the associativity/distributivity scans.
inline constexpr double kMaxAxiomEvaluations = 1e8;

/// Checks every Krasner (m,n)-hyperring axiom, one witness (the
/// lexicographically first) per failed axiom:
///   f-commutative, f-associative, f-neutral, f-inverse, f-reversible,
///   g-commutative, g-associative, distributive, g-zero-absorbing,
///   g-scalar-identity, plus table-complete and distinct-constants.
/// Throws CapacityError when N^(2m-1), N^(2n-1) or N^(n-1+m) exceeds the budget.
AxiomReport validate_axioms(const KrasnerHyperring& h);

/// Only the canonical m-ary hypergroup part (f axioms and f-table completeness).
AxiomReport validate_hypergroup(const KrasnerHyperring& h);

}  // namespace hyperring
