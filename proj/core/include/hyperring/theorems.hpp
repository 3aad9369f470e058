#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hyperring/ideals.hpp"
#include "hyperring/phi.hpp"
#include "hyperring/verdict.hpp"

namespace hyperring {

struct TheoremFailure {
  std::string structure;
  std::string instance;  // ideal(s), phi, k
  std::string detail;    // the concrete counterexample
};

struct TheoremReport {
  std::string id;
  /// "element", "strongly" (phi-primary hypotheses also required to hold
  /// setwise), or "-" when the statement has no phi-primary hypothesis.
  std::string reading = "-";
  /// Set for checks that are not statements from the theory itself.
  bool supplementary = false;
  std::size_t structures = 0;
  std::size_t holds = 0;    // hypothesis true, conclusion true
  std::size_t vacuous = 0;  // hypothesis false
  std::size_t skipped = 0;  // preconditions unmet; reasons counted below
  std::map<std::string, std::size_t> skip_reasons;
  std::vector<TheoremFailure> failures;

  std::size_t instances() const { return holds + vacuous + failures.size(); }
};

struct SuiteOptions {
  int k_max = 3;
  std::vector<PhiDescriptor> phis = standard_phi_set();
  unsigned jobs = 1;
  /// Products of catalog entries are formed for the product theorems only
  /// when their carrier has at most this many elements.
  std::size_t max_product_size = 12;
  bool products = true;
};

/// Theorem ids, in report order:
///   zir, zir-primary, inclu, inclu-primary, exa, one-to-two,
///   car, car-primary, car-proper, car-proper-primary,
///   homo1, homo, quotient, quotient-primary, primary-from-phi,
///   radical-absorbing, weak, kweak, weak2, kweak2, weak3, weak4, weak5,
///   weak6, power-escape, next-level.
/// Reports are merged in structure order, so results do not depend on jobs.
std::vector<TheoremReport> run_suite(const std::vector<Hyperring>& structures, const SuiteOptions& options);

/// phi-(k,n)-absorbing primary on R against weakly (k,n)-absorbing primary of
/// Q/phi(Q) in R/phi(Q), both computed. Passes iff they agree. Throws
/// DomainError when phi(Q) is the empty marker or not inside Q.
Verdict check_kweak_equivalence(const Hyperideal& q, int k, const PhiDescriptor& phi);

}  // namespace hyperring
