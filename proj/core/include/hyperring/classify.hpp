#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperring/ideals.hpp"
#include "hyperring/phi.hpp"
#include "hyperring/verdict.hpp"

namespace hyperring {

// Predicates on proper hyperideals throw DomainError when given R itself.
// Element predicates scan multisets in lexicographic order, so the reported
// witness is the least failing multiset, reordered to expose the failure.

Verdict is_prime(const Hyperideal& ideal);

/// Intersection of the proper primes containing the ideal; R when there are none.
Hyperideal radical(const Hyperideal& ideal);
/// Elements with some power inside the ideal: g(a^(s), 1^(n-s)) for s <= n,
/// then g_iter over l(n-1)+1 copies until the sequence repeats or l = N.
Hyperideal radical_by_powers(const Hyperideal& ideal);

/// Proper prime hyperideals, cached per structure.
const std::vector<Subset>& prime_lattice(const Hyperring& h);

enum class PrimaryReading {
  /// Some a_i in I, or some position whose complement product is in the radical.
  AnyPosition,
  /// Every position with a_i outside I has its complement product in the radical.
  FailingPosition,
};

Verdict is_primary(const Hyperideal& ideal, PrimaryReading reading = PrimaryReading::AnyPosition);

Verdict is_kn_absorbing(const Hyperideal& ideal, int k);
Verdict is_kn_absorbing_primary(const Hyperideal& ideal, int k);
Verdict is_phi_kn_absorbing(const Hyperideal& ideal, int k, const PhiDescriptor& phi);
Verdict is_phi_kn_absorbing_primary(const Hyperideal& ideal, int k, const PhiDescriptor& phi);
/// Setwise version over tuples of hyperideals; witnesses are in ideal_witness.
Verdict is_strongly_phi_kn_absorbing_primary(const Hyperideal& ideal, int k, const PhiDescriptor& phi);

/// A tuple with product in phi(I) whose prefix product of (k-1)(n-1)+1
/// entries is outside I and whose other sub-products of that size are outside
/// the radical. Throws DomainError on the empty marker.
std::optional<Tuple> find_phi_kn_primary_witness(const Hyperideal& ideal, int k, const PhiDescriptor& phi);

/// Literal re-check of one ordered tuple against the primary-tuple definition.
bool is_phi_kn_primary_tuple(const Hyperideal& ideal, int k, const PhiDescriptor& phi, const Tuple& tuple);

struct PredicateResult {
  std::string predicate;
  int k = 0;          // 0 when the predicate has no k
  std::string phi;    // empty when the predicate has no phi
  Verdict verdict;
};

struct PrimaryTuple {
  std::string phi;
  int k = 0;
  Tuple tuple;
};

struct ClassificationReport {
  Subset ideal;
  bool proper = true;
  std::optional<Subset> radical;
  std::optional<Subset> radical_by_powers;
  bool radicals_agree = true;
  std::vector<std::pair<std::string, PhiValue>> phi_values;
  std::vector<PredicateResult> results;
  std::vector<PrimaryTuple> primary_tuples;

  const PredicateResult* find(const std::string& predicate, int k = 0, const std::string& phi = {}) const;
};

/// Runs every predicate for k = 1..k_max and each phi. For R itself only the
/// radical fields are filled and proper is false.
ClassificationReport classify_ideal(const Hyperideal& ideal, int k_max, const std::vector<PhiDescriptor>& phis);

}  // namespace hyperring
