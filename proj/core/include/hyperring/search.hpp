#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperring/classify.hpp"
#include "hyperring/phi.hpp"
#include "hyperring/structure.hpp"

namespace hyperring {

inline constexpr std::size_t kMaxSearchOrder = 5;

struct SearchConfig {
  std::size_t order = 3;
  int m = 2;
  int n = 2;
  unsigned jobs = 1;
};

struct SearchStats {
  std::size_t involutions = 0;
  std::size_t hypergroups = 0;   // (R,f) candidates passing the hypergroup axioms
  std::size_t leaves = 0;        // full structures passing validate_axioms
  std::size_t classes = 0;       // after isomorphism dedup
};

struct Catalog {
  std::vector<Hyperring> structures;
  std::vector<std::string> certificates;
  SearchStats stats;
};

/// All Krasner (2,2)-hyperrings of the given order up to isomorphisms fixing
/// 0 and 1. Each entry is the canonical relabelling of its class, elements
/// named 0, 1, a, b, c; entries are sorted by certificate, so the output does
/// not depend on `jobs`. Throws DomainError for (m,n) != (2,2) or order above
/// kMaxSearchOrder.
Catalog enumerate_structures(const SearchConfig& config);

/// Orders 1..config.order concatenated.
Catalog enumerate_up_to(const SearchConfig& config);

/// Lexicographically least serialization of the tables over all carrier
/// permutations fixing 0 and 1. Throws CapacityError above 10 elements.
std::string canonical_form(const KrasnerHyperring& h);
/// The structure relabelled into its canonical form.
KrasnerHyperring canonical_relabel(const KrasnerHyperring& h);

enum class HuntKind {
  PrimeNotPrimary,
  PhiAbsorbingNotAbsorbing,
  PhiPrimaryNotPrimary,
  PhiPrimaryTuple,
};

struct HuntTarget {
  HuntKind kind = HuntKind::PhiPrimaryNotPrimary;
  PhiDescriptor phi = PhiDescriptor::zero();
  int k = 2;
};

struct HuntHit {
  Hyperring structure;
  Subset ideal;
  std::string phi;
  int k = 0;
  Tuple witness;
};

/// Every (structure, proper ideal) meeting the target, with the tuple that
/// certifies it: the failing tuple of the unrestricted predicate, or the
/// primary tuple itself.
std::vector<HuntHit> hunt(const std::vector<Hyperring>& catalog, const HuntTarget& target);

HuntKind parse_hunt_kind(const std::string& name);
std::string hunt_kind_name(HuntKind kind);

}  // namespace hyperring
