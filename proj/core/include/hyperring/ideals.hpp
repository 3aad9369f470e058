#pragma once

#include <cstddef>
#include <vector>

#include "hyperring/structure.hpp"
#include "hyperring/verdict.hpp"

namespace hyperring {

/// A hyperideal of a validated structure: contains 0, closed under f and
/// additive inverses, and absorbing for g in every slot. Properness is not
/// required; operations that need a proper ideal check it themselves.
class Hyperideal {
 public:
  /// Throws DomainError (with the violating tuple) unless `members` is a hyperideal.
  static Hyperideal make(const Hyperring& parent, Subset members);

  const Hyperring& parent() const { return parent_; }
  Subset members() const { return members_; }
  bool proper() const { return members_ != parent_->carrier(); }
  bool contains(Element e) const { return members_.contains(e); }

  bool operator==(const Hyperideal& o) const {
    return parent_.same_as(o.parent_) && members_ == o.members_;
  }

 private:
  Hyperideal(Hyperring parent, Subset members)
      : parent_(std::move(parent)), members_(members) {}
  friend Hyperideal trusted_hyperideal(const Hyperring&, Subset);

  Hyperring parent_;
  Subset members_;
};

/// Wraps a subset already known to be a hyperideal (lattice members, closures).
Hyperideal trusted_hyperideal(const Hyperring& parent, Subset members);

/// Checks both hyperideal conditions; on failure the witness is the violating
/// f- or g-tuple. Throws DomainError on an empty subset.
Verdict is_hyperideal(const Hyperring& h, Subset s);

/// Least hyperideal containing `s` (closure under 0, f, inverses, g-absorption).
Hyperideal generated_hyperideal(const Hyperring& h, Subset s);

enum class EnumerationStrategy {
  /// Closures of all seeds with at most two generators, then closed under
  /// pairwise joins, which reaches every hyperideal.
  Closure,
  /// Tests every subset; refuses carriers above kMaxFullScan elements.
  FullScan,
};

inline constexpr std::size_t kMaxFullScan = 20;

/// All hyperideals, ordered by size then lexicographically by members.
std::vector<Hyperideal> enumerate_hyperideals(const Hyperring& h,
                                              EnumerationStrategy strategy = EnumerationStrategy::Closure);

/// Cached member masks of enumerate_hyperideals(h), same order.
const std::vector<Subset>& hyperideal_lattice(const Hyperring& h);

/// Setwise product of t copies of the ideal, t = l(n-1)+1.
Subset hyperideal_g_power(const Hyperring& h, const Hyperideal& ideal, std::size_t t);

}  // namespace hyperring
