#pragma once

#include <vector>

#include "hyperring/ideals.hpp"
#include "hyperring/phi.hpp"
#include "hyperring/verdict.hpp"

namespace hyperring {

/// Checks 0 -> 0, 1 -> 1, h(f(a)) = f(h(a)) setwise and h(g(a)) = g(h(a)).
/// The witness is the offending source tuple.
Verdict is_homomorphism(const Hyperring& source, const Hyperring& target, const std::vector<Element>& map);

/// A verified unital homomorphism between two validated structures.
class Homomorphism {
 public:
  /// Throws DomainError with the failing tuple unless the map is a homomorphism.
  static Homomorphism make(Hyperring source, Hyperring target, std::vector<Element> map);
  static Homomorphism identity(const Hyperring& h);

  const Hyperring& source() const { return source_; }
  const Hyperring& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element e) const { return map_.at(e); }
  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  bool surjective() const;

 private:
  Homomorphism(Hyperring s, Hyperring t, std::vector<Element> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  Hyperring source_;
  Hyperring target_;
  std::vector<Element> map_;
};

Hyperideal kernel(const Homomorphism& h);
/// Throws DomainError unless the image is a hyperideal of the target.
Hyperideal preimage_ideal(const Homomorphism& h, Subset target_ideal);
/// Requires h surjective and Ker(h) within the ideal; throws DomainError otherwise.
Hyperideal image_ideal(const Homomorphism& h, Subset source_ideal);

/// phi1(h^-1(J)) = h^-1(phi2(J)) for every hyperideal J of the target; the
/// empty marker pulls back to itself. Throws DomainError unless both are
/// reduction functions. The failing J is the single ideal_witness.
Verdict is_phi1_phi2_homomorphism(const Homomorphism& h, const PhiDescriptor& phi1, const PhiDescriptor& phi2);

struct Quotient {
  Hyperring ring;
  Homomorphism projection;
  std::vector<Subset> cosets;  // cosets[i] is element i of ring
  Subset ideal;
};

/// R/P on the cosets f(r, P, 0^(m-2)), ordered by least representative and
/// named "[a,b]". Throws InvariantError naming the offending cosets when an
/// induced table depends on representatives or cosets overlap.
Quotient quotient(const Hyperideal& p);

/// Pushes phi forward: the entry for J is pi(phi(pi^-1(J))). With
/// require_containment, throws DomainError when some phi(pi^-1(J)) does not
/// contain P.
PhiDescriptor quotient_phi(const Quotient& q, const PhiDescriptor& phi, bool require_containment = false);

struct Product {
  Hyperring ring;
  std::vector<Hyperring> factors;

  /// Coordinates of a product element, factor order.
  std::vector<Element> decode(Element e) const;
  Element encode(const std::vector<Element>& coords) const;
  Homomorphism projection(std::size_t factor) const;
  /// Cartesian product of one subset per factor.
  Subset cartesian(const std::vector<Subset>& parts) const;
};

/// Componentwise f and g on tuples named "(a,b)". Throws DomainError on
/// mismatched arities and CapacityError above kMaxCarrier elements.
Product product(const std::vector<Hyperring>& factors);

}  // namespace hyperring
