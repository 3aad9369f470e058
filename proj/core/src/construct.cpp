#include "hyperring/construct.hpp"

#include <algorithm>

#include "hyperring/error.hpp"
#include "hyperring/io.hpp"

namespace hyperring {

Verdict is_homomorphism(const Hyperring& source, const Hyperring& target, const std::vector<Element>& map) {
  const KrasnerHyperring& s = *source;
  const KrasnerHyperring& t = *target;
  if (s.m() != t.m() || s.n() != t.n()) return Verdict::fail({}, "arities differ");
  if (map.size() != s.size()) return Verdict::fail({}, "map is not total on the source");
  for (Element e = 0; e < map.size(); ++e) {
    if (map[e] >= t.size()) return Verdict::fail({e}, "image of " + s.element_name(e) + " is out of range");
  }
  if (map[s.zero()] != t.zero()) return Verdict::fail({s.zero()}, "zero is not mapped to zero");
  if (map[s.one()] != t.one()) return Verdict::fail({s.one()}, "one is not mapped to one");

  auto image = [&](Subset x) {
    Subset out;
    for (Element e : x) out.insert(map[e]);
    return out;
  };
  Verdict out = Verdict::pass();
  Tuple mapped;
  for_each_tuple(s.size(), static_cast<std::size_t>(s.m()), [&](const Tuple& args) {
    if (!out.holds) return;
    mapped.clear();
    for (Element e : args) mapped.push_back(map[e]);
    if (image(s.f(args)) != t.f(mapped)) {
      out = Verdict::fail(args, "f" + format_tuple(s, args) + " is not preserved");
    }
  });
  if (!out.holds) return out;
  for_each_tuple(s.size(), static_cast<std::size_t>(s.n()), [&](const Tuple& args) {
    if (!out.holds) return;
    mapped.clear();
    for (Element e : args) mapped.push_back(map[e]);
    if (map[s.g(args)] != t.g(mapped)) {
      out = Verdict::fail(args, "g" + format_tuple(s, args) + " is not preserved");
    }
  });
  return out;
}

Homomorphism Homomorphism::make(Hyperring source, Hyperring target, std::vector<Element> map) {
  Verdict v = is_homomorphism(source, target, map);
  if (!v.holds) throw DomainError("not a homomorphism: " + v.detail);
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

Homomorphism Homomorphism::identity(const Hyperring& h) {
  std::vector<Element> map(h.size());
  for (Element e = 0; e < map.size(); ++e) map[e] = e;
  return Homomorphism(h, h, std::move(map));
}

Subset Homomorphism::image(Subset s) const {
  Subset out;
  for (Element e : s) out.insert(map_[e]);
  return out;
}

Subset Homomorphism::preimage(Subset s) const {
  Subset out;
  for (Element e = 0; e < map_.size(); ++e) {
    if (s.contains(map_[e])) out.insert(e);
  }
  return out;
}

bool Homomorphism::surjective() const { return image(source_->carrier()) == target_->carrier(); }

Hyperideal kernel(const Homomorphism& h) {
  return trusted_hyperideal(h.source(), h.preimage(Subset::singleton(h.target()->zero())));
}

Hyperideal preimage_ideal(const Homomorphism& h, Subset target_ideal) {
  return Hyperideal::make(h.source(), h.preimage(target_ideal));
}

Hyperideal image_ideal(const Homomorphism& h, Subset source_ideal) {
  if (!h.surjective()) throw DomainError("image_ideal needs a surjective homomorphism");
  if (!kernel(h).members().subset_of(source_ideal)) {
    throw DomainError("image_ideal needs the kernel inside the ideal");
  }
  return Hyperideal::make(h.target(), h.image(source_ideal));
}

Verdict is_phi1_phi2_homomorphism(const Homomorphism& h, const PhiDescriptor& phi1, const PhiDescriptor& phi2) {
  if (!is_reduction_function(h.source(), phi1).holds) throw DomainError(phi1.name() + " is not a reduction function");
  if (!is_reduction_function(h.target(), phi2).holds) throw DomainError(phi2.name() + " is not a reduction function");
  for (Subset j : hyperideal_lattice(h.target())) {
    PhiValue lhs = phi_apply(h.source(), phi1, h.preimage(j));
    PhiValue rhs = phi_apply(h.target(), phi2, j);
    std::optional<Subset> pulled;
    if (rhs.value) pulled = h.preimage(*rhs.value);
    if (lhs.value != pulled) {
      return Verdict::fail_ideals({j}, "phi values disagree over {" + format_subset(*h.target(), j) + "}");
    }
  }
  return Verdict::pass();
}

Quotient quotient(const Hyperideal& p) {
  const Hyperring& h = p.parent();
  const KrasnerHyperring& t = *h;
  const auto m = static_cast<std::size_t>(t.m());
  const auto n = static_cast<std::size_t>(t.n());

  // Coset of each element, then distinct cosets in order of least member.
  std::vector<Subset> coset_of(t.size());
  for (Element r = 0; r < t.size(); ++r) {
    std::vector<Subset> args(m, Subset::singleton(t.zero()));
    args[0] = Subset::singleton(r);
    args[1] = p.members();
    coset_of[r] = set_f(t, args);
  }
  std::vector<Subset> cosets;
  std::vector<Element> cls(t.size(), KrasnerHyperring::kUnset);
  for (Element r = 0; r < t.size(); ++r) {
    if (cls[r] != KrasnerHyperring::kUnset) continue;
    Subset c = coset_of[r];
    for (Element e : c) {
      if (cls[e] != KrasnerHyperring::kUnset || coset_of[e] != c) {
        throw InvariantError("cosets of {" + format_subset(t, p.members()) + "} overlap at " +
                             t.element_name(e));
      }
      cls[e] = static_cast<Element>(cosets.size());
    }
    if (cls[r] == KrasnerHyperring::kUnset) {
      throw InvariantError("element " + t.element_name(r) + " is not in its own coset");
    }
    cosets.push_back(c);
  }

  std::vector<std::string> names;
  for (Subset c : cosets) names.push_back("[" + format_subset(t, c) + "]");
  KrasnerHyperring qt(t.name() + "/[" + format_subset(t, p.members()) + "]", t.m(), t.n(), names,
                      cls[t.zero()], cls[t.one()]);

  auto coset_tuple_name = [&](const Tuple& ct) { return format_tuple(qt, ct); };
  const std::size_t q = cosets.size();
  for_each_tuple(q, m, [&](const Tuple& ct) {
    std::optional<Subset> result;
    std::vector<std::vector<Element>> reps;
    for (Element c : ct) reps.push_back(cosets[c].elements());
    Tuple idx(m, 0), args(m);
    while (true) {
      for (std::size_t i = 0; i < m; ++i) args[i] = reps[i][idx[i]];
      Subset image;
      for (Element e : t.f(args)) image.insert(cls[e]);
      if (!result) {
        result = image;
      } else if (*result != image) {
        throw InvariantError("induced f depends on representatives at " + coset_tuple_name(ct) + " via " +
                             format_tuple(t, args));
      }
      std::size_t i = m;
      while (i > 0 && ++idx[i - 1] == reps[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
    qt.set_f(ct, *result);
  });
  for_each_tuple(q, n, [&](const Tuple& ct) {
    Element result = KrasnerHyperring::kUnset;
    std::vector<std::vector<Element>> reps;
    for (Element c : ct) reps.push_back(cosets[c].elements());
    Tuple idx(n, 0), args(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) args[i] = reps[i][idx[i]];
      Element image = cls[t.g(args)];
      if (result == KrasnerHyperring::kUnset) {
        result = image;
      } else if (result != image) {
        throw InvariantError("induced g depends on representatives at " + coset_tuple_name(ct) + " via " +
                             format_tuple(t, args));
      }
      std::size_t i = n;
      while (i > 0 && ++idx[i - 1] == reps[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
    qt.set_g(ct, result);
  });

  Hyperring ring = Hyperring::from(std::move(qt));
  Homomorphism pi = Homomorphism::make(h, ring, cls);
  return Quotient{std::move(ring), std::move(pi), std::move(cosets), p.members()};
}

PhiDescriptor quotient_phi(const Quotient& q, const PhiDescriptor& phi, bool require_containment) {
  const Hyperring& source = q.projection.source();
  PhiDescriptor::TableMap entries;
  for (Subset j : hyperideal_lattice(q.ring)) {
    Subset pre = q.projection.preimage(j);
    PhiValue v = phi_apply(source, phi, pre);
    if (!v.value) {
      entries.emplace(j.bits(), std::nullopt);
      continue;
    }
    if (require_containment && !q.ideal.subset_of(*v.value)) {
      throw DomainError("phi({" + format_subset(*source, pre) + "}) does not contain the quotient ideal");
    }
    Subset image = q.projection.image(*v.value);
    if (!is_hyperideal(q.ring, image).holds) {
      throw InvariantError("pushed-forward phi value {" + format_subset(*q.ring, image) + "} is not a hyperideal");
    }
    entries.emplace(j.bits(), image);
  }
  return PhiDescriptor::table(std::move(entries), phi.name() + "_q");
}

std::vector<Element> Product::decode(Element e) const {
  std::vector<Element> coords(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(e % factors[i].size());
    e /= static_cast<Element>(factors[i].size());
  }
  return coords;
}

Element Product::encode(const std::vector<Element>& coords) const {
  Element e = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) e = e * static_cast<Element>(factors[i].size()) + coords.at(i);
  return e;
}

Homomorphism Product::projection(std::size_t factor) const {
  std::vector<Element> map(ring.size());
  for (Element e = 0; e < map.size(); ++e) map[e] = decode(e).at(factor);
  return Homomorphism::make(ring, factors.at(factor), std::move(map));
}

Subset Product::cartesian(const std::vector<Subset>& parts) const {
  if (parts.size() != factors.size()) throw DomainError("one subset per factor expected");
  Subset out;
  for (Element e = 0; e < ring.size(); ++e) {
    auto c = decode(e);
    bool inside = true;
    for (std::size_t i = 0; i < c.size() && inside; ++i) inside = parts[i].contains(c[i]);
    if (inside) out.insert(e);
  }
  return out;
}

Product product(const std::vector<Hyperring>& factors) {
  if (factors.empty()) throw DomainError("product needs at least one factor");
  const int m = factors[0]->m();
  const int n = factors[0]->n();
  std::size_t size = 1;
  for (const auto& f : factors) {
    if (f->m() != m || f->n() != n) throw DomainError("product factors must share (m,n)");
    size *= f.size();
    if (size > kMaxCarrier) throw CapacityError("product exceeds " + std::to_string(kMaxCarrier) + " elements");
  }

  // decode/encode only read the factors, so a placeholder ring is enough here.
  Product shape{factors[0], factors};
  std::vector<std::string> names(size);
  for (Element e = 0; e < size; ++e) {
    auto c = shape.decode(e);
    std::string name = "(";
    for (std::size_t i = 0; i < c.size(); ++i) name += (i ? "," : "") + factors[i]->element_name(c[i]);
    names[e] = name + ")";
  }
  std::vector<Element> zero, one;
  std::string label;
  for (const auto& f : factors) {
    zero.push_back(f->zero());
    one.push_back(f->one());
    label += (label.empty() ? "" : " x ") + f->name();
  }
  KrasnerHyperring t(label, m, n, names, shape.encode(zero), shape.encode(one));

  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Element>> coords(size);
  for (Element e = 0; e < size; ++e) coords[e] = shape.decode(e);
  Tuple fa(um), ga(un);
  for_each_tuple(size, um, [&](const Tuple& args) {
    std::vector<Subset> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = 0; j < um; ++j) fa[j] = coords[args[j]][i];
      parts.push_back(factors[i]->f(fa));
    }
    Subset result;
    for (Element e = 0; e < size; ++e) {
      bool inside = true;
      for (std::size_t i = 0; i < parts.size() && inside; ++i) inside = parts[i].contains(coords[e][i]);
      if (inside) result.insert(e);
    }
    t.set_f(args, result);
  });
  for_each_tuple(size, un, [&](const Tuple& args) {
    std::vector<Element> c;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = 0; j < un; ++j) ga[j] = coords[args[j]][i];
      c.push_back(factors[i]->g(ga));
    }
    t.set_g(args, shape.encode(c));
  });
  return Product{Hyperring::from(std::move(t)), factors};
}

}  // namespace hyperring
