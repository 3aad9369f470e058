#include "hyperring/ideals.hpp"

#include <algorithm>
#include <set>

#include "hyperring/error.hpp"
#include "hyperring/io.hpp"

namespace hyperring {

Hyperideal trusted_hyperideal(const Hyperring& parent, Subset members) {
  return Hyperideal(parent, members);
}

Hyperideal Hyperideal::make(const Hyperring& parent, Subset members) {
  Verdict v = is_hyperideal(parent, members);
  if (!v.holds) {
    throw DomainError("{" + format_subset(*parent, members) + "} is not a hyperideal: " + v.detail);
  }
  return Hyperideal(parent, members);
}

Verdict is_hyperideal(const Hyperring& h, Subset s) {
  if (s.empty()) throw DomainError("is_hyperideal called with the empty set");
  const KrasnerHyperring& t = *h;
  if (!s.subset_of(t.carrier())) throw DomainError("subset exceeds the carrier");
  if (!s.contains(t.zero())) {
    return Verdict::fail({t.zero()}, "missing the zero element " + t.element_name(t.zero()));
  }

  // Subhypergroup: f-closed and inverse-closed.
  const auto m = static_cast<std::size_t>(t.m());
  const std::vector<Element> members = s.elements();
  Verdict out = Verdict::pass();
  for_each_tuple(members.size(), m, [&](const Tuple& idx) {
    if (!out.holds) return;
    Tuple args;
    for (Element i : idx) args.push_back(members[i]);
    Subset r = t.f(args);
    if (!r.subset_of(s)) {
      out = Verdict::fail(args, "f" + format_tuple(t, args) + " = {" + format_subset(t, r) +
                                    "} is not contained in the set");
    }
  });
  if (!out.holds) return out;
  for (Element x : members) {
    if (!s.contains(h.negate(x))) {
      return Verdict::fail({x}, "inverse of " + t.element_name(x) + " is missing");
    }
  }

  // Absorption in every slot.
  const auto n = static_cast<std::size_t>(t.n());
  for_each_tuple(t.size(), n, [&](const Tuple& args) {
    if (!out.holds) return;
    bool touches = std::any_of(args.begin(), args.end(), [&](Element e) { return s.contains(e); });
    if (touches && !s.contains(t.g(args))) {
      out = Verdict::fail(args, "g" + format_tuple(t, args) + " = " + t.element_name(t.g(args)) +
                                    " escapes the set");
    }
  });
  return out;
}

namespace {

Subset closure(const Hyperring& h, Subset seed) {
  const KrasnerHyperring& t = *h;
  const auto m = static_cast<std::size_t>(t.m());
  const auto n = static_cast<std::size_t>(t.n());
  Subset s = seed;
  s.insert(t.zero());
  while (true) {
    Subset next = s;
    for (Element x : s) next.insert(h.negate(x));
    // g commutes on a validated structure, so absorbing in the first slot suffices.
    Tuple args(n);
    for (Element x : s) {
      args[0] = x;
      for_each_tuple(t.size(), n - 1, [&](const Tuple& rest) {
        std::copy(rest.begin(), rest.end(), args.begin() + 1);
        next.insert(t.g(args));
      });
    }
    const std::vector<Element> members = next.elements();
    for_each_tuple(members.size(), m, [&](const Tuple& idx) {
      Tuple fargs;
      for (Element i : idx) fargs.push_back(members[i]);
      next |= t.f(fargs);
    });
    if (next == s) return s;
    s = next;
  }
}

std::vector<Subset> closure_enumeration(const Hyperring& h) {
  const std::size_t n = h.size();
  std::set<std::uint64_t> found;
  std::vector<Subset> ideals;
  auto add = [&](Subset s) {
    if (found.insert(s.bits()).second) ideals.push_back(s);
  };
  add(closure(h, Subset{}));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) add(closure(h, Subset::of({a, b})));
  }
  // Every hyperideal is the join of the principal ideals of its members.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subset joined = ideals[i] | ideals[j];
      if (!found.count(joined.bits())) {
        add(closure(h, joined));
      }
    }
  }
  return ideals;
}

std::vector<Subset> full_scan(const Hyperring& h) {
  if (h.size() > kMaxFullScan) {
    throw CapacityError("full subset scan refused for " + std::to_string(h.size()) + " elements");
  }
  std::vector<Subset> ideals;
  const std::uint64_t limit = std::uint64_t{1} << h.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    Subset s = Subset::from_bits(bits);
    if (s.contains(h->zero()) && is_hyperideal(h, s).holds) ideals.push_back(s);
  }
  return ideals;
}

}  // namespace

Hyperideal generated_hyperideal(const Hyperring& h, Subset s) {
  return trusted_hyperideal(h, closure(h, s));
}

const std::vector<Subset>& hyperideal_lattice(const Hyperring& h) {
  const auto& st = detail::state_of(h);
  std::call_once(st.ideals_once, [&] {
    auto ideals = closure_enumeration(h);
    std::sort(ideals.begin(), ideals.end(), canonical_less);
    st.ideals = std::move(ideals);
  });
  return st.ideals;
}

std::vector<Hyperideal> enumerate_hyperideals(const Hyperring& h, EnumerationStrategy strategy) {
  std::vector<Subset> masks;
  if (strategy == EnumerationStrategy::FullScan) {
    masks = full_scan(h);
    std::sort(masks.begin(), masks.end(), canonical_less);
  } else {
    masks = hyperideal_lattice(h);
  }
  std::vector<Hyperideal> out;
  out.reserve(masks.size());
  for (Subset s : masks) out.push_back(trusted_hyperideal(h, s));
  return out;
}

Subset hyperideal_g_power(const Hyperring& h, const Hyperideal& ideal, std::size_t t) {
  if (!ideal.parent().same_as(h)) throw DomainError("hyperideal belongs to another structure");
  if (!iteration_depth(t, h->n())) {
    throw DomainError("power length " + std::to_string(t) + " is not of the form l(n-1)+1");
  }
  std::vector<Subset> copies(t, ideal.members());
  return set_g_product(*h, copies);
}

}  // namespace hyperring
