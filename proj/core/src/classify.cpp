#include "hyperring/classify.hpp"

#include <algorithm>

#include "hyperring/error.hpp"
#include "hyperring/io.hpp"

namespace hyperring {

namespace {

void require_proper(const Hyperideal& ideal, const char* what) {
  if (!ideal.proper()) throw DomainError(std::string(what) + " needs a proper hyperideal");
}

void require_k(int k) {
  if (k < 1) throw DomainError("k must be at least 1");
}

// Positions kept when dropping `drop` of `t` positions, one entry per choice
// of dropped positions, in lexicographic order of the dropped set.
struct IndexSets {
  std::vector<std::vector<std::size_t>> kept;
  std::vector<std::vector<std::size_t>> dropped;
};

IndexSets index_sets(std::size_t t, std::size_t drop) {
  IndexSets out;
  std::vector<std::size_t> pick(drop);
  for (std::size_t i = 0; i < drop; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> kept;
    for (std::size_t p = 0, j = 0; p < t; ++p) {
      if (j < drop && pick[j] == p) {
        ++j;
      } else {
        kept.push_back(p);
      }
    }
    out.kept.push_back(std::move(kept));
    out.dropped.push_back(pick);
    std::size_t i = drop;
    while (i > 0 && pick[i - 1] == t - drop + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t j = i; j < drop; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct Shape {
  std::size_t t;  // k(n-1)+1
  std::size_t s;  // (k-1)(n-1)+1
  IndexSets sets;
};

Shape shape(const Hyperring& h, int k) {
  const std::size_t step = static_cast<std::size_t>(h->n()) - 1;
  const auto kk = static_cast<std::size_t>(k);
  return {kk * step + 1, (kk - 1) * step + 1, index_sets(kk * step + 1, step)};
}

template <class T>
std::vector<T> pick(const std::vector<T>& from, const std::vector<std::size_t>& positions) {
  std::vector<T> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(from[p]);
  return out;
}

// The ordered condition "prefix in A, or some other index set in B" holds for
// every ordering iff B has two members, or B = {P} with P in A. Returns the
// index set to put first in a failing ordering, or -1 when all orderings pass.
long failing_prefix(const std::vector<char>& in_a, const std::vector<char>& in_b) {
  long only = -1;
  std::size_t count = 0;
  for (std::size_t i = 0; i < in_b.size(); ++i) {
    if (in_b[i]) {
      ++count;
      only = static_cast<long>(i);
    }
  }
  if (count == 0) return 0;
  if (count == 1 && !in_a[static_cast<std::size_t>(only)]) return only;
  return -1;
}

template <class T>
std::vector<T> reorder(const std::vector<T>& tuple, const IndexSets& sets, long prefix) {
  const auto i = static_cast<std::size_t>(prefix);
  std::vector<T> out = pick(tuple, sets.kept[i]);
  for (const T& x : pick(tuple, sets.dropped[i])) out.push_back(x);
  return out;
}

enum class Mode { Absorbing, Primary };

Verdict element_scan(const Hyperideal& ideal, int k, Subset zone, Mode mode, Subset rad) {
  const Hyperring& h = ideal.parent();
  const Shape sh = shape(h, k);
  const Subset members = ideal.members();
  Verdict out = Verdict::pass();
  std::vector<char> in_a(sh.sets.kept.size()), in_b(sh.sets.kept.size());
  for_each_multiset(h.size(), sh.t, [&](const Tuple& ms) {
    Element p = g_iter(*h, ms);
    if (!zone.contains(p)) return true;
    bool any_a = false;
    for (std::size_t i = 0; i < sh.sets.kept.size(); ++i) {
      Element q = g_iter(*h, pick(ms, sh.sets.kept[i]));
      in_a[i] = members.contains(q);
      in_b[i] = rad.contains(q);
      any_a = any_a || in_a[i];
    }
    if (mode == Mode::Absorbing) {
      if (any_a) return true;
      out = Verdict::fail(ms, "product " + h->element_name(p) + " of " + format_tuple(*h, ms) +
                                  " has no sub-product inside the ideal");
      return false;
    }
    long prefix = failing_prefix(in_a, in_b);
    if (prefix < 0) return true;
    Tuple w = reorder(ms, sh.sets, prefix);
    out = Verdict::fail(w, "product " + h->element_name(p) + " of " + format_tuple(*h, w) +
                               ": leading sub-product outside the ideal, no other inside the radical");
    return false;
  });
  return out;
}

Subset zone_of(const Hyperideal& ideal, const PhiDescriptor& phi) {
  return phi_apply(phi, ideal).remove_from(ideal.members());
}

}  // namespace

Verdict is_prime(const Hyperideal& ideal) {
  require_proper(ideal, "is_prime");
  const Hyperring& h = ideal.parent();
  const Subset members = ideal.members();
  Verdict out = Verdict::pass();
  for_each_multiset(h.size(), static_cast<std::size_t>(h->n()), [&](const Tuple& ms) {
    if (!members.contains(h->g(ms))) return true;
    if (std::any_of(ms.begin(), ms.end(), [&](Element e) { return members.contains(e); })) return true;
    out = Verdict::fail(ms, "g" + format_tuple(*h, ms) + " = " + h->element_name(h->g(ms)) +
                                " lies in the ideal but no factor does");
    return false;
  });
  return out;
}

const std::vector<Subset>& prime_lattice(const Hyperring& h) {
  const auto& st = detail::state_of(h);
  std::call_once(st.primes_once, [&] {
    std::vector<Subset> primes;
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      if (is_prime(trusted_hyperideal(h, s)).holds) primes.push_back(s);
    }
    st.primes = std::move(primes);
  });
  return st.primes;
}

Hyperideal radical(const Hyperideal& ideal) {
  const Hyperring& h = ideal.parent();
  Subset r = h->carrier();
  for (Subset p : prime_lattice(h)) {
    if (ideal.members().subset_of(p)) r &= p;
  }
  return trusted_hyperideal(h, r);
}

Hyperideal radical_by_powers(const Hyperideal& ideal) {
  const Hyperring& h = ideal.parent();
  const auto n = static_cast<std::size_t>(h->n());
  const Subset members = ideal.members();
  Subset r;
  for (Element a = 0; a < h.size(); ++a) {
    bool inside = false;
    for (std::size_t s = 1; s <= n && !inside; ++s) {
      Tuple args(n, h->one());
      std::fill(args.begin(), args.begin() + static_cast<long>(s), a);
      inside = members.contains(h->g(args));
    }
    // a^(l(n-1)+1) for l = 1, 2, ...: one more g(x, a^(n-1)) step each time.
    Element power = a;
    std::vector<char> seen(h.size(), 0);
    seen[power] = 1;
    Tuple step(n, a);
    for (std::size_t l = 1; l <= h.size() && !inside; ++l) {
      step[0] = power;
      power = h->g(step);
      inside = members.contains(power);
      if (seen[power]) break;
      seen[power] = 1;
    }
    if (inside) r.insert(a);
  }
  return Hyperideal::make(h, r);
}

Verdict is_primary(const Hyperideal& ideal, PrimaryReading reading) {
  require_proper(ideal, "is_primary");
  const Hyperring& h = ideal.parent();
  const Subset members = ideal.members();
  const Subset rad = radical(ideal).members();
  const auto n = static_cast<std::size_t>(h->n());
  Verdict out = Verdict::pass();
  for_each_multiset(h.size(), n, [&](const Tuple& ms) {
    if (!members.contains(h->g(ms))) return true;
    bool any_inside = false, any_rad = false, all_rad = true;
    for (std::size_t i = 0; i < n; ++i) {
      Tuple comp = ms;
      comp[i] = h->one();
      bool in_rad = rad.contains(h->g(comp));
      bool inside = members.contains(ms[i]);
      any_inside = any_inside || inside;
      any_rad = any_rad || in_rad;
      if (!inside && !in_rad) all_rad = false;
    }
    bool ok = reading == PrimaryReading::AnyPosition ? (any_inside || any_rad) : all_rad;
    if (ok) return true;
    out = Verdict::fail(ms, "g" + format_tuple(*h, ms) + " = " + h->element_name(h->g(ms)) +
                                " lies in the ideal without a factor inside or a complement in the radical");
    return false;
  });
  return out;
}

Verdict is_kn_absorbing(const Hyperideal& ideal, int k) {
  return is_phi_kn_absorbing(ideal, k, PhiDescriptor::empty());
}

Verdict is_kn_absorbing_primary(const Hyperideal& ideal, int k) {
  return is_phi_kn_absorbing_primary(ideal, k, PhiDescriptor::empty());
}

Verdict is_phi_kn_absorbing(const Hyperideal& ideal, int k, const PhiDescriptor& phi) {
  require_proper(ideal, "absorbing check");
  require_k(k);
  return element_scan(ideal, k, zone_of(ideal, phi), Mode::Absorbing, Subset{});
}

Verdict is_phi_kn_absorbing_primary(const Hyperideal& ideal, int k, const PhiDescriptor& phi) {
  require_proper(ideal, "absorbing-primary check");
  require_k(k);
  return element_scan(ideal, k, zone_of(ideal, phi), Mode::Primary, radical(ideal).members());
}

Verdict is_strongly_phi_kn_absorbing_primary(const Hyperideal& ideal, int k, const PhiDescriptor& phi) {
  require_proper(ideal, "strongly absorbing-primary check");
  require_k(k);
  const Hyperring& h = ideal.parent();
  const Shape sh = shape(h, k);
  const auto& lattice = hyperideal_lattice(h);
  const Subset members = ideal.members();
  const Subset zone = zone_of(ideal, phi);
  const Subset rad = radical(ideal).members();
  Verdict out = Verdict::pass();
  std::vector<char> in_a(sh.sets.kept.size()), in_b(sh.sets.kept.size());
  for_each_multiset(lattice.size(), sh.t, [&](const Tuple& idx) {
    std::vector<Subset> tuple;
    for (Element i : idx) tuple.push_back(lattice[i]);
    if (!set_g_product(*h, tuple).subset_of(zone)) return true;
    for (std::size_t i = 0; i < sh.sets.kept.size(); ++i) {
      Subset q = set_g_product(*h, pick(tuple, sh.sets.kept[i]));
      in_a[i] = q.subset_of(members);
      in_b[i] = q.subset_of(rad);
    }
    long prefix = failing_prefix(in_a, in_b);
    if (prefix < 0) return true;
    out = Verdict::fail_ideals(reorder(tuple, sh.sets, prefix),
                               "setwise product lies in the zone with no admissible sub-product");
    return false;
  });
  return out;
}

std::optional<Tuple> find_phi_kn_primary_witness(const Hyperideal& ideal, int k, const PhiDescriptor& phi) {
  require_proper(ideal, "primary-tuple search");
  require_k(k);
  const PhiValue v = phi_apply(phi, ideal);
  if (v.is_empty_marker()) throw DomainError("primary tuples need a nonempty phi value");
  const Hyperring& h = ideal.parent();
  const Shape sh = shape(h, k);
  const Subset members = ideal.members();
  const Subset rad = radical(ideal).members();
  std::optional<Tuple> found;
  std::vector<char> in_a(sh.sets.kept.size()), in_b(sh.sets.kept.size());
  for_each_multiset(h.size(), sh.t, [&](const Tuple& ms) {
    if (!v.value->contains(g_iter(*h, ms))) return true;
    for (std::size_t i = 0; i < sh.sets.kept.size(); ++i) {
      Element q = g_iter(*h, pick(ms, sh.sets.kept[i]));
      in_a[i] = members.contains(q);
      in_b[i] = rad.contains(q);
    }
    long prefix = failing_prefix(in_a, in_b);
    if (prefix < 0) return true;
    found = reorder(ms, sh.sets, prefix);
    return false;
  });
  return found;
}

bool is_phi_kn_primary_tuple(const Hyperideal& ideal, int k, const PhiDescriptor& phi, const Tuple& tuple) {
  require_k(k);
  const Hyperring& h = ideal.parent();
  const Shape sh = shape(h, k);
  if (tuple.size() != sh.t) return false;
  const PhiValue v = phi_apply(phi, ideal);
  if (v.is_empty_marker() || !v.value->contains(g_iter(*h, tuple))) return false;
  const Tuple prefix(tuple.begin(), tuple.begin() + static_cast<long>(sh.s));
  if (ideal.contains(g_iter(*h, prefix))) return false;
  const Subset rad = radical(ideal).members();
  for (std::size_t i = 0; i < sh.sets.kept.size(); ++i) {
    const auto& kept = sh.sets.kept[i];
    bool is_prefix = true;
    for (std::size_t j = 0; j < kept.size(); ++j) is_prefix = is_prefix && kept[j] == j;
    if (is_prefix) continue;
    if (rad.contains(g_iter(*h, pick(tuple, kept)))) return false;
  }
  return true;
}

const PredicateResult* ClassificationReport::find(const std::string& predicate, int k,
                                                  const std::string& phi) const {
  for (const auto& r : results) {
    if (r.predicate == predicate && r.k == k && r.phi == phi) return &r;
  }
  return nullptr;
}

ClassificationReport classify_ideal(const Hyperideal& ideal, int k_max, const std::vector<PhiDescriptor>& phis) {
  ClassificationReport rep;
  rep.ideal = ideal.members();
  rep.proper = ideal.proper();
  rep.radical = radical(ideal).members();
  rep.radical_by_powers = radical_by_powers(ideal).members();
  rep.radicals_agree = rep.radical == rep.radical_by_powers;
  for (const auto& phi : phis) rep.phi_values.emplace_back(phi.name(), phi_apply(phi, ideal));
  if (!rep.proper) return rep;

  rep.results.push_back({"prime", 0, {}, is_prime(ideal)});
  rep.results.push_back({"primary", 0, {}, is_primary(ideal)});
  rep.results.push_back({"primary-strict", 0, {}, is_primary(ideal, PrimaryReading::FailingPosition)});
  for (int k = 1; k <= k_max; ++k) {
    rep.results.push_back({"absorbing", k, {}, is_kn_absorbing(ideal, k)});
    rep.results.push_back({"absorbing-primary", k, {}, is_kn_absorbing_primary(ideal, k)});
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const auto& phi = phis[i];
      rep.results.push_back({"phi-absorbing", k, phi.name(), is_phi_kn_absorbing(ideal, k, phi)});
      rep.results.push_back({"phi-absorbing-primary", k, phi.name(), is_phi_kn_absorbing_primary(ideal, k, phi)});
      rep.results.push_back({"strongly-phi-absorbing-primary", k, phi.name(),
                             is_strongly_phi_kn_absorbing_primary(ideal, k, phi)});
      if (!rep.phi_values[i].second.is_empty_marker()) {
        if (auto t = find_phi_kn_primary_witness(ideal, k, phi)) rep.primary_tuples.push_back({phi.name(), k, *t});
      }
    }
  }
  return rep;
}

}  // namespace hyperring
