#include "hyperring/search.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <thread>

#include "hyperring/axioms.hpp"
#include "hyperring/error.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

namespace {

const std::vector<std::string> kNames = {"0", "1", "a", "b", "c"};

std::vector<std::string> standard_names(std::size_t n) {
  return std::vector<std::string>(kNames.begin(), kNames.begin() + static_cast<long>(n));
}

// Serialization of the tables after relabelling by old_of_new.
std::vector<std::uint64_t> relabelled_key(const KrasnerHyperring& h, const std::vector<Element>& old_of_new,
                                          const std::vector<Element>& new_of_old) {
  std::vector<std::uint64_t> key;
  const std::size_t size = h.size();
  Tuple old(static_cast<std::size_t>(std::max(h.m(), h.n())));
  for_each_multiset(size, static_cast<std::size_t>(h.m()), [&](const Tuple& t) {
    Tuple args(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = old_of_new[t[i]];
    Subset mapped;
    for (Element e : h.f(args)) mapped.insert(new_of_old[e]);
    key.push_back(mapped.bits());
    return true;
  });
  for_each_multiset(size, static_cast<std::size_t>(h.n()), [&](const Tuple& t) {
    Tuple args(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = old_of_new[t[i]];
    key.push_back(new_of_old[h.g(args)]);
    return true;
  });
  return key;
}

// Permutation (as old_of_new) giving the least key.
std::vector<Element> canonical_permutation(const KrasnerHyperring& h) {
  if (h.size() > 10) throw CapacityError("canonical form refused above 10 elements");
  std::vector<Element> rest;
  for (Element e = 0; e < h.size(); ++e) {
    if (e != h.zero() && e != h.one()) rest.push_back(e);
  }
  std::vector<Element> head{h.zero()};
  if (h.one() != h.zero()) head.push_back(h.one());
  std::vector<Element> best;
  std::vector<std::uint64_t> best_key;
  do {
    std::vector<Element> old_of_new = head;
    old_of_new.insert(old_of_new.end(), rest.begin(), rest.end());
    std::vector<Element> new_of_old(h.size());
    for (Element i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
    auto key = relabelled_key(h, old_of_new, new_of_old);
    if (best.empty() || key < best_key) {
      best = old_of_new;
      best_key = std::move(key);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

std::string encode_key(const KrasnerHyperring& h, const std::vector<std::uint64_t>& key) {
  std::string out = std::to_string(h.m()) + "," + std::to_string(h.n()) + "," + std::to_string(h.size()) + ":";
  char buf[24];
  for (std::size_t i = 0; i < key.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%llx", i ? "." : "", static_cast<unsigned long long>(key[i]));
    out += buf;
  }
  return out;
}

// ---- f phase -------------------------------------------------------------

struct HypergroupCandidate {
  std::vector<Element> inverse;
  std::vector<Subset> sum;  // sum[x * N + y]
};

void involutions(std::size_t n, std::vector<Element>& inv, Element x, std::vector<std::vector<Element>>& out) {
  while (x < n && inv[x] != KrasnerHyperring::kUnset) ++x;
  if (x >= n) {
    out.push_back(inv);
    return;
  }
  for (Element y = x; y < n; ++y) {
    if (inv[y] != KrasnerHyperring::kUnset) continue;
    inv[x] = y;
    inv[y] = x;
    involutions(n, inv, x + 1, out);
    inv[x] = inv[y] = KrasnerHyperring::kUnset;
  }
}

bool sum_associative(std::size_t n, const std::vector<Subset>& sum) {
  auto add = [&](Subset a, Element z) {
    Subset out;
    for (Element w : a) out |= sum[w * n + z];
    return out;
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        // (x+y)+z against x+(y+z), using commutativity for the second.
        if (add(sum[x * n + y], z) != add(sum[y * n + z], x)) return false;
      }
    }
  }
  return true;
}

class HypergroupSearch {
 public:
  HypergroupSearch(std::size_t n, std::vector<Element> inverse) : n_(n), inv_(std::move(inverse)) {
    const std::size_t k = n_ - 1;
    const std::size_t bits = k * k * k;
    parent_.resize(bits);
    std::iota(parent_.begin(), parent_.end(), 0);
    for (Element x = 1; x < n_; ++x) {
      for (Element y = 1; y < n_; ++y) {
        for (Element z = 1; z < n_; ++z) {
          unite(id(x, y, z), id(y, x, z));
          unite(id(x, y, z), id(z, inv_[y], x));
          unite(id(x, y, z), id(z, inv_[x], y));
        }
      }
    }
    std::map<std::size_t, std::size_t> class_of_root;
    bit_class_.resize(bits);
    for (std::size_t b = 0; b < bits; ++b) {
      auto [it, fresh] = class_of_root.emplace(find(b), class_of_root.size());
      bit_class_[b] = it->second;
    }
    classes_ = class_of_root.size();
    // A cell without a forced 0 must end up nonempty; check it once its last class is set.
    cells_closing_at_.resize(classes_);
    for (Element x = 1; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) {
        if (inv_[x] == y) continue;
        std::size_t last = 0;
        for (Element z = 1; z < n_; ++z) last = std::max(last, bit_class_[id(x, y, z)]);
        cells_closing_at_[last].push_back({x, y});
      }
    }
  }

  void run(std::vector<HypergroupCandidate>& out) {
    value_.assign(classes_, 0);
    dfs(0, out);
  }

 private:
  std::size_t id(Element x, Element y, Element z) const {
    const std::size_t k = n_ - 1;
    return ((x - 1) * k + (y - 1)) * k + (z - 1);
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  bool cell_nonempty(Element x, Element y) const {
    for (Element z = 1; z < n_; ++z) {
      if (value_[bit_class_[id(x, y, z)]]) return true;
    }
    return false;
  }

  void dfs(std::size_t c, std::vector<HypergroupCandidate>& out) {
    if (c == classes_) {
      emit(out);
      return;
    }
    for (char v : {0, 1}) {
      value_[c] = v;
      bool ok = true;
      for (auto [x, y] : cells_closing_at_[c]) ok = ok && cell_nonempty(x, y);
      if (ok) dfs(c + 1, out);
    }
  }

  void emit(std::vector<HypergroupCandidate>& out) {
    std::vector<Subset> sum(n_ * n_);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        Subset s;
        if (x == 0) {
          s = Subset::singleton(y);
        } else if (y == 0) {
          s = Subset::singleton(x);
        } else {
          if (inv_[x] == y) s.insert(0);
          for (Element z = 1; z < n_; ++z) {
            if (value_[bit_class_[id(x, y, z)]]) s.insert(z);
          }
        }
        sum[x * n_ + y] = s;
      }
    }
    if (sum_associative(n_, sum)) out.push_back({inv_, std::move(sum)});
  }

  std::size_t n_;
  std::vector<Element> inv_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> bit_class_;
  std::size_t classes_ = 0;
  std::vector<std::vector<std::pair<Element, Element>>> cells_closing_at_;
  std::vector<char> value_;
};

// ---- g phase -------------------------------------------------------------

class MultiplicationSearch {
 public:
  MultiplicationSearch(std::size_t n, const HypergroupCandidate& hg) : n_(n), hg_(hg) {
    prod_.assign(n_ * n_, KrasnerHyperring::kUnset);
    for (Element x = 0; x < n_; ++x) {
      set(0, x, 0);
      set(1, x, x);
    }
    for (Element x = 2; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) cells_.push_back({x, y});
    }
  }

  void run(std::vector<KrasnerHyperring>& out) { dfs(0, out); }

 private:
  static constexpr Element kU = KrasnerHyperring::kUnset;

  void set(Element x, Element y, Element v) { prod_[x * n_ + y] = prod_[y * n_ + x] = v; }
  Element mul(Element x, Element y) const { return prod_[x * n_ + y]; }
  Subset sum(Element x, Element y) const { return hg_.sum[x * n_ + y]; }

  // Associativity and distributivity over every instance whose cells are all known.
  bool consistent() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        Element ab = mul(a, b);
        for (Element c = 0; c < n_; ++c) {
          Element bc = mul(b, c);
          if (ab != kU && bc != kU) {
            Element l = mul(ab, c), r = mul(a, bc);
            if (l != kU && r != kU && l != r) return false;
          }
          // a(b + c) = ab + ac
          Element ac = mul(a, c);
          if (ab == kU || ac == kU) continue;
          Subset left;
          bool known = true;
          for (Element w : sum(b, c)) {
            Element aw = mul(a, w);
            if (aw == kU) {
              known = false;
              break;
            }
            left.insert(aw);
          }
          if (known && left != sum(ab, ac)) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t i, std::vector<KrasnerHyperring>& out) {
    if (i == cells_.size()) {
      emit(out);
      return;
    }
    auto [x, y] = cells_[i];
    for (Element v = 0; v < n_; ++v) {
      set(x, y, v);
      if (consistent()) dfs(i + 1, out);
    }
    set(x, y, kU);
  }

  void emit(std::vector<KrasnerHyperring>& out) {
    KrasnerHyperring h("candidate", 2, 2, standard_names(n_), 0, 1);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        Element args[2] = {x, y};
        h.set_f(args, sum(x, y));
        h.set_g(args, mul(x, y));
      }
    }
    if (validate_axioms(h).pass()) out.push_back(std::move(h));
  }

  std::size_t n_;
  const HypergroupCandidate& hg_;
  std::vector<Element> prod_;
  std::vector<std::pair<Element, Element>> cells_;
};

KrasnerHyperring one_point() {
  KrasnerHyperring h("order1_0", 2, 2, {"0"}, 0, 0);
  Element args[2] = {0, 0};
  h.set_f(args, Subset::singleton(0));
  h.set_g(args, 0);
  return h;
}

}  // namespace

std::string canonical_form(const KrasnerHyperring& h) {
  auto old_of_new = canonical_permutation(h);
  std::vector<Element> new_of_old(h.size());
  for (Element i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
  return encode_key(h, relabelled_key(h, old_of_new, new_of_old));
}

KrasnerHyperring canonical_relabel(const KrasnerHyperring& h) {
  auto old_of_new = canonical_permutation(h);
  std::vector<Element> new_of_old(h.size());
  for (Element i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
  std::vector<std::string> names;
  for (Element e : old_of_new) names.push_back(h.element_name(e));
  KrasnerHyperring out(h.name(), h.m(), h.n(), names, new_of_old[h.zero()], new_of_old[h.one()]);
  for_each_tuple(h.size(), static_cast<std::size_t>(h.m()), [&](const Tuple& t) {
    Tuple args(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = old_of_new[t[i]];
    Subset mapped;
    for (Element e : h.f(args)) mapped.insert(new_of_old[e]);
    out.set_f(t, mapped);
  });
  for_each_tuple(h.size(), static_cast<std::size_t>(h.n()), [&](const Tuple& t) {
    Tuple args(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = old_of_new[t[i]];
    out.set_g(t, new_of_old[h.g(args)]);
  });
  return out;
}

Catalog enumerate_structures(const SearchConfig& config) {
  if (config.m != 2 || config.n != 2) throw DomainError("structure search supports (m,n) = (2,2) only");
  if (config.order < 1 || config.order > kMaxSearchOrder) {
    throw DomainError("search order must be between 1 and " + std::to_string(kMaxSearchOrder));
  }
  Catalog cat;
  const std::size_t n = config.order;
  if (n == 1) {
    KrasnerHyperring h = one_point();
    cat.certificates.push_back(canonical_form(h));
    cat.structures.push_back(Hyperring::from(std::move(h)));
    cat.stats = {1, 1, 1, 1};
    return cat;
  }

  std::vector<std::vector<Element>> invs;
  std::vector<Element> inv(n, KrasnerHyperring::kUnset);
  inv[0] = 0;
  involutions(n, inv, 1, invs);
  cat.stats.involutions = invs.size();

  std::vector<HypergroupCandidate> groups;
  for (const auto& iv : invs) HypergroupSearch(n, iv).run(groups);
  cat.stats.hypergroups = groups.size();

  // Each worker takes every jobs-th candidate; results are merged by candidate index.
  std::vector<std::vector<KrasnerHyperring>> found(groups.size());
  const unsigned jobs = std::max(1u, config.jobs);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < groups.size(); i += jobs) MultiplicationSearch(n, groups[i]).run(found[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::map<std::string, KrasnerHyperring> classes;
  for (auto& bucket : found) {
    for (auto& h : bucket) {
      ++cat.stats.leaves;
      std::string cert = canonical_form(h);
      if (!classes.count(cert)) classes.emplace(cert, canonical_relabel(h));
    }
  }
  std::size_t idx = 0;
  for (auto& [cert, h] : classes) {
    KrasnerHyperring named("order" + std::to_string(n) + "_" + std::to_string(idx++), 2, 2, standard_names(n), 0, 1);
    for_each_tuple(n, 2, [&](const Tuple& t) {
      named.set_f(t, h.f(t));
      named.set_g(t, h.g(t));
    });
    cat.certificates.push_back(cert);
    cat.structures.push_back(Hyperring::from(std::move(named)));
  }
  cat.stats.classes = cat.structures.size();
  return cat;
}

Catalog enumerate_up_to(const SearchConfig& config) {
  Catalog all;
  for (std::size_t order = 1; order <= config.order; ++order) {
    SearchConfig c = config;
    c.order = order;
    Catalog part = enumerate_structures(c);
    all.structures.insert(all.structures.end(), part.structures.begin(), part.structures.end());
    all.certificates.insert(all.certificates.end(), part.certificates.begin(), part.certificates.end());
    all.stats.involutions += part.stats.involutions;
    all.stats.hypergroups += part.stats.hypergroups;
    all.stats.leaves += part.stats.leaves;
    all.stats.classes += part.stats.classes;
  }
  return all;
}

std::vector<HuntHit> hunt(const std::vector<Hyperring>& catalog, const HuntTarget& target) {
  std::vector<HuntHit> hits;
  for (const Hyperring& h : catalog) {
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      Hyperideal q = trusted_hyperideal(h, s);
      std::optional<Tuple> witness;
      switch (target.kind) {
        case HuntKind::PrimeNotPrimary: {
          if (!is_prime(q).holds) break;
          Verdict v = is_primary(q);
          if (!v.holds) witness = v.witness;
          break;
        }
        case HuntKind::PhiAbsorbingNotAbsorbing: {
          if (!is_phi_kn_absorbing(q, target.k, target.phi).holds) break;
          Verdict v = is_kn_absorbing(q, target.k);
          if (!v.holds) witness = v.witness;
          break;
        }
        case HuntKind::PhiPrimaryNotPrimary: {
          if (!is_phi_kn_absorbing_primary(q, target.k, target.phi).holds) break;
          Verdict v = is_kn_absorbing_primary(q, target.k);
          if (!v.holds) witness = v.witness;
          break;
        }
        case HuntKind::PhiPrimaryTuple: {
          if (phi_apply(target.phi, q).is_empty_marker()) break;
          witness = find_phi_kn_primary_witness(q, target.k, target.phi);
          break;
        }
      }
      if (witness) hits.push_back({h, s, target.phi.name(), target.k, *witness});
    }
  }
  return hits;
}

HuntKind parse_hunt_kind(const std::string& name) {
  if (name == "prime-not-primary") return HuntKind::PrimeNotPrimary;
  if (name == "phi-absorbing-not-absorbing") return HuntKind::PhiAbsorbingNotAbsorbing;
  if (name == "phi-primary-not-primary") return HuntKind::PhiPrimaryNotPrimary;
  if (name == "phi-primary-tuple") return HuntKind::PhiPrimaryTuple;
  throw ParseError("unknown hunt target '" + name + "'");
}

std::string hunt_kind_name(HuntKind kind) {
  switch (kind) {
    case HuntKind::PrimeNotPrimary: return "prime-not-primary";
    case HuntKind::PhiAbsorbingNotAbsorbing: return "phi-absorbing-not-absorbing";
    case HuntKind::PhiPrimaryNotPrimary: return "phi-primary-not-primary";
    case HuntKind::PhiPrimaryTuple: return "phi-primary-tuple";
  }
  return "?";
}

}  // namespace hyperring
