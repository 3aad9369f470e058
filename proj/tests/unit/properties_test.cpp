#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hyperring/axioms.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/construct.hpp"
#include "hyperring/search.hpp"

namespace {

using namespace hyperring;

constexpr std::uint64_t kSeed = 20240611;
constexpr int kCases = 60;

const std::vector<Hyperring>& pool() {
  static const std::vector<Hyperring> rings = [] {
    SearchConfig config;
    config.order = 4;
    std::vector<Hyperring> out = enumerate_up_to(config).structures;
    for (const char* file : {"three_element.json", "z12.json", "three_element_squared.json"}) out.push_back(fixtures::ring(file));
    return out;
  }();
  return rings;
}

const Hyperring& pick(std::mt19937_64& rng) {
  return pool()[std::uniform_int_distribution<std::size_t>(0, pool().size() - 1)(rng)];
}

Subset random_subset(std::mt19937_64& rng, std::size_t n) {
  return Subset::from_bits(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
}

// A uniformly random relabelling; zero and one follow their elements.
KrasnerHyperring relabel(const KrasnerHyperring& h, const std::vector<Element>& perm) {
  std::vector<std::string> names(h.size());
  for (Element e = 0; e < h.size(); ++e) names[perm[e]] = h.element_name(e);
  KrasnerHyperring out(h.name(), h.m(), h.n(), names, perm[h.zero()], perm[h.one()]);
  for_each_tuple(h.size(), static_cast<std::size_t>(h.m()), [&](const Tuple& t) {
    Tuple image;
    for (Element e : t) image.push_back(perm[e]);
    Subset s;
    for (Element e : h.f(t)) s.insert(perm[e]);
    out.set_f(image, s);
  });
  for_each_tuple(h.size(), static_cast<std::size_t>(h.n()), [&](const Tuple& t) {
    Tuple image;
    for (Element e : t) image.push_back(perm[e]);
    out.set_g(image, perm[h.g(t)]);
  });
  return out;
}

Subset image_of(Subset s, const std::vector<Element>& perm) {
  Subset out;
  for (Element e : s) out.insert(perm[e]);
  return out;
}

TEST(Properties, RelabellingPreservesClassification) {
  std::mt19937_64 rng(kSeed);
  for (int c = 0; c < kCases; ++c) {
    const Hyperring& h = pick(rng);
    if (h.size() > 9) continue;
    std::vector<Element> perm(h.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Hyperring r = Hyperring::from(relabel(*h, perm));
    EXPECT_EQ(parse_structure(serialize(*r)), *r);

    std::vector<Subset> mapped;
    for (Subset s : hyperideal_lattice(h)) mapped.push_back(image_of(s, perm));
    std::vector<Subset> direct = hyperideal_lattice(r);
    std::sort(mapped.begin(), mapped.end());
    std::sort(direct.begin(), direct.end());
    ASSERT_EQ(mapped, direct) << h->name();

    for (Subset s : hyperideal_lattice(h)) {
      Hyperideal a = Hyperideal::make(h, s);
      Hyperideal b = Hyperideal::make(r, image_of(s, perm));
      EXPECT_EQ(image_of(radical(a).members(), perm), radical(b).members());
      if (!a.proper()) continue;
      EXPECT_EQ(is_prime(a).holds, is_prime(b).holds);
      EXPECT_EQ(is_primary(a).holds, is_primary(b).holds);
      for (int k = 1; k <= 2; ++k) {
        for (const auto& phi : standard_phi_set()) {
          EXPECT_EQ(is_phi_kn_absorbing(a, k, phi).holds, is_phi_kn_absorbing(b, k, phi).holds);
          EXPECT_EQ(is_phi_kn_absorbing_primary(a, k, phi).holds, is_phi_kn_absorbing_primary(b, k, phi).holds);
        }
      }
    }
  }
}

TEST(Properties, FixedZeroOneRelabellingKeepsCertificate) {
  std::mt19937_64 rng(kSeed + 1);
  for (int c = 0; c < kCases; ++c) {
    const Hyperring& h = pick(rng);
    if (h.size() > 9 || h.size() < 2) continue;
    std::vector<Element> perm(h.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> rest;
    for (Element e = 0; e < h.size(); ++e)
      if (e != h->zero() && e != h->one()) rest.push_back(e);
    auto shuffled = rest;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = shuffled[i];
    EXPECT_EQ(canonical_form(relabel(*h, perm)), canonical_form(*h)) << h->name();
  }
}

TEST(Properties, GeneratedIdealIsLeastContaining) {
  std::mt19937_64 rng(kSeed + 2);
  for (int c = 0; c < kCases * 4; ++c) {
    const Hyperring& h = pick(rng);
    Subset s = random_subset(rng, h.size());
    Subset g = generated_hyperideal(h, s).members();
    EXPECT_TRUE(s.subset_of(g));
    EXPECT_TRUE(is_hyperideal(h, g).holds);
    Subset meet = h->carrier();
    for (Subset i : hyperideal_lattice(h))
      if (s.subset_of(i)) meet &= i;
    EXPECT_EQ(g, meet) << h->name();
  }
}

TEST(Properties, RadicalIsAClosureOperator) {
  std::mt19937_64 rng(kSeed + 3);
  for (int c = 0; c < kCases; ++c) {
    const Hyperring& h = pick(rng);
    const auto& lattice = hyperideal_lattice(h);
    std::uniform_int_distribution<std::size_t> any(0, lattice.size() - 1);
    Hyperideal a = Hyperideal::make(h, lattice[any(rng)]);
    Hyperideal b = Hyperideal::make(h, lattice[any(rng)]);
    Hyperideal ra = radical(a);
    EXPECT_TRUE(a.members().subset_of(ra.members()));
    EXPECT_EQ(radical(ra).members(), ra.members());
    EXPECT_EQ(ra.members(), radical_by_powers(a).members());
    if (a.members().subset_of(b.members())) { EXPECT_TRUE(ra.members().subset_of(radical(b).members())); }
  }
}

TEST(Properties, PredicateImplications) {
  std::mt19937_64 rng(kSeed + 4);
  const auto phis = standard_phi_set();
  for (int c = 0; c < kCases; ++c) {
    const Hyperring& h = pick(rng);
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      Hyperideal q = Hyperideal::make(h, s);
      const PhiDescriptor& phi = phis[std::uniform_int_distribution<std::size_t>(0, phis.size() - 1)(rng)];
      for (int k = 1; k <= 2; ++k) {
        bool abs = is_phi_kn_absorbing(q, k, phi).holds;
        bool prim = is_phi_kn_absorbing_primary(q, k, phi).holds;
        if (abs) { EXPECT_TRUE(prim); }
        if (is_kn_absorbing(q, k).holds) { EXPECT_TRUE(abs); }
        if (abs) { EXPECT_TRUE(is_phi_kn_absorbing(q, k + 1, phi).holds); }
        if (prim) { EXPECT_TRUE(is_phi_kn_absorbing_primary(q, k + 1, phi).holds); }
      }
      EXPECT_EQ(is_prime(q).holds, is_kn_absorbing(q, 1).holds);
    }
  }
}

TEST(Properties, ZnPrimesAreDivisorIdeals) {
  std::mt19937_64 rng(kSeed + 5);
  for (int c = 0; c < 20; ++c) {
    unsigned n = std::uniform_int_distribution<unsigned>(2, 30)(rng);
    Hyperring h = Hyperring::from(oracle::zn(n));
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      unsigned d = s.size() == 1 ? n : (s - Subset::of({0})).first();
      bool d_prime = d > 1;
      for (unsigned p = 2; p * p <= d; ++p) d_prime = d_prime && d % p != 0;
      EXPECT_EQ(is_prime(Hyperideal::make(h, s)).holds, d_prime) << "Z" << n << " (" << d << ")";
    }
  }
}

TEST(Properties, ProductIdealsAreBoxes) {
  std::mt19937_64 rng(kSeed + 6);
  for (int c = 0; c < kCases / 2; ++c) {
    const Hyperring& a = pick(rng);
    const Hyperring& b = pick(rng);
    if (a.size() * b.size() > 24) continue;
    Product p = product({a, b});
    ASSERT_TRUE(validate_axioms(*p.ring).pass());
    std::vector<Subset> boxes;
    for (Subset i : hyperideal_lattice(a))
      for (Subset j : hyperideal_lattice(b)) boxes.push_back(p.cartesian({i, j}));
    std::sort(boxes.begin(), boxes.end());
    std::vector<Subset> ideals = hyperideal_lattice(p.ring);
    std::sort(ideals.begin(), ideals.end());
    EXPECT_EQ(ideals, boxes) << a->name() << " x " << b->name();
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(is_homomorphism(p.ring, p.factors[i], p.projection(i).map()).holds);
  }
}

}  // namespace
