#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "hyperring/axioms.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/error.hpp"
#include "hyperring/search.hpp"

namespace {

using namespace hyperring;

Catalog order(std::size_t n, unsigned jobs = 1) {
  SearchConfig config;
  config.order = n;
  config.jobs = jobs;
  return enumerate_structures(config);
}

// Frozen after agreement with the unpruned enumerator for N <= 3; N = 4, 5
// are the pruned search's own counts, pinned against regressions.
TEST(Search, ClassCounts) {
  EXPECT_EQ(order(1).structures.size(), 1u);
  EXPECT_EQ(order(2).structures.size(), 2u);
  EXPECT_EQ(order(3).structures.size(), 7u);
  EXPECT_EQ(order(4).structures.size(), 18u);
}

TEST(Search, AgreesWithUnprunedEnumeration) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(order(n).structures.size(), oracle::brute_force_enumerate(n).classes) << "order " << n;
  }
}

TEST(Search, EveryEntryValidAndDistinct) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Catalog cat = order(n);
    std::set<std::vector<unsigned>> codes;
    for (const auto& h : cat.structures) {
      EXPECT_TRUE(validate_axioms(*h).pass()) << h->name();
      EXPECT_EQ(h.size(), n);
      EXPECT_EQ(h->zero(), 0u);
      if (n > 1) { EXPECT_EQ(h->one(), 1u); }
      codes.insert(oracle::canonical_code(*h));
    }
    EXPECT_EQ(codes.size(), cat.structures.size()) << "order " << n;
    EXPECT_TRUE(std::is_sorted(cat.certificates.begin(), cat.certificates.end()));
  }
}

TEST(Search, ContainsThreeElement) {
  std::string target = canonical_form(*fixtures::ring("three_element.json"));
  Catalog cat = order(3);
  EXPECT_NE(std::find(cat.certificates.begin(), cat.certificates.end(), target), cat.certificates.end());
}

TEST(Search, DeterministicAcrossJobs) {
  for (std::size_t n : {3u, 4u, 5u}) {
    Catalog one = order(n, 1);
    Catalog four = order(n, 4);
    EXPECT_EQ(one.certificates, four.certificates);
    ASSERT_EQ(one.structures.size(), four.structures.size());
    for (std::size_t i = 0; i < one.structures.size(); ++i) EXPECT_EQ(*one.structures[i], *four.structures[i]);
  }
}

TEST(Search, Bounds) {
  SearchConfig big;
  big.order = kMaxSearchOrder + 1;
  EXPECT_THROW(enumerate_structures(big), DomainError);
  SearchConfig ternary;
  ternary.m = 3;
  EXPECT_THROW(enumerate_structures(ternary), DomainError);
  EXPECT_THROW(canonical_form(oracle::zn(11)), CapacityError);
}

TEST(Canonical, InvariantUnderRelabelling) {
  for (const auto& h : order(4).structures) {
    // Swap a and b.
    std::vector<Element> perm{0, 1, 3, 2};
    KrasnerHyperring p(h->name(), 2, 2, {"0", "1", "b", "a"}, 0, 1);
    for_each_tuple(4, 2, [&](const Tuple& t) {
      Tuple src{perm[t[0]], perm[t[1]]};
      Subset image;
      for (Element e : h->f(src)) image.insert(perm[e]);
      p.set_f(t, image);
      p.set_g(t, perm[h->g(src)]);
    });
    EXPECT_EQ(canonical_form(p), canonical_form(*h));
    KrasnerHyperring a = canonical_relabel(p), b = canonical_relabel(*h);
    for_each_tuple(4, 2, [&](const Tuple& t) {
      EXPECT_EQ(a.f(t), b.f(t));
      EXPECT_EQ(a.g(t), b.g(t));
    });
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  Catalog cat = order(3);
  std::set<std::string> certs(cat.certificates.begin(), cat.certificates.end());
  EXPECT_EQ(certs.size(), cat.structures.size());
  EXPECT_NE(canonical_form(*fixtures::ring("z4.json")), canonical_form(*fixtures::ring("three_element.json")));
}

TEST(Hunt, PrimeNeverFailsPrimary) {
  SearchConfig config;
  config.order = 4;
  auto hits = hunt(enumerate_up_to(config).structures, {HuntKind::PrimeNotPrimary, PhiDescriptor::zero(), 1});
  EXPECT_TRUE(hits.empty());
}

TEST(Hunt, HitsRecheckFromScratch) {
  SearchConfig config;
  config.order = 4;
  auto catalog = enumerate_up_to(config).structures;
  for (const auto& phi : standard_phi_set()) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& hit : hunt(catalog, {HuntKind::PhiAbsorbingNotAbsorbing, phi, k})) {
        Hyperideal q = Hyperideal::make(hit.structure, hit.ideal);
        EXPECT_TRUE(is_phi_kn_absorbing(q, k, phi).holds);
        EXPECT_FALSE(is_kn_absorbing(q, k).holds);
        EXPECT_TRUE(oracle::literal_absorbing(*hit.structure, hit.ideal, k, phi_apply(phi, q).value));
        EXPECT_TRUE(hit.ideal.contains(oracle::product(*hit.structure, hit.witness)));
      }
      for (const auto& hit : hunt(catalog, {HuntKind::PhiPrimaryNotPrimary, phi, k})) {
        Hyperideal q = Hyperideal::make(hit.structure, hit.ideal);
        EXPECT_TRUE(is_phi_kn_absorbing_primary(q, k, phi).holds);
        EXPECT_FALSE(is_kn_absorbing_primary(q, k).holds);
      }
      if (phi.kind() == PhiKind::Empty) continue;
      for (const auto& hit : hunt(catalog, {HuntKind::PhiPrimaryTuple, phi, k})) {
        Hyperideal q = Hyperideal::make(hit.structure, hit.ideal);
        EXPECT_TRUE(is_phi_kn_primary_tuple(q, k, phi, hit.witness));
      }
    }
  }
}

TEST(Hunt, KindNames) {
  for (auto kind : {HuntKind::PrimeNotPrimary, HuntKind::PhiAbsorbingNotAbsorbing, HuntKind::PhiPrimaryNotPrimary,
                    HuntKind::PhiPrimaryTuple}) {
    EXPECT_EQ(parse_hunt_kind(hunt_kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_hunt_kind("prime-and-primary"), ParseError);
}

}  // namespace
