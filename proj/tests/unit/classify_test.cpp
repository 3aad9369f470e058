#include <gtest/gtest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/error.hpp"
#include "hyperring/search.hpp"

namespace {

using namespace hyperring;
using fixtures::members;

Hyperideal ideal(const Hyperring& h, const std::string& text) { return Hyperideal::make(h, members(h, text)); }

TEST(Classify, ThreeElementConclusion) {
  Hyperring h = fixtures::ring("three_element.json");
  Hyperideal q = ideal(h, "0,x");
  EXPECT_TRUE(is_phi_kn_absorbing(q, 2, PhiDescriptor::power(2)).holds);
  EXPECT_TRUE(is_prime(q).holds);
  EXPECT_EQ(radical(ideal(h, "0")).members(), members(h, "0,x"));
  EXPECT_EQ(radical_by_powers(ideal(h, "0")).members(), members(h, "0,x"));
  EXPECT_FALSE(is_prime(ideal(h, "0")).holds);
  EXPECT_TRUE(is_primary(ideal(h, "0")).holds);
}

TEST(Classify, Z12AgainstIntegerOracle) {
  Hyperring h = fixtures::ring("z12.json");
  std::ifstream in(oracle::data_dir() / "z12_oracle.json");
  nlohmann::json doc = nlohmann::json::parse(in);
  for (const auto& entry : doc["ideals"]) {
    std::string text;
    for (const auto& e : entry["ideal"]) text += (text.empty() ? "" : ",") + e.get<std::string>();
    Hyperideal q = ideal(h, text);
    std::string rad;
    for (const auto& e : entry["radical"]) rad += (rad.empty() ? "" : ",") + e.get<std::string>();
    EXPECT_EQ(radical(q).members(), members(h, rad)) << text;
    if (!entry["proper"].get<bool>()) {
      EXPECT_THROW(is_prime(q), DomainError);
      continue;
    }
    EXPECT_EQ(is_prime(q).holds, entry["prime"].get<bool>()) << text;
    EXPECT_EQ(is_primary(q).holds, entry["primary"].get<bool>()) << text;
    EXPECT_EQ(is_primary(q, PrimaryReading::FailingPosition).holds, entry["primary"].get<bool>()) << text;
    EXPECT_EQ(is_kn_absorbing(q, 2).holds, entry["2-absorbing"].get<bool>()) << text;
  }
}

TEST(Classify, Z12Witnesses) {
  Hyperring h = fixtures::ring("z12.json");
  Verdict v = is_primary(ideal(h, "0,6"));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(format_tuple(*h, v.witness), "(2,3)");
  Verdict a = is_kn_absorbing(ideal(h, "0"), 2);
  ASSERT_FALSE(a.holds);
  EXPECT_EQ(a.witness.size(), 3u);
  EXPECT_EQ(g_iter(*h, a.witness), h->zero());
}

TEST(Classify, PreconditionsThrow) {
  Hyperring h = fixtures::ring("three_element.json");
  Hyperideal whole = Hyperideal::make(h, h->carrier());
  EXPECT_THROW(is_prime(whole), DomainError);
  EXPECT_THROW(is_primary(whole), DomainError);
  EXPECT_THROW(is_kn_absorbing(whole, 2), DomainError);
  EXPECT_THROW(is_phi_kn_absorbing_primary(whole, 1, PhiDescriptor::zero()), DomainError);
  EXPECT_THROW(is_kn_absorbing(ideal(h, "0"), 0), DomainError);
  EXPECT_THROW(find_phi_kn_primary_witness(ideal(h, "0"), 2, PhiDescriptor::empty()), DomainError);
  EXPECT_EQ(radical(whole).members(), h->carrier());
}

TEST(Classify, ReportForWholeRingOnlyHasRadicals) {
  Hyperring h = fixtures::ring("three_element.json");
  ClassificationReport r = classify_ideal(Hyperideal::make(h, h->carrier()), 3, standard_phi_set());
  EXPECT_FALSE(r.proper);
  EXPECT_TRUE(r.results.empty());
  EXPECT_EQ(*r.radical, h->carrier());
}

TEST(Classify, ReportRowsAndLookup) {
  Hyperring h = fixtures::ring("three_element.json");
  ClassificationReport r = classify_ideal(ideal(h, "0,x"), 2, {PhiDescriptor::power(2)});
  ASSERT_NE(r.find("phi-absorbing", 2, "phi_2"), nullptr);
  EXPECT_TRUE(r.find("phi-absorbing", 2, "phi_2")->verdict.holds);
  EXPECT_EQ(r.find("phi-absorbing", 3, "phi_2"), nullptr);
  EXPECT_TRUE(r.radicals_agree);
  EXPECT_EQ(r.results.size(), 3u + 2u * (2u + 3u));
}

// The reduced checkers against ordered-tuple enumeration with an
// independently computed radical.
void expect_bridge(const Hyperring& h, int k_max) {
  for (Subset s : oracle::ideals(*h)) {
    if (s == h->carrier()) continue;
    Hyperideal q = Hyperideal::make(h, s);
    Subset rad = oracle::radical(*h, s);
    ASSERT_EQ(radical(q).members(), rad) << h->name();
    for (int k = 1; k <= k_max; ++k) {
      for (const auto& phi : standard_phi_set()) {
        auto value = phi_apply(phi, q).value;
        EXPECT_EQ(is_phi_kn_absorbing(q, k, phi).holds, oracle::literal_absorbing(*h, s, k, value))
            << h->name() << " {" << fixtures::names(h, s) << "} k=" << k << " " << phi.name();
        EXPECT_EQ(is_phi_kn_absorbing_primary(q, k, phi).holds, oracle::literal_absorbing_primary(*h, s, k, value, rad))
            << h->name() << " {" << fixtures::names(h, s) << "} k=" << k << " " << phi.name();
      }
    }
  }
}

TEST(Bridge, BundledStructures) {
  for (const char* file : {"three_element.json", "z4.json", "z12.json", "three_element_squared.json"}) {
    expect_bridge(fixtures::ring(file), 3);
  }
  for (unsigned n : {8u, 9u, 18u}) expect_bridge(Hyperring::from(oracle::zn(n)), 2);
}

TEST(Bridge, CatalogUpToOrderThree) {
  SearchConfig config;
  config.order = 3;
  for (const auto& h : enumerate_up_to(config).structures) expect_bridge(h, 3);
}

TEST(Witness, FailedAbsorbingWitnessIsConcrete) {
  SearchConfig config;
  config.order = 4;
  std::vector<Hyperring> rings = enumerate_up_to(config).structures;
  rings.push_back(fixtures::ring("z12.json"));
  for (const auto& h : rings) {
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      Hyperideal q = Hyperideal::make(h, s);
      for (int k = 1; k <= 2; ++k) {
        for (const auto& phi : standard_phi_set()) {
          const Subset zone = phi_apply(phi, q).remove_from(s);
          const std::size_t sub = static_cast<std::size_t>((k - 1) * (h->n() - 1) + 1);
          Verdict a = is_phi_kn_absorbing(q, k, phi);
          if (!a.holds) {
            ASSERT_EQ(a.witness.size(), static_cast<std::size_t>(k * (h->n() - 1) + 1));
            EXPECT_TRUE(zone.contains(oracle::product(*h, a.witness)));
            EXPECT_FALSE(s.contains(oracle::product(*h, Tuple(a.witness.begin(), a.witness.begin() + sub))));
          }
          Verdict p = is_phi_kn_absorbing_primary(q, k, phi);
          if (!p.holds) {
            EXPECT_TRUE(zone.contains(oracle::product(*h, p.witness)));
            EXPECT_FALSE(s.contains(oracle::product(*h, Tuple(p.witness.begin(), p.witness.begin() + sub))));
          }
          if (!phi_apply(phi, q).is_empty_marker()) {
            if (auto t = find_phi_kn_primary_witness(q, k, phi)) {
              EXPECT_TRUE(is_phi_kn_primary_tuple(q, k, phi, *t)) << h->name();
            }
          }
        }
      }
    }
  }
}

TEST(Readings, FailingPositionImpliesAnyPosition) {
  SearchConfig config;
  config.order = 4;
  for (const auto& h : enumerate_up_to(config).structures) {
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      Hyperideal q = Hyperideal::make(h, s);
      if (is_primary(q, PrimaryReading::FailingPosition).holds) { EXPECT_TRUE(is_primary(q).holds); }
      if (is_prime(q).holds) { EXPECT_TRUE(is_primary(q, PrimaryReading::FailingPosition).holds); }
    }
  }
}

TEST(Strongly, SetwiseImpliesElementwiseForEmptyPhi) {
  for (const char* file : {"z12.json", "z4.json", "three_element.json"}) {
    Hyperring h = fixtures::ring(file);
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      Hyperideal q = Hyperideal::make(h, s);
      for (int k = 1; k <= 3; ++k) {
        Verdict strongly = is_strongly_phi_kn_absorbing_primary(q, k, PhiDescriptor::empty());
        if (strongly.holds) {
          EXPECT_TRUE(is_kn_absorbing_primary(q, k).holds) << file;
        } else {
          EXPECT_EQ(strongly.ideal_witness.size(), static_cast<std::size_t>(k + 1));
        }
        // Every setwise product contains 0, which a nonempty phi value removes.
        EXPECT_TRUE(is_strongly_phi_kn_absorbing_primary(q, k, PhiDescriptor::zero()).holds);
      }
    }
  }
}

}  // namespace
