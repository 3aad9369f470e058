#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperring/error.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/search.hpp"

namespace {

using namespace hyperring;
using fixtures::members;

std::vector<std::string> listed(const Hyperring& h, const std::vector<Hyperideal>& ideals) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(fixtures::names(h, i.members()));
  return out;
}

TEST(Ideals, ThreeElementLattice) {
  Hyperring h = fixtures::ring("three_element.json");
  EXPECT_EQ(listed(h, enumerate_hyperideals(h)), (std::vector<std::string>{"0", "0,x", "0,1,x"}));
}

TEST(Ideals, Z12LatticeMatchesDivisors) {
  Hyperring h = fixtures::ring("z12.json");
  EXPECT_EQ(listed(h, enumerate_hyperideals(h)),
            (std::vector<std::string>{"0", "0,6", "0,4,8", "0,3,6,9", "0,2,4,6,8,10",
                                      "0,1,2,3,4,5,6,7,8,9,10,11"}));
}

TEST(Ideals, ClosureAgreesWithFullScanAndOracle) {
  std::vector<Hyperring> rings;
  for (const char* file : {"three_element.json", "z4.json", "z12.json", "trivial.json", "three_element_squared.json"})
    rings.push_back(fixtures::ring(file));
  SearchConfig config;
  config.order = 4;
  for (const auto& h : enumerate_up_to(config).structures) rings.push_back(h);
  for (const auto& h : rings) {
    std::vector<Subset> closure, scan;
    for (const auto& i : enumerate_hyperideals(h, EnumerationStrategy::Closure)) closure.push_back(i.members());
    for (const auto& i : enumerate_hyperideals(h, EnumerationStrategy::FullScan)) scan.push_back(i.members());
    EXPECT_EQ(closure, scan) << h->name();
    auto expected = oracle::ideals(*h);
    std::sort(closure.begin(), closure.end());
    EXPECT_EQ(closure, expected) << h->name();
  }
}

TEST(Ideals, WitnessesForNonIdeals) {
  Hyperring h = fixtures::ring("three_element.json");
  Verdict no_zero = is_hyperideal(h, members(h, "x"));
  EXPECT_FALSE(no_zero.holds);
  Verdict leaks = is_hyperideal(h, members(h, "0,1"));
  ASSERT_FALSE(leaks.holds);
  EXPECT_FALSE(leaks.witness.empty());
  EXPECT_TRUE(is_hyperideal(h, members(h, "0,x")).holds);
  EXPECT_THROW(is_hyperideal(h, Subset{}), DomainError);
  EXPECT_THROW(Hyperideal::make(h, members(h, "0,1")), DomainError);
}

TEST(Ideals, ZnNonIdealNeedsAbsorption) {
  Hyperring h = Hyperring::from(oracle::zn(6));
  // {0,3} is closed under addition; 2*3 = 0 and 1*3 = 3 keep it absorbing.
  EXPECT_TRUE(is_hyperideal(h, members(h, "0,3")).holds);
  Verdict v = is_hyperideal(h, members(h, "0,1,5"));
  ASSERT_FALSE(v.holds);
}

TEST(Ideals, GeneratedIsLeastContaining) {
  Hyperring h = fixtures::ring("z12.json");
  EXPECT_EQ(generated_hyperideal(h, members(h, "8")).members(), members(h, "0,4,8"));
  EXPECT_EQ(generated_hyperideal(h, members(h, "4,6")).members(), members(h, "0,2,4,6,8,10"));
  EXPECT_EQ(generated_hyperideal(h, members(h, "0")).members(), members(h, "0"));
  Hyperring e = fixtures::ring("three_element.json");
  EXPECT_EQ(generated_hyperideal(e, members(e, "x")).members(), members(e, "0,x"));
  EXPECT_EQ(generated_hyperideal(e, members(e, "1")).members(), e->carrier());
}

TEST(Ideals, FullScanRefusesLargeCarriers) {
  Hyperring h = Hyperring::from(oracle::zn(21));
  EXPECT_THROW(enumerate_hyperideals(h, EnumerationStrategy::FullScan), CapacityError);
  EXPECT_EQ(enumerate_hyperideals(h).size(), 4u);  // divisors 1, 3, 7, 21
}

TEST(Ideals, SetwisePowers) {
  Hyperring h = fixtures::ring("three_element.json");
  Hyperideal q = Hyperideal::make(h, members(h, "0,x"));
  EXPECT_EQ(hyperideal_g_power(h, q, 1), members(h, "0,x"));
  EXPECT_EQ(hyperideal_g_power(h, q, 2), members(h, "0"));
  EXPECT_EQ(hyperideal_g_power(h, q, 3), members(h, "0"));
  Hyperring z = fixtures::ring("z12.json");
  Hyperideal two = Hyperideal::make(z, members(z, "0,2,4,6,8,10"));
  EXPECT_EQ(hyperideal_g_power(z, two, 2), members(z, "0,4,8"));
  EXPECT_EQ(hyperideal_g_power(z, two, 3), members(z, "0,4,8"));
}

TEST(Ideals, ProperFlag) {
  Hyperring h = fixtures::ring("three_element.json");
  EXPECT_TRUE(Hyperideal::make(h, members(h, "0")).proper());
  EXPECT_FALSE(Hyperideal::make(h, h->carrier()).proper());
}

}  // namespace
