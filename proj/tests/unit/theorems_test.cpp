#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/construct.hpp"
#include "hyperring/error.hpp"
#include "hyperring/search.hpp"
#include "hyperring/theorems.hpp"

namespace {

using namespace hyperring;
using fixtures::members;

const TheoremReport& report(const std::vector<TheoremReport>& all, const std::string& id,
                            const std::string& reading = "-") {
  auto it = std::find_if(all.begin(), all.end(), [&](const TheoremReport& r) {
    return r.id == id && (reading == "-" || r.reading == reading);
  });
  if (it == all.end()) throw std::runtime_error("no report " + id);
  return *it;
}

// The literal product statement also concludes that every factor ideal is
// proper, which Q x R already contradicts; every other check is clean.
TEST(Suite, ThreeElementAloneFailsOnlyTheWholeFactorConclusion) {
  auto reports = run_suite({fixtures::ring("three_element.json")}, SuiteOptions{});
  for (const auto& r : reports) {
    if (r.id == "car" || r.id == "car-primary") {
      for (const auto& f : r.failures) EXPECT_NE(f.detail.find("is the whole ring"), std::string::npos) << f.detail;
    } else {
      EXPECT_TRUE(r.failures.empty()) << r.id << " " << r.reading << ": " << r.failures.front().detail;
    }
  }
  SuiteOptions no_products;
  no_products.products = false;
  for (const auto& r : run_suite({fixtures::ring("three_element.json")}, no_products)) {
    EXPECT_TRUE(r.failures.empty()) << r.id;
  }
  EXPECT_GT(report(reports, "zir").holds, 0u);
  EXPECT_GT(report(reports, "inclu").holds, 0u);
  EXPECT_GT(report(reports, "kweak", "element").holds, 0u);
}

TEST(Suite, OnePointIsVacuous) {
  SuiteOptions options;
  options.products = false;
  for (const auto& r : run_suite({fixtures::ring("trivial.json")}, options)) {
    EXPECT_TRUE(r.failures.empty()) << r.id;
    EXPECT_EQ(r.holds, 0u) << r.id;
  }
}

TEST(Suite, ReportOrderAndReadings) {
  SuiteOptions options;
  options.k_max = 2;
  auto reports = run_suite({fixtures::ring("z4.json")}, options);
  std::vector<std::string> ids;
  for (const auto& r : reports)
    if (ids.empty() || ids.back() != r.id) ids.push_back(r.id);
  EXPECT_EQ(ids, (std::vector<std::string>{
                     "zir", "zir-primary", "inclu", "inclu-primary", "exa", "one-to-two", "car", "car-primary",
                     "car-proper", "car-proper-primary", "homo1", "homo", "quotient", "quotient-primary",
                     "primary-from-phi", "radical-absorbing", "weak", "kweak", "weak2", "kweak2", "weak3",
                     "weak4", "weak5", "weak6", "power-escape", "next-level"}));
  for (const auto& r : reports) {
    if (r.id == "zir-primary" || r.id == "kweak") { EXPECT_TRUE(r.reading == "element" || r.reading == "strongly"); }
    if (r.id == "zir" || r.id == "inclu") { EXPECT_EQ(r.reading, "-"); }
  }
  EXPECT_TRUE(report(reports, "car-proper").supplementary);
  EXPECT_FALSE(report(reports, "car").supplementary);
}

TEST(Suite, DeterministicAcrossJobs) {
  SearchConfig config;
  config.order = 3;
  auto catalog = enumerate_up_to(config).structures;
  SuiteOptions one;
  one.k_max = 2;
  SuiteOptions four = one;
  four.jobs = 4;
  auto a = run_suite(catalog, one);
  auto b = run_suite(catalog, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].holds, b[i].holds) << a[i].id;
    EXPECT_EQ(a[i].vacuous, b[i].vacuous) << a[i].id;
    EXPECT_EQ(a[i].skipped, b[i].skipped) << a[i].id;
    ASSERT_EQ(a[i].failures.size(), b[i].failures.size()) << a[i].id;
    for (std::size_t j = 0; j < a[i].failures.size(); ++j) EXPECT_EQ(a[i].failures[j].instance, b[i].failures[j].instance);
  }
}

TEST(Suite, EmptyMarkerQuotientChecksAreSkipped) {
  auto reports = run_suite({fixtures::ring("three_element.json")}, SuiteOptions{});
  const auto& q = report(reports, "quotient");
  EXPECT_GT(q.skipped, 0u);
  EXPECT_EQ(q.skip_reasons.begin()->second, q.skipped);
}

// Q = {0} x Z2 is prime in Z2 x Z2, hence (2,2)-absorbing, yet its second
// factor is the whole ring.
TEST(Car, WholeFactorCounterexample) {
  Hyperring z2 = Hyperring::from(oracle::zn(2));
  Product p = product({z2, z2});
  Hyperideal q = Hyperideal::make(p.ring, p.cartesian({Subset::of({0}), z2->carrier()}));
  EXPECT_TRUE(is_prime(q).holds);
  EXPECT_TRUE(is_kn_absorbing(q, 2).holds);

  SearchConfig config;
  config.order = 2;
  auto reports = run_suite(enumerate_up_to(config).structures, SuiteOptions{});
  const auto& car = report(reports, "car");
  ASSERT_FALSE(car.failures.empty());
  EXPECT_NE(car.failures.front().detail.find("whole ring"), std::string::npos);
  EXPECT_TRUE(report(reports, "car-proper").failures.empty());
  EXPECT_GT(report(reports, "car-proper").holds, 0u);
}

TEST(Kweak, ThreeElementBothSidesTrue) {
  Hyperring h = fixtures::ring("three_element.json");
  Hyperideal q = Hyperideal::make(h, members(h, "0,x"));
  Verdict v = check_kweak_equivalence(q, 2, PhiDescriptor::power(2));
  EXPECT_TRUE(v.holds);
  EXPECT_NE(v.detail.find("yes; weakly absorbing primary in the quotient: yes"), std::string::npos);
  EXPECT_TRUE(is_phi_kn_absorbing_primary(q, 2, PhiDescriptor::power(2)).holds);
}

TEST(Kweak, ZeroPhiCoincides) {
  for (const char* file : {"z12.json", "z4.json", "three_element.json"}) {
    Hyperring h = fixtures::ring(file);
    for (Subset s : hyperideal_lattice(h)) {
      if (s == h->carrier()) continue;
      for (int k = 1; k <= 3; ++k) {
        EXPECT_TRUE(check_kweak_equivalence(Hyperideal::make(h, s), k, PhiDescriptor::zero()).holds) << file;
      }
    }
  }
}

TEST(Kweak, Preconditions) {
  Hyperring h = fixtures::ring("three_element.json");
  Hyperideal q = Hyperideal::make(h, members(h, "0,x"));
  EXPECT_THROW(check_kweak_equivalence(q, 2, PhiDescriptor::empty()), DomainError);
  PhiDescriptor::TableMap outside{{members(h, "0").bits(), members(h, "0")},
                                  {members(h, "0,x").bits(), h->carrier()},
                                  {h->carrier().bits(), h->carrier()}};
  EXPECT_THROW(check_kweak_equivalence(q, 2, PhiDescriptor::table(outside)), DomainError);
}

}  // namespace
