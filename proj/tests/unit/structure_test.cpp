#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperring/structure.hpp"

namespace {

using namespace hyperring;

TEST(Subset, SetAlgebra) {
  Subset a = Subset::of({0, 2, 5});
  Subset b = Subset::of({2, 3});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ((a | b), Subset::of({0, 2, 3, 5}));
  EXPECT_EQ((a & b), Subset::of({2}));
  EXPECT_EQ((a - b), Subset::of({0, 5}));
  EXPECT_TRUE(Subset::of({2}).subset_of(a));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(a.elements(), (std::vector<Element>{0, 2, 5}));
  EXPECT_EQ(Subset::full(64).size(), 64u);
}

TEST(Subset, CanonicalOrderIsSizeThenMembers) {
  EXPECT_TRUE(canonical_less(Subset::of({5}), Subset::of({0, 1})));
  EXPECT_TRUE(canonical_less(Subset::of({0, 2}), Subset::of({1, 2})));
  EXPECT_FALSE(canonical_less(Subset::of({1}), Subset::of({1})));
}

TEST(Iteration, TupleAndMultisetCounts) {
  std::size_t tuples = 0;
  for_each_tuple(3, 4, [&](const Tuple&) { ++tuples; });
  EXPECT_EQ(tuples, 81u);
  std::size_t multisets = 0;
  Tuple last;
  for_each_multiset(4, 3, [&](const Tuple& t) {
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    last = t;
    return ++multisets > 0;
  });
  EXPECT_EQ(multisets, 20u);  // C(4+3-1, 3)
  EXPECT_EQ(last, (Tuple{3, 3, 3}));
}

TEST(Iteration, DepthOfLengths) {
  EXPECT_EQ(iteration_depth(3, 2), 2u);
  EXPECT_EQ(iteration_depth(5, 3), 2u);
  EXPECT_FALSE(iteration_depth(4, 3).has_value());
  EXPECT_FALSE(iteration_depth(0, 2).has_value());
}

TEST(ThreeElement, IteratedOperations) {
  Hyperring h = fixtures::ring("three_element.json");
  Element zero = 0, one = 1, x = 2;
  EXPECT_EQ(f_iter(*h, Tuple{x, x, one}), Subset::of({one}));
  EXPECT_EQ(f_iter(*h, Tuple{one, one, zero}), h->carrier());
  EXPECT_EQ(g_iter(*h, Tuple{x, one, one}), x);
  EXPECT_EQ(g_iter(*h, Tuple{x, x, one}), zero);
  Subset ideal = Subset::of({zero, x});
  Subset parts[] = {ideal, ideal};
  EXPECT_EQ(set_g(*h, parts), Subset::of({zero}));
  EXPECT_EQ(set_g_product(*h, std::vector<Subset>{ideal, h->carrier(), h->carrier()}), ideal);
}

TEST(ThreeElement, NegationIsUnique) {
  Hyperring h = fixtures::ring("three_element.json");
  for (Element a = 0; a < h.size(); ++a) {
    std::size_t count = 0;
    for (Element b = 0; b < h.size(); ++b) count += h->f({a, b}).contains(h->zero());
    EXPECT_EQ(count, 1u);
    EXPECT_TRUE(h->f({a, h.negate(a)}).contains(h->zero()));
  }
}

TEST(Structure, LookupByName) {
  Hyperring h = fixtures::ring("z12.json");
  EXPECT_EQ(h->find_element("7"), Element{7});
  EXPECT_FALSE(h->find_element("12").has_value());
  EXPECT_EQ(h->g({3, 4}), Element{0});
  EXPECT_EQ(h->f({7, 8}), Subset::of({3}));
}

}  // namespace
