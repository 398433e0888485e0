#include <gtest/gtest.h>

#include "koszulkit/bigraded.hpp"

using namespace koszulkit;

TEST(Shift, Convention) {
  BigradedDims d{{{0, 0}, 1}};
  EXPECT_EQ(shift(d, 1, 2), (BigradedDims{{{-1, 2}, 1}}));
  EXPECT_EQ(shift(shift(d, 1, 2), -1, -2), d);
}

TEST(Shift, GroupAction) {
  BigradedDims d{{{0, 0}, 1}, {{2, -2}, 3}, {{-1, 4}, 2}};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      EXPECT_EQ(shift(shift(d, a, b), 1, -1), shift(d, a + 1, b - 1));
      EXPECT_EQ(dual_dims(shift(d, a, b)), shift(dual_dims(d), -a, -b));
    }
  EXPECT_EQ(shift(d, 0, 0), d);
}

TEST(DualDims, Involution) {
  BigradedDims d{{{2, -2}, 1}};
  EXPECT_EQ(dual_dims(d), (BigradedDims{{{-2, 2}, 1}}));
  EXPECT_EQ(dual_dims(dual_dims(d)), d);
}

TEST(BigradedDims, ZeroEntriesNotStored) {
  BigradedDims d;
  d.set({1, 1}, 0);
  EXPECT_TRUE(d.empty());
  d.add({1, 1}, 2);
  EXPECT_EQ(d.at(1, 1), 2u);
  EXPECT_EQ(d.total(), 2u);
}

TEST(BigradedDims, EulerCharacteristicAndDifference) {
  BigradedDims d{{{0, 0}, 2}, {{1, 0}, 3}, {{0, 2}, 1}};
  EXPECT_EQ(d.euler_characteristic(0), -1);
  EXPECT_EQ(d.euler_characteristic(2), 1);
  BigradedDims e{{{0, 0}, 2}, {{1, 0}, 3}};
  ASSERT_TRUE(d.first_difference(e));
  EXPECT_EQ(*d.first_difference(e), (Bidegree{0, 2}));
  EXPECT_FALSE(d.first_difference(d));
}

TEST(BigradedDims, JsonSortedTriples) {
  BigradedDims d{{{1, 0}, 3}, {{-1, 2}, 1}, {{0, 0}, 2}};
  auto j = to_json(d);
  EXPECT_EQ(j.dump(), "[[-1,2,1],[0,0,2],[1,0,3]]");
  EXPECT_EQ(dims_from_json(j), d);
  EXPECT_THROW(dims_from_json(nlohmann::json::parse("[[1,2]]")), std::invalid_argument);
}

TEST(Window, ParseAndRestrict) {
  auto w = Window::parse("-1:2,-3:4");
  EXPECT_EQ(w, (Window{-1, 2, -3, 4}));
  EXPECT_EQ(Window::parse(w.str()), w);
  EXPECT_THROW(Window::parse("1:2"), std::invalid_argument);
  EXPECT_THROW(Window::parse("3:2,0:0"), std::invalid_argument);
  BigradedDims d{{{0, 0}, 1}, {{5, 0}, 1}};
  EXPECT_EQ(d.restricted(w), (BigradedDims{{{0, 0}, 1}}));
}

TEST(Box, Arithmetic) {
  Box a{0, 1, -2, 0};
  EXPECT_TRUE(a.contains({1, -1}));
  EXPECT_FALSE(a.contains({2, 0}));
  EXPECT_TRUE(Box::empty_box().is_empty());
  auto t = a.translated({1, 1});
  EXPECT_TRUE(t.contains({2, 1}));
  auto n = a.negated();
  EXPECT_TRUE(n.contains({-1, 2}));
  Box unbounded{0, std::nullopt, 0, 0};
  EXPECT_FALSE(unbounded.bounded());
  EXPECT_TRUE(a.plus(a).contains({2, -4}));
}

TEST(Laurent, Rendering) {
  EXPECT_EQ(to_laurent(BigradedDims{}), "0");
  EXPECT_EQ(to_laurent(BigradedDims{{{-1, 2}, 1}}), "1*u^-1*t^2");
}
