#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

TEST(OpenSetFrame, Examples) {
  EXPECT_TRUE(isomorphic(*open_set_frame(sierpinski_space()), *chain3()));
  FiniteSpace discrete = make_space({"x", "y"}, {0b00, 0b01, 0b10, 0b11});
  EXPECT_TRUE(isomorphic(*open_set_frame(discrete), *square()));
  EXPECT_TRUE(isomorphic(*open_set_frame(make_space({"x"}, {0b0, 0b1})), *chain_frame(2)));
}

TEST(MakeSpace, RejectsBadTopologies) {
  EXPECT_THROW(make_space({"x", "y"}, {0b00, 0b01, 0b10}), Error);
  EXPECT_THROW(make_space({"x", "y"}, {0b01, 0b11}), Error);
  EXPECT_THROW(make_space({"x", "x"}, {0b00, 0b11}), Error);
}

TEST(Skula, Sierpinski) {
  Biframe sk = skula(sierpinski_space());
  EXPECT_EQ(sk.total->size(), 4u);
  EXPECT_EQ(sk.part1, elems(*sk.total, {"∅", "{x}", "{x,y}"}));
  EXPECT_EQ(sk.part2, elems(*sk.total, {"∅", "{y}", "{x,y}"}));
  EXPECT_TRUE(find_biframe_isomorphism(sk, congruence_biframe(chain3())).has_value());
  EXPECT_TRUE(is_congruential(sk));
}

TEST(Skula, DiscreteSpace) {
  Biframe sk = skula(make_space({"x", "y"}, {0b00, 0b01, 0b10, 0b11}));
  EXPECT_EQ(sk.total->size(), 4u);
  EXPECT_EQ(sk.part1.size(), 4u);
  EXPECT_EQ(sk.part2.size(), 4u);
}

TEST(Skula, ThreePointChain) {
  Biframe sk = skula(make_space({"x", "y", "z"}, {0b000, 0b001, 0b011, 0b111}));
  EXPECT_TRUE(is_str0d(sk));
  EXPECT_TRUE(isomorphic(*sk.total, *boolean_frame(3)));
}

TEST(Skula, RejectsNonT0) {
  try {
    skula(make_space({"x", "y"}, {0b00, 0b11}));
    FAIL() << "indiscrete space accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotT0);
  }
}

TEST(Points, Examples) {
  EXPECT_EQ(points_of_frame(*chain3()), elems(*chain3(), {"0", "a"}));
  EXPECT_EQ(points_of_frame(*square()), elems(*square(), {"a", "b"}));
  EXPECT_TRUE(points_of_frame(*chain_frame(1)).empty());
}

TEST(EnumerateSpaces, Counts) {
  const std::size_t cumulative[] = {0, 1, 3, 8, 24};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_spaces(n).size(), cumulative[n]);
  EXPECT_THROW(enumerate_spaces(5), Error);
}

TEST(Skula, RoundTripAndSobriety) {
  for (const FiniteSpace& x : enumerate_spaces(4)) {
    Biframe sk = skula(x);
    EXPECT_TRUE(is_str0d(sk));
    EXPECT_TRUE(find_homeomorphism(space_from_biframe(sk), x).has_value());
    EXPECT_TRUE(is_sober(x));
  }
}

TEST(Homeomorphism, SwapsPoints) {
  FiniteSpace a = make_space({"x", "y"}, {0b00, 0b01, 0b11});
  FiniteSpace b = make_space({"x", "y"}, {0b00, 0b10, 0b11});
  auto h = find_homeomorphism(a, b);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ((*h)[0], 1u);
  EXPECT_FALSE(find_homeomorphism(a, make_space({"x", "y"}, {0b00, 0b01, 0b10, 0b11})).has_value());
}
