#include <gtest/gtest.h>

#include <map>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

TEST(BuildFrame, ChainIsAFrame) {
  FramePtr f = frame_from({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
  EXPECT_EQ(f->size(), 3u);
  EXPECT_EQ(f->bottom(), f->at("0"));
  EXPECT_EQ(f->top(), f->at("1"));
  EXPECT_TRUE(isomorphic(*f, *chain3()));
}

TEST(BuildFrame, DiamondIsNotDistributive) {
  try {
    frame_from({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    FAIL() << "M3 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDistributive);
  }
}

TEST(BuildFrame, PentagonIsNotDistributive) {
  EXPECT_THROW(frame_from({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "1"}, {"c", "1"}}),
               Error);
}

TEST(BuildFrame, NonLatticeRejected) {
  try {
    frame_from({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
    FAIL() << "two maximal elements accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLattice);
  }
}

TEST(BuildFrame, CycleIsNotAPoset) {
  try {
    frame_from({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPoset);
  }
}

TEST(BuildFrame, DuplicateLabelsRejected) { EXPECT_THROW(frame_from({"x", "x"}, {}), Error); }

TEST(BuildFrame, SingletonHasBottomEqualTop) {
  FramePtr f = frame_from({"*"}, {});
  EXPECT_EQ(f->bottom(), f->top());
}

TEST(Complement, Square) {
  FramePtr f = square();
  EXPECT_EQ(complement(*f, f->at("a")), f->at("b"));
  EXPECT_EQ(complement(*f, f->bottom()), f->top());
}

TEST(Complement, ChainMiddleHasNone) { EXPECT_FALSE(complement(*chain3(), chain3()->at("a")).has_value()); }

TEST(IsBoolean, Examples) {
  EXPECT_TRUE(is_boolean(*square()));
  EXPECT_FALSE(is_boolean(*chain3()));
  EXPECT_TRUE(is_boolean(*chain_frame(1)));
}

TEST(JoinIrreducibles, Examples) {
  FramePtr c = chain3();
  EXPECT_EQ(c->join_irreducibles(), elems(*c, {"a", "1"}));
  FramePtr b = boolean_frame(3);
  EXPECT_EQ(b->join_irreducibles(), elems(*b, {"a", "b", "c"}));
  EXPECT_TRUE(chain_frame(1)->join_irreducibles().empty());
}

TEST(Heyting, Residuation) {
  for (const FramePtr& fp : enumerate_frames(6)) {
    const Frame& f = *fp;
    for (Elem x = 0; x < f.size(); ++x)
      for (Elem y = 0; y < f.size(); ++y)
        for (Elem z = 0; z < f.size(); ++z)
          ASSERT_EQ(f.leq(f.meet(z, x), y), f.leq(z, f.implies(x, y))) << f.name();
  }
}

TEST(Heyting, ChainValues) {
  FramePtr c = chain3();
  Elem a = c->at("a");
  EXPECT_EQ(c->implies(a, c->bottom()), c->bottom());
  EXPECT_EQ(c->implies(c->top(), a), a);
  EXPECT_EQ(c->implies(a, a), c->top());
}

TEST(EnumerateFrames, CountsBySize) {
  std::map<std::size_t, std::size_t> counts;
  for (const FramePtr& f : enumerate_frames(7)) ++counts[f->size()];
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 5, 8};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(counts[n], expected[n]) << n;
  EXPECT_EQ(enumerate_frames(1).size(), 1u);
  EXPECT_TRUE(enumerate_frames(0).empty());
}

TEST(EnumerateFrames, BoundEnforced) { EXPECT_THROW(enumerate_frames(8), Error); }

TEST(EnumerateFrames, PairwiseNonIsomorphic) {
  std::vector<FramePtr> frames = enumerate_frames(6);
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t k = i + 1; k < frames.size(); ++k) EXPECT_FALSE(isomorphic(*frames[i], *frames[k]));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(isomorphic(*chain3(), *chain3()));
  EXPECT_FALSE(isomorphic(*chain_frame(4), *square()));
  FramePtr relabelled = frame_from({"⊥", "p", "q", "⊤"}, {{"⊥", "p"}, {"⊥", "q"}, {"p", "⊤"}, {"q", "⊤"}});
  auto iso = find_isomorphism(*square(), *relabelled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ((*iso)[square()->bottom()], relabelled->at("⊥"));
  EXPECT_EQ((*iso)[square()->top()], relabelled->at("⊤"));
}

TEST(ShapeName, KnownShapes) {
  EXPECT_EQ(shape_name(*chain_frame(1)), "trivial");
  EXPECT_EQ(shape_name(*chain_frame(2)), "2");
  EXPECT_EQ(shape_name(*chain3()), "chain3");
  EXPECT_EQ(shape_name(*boolean_frame(3)), "2^3");
}

TEST(Primes, Examples) {
  FramePtr c = chain3();
  EXPECT_EQ(prime_elements(*c), elems(*c, {"0", "a"}));
  FramePtr s = square();
  EXPECT_EQ(prime_elements(*s), elems(*s, {"a", "b"}));
  EXPECT_TRUE(prime_elements(*chain_frame(1)).empty());
}

TEST(Oracle, FrameEnumerationAgrees) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<FramePtr> slow = oracle::frames_of_size(n);
    std::size_t fast = 0;
    for (const FramePtr& f : enumerate_frames(n))
      if (f->size() == n) {
        ++fast;
        bool found = false;
        for (const FramePtr& g : slow) found = found || isomorphic(*f, *g);
        EXPECT_TRUE(found) << f->name();
      }
    EXPECT_EQ(slow.size(), fast) << n;
  }
}
