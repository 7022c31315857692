#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

namespace {

struct Chain3Fixture : ::testing::Test {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Biframe cb = congruence_biframe(*cf);
  Elem a = c->at("a");
};

}  // namespace

TEST_F(Chain3Fixture, ClosureValues) {
  EXPECT_EQ(biframe_cl(cb, cf->delta(a)), cf->nabla(c->bottom()));
  EXPECT_EQ(biframe_cl(cb, cf->nabla(a)), cf->nabla(a));
  EXPECT_EQ(biframe_cl(cb, cb.total->top()), cb.total->top());
}

TEST_F(Chain3Fixture, ClearnessReports) {
  ClearnessReport top = clearness_report(cb, cb.total->top());
  EXPECT_TRUE(top.is_clear);
  ClearnessReport d = clearness_report(cb, cf->delta(a));
  EXPECT_TRUE(d.is_clear);
  EXPECT_EQ(d.closure, cf->nabla(c->bottom()));
  ClearnessReport zero = clearness_report(cb, cf->nabla(c->bottom()));
  EXPECT_FALSE(zero.is_clear);
  EXPECT_TRUE(zero.is_clarifiable);
  EXPECT_EQ(zero.witness_clear, cf->delta(a));
}

TEST_F(Chain3Fixture, ClearElementFor) {
  EXPECT_EQ(clear_element_for(cb, cf->nabla(c->bottom())), cf->delta(a));
  EXPECT_EQ(clear_element_for(cb, cf->nabla(a)), cf->nabla(a));
  EXPECT_EQ(clear_element_for(cb, cb.total->top()), cb.total->top());
  EXPECT_THROW(clear_element_for(cb, cf->delta(a)), Error);
}

TEST(Clear, ConditionsAgreeOnCorpus) {
  for (const Biframe& m : str0d_corpus(16)) {
    Coreflection cor = coreflection_chi(m);
    for (Elem x = 0; x < m.total->size(); ++x) {
      ClearnessReport r = clearness_report(m, x, cor);
      EXPECT_TRUE(r.conditions[0] == r.conditions[1] && r.conditions[1] == r.conditions[2] &&
                  r.conditions[2] == r.conditions[3]);
    }
  }
}

TEST(Clear, UpwardClosed) {
  for (const Biframe& m : str0d_corpus(16)) {
    Coreflection cor = coreflection_chi(m);
    const Frame& t = *m.total;
    for (Elem x = 0; x < t.size(); ++x)
      for (Elem y = 0; y < t.size(); ++y)
        if (t.leq(x, y) && clearness_report(m, x, cor).is_clear) {
          EXPECT_TRUE(clearness_report(m, y, cor).is_clear);
        }
  }
}

TEST(Congruential, FiniteStr0dBiframes) {
  for (const Biframe& m : str0d_corpus(16)) EXPECT_TRUE(is_congruential(m));
}

TEST(Recognizer, Chain3IsNot) {
  EXPECT_TRUE(recognize_congruence_frame(chain3()).empty());
  EXPECT_TRUE(recognize_quotient_of_congruence_frame(chain3()).empty());
}

TEST(Recognizer, Booleans) {
  std::vector<RecognizerWitness> two = recognize_congruence_frame(chain_frame(2));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].first_part_class, "2");
  EXPECT_FALSE(recognize_congruence_frame(boolean_frame(3)).empty());
  EXPECT_FALSE(recognize_quotient_of_congruence_frame(chain_frame(2)).empty());
}

TEST(Recognizer, SquareHasThreeWitnesses) {
  FramePtr s = square();
  std::vector<RecognizerWitness> w = recognize_congruence_frame(s);
  ASSERT_EQ(w.size(), 3u);
  std::set<ElementSet> fixed;
  std::multiset<std::string> classes;
  for (const RecognizerWitness& x : w) {
    fixed.insert(x.fixed_points);
    classes.insert(x.first_part_class);
    EXPECT_FALSE(x.iso.empty());
  }
  EXPECT_EQ(fixed, (std::set<ElementSet>{elems(*s, {"0", "a", "1"}), elems(*s, {"0", "b", "1"}),
                                         elems(*s, {"0", "a", "b", "1"})}));
  EXPECT_EQ(classes, (std::multiset<std::string>{"chain3", "chain3", "2^2"}));
  EXPECT_GE(recognize_quotient_of_congruence_frame(s).size(), 3u);
}

TEST(Recognizer, AgreesWithEndoMapSearch) {
  for (const FramePtr& m : enumerate_frames(6)) {
    oracle::EndoMapResult slow = oracle::endo_map_search(m);
    std::vector<ElementSet> full, weak;
    for (const RecognizerWitness& w : recognize_congruence_frame(m)) full.push_back(w.fixed_points);
    for (const RecognizerWitness& w : recognize_quotient_of_congruence_frame(m)) weak.push_back(w.fixed_points);
    std::sort(full.begin(), full.end());
    std::sort(weak.begin(), weak.end());
    EXPECT_EQ(full, slow.with_maxima) << m->name();
    EXPECT_EQ(weak, slow.without_maxima) << m->name();
  }
}

TEST(Recognizer, AgreesWithIsoMatching) {
  std::vector<FramePtr> frames = enumerate_frames(7);
  std::vector<FramePtr> congruence_frames;
  for (const FramePtr& l : frames)
    if ((std::size_t{1} << l->join_irreducibles().size()) <= 8) congruence_frames.push_back(congruence_lattice(l)->lattice());
  for (const FramePtr& m : frames) {
    bool matched = false;
    for (const FramePtr& c : congruence_frames) matched = matched || isomorphic(*c, *m);
    EXPECT_EQ(matched, !recognize_congruence_frame(m).empty()) << m->name();
  }
}
