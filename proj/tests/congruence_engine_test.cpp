#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

namespace {

std::set<ElementSet> class_set(const Congruence& c) {
  std::vector<ElementSet> cl = classes(c);
  return {cl.begin(), cl.end()};
}

}  // namespace

TEST(Nabla, Chain) {
  FramePtr c = chain3();
  EXPECT_EQ(class_set(nabla(c, c->at("a"))), (std::set<ElementSet>{elems(*c, {"0", "a"}), elems(*c, {"1"})}));
  EXPECT_EQ(nabla(c, c->bottom()), identity_congruence(c));
  EXPECT_EQ(nabla(c, c->top()), all_congruence(c));
}

TEST(Delta, Chain) {
  FramePtr c = chain3();
  Congruence d = delta(c, c->at("a"));
  EXPECT_EQ(class_set(d), (std::set<ElementSet>{elems(*c, {"0"}), elems(*c, {"a", "1"})}));
  EXPECT_EQ(d(c->at("a")), c->top());
  EXPECT_EQ(delta(c, c->top()), identity_congruence(c));
  EXPECT_EQ(delta(c, c->bottom()), all_congruence(c));
}

TEST(FromPairs, Examples) {
  FramePtr c = chain3();
  EXPECT_EQ(congruence_from_pairs(c, {{c->bottom(), c->at("a")}}), nabla(c, c->at("a")));
  EXPECT_EQ(congruence_from_pairs(c, {}), identity_congruence(c));
  EXPECT_EQ(congruence_from_pairs(c, {{c->bottom(), c->top()}}), all_congruence(c));
}

TEST(FromPairs, AgreesWithMeetOracle) {
  for (const FramePtr& f : enumerate_frames(5))
    for (Elem x = 0; x < f->size(); ++x)
      for (Elem y = 0; y < f->size(); ++y)
        ASSERT_EQ(congruence_from_pairs(f, {{x, y}}), oracle::generated_by_meet(f, {{x, y}})) << f->name();
}

TEST(CongruenceLattice, SmallExamples) {
  EXPECT_EQ(congruence_lattice(chain_frame(2))->size(), 2u);
  CongruenceFramePtr c3 = congruence_lattice(chain3());
  EXPECT_EQ(c3->size(), 4u);
  EXPECT_TRUE(is_boolean(*c3->lattice()));
  EXPECT_EQ(congruence_lattice(square())->size(), 4u);
  EXPECT_EQ(congruence_lattice(boolean_frame(3))->size(), 8u);
}

TEST(CongruenceLattice, MatchesPartitionSearch) {
  for (const FramePtr& f : enumerate_frames(5)) {
    std::set<Relation> engine, brute;
    CongruenceFramePtr cf = congruence_lattice(f);
    for (const Congruence& c : cf->congruences()) engine.insert(relation_of(c));
    for (const Relation& r : brute_force_congruences(f)) brute.insert(r);
    EXPECT_EQ(engine, brute) << f->name();
  }
}

TEST(CongruenceLattice, PowerOfJoinIrreducibles) {
  for (const FramePtr& f : enumerate_frames(6)) {
    CongruenceFramePtr cf = congruence_lattice(f);
    EXPECT_EQ(cf->size(), std::size_t{1} << f->join_irreducibles().size()) << f->name();
    EXPECT_TRUE(is_boolean(*cf->lattice())) << f->name();
  }
}

TEST(CongruenceLattice, NablaDeltaComplements) {
  for (const FramePtr& f : enumerate_frames(6)) {
    CongruenceFramePtr cf = congruence_lattice(f);
    const Frame& lat = *cf->lattice();
    EXPECT_TRUE(is_injective(cf->nabla_hom()));
    for (Elem a = 0; a < f->size(); ++a) {
      EXPECT_EQ(lat.join(cf->nabla(a), cf->delta(a)), lat.top());
      EXPECT_EQ(lat.meet(cf->nabla(a), cf->delta(a)), lat.bottom());
    }
  }
}

TEST(BruteForce, Counts) {
  EXPECT_EQ(brute_force_congruences(chain_frame(1)).size(), 1u);
  EXPECT_EQ(brute_force_congruences(chain_frame(2)).size(), 2u);
  EXPECT_EQ(brute_force_congruences(chain3()).size(), 4u);
}

TEST(Closure, Examples) {
  FramePtr c = chain3();
  Elem a = c->at("a");
  EXPECT_EQ(closure_cl(delta(c, a)), identity_congruence(c));
  EXPECT_EQ(closure_cl(nabla(c, a)), nabla(c, a));
  EXPECT_EQ(closure_cl(all_congruence(c)), nabla(c, c->top()));
}

TEST(ClearCongruence, Examples) {
  FramePtr c = chain3();
  EXPECT_EQ(clear_congruence(c, c->bottom()), delta(c, c->at("a")));
  EXPECT_EQ(clear_congruence(c, c->top()), all_congruence(c));
  FramePtr b = boolean_frame(3);
  EXPECT_EQ(clear_congruence(b, b->bottom()), identity_congruence(b));
  EXPECT_EQ(dense_top(c), delta(c, c->at("a")));
  EXPECT_EQ(dense_top(chain_frame(1)), identity_congruence(chain_frame(1)));
}

TEST(ClearCongruence, AgreesWithSearch) {
  for (const FramePtr& f : enumerate_frames(5))
    for (Elem a = 0; a < f->size(); ++a) ASSERT_EQ(clear_congruence(f, a), oracle::clear_by_search(f, a));
}

TEST(Quotient, ChainByNabla) {
  FramePtr c = chain3();
  Quotient q = quotient(nabla(c, c->at("a")));
  EXPECT_EQ(q.frame->size(), 2u);
  EXPECT_EQ(q.fixpoints, elems(*c, {"a", "1"}));
  EXPECT_EQ(q(c->bottom()), q(c->at("a")));
  EXPECT_NE(q(c->at("a")), q(c->top()));
}

TEST(Quotient, ChainByDelta) {
  FramePtr c = chain3();
  Quotient q = quotient(delta(c, c->at("a")));
  EXPECT_EQ(q.fixpoints, elems(*c, {"0", "1"}));
}

TEST(Quotient, IdentityGivesSameFrame) {
  FramePtr s = square();
  Quotient q = quotient(identity_congruence(s));
  EXPECT_EQ(q.frame->size(), 4u);
  EXPECT_EQ(kernel(q.map), identity_congruence(s));
}

TEST(Image, Examples) {
  FramePtr c = chain3();
  FrameHom q = chain3_to_2("1");
  EXPECT_EQ(cong_image(identity_hom(c), nabla(c, c->at("a"))), nabla(c, c->at("a")));
  EXPECT_EQ(cong_image(q, nabla(c, c->at("a"))), all_congruence(chain_frame(2)));
  FrameHom inc = hom(chain_frame(2), c, {{"0", "0"}, {"1", "1"}});
  EXPECT_EQ(cong_image(inc, identity_congruence(chain_frame(2))), identity_congruence(c));
}

TEST(Preimage, Examples) {
  FramePtr c = chain3();
  FrameHom q = chain3_to_2("1");
  EXPECT_EQ(cong_preimage(q, identity_congruence(chain_frame(2))), delta(c, c->at("a")));
  EXPECT_EQ(cong_preimage(q, identity_congruence(chain_frame(2))), kernel(q));
  EXPECT_EQ(cong_preimage(q, all_congruence(chain_frame(2))), all_congruence(c));
}

TEST(ThirdIso, ChainAboveNabla) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  ThirdIsomorphism t = third_iso(*cf, nabla(c, c->at("a")));
  EXPECT_EQ(t.above.size(), 2u);
  EXPECT_EQ(t.quotient_congruences->size(), 2u);
  ThirdIsomorphism s = third_iso(*cf, delta(c, c->at("a")));
  EXPECT_EQ(s.above.size(), 2u);
  ThirdIsomorphism whole = third_iso(*cf, identity_congruence(c));
  EXPECT_EQ(whole.above.size(), cf->size());
}

TEST(Smooth, EveryFiniteCongruence) {
  for (const FramePtr& f : enumerate_frames(5)) {
    CongruenceFramePtr cf = congruence_lattice(f);
    for (const Congruence& c : cf->congruences()) EXPECT_TRUE(is_smooth(*cf, c));
  }
}

TEST(Nucleus, RejectsNonNucleus) {
  FramePtr c = chain3();
  // Deflationary maps are not nuclei.
  EXPECT_THROW(make_congruence(c, {c->bottom(), c->bottom(), c->top()}), Error);
}

TEST(Functor, NablaCommutes) {
  for (const FramePtr& l : enumerate_frames(4))
    for (const FramePtr& m : enumerate_frames(4)) {
      CongruenceFramePtr cl = congruence_lattice(l), cm = congruence_lattice(m);
      for (const FrameHom& f : enumerate_homs(l, m)) {
        FrameHom cf = cong_functor(*cl, *cm, f);
        for (Elem a = 0; a < l->size(); ++a) ASSERT_EQ(cf(cl->nabla(a)), cm->nabla(f(a)));
      }
    }
}
