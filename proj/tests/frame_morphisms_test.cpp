#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

TEST(ValidateHom, IdentityOnChain) {
  FrameHom id = identity_hom(chain3());
  EXPECT_TRUE(is_hom(*chain3(), *chain3(), id.table));
}

TEST(ValidateHom, ChainOntoTwo) {
  FrameHom q = chain3_to_2("1");
  EXPECT_EQ(q(q.source->at("a")), q.target->top());
}

TEST(ValidateHom, TopNotPreserved) {
  try {
    hom(chain3(), chain_frame(2), {{"0", "0"}, {"a", "0"}, {"1", "0"}});
    FAIL() << "map accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomomorphism);
  }
}

TEST(ValidateHom, JoinNotPreserved) {
  FramePtr s = square();
  // a and b both go to the bottom while their join goes to the top.
  EXPECT_FALSE(is_hom(*s, *chain_frame(2), table(*s, *chain_frame(2), {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"1", "1"}})));
}

TEST(RightAdjoint, Identity) {
  MonotoneMap r = right_adjoint(identity_hom(chain3()));
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(r(x), x);
}

TEST(RightAdjoint, QuotientOfChain) {
  FrameHom q = chain3_to_2("1");
  MonotoneMap r = right_adjoint(q);
  EXPECT_EQ(r(0), q.source->at("0"));
  EXPECT_EQ(r(1), q.source->at("1"));
}

TEST(RightAdjoint, NablaOfDelta) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  MonotoneMap r = right_adjoint(cf->nabla_hom());
  EXPECT_EQ(r(cf->delta(c->at("a"))), c->bottom());
}

TEST(RightAdjoint, GaloisLaw) {
  for (const FramePtr& l : enumerate_frames(4))
    for (const FramePtr& m : enumerate_frames(4))
      for (const FrameHom& f : enumerate_homs(l, m)) {
        MonotoneMap r = right_adjoint(f);
        for (Elem x = 0; x < l->size(); ++x)
          for (Elem y = 0; y < m->size(); ++y) ASSERT_EQ(m->leq(f(x), y), l->leq(x, r(y)));
      }
}

TEST(Density, Examples) {
  FrameHom id = identity_hom(chain3());
  EXPECT_TRUE(is_dense(id));
  EXPECT_TRUE(is_codense(id));
  EXPECT_TRUE(is_dense(chain3_to_2("1")));
  EXPECT_FALSE(is_codense(chain3_to_2("1")));
  EXPECT_TRUE(is_codense(chain3_to_2("0")));
  EXPECT_FALSE(is_dense(chain3_to_2("0")));
}

TEST(SubframeGenerated, Examples) {
  FramePtr s = square();
  EXPECT_EQ(subframe_generated(*s, elems(*s, {"a"})), elems(*s, {"0", "a", "1"}));
  EXPECT_EQ(subframe_generated(*s, {}), elems(*s, {"0", "1"}));
  EXPECT_EQ(subframe_generated(*s, elems(*s, {"a", "b"})).size(), 4u);
}

TEST(EnumerateHoms, CountsIntoTwo) {
  // Homs L → 2 correspond to the primes of L.
  for (const FramePtr& l : enumerate_frames(6))
    EXPECT_EQ(enumerate_homs(l, chain_frame(2)).size(), prime_elements(*l).size()) << l->name();
}

TEST(Compose, Associates) {
  FramePtr c = chain3();
  FrameHom q = chain3_to_2("1");
  FrameHom id2 = identity_hom(chain_frame(2));
  EXPECT_EQ(compose(id2, q), q);
  EXPECT_EQ(compose(q, identity_hom(c)), q);
}

TEST(MakeSubframe, RejectsNonSubframe) {
  FramePtr s = square();
  EXPECT_TRUE(is_subframe(*s, elems(*s, {"0", "a", "b", "1"})));
  EXPECT_FALSE(is_subframe(*s, elems(*s, {"a", "1"})));
  EXPECT_THROW(make_subframe(s, elems(*s, {"0", "a", "b"}), "S"), Error);
}
