#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

namespace {

Biframe split_square() {
  FramePtr s = square();
  return validate_biframe(s, elems(*s, {"0", "a", "1"}), elems(*s, {"0", "b", "1"}));
}

}  // namespace

TEST(ValidateBiframe, Examples) {
  EXPECT_NO_THROW(split_square());
  FramePtr c = chain3();
  ElementSet all = elems(*c, {"0", "a", "1"});
  EXPECT_NO_THROW(validate_biframe(c, all, all));
  FramePtr s = square();
  try {
    validate_biframe(s, elems(*s, {"0", "a", "1"}), elems(*s, {"0", "1"}));
    FAIL() << "parts do not generate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PartsDoNotGenerate);
  }
  try {
    validate_biframe(s, elems(*s, {"a", "1"}), elems(*s, {"0", "b", "1"}));
    FAIL() << "part without bottom";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PartNotSubframe);
  }
}

TEST(IsStr0d, Examples) {
  EXPECT_TRUE(is_str0d(split_square()));
  FramePtr c = chain3();
  EXPECT_FALSE(is_str0d(validate_biframe(c, elems(*c, {"0", "a", "1"}), elems(*c, {"0", "1"}))));
  EXPECT_TRUE(is_str0d(congruence_biframe(chain3())));
  EXPECT_THROW(require_str0d(validate_biframe(c, elems(*c, {"0", "a", "1"}), elems(*c, {"0", "1"}))), Error);
}

TEST(CongruenceBiframe, Examples) {
  Biframe two = congruence_biframe(chain_frame(2));
  EXPECT_EQ(two.total->size(), 2u);
  EXPECT_EQ(two.part1.size(), 2u);
  EXPECT_EQ(two.part2.size(), 2u);
  Biframe c3 = congruence_biframe(chain3());
  EXPECT_TRUE(isomorphic(*c3.total, *square()));
  EXPECT_TRUE(isomorphic(*first_part(c3).frame, *chain3()));
  EXPECT_EQ(c3.part2.size(), 3u);
  EXPECT_EQ(congruence_biframe(chain_frame(1)).total->size(), 1u);
}

TEST(BiframeQuotient, Examples) {
  Biframe c3 = congruence_biframe(chain3());
  BiframeQuotient same = biframe_quotient(c3, identity_congruence(c3.total));
  EXPECT_TRUE(find_biframe_isomorphism(same.biframe, c3).has_value());
  EXPECT_TRUE(is_dense_bihom(same.map));
  BiframeQuotient trivial = biframe_quotient(c3, all_congruence(c3.total));
  EXPECT_EQ(trivial.biframe.total->size(), 1u);
  EXPECT_TRUE(is_biframe_surjection(trivial.map));
  EXPECT_FALSE(is_dense_bihom(trivial.map));
}

TEST(BiframeQuotient, ClosedQuotientOfChain) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Biframe cb = congruence_biframe(*cf);
  BiframeQuotient q = biframe_quotient(cb, nabla(cb.total, cf->nabla(c->at("a"))));
  EXPECT_TRUE(is_str0d(q.biframe));
  EXPECT_TRUE(isomorphic(*first_part(q.biframe).frame, *chain_frame(2)));
}

TEST(Coreflection, IsoOnCongruenceBiframes) {
  for (const FramePtr& l : enumerate_frames(6)) {
    Coreflection cor = coreflection_chi(congruence_biframe(l));
    EXPECT_TRUE(cor.is_isomorphism()) << l->name();
    EXPECT_TRUE(is_dense_bihom(cor.chi)) << l->name();
  }
}

TEST(Coreflection, SplitSquare) {
  Biframe m = split_square();
  Coreflection cor = coreflection_chi(m);
  EXPECT_TRUE(isomorphic(*cor.first.frame, *chain3()));
  EXPECT_TRUE(cor.is_isomorphism());
}

TEST(ChiStar, Examples) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Biframe cb = congruence_biframe(*cf);
  Coreflection cor = coreflection_chi(cb);
  EXPECT_EQ(chi_star(cb, cb.total->bottom()), identity_congruence(cor.first.frame));
  EXPECT_EQ(chi_star(cb, cb.total->top()), all_congruence(cor.first.frame));
  Elem delta_a = cf->delta(c->at("a"));
  EXPECT_EQ(cor.congruences->congruence(cor.chi_star(delta_a)).nucleus, cf->congruence(delta_a).nucleus);
}

TEST(ExtendAlongNabla, Unique) {
  // Homs from a congruence frame that agree on ∇ are equal.
  for (const FramePtr& l : enumerate_frames(4)) {
    CongruenceFramePtr cf = congruence_lattice(l);
    for (const FramePtr& m : enumerate_frames(4)) {
      FramePtr boolean = congruence_lattice(m)->lattice();
      for (const FrameHom& g : enumerate_homs(l, boolean)) {
        FrameHom h = extend_along_nabla(*cf, g);
        for (Elem a = 0; a < l->size(); ++a) EXPECT_EQ(h(cf->nabla(a)), g(a));
      }
    }
  }
}

TEST(Corpus, CountsByTotalSize) {
  const std::size_t expected[] = {1, 2, 4, 9, 25};
  std::size_t t = 1;
  for (std::size_t k = 0; k < 5; ++k, t *= 2) EXPECT_EQ(str0d_corpus(t).size(), expected[k]) << t;
}

TEST(Corpus, EveryMemberIsStr0dOnABooleanTotal) {
  for (const Biframe& m : str0d_corpus(16)) {
    EXPECT_TRUE(is_str0d(m));
    EXPECT_TRUE(is_boolean(*m.total));
  }
}

TEST(Bihoms, IdentityIsDenseSurjection) {
  for (const Biframe& m : str0d_corpus(8)) {
    BiframeHom id = identity_bihom(m);
    EXPECT_TRUE(is_dense_bihom(id));
    EXPECT_TRUE(is_biframe_surjection(id));
  }
}

TEST(Bihoms, EnumerationPreservesParts) {
  std::vector<Biframe> corpus = str0d_corpus(8);
  for (const Biframe& a : corpus)
    for (const Biframe& b : corpus)
      for (const BiframeHom& h : enumerate_bihoms(a, b)) EXPECT_TRUE(preserves_parts(a, b, h.total));
}
