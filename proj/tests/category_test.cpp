#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace str0d;
using namespace str0d::test;

TEST(Fibre, RoundTrip) {
  FibreObject o = to_fibre(congruence_biframe(chain3()));
  EXPECT_TRUE(isomorphic(*o.base, *chain3()));
  EXPECT_EQ(o.cong2, identity_congruence(o.congruences->lattice()));
  for (const FramePtr& l : {chain3(), chain_frame(2)}) {
    Biframe back = from_fibre(identity_fibre_object(l));
    EXPECT_TRUE(find_biframe_isomorphism(back, congruence_biframe(l)).has_value());
  }
}

TEST(Fibre, NonDenseObjectRejected) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Congruence top = all_congruence(cf->lattice());
  EXPECT_THROW(from_fibre(make_fibre_object(c, top)), Error);
}

TEST(Fibre, IdentityMorphismIsFinalAndInitial) {
  FibreObject o = identity_fibre_object(chain3());
  FibreMorphismCheck c = check_fibre_morphism(identity_hom(chain3()), o, o);
  EXPECT_TRUE(c.morphism);
  EXPECT_TRUE(c.final);
  EXPECT_TRUE(c.initial);
}

TEST(Fibre, QuotientMapIsMorphismIntoTop) {
  FibreObject src = identity_fibre_object(chain3());
  FramePtr two = chain_frame(2);
  FibreObject tgt = make_fibre_object(two, all_congruence(congruence_lattice(two)->lattice()));
  EXPECT_TRUE(check_fibre_morphism(chain3_to_2("1"), src, tgt).morphism);
}

TEST(Fibre, OverFiniteFramesIsSingleton) {
  for (const FramePtr& l : enumerate_frames(6)) {
    std::vector<Biframe> f = fibre_over(l);
    ASSERT_EQ(f.size(), 1u) << l->name();
    EXPECT_TRUE(find_biframe_isomorphism(f[0], congruence_biframe(l)).has_value());
  }
}

TEST(Reflection, Str0dObjectsAreFixed) {
  Reflection r = reflect_eta(identity_fibre_object(chain3()));
  EXPECT_EQ(r.eta.frame->size(), 3u);
}

TEST(Reflection, ChainByClosedSecondLevel) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Congruence c2 = nabla(cf->lattice(), cf->nabla(c->at("a")));
  Reflection r = reflect_eta(make_fibre_object(c, c2));
  EXPECT_TRUE(isomorphic(*r.target.base, *chain_frame(2)));
  EXPECT_TRUE(r.target.is_str0d());
}

TEST(Reflection, TopGoesToTrivial) {
  FramePtr c = chain3();
  CongruenceFramePtr cf = congruence_lattice(c);
  Reflection r = reflect_eta(make_fibre_object(c, all_congruence(cf->lattice())));
  EXPECT_EQ(r.target.base->size(), 1u);
}

TEST(Limits, EmptyDiagram) {
  Diagram d;
  BiframeCone colim = colimit(d);
  EXPECT_TRUE(find_biframe_isomorphism(colim.object, congruence_biframe(chain_frame(2))).has_value());
  EXPECT_EQ(limit(d).object.total->size(), 1u);
}

TEST(Limits, ProductOfTwo) {
  Biframe c2 = congruence_biframe(chain_frame(2));
  Diagram d;
  d.names = {"X", "Y"};
  d.objects = {c2, c2};
  BiframeCone p = limit(d);
  EXPECT_TRUE(is_str0d(p.object));
  EXPECT_TRUE(isomorphic(*p.first_parts.object, *square()));
  UniversalCheck u = check_limit(d, p, str0d_corpus(8));
  EXPECT_EQ(u.probes, 9u);
  EXPECT_GT(u.cones, 0u);
  BiframeCone q = colimit(d);
  EXPECT_EQ(q.object.total->size(), 2u);
  check_colimit(d, q, str0d_corpus(8));
}

TEST(Limits, EqualiserAndCoequaliser) {
  FramePtr c = chain3(), two = chain_frame(2);
  CongruenceFramePtr cc = congruence_lattice(c), c2 = congruence_lattice(two);
  Diagram d;
  d.names = {"X", "Y"};
  d.objects = {congruence_biframe(*cc), congruence_biframe(*c2)};
  for (const char* image : {"0", "1"}) {
    FrameHom f = chain3_to_2(image);
    d.arrows.push_back({std::string("f") + image, 0, 1, validate_bihom(d.objects[0], d.objects[1], cong_functor(*cc, *c2, f).table)});
  }
  std::vector<Biframe> probes = str0d_corpus(8);
  BiframeCone lim = limit(d);
  check_limit(d, lim, probes);
  BiframeCone colim = colimit(d);
  check_colimit(d, colim, probes);
  EXPECT_EQ(colim.object.total->size(), 1u);
}

TEST(Limits, RejectsNonStr0dObjects) {
  FramePtr c = chain3();
  Diagram d;
  d.names = {"X"};
  d.objects = {validate_biframe(c, elems(*c, {"0", "a", "1"}), elems(*c, {"0", "1"}))};
  EXPECT_THROW(limit(d), Error);
}

TEST(Classification, Examples) {
  std::vector<Biframe> probes = str0d_corpus(8);
  Biframe cb = congruence_biframe(chain3());
  MorphismClassification id = classify_morphism(identity_bihom(cb), probes);
  EXPECT_TRUE(id.mono);
  EXPECT_TRUE(id.extremal_epi);
  EXPECT_TRUE(id.agrees());

  CongruenceFramePtr cf = congruence_lattice(chain3());
  BiframeQuotient q = closed_quotient(cb, cf->nabla(chain3()->at("a")));
  MorphismClassification c = classify_morphism(q.map, probes);
  EXPECT_TRUE(c.extremal_epi);
  EXPECT_TRUE(c.closed_quotient);
  EXPECT_FALSE(c.mono);
}

TEST(Classification, AgreesOnSmallCorpus) {
  std::vector<Biframe> corpus = str0d_corpus(4);
  for (const Biframe& a : corpus)
    for (const Biframe& b : corpus)
      for (const BiframeHom& h : enumerate_bihoms(a, b)) EXPECT_TRUE(classify_morphism(h, corpus).agrees());
}

TEST(ClosedQuotient, Ends) {
  Biframe cb = congruence_biframe(chain3());
  EXPECT_EQ(closed_quotient(cb, cb.total->bottom()).biframe.total->size(), 4u);
  EXPECT_EQ(closed_quotient(cb, cb.total->top()).biframe.total->size(), 1u);
}

TEST(FrameLimits, CoproductSizes) {
  EXPECT_EQ(coproduct_frame({chain3(), chain3()}).object->size(), 6u);
  EXPECT_EQ(coproduct_frame({chain_frame(4), chain_frame(4)}).object->size(), 20u);
  EXPECT_EQ(coproduct_frame({square(), chain3()}).object->size(), 9u);
  EXPECT_EQ(coproduct_frame({}).object->size(), 2u);
}

TEST(FrameLimits, ProductSizes) {
  EXPECT_EQ(product_frame({chain3(), square()}).object->size(), 12u);
  EXPECT_EQ(product_frame({}).object->size(), 1u);
}
