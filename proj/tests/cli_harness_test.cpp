#include <gtest/gtest.h>

#include "helpers.hpp"
#include "str0d/json_io.hpp"
#include "str0d/verify.hpp"

using namespace str0d;
using namespace str0d::test;

TEST(Json, FrameRoundTrip) {
  for (const FramePtr& f : enumerate_frames(6)) {
    FramePtr back = frame_from_json(frame_to_json(*f));
    EXPECT_TRUE(isomorphic(*f, *back));
    EXPECT_EQ(back->labels(), f->labels());
  }
}

TEST(Json, BuiltinNames) {
  EXPECT_EQ(frame_from_json("chain4")->size(), 4u);
  EXPECT_EQ(frame_from_json("2^3")->size(), 8u);
  EXPECT_EQ(frame_from_json("trivial")->size(), 1u);
  EXPECT_THROW(frame_from_json("chain0"), Error);
  EXPECT_THROW(frame_from_json("lattice"), Error);
  EXPECT_THROW(frame_from_json("chain999"), Error);
}

TEST(Json, HardCapApplies) {
  Limits limits;
  limits.hard_cap = 3;
  json big = frame_to_json(*chain_frame(4));
  try {
    frame_from_json(big, limits);
    FAIL() << "cap ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Json, BiframeReferenceAndObject) {
  Biframe ref = biframe_from_json("C(chain3)");
  EXPECT_TRUE(find_biframe_isomorphism(ref, congruence_biframe(chain3())).has_value());
  Biframe back = biframe_from_json(biframe_to_json(ref));
  EXPECT_TRUE(find_biframe_isomorphism(ref, back).has_value());
  EXPECT_THROW(biframe_from_json("chain3"), Error);
}

TEST(Json, SpaceRoundTrip) {
  for (const FiniteSpace& x : enumerate_spaces(3)) {
    FiniteSpace back = space_from_json(space_to_json(x));
    EXPECT_EQ(back.opens, x.opens);
  }
  EXPECT_THROW(space_from_json(json::parse(R"j({"points": ["x"], "opens": [[], ["q"], ["x"]]})j")), Error);
}

TEST(Json, DiagramWithFrameMaps) {
  json j = json::parse(R"j({
    "objects": {"X": "C(chain3)", "Y": "C(2)"},
    "arrows": [{"name": "f", "from": "X", "to": "Y", "frameMap": {"0": "0", "a": "1", "1": "1"}}]
  })j");
  Diagram d = diagram_from_json(j);
  ASSERT_EQ(d.arrows.size(), 1u);
  BiframeCone lim = limit(d);
  json out = cone_to_json(d, lim);
  EXPECT_TRUE(out.contains("legs"));
  EXPECT_TRUE(out["legs"].contains("X"));
}

TEST(Json, DiagramRejectsUnknownObject) {
  json j = json::parse(R"j({"objects": {"X": "C(2)"}, "arrows": [{"from": "X", "to": "Z", "map": {}}]})j");
  EXPECT_THROW(diagram_from_json(j), Error);
}

TEST(Json, OutputIsDeterministic) {
  json a = biframe_to_json(congruence_biframe(square()));
  json b = biframe_to_json(congruence_biframe(square()));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Json, RecognizerReport) {
  json r = recognizer_to_json(*square(), recognize_congruence_frame(square()));
  EXPECT_TRUE(r["isCongruenceFrame"].get<bool>());
  EXPECT_EQ(r["witnesses"].size(), 3u);
}

TEST(Verify, EverySuitePassesAtSizeThree) {
  for (const std::string& s : suite_names()) {
    VerifyReport r = run_suite(s, 3);
    EXPECT_TRUE(r.passed()) << s << ": " << r.to_json().dump();
    EXPECT_GT(r.instances, 0u) << s;
  }
}

TEST(Verify, SizesAreClamped) {
  VerifyReport r = run_suite("skula", 9);
  EXPECT_TRUE(r.passed());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("clamped"), std::string::npos);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", 3), Error); }

TEST(Verify, RecorderCapturesCounterexamples) {
  VerifyReport report;
  {
    Recorder r(report);
    r.check(true, "fine");
    r.check(false, "broken", json{{"x", 1}});
    r.guard("throws", json::object(), [] { throw Error(ErrorKind::TheoremViolation, "boom"); });
  }
  EXPECT_EQ(report.instances, 3u);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0].counterexample["x"], 1);
  EXPECT_FALSE(report.passed());
}
