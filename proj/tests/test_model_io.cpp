#include <gtest/gtest.h>

#include <string>

#include "fixtures.hpp"
#include "gptr/report.hpp"

namespace gptr {
namespace {

using test::eff;
using test::gbit;
using test::gbit_x;
using test::gbit_y;
using test::vec;

const char* kModel = R"({
  "state_space": {"type": "polytope", "vertices": [[1, 1], [1, -1], [-1, -1], [-1, 1]]},
  "meters": {
    "X": [["1/2", "1/2", 0], ["1/2", "-1/2", 0]],
    "Y": [["1/2", 0, "0.5"], ["1/2", 0, "-0.5"]],
    "T": [["1/3", 0, 0], ["2/3", 0, 0]]
  },
  "effect_restrictions": {"Xonly": [[0, 0, 0], [1, 0, 0], ["1/2", "1/2", 0], ["1/2", "-1/2", 0]]},
  "restrictions": {
    "simX": {"kind": "sim", "generators": ["X"]},
    "induced": {"kind": "effects", "generators": "Xonly"},
    "inline": {"kind": "effects", "generators": [[0, 0, 0], [1, 0, 0]]},
    "noisy": {"kind": "noise", "t": "1/2"}
  },
  "states": {"corner": [1, 1]}
})";

TEST(Model, Loads) {
  Model m = Model::from_json_text(kModel, "inline.json");
  EXPECT_EQ(m.space().dimension(), 2u);
  EXPECT_EQ(m.meter("X"), gbit_x());
  EXPECT_EQ(m.meter("Y"), gbit_y());
  EXPECT_EQ(m.state("corner"), vec({"1", "1"}));
  EXPECT_EQ(m.effect_restriction("Xonly").generators.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<GeneratedBySimulation>(m.restriction("simX")));
  EXPECT_TRUE(std::holds_alternative<InducedByEffects>(m.restriction("induced")));
  EXPECT_TRUE(std::holds_alternative<InducedByEffects>(m.restriction("inline")));
  EXPECT_EQ(std::get<NoiseFamily>(m.restriction("noisy")).t, Rational(1, 2));
  EXPECT_TRUE(validate_model(m).all_valid());
}

TEST(Model, LookupErrors) {
  Model m = Model::from_json_text(kModel);
  EXPECT_THROW(m.meter("Z"), LookupError);
  EXPECT_THROW(m.restriction("nope"), LookupError);
  EXPECT_THROW(m.state("nowhere"), LookupError);
}

TEST(Model, ParseErrorsCarryLocation) {
  try {
    Model::from_json_text(R"({"state_space": {"type": "polytope", "vertices": [[1, "x"]]}})", "bad.json");
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_EQ(e.origin(), "bad.json");
    EXPECT_NE(e.pointer().find("/state_space/vertices"), std::string::npos);
  }
  EXPECT_THROW(Model::from_json_text("{not json", "x"), ModelError);
  EXPECT_THROW(Model::from_json_text(R"({"state_space": {"type": "ball", "dim": 3}, "extra": 1})"), ModelError);
  EXPECT_THROW(Model::from_json_text(R"({"meters": {}})"), ModelError);
  EXPECT_THROW(Model::from_json_text(R"({"state_space": {"type": "ball", "dim": 3},
                                        "restrictions": {"r": {"kind": "noise", "t": 2}}})"),
               ModelError);
}

TEST(Model, ValidationFindsBrokenObjects) {
  Model m = Model::from_json_text(R"({
    "state_space": {"type": "polytope", "vertices": [[1, 1], [1, -1], [-1, -1], [-1, 1]]},
    "meters": {
      "Short": [["0.45", "1/4", 0], ["0.45", "-1/4", 0]],
      "Negative": [["-1/10", 0, 0], ["11/10", 0, 0]]
    },
    "effect_restrictions": {"Lonely": [["1/2", "1/2", 0]]},
    "restrictions": {"dangling": {"kind": "sim", "generators": ["Missing"]}},
    "states": {"far": [3, 0]}
  })");
  auto rep = validate_model(m);
  EXPECT_FALSE(rep.all_valid());
  auto find = [&](const std::string& name) {
    for (const auto& o : rep.objects) {
      if (o.name == name) return o;
    }
    return ObjectVerdict{};
  };
  auto short_meter = find("Short");
  EXPECT_FALSE(short_meter.valid);
  EXPECT_NE(short_meter.problems.front().find("normalization violated"), std::string::npos);
  auto negative = find("Negative");
  EXPECT_FALSE(negative.valid);
  EXPECT_NE(negative.problems.front().find("vertex 0 (1, 1)"), std::string::npos);
  EXPECT_FALSE(find("Lonely").valid);
  EXPECT_FALSE(find("dangling").valid);
  EXPECT_FALSE(find("far").valid);
  EXPECT_THROW(m.meter("Short"), ValidationError);
}

TEST(Reports, ValidationRoundTrip) {
  auto rep = validate_model(Model::from_json_text(kModel));
  EXPECT_EQ(validation_report_from_json(to_json(rep)), rep);
}

TEST(Reports, SimulateRoundTrip) {
  SimulateReport yes{"X", {"X", "Y"}, simulable(gbit_x(), {gbit_x(), gbit_y()}), true};
  EXPECT_EQ(simulate_report_from_json(to_json(yes)), yes);
  SimulateReport no{"Y", {"X"}, simulable(gbit_y(), {gbit_x()}), true};
  EXPECT_EQ(simulate_report_from_json(to_json(no)), no);
}

TEST(Reports, ClassifyRoundTrip) {
  ClassifyReport rep{"noisy", classify(NoiseFamily{Rational(1, 2)}, gbit()), true};
  EXPECT_EQ(classify_report_from_json(to_json(rep)), rep);
}

TEST(Reports, NTomicRoundTripWithSurds) {
  PureQubitState n1(vec({"0", "0", "1"}));
  PureQubitState n2(vec({"4/5", "0", "-3/5"}));
  Meter a = *UdMeter(Rational(3, 5), Rational(3, 5), n1, n2).meter();
  NTomicReport rep{"ud", certify_n_tomic(a, 2, StateSpace::ball(3)), true};
  EXPECT_EQ(ntomic_report_from_json(to_json(rep)), rep);
}

TEST(Reports, NoiseRoundTrip) {
  NoiseReport rep{"T", ExtremeValue(1), std::nullopt, std::nullopt, true};
  EXPECT_EQ(noise_report_from_json(to_json(rep)), rep);
  NoiseReport with_t{"X", ExtremeValue(0), Rational(1, 2), false, false};
  EXPECT_EQ(noise_report_from_json(to_json(with_t)), with_t);
}

TEST(Reports, CompatRoundTrip) {
  CompatReport no{"X", "Y", are_compatible(gbit_x(), gbit_y(), gbit()), true};
  EXPECT_EQ(compat_report_from_json(to_json(no)), no);
  CompatReport yes{"X", "X", are_compatible(gbit_x(), gbit_x(), gbit()), true};
  EXPECT_EQ(compat_report_from_json(to_json(yes)), yes);
}

TEST(Reports, UdRoundTrip) {
  UdReport rep{0, Rational(1, 2), "none", ud_dichotomic_bound(0), ud_unrestricted_optimum(0),
               ud_max_valid_q(0, UdConstraint::None)};
  std::string text = to_json(rep);
  EXPECT_NE(text.find("\"command\": \"ud\""), std::string::npos);
  EXPECT_EQ(ud_report_from_json(text), rep);
}

TEST(Reports, MalformedJsonRejected) {
  EXPECT_THROW(ud_report_from_json("{}"), ValidationError);
  EXPECT_THROW(simulate_report_from_json("[1, 2"), ValidationError);
}

}  // namespace
}  // namespace gptr
