// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <string>

#include "gptr/gptr.h"
#include "json.hpp"

namespace {

using nlohmann::json;

const char* kModel = R"({
  "state_space": {"type": "polytope", "vertices": [[1, 1], [1, -1], [-1, -1], [-1, 1]]},
  "meters": {
    "X": [["1/2", "1/2", 0], ["1/2", "-1/2", 0]],
    "Y": [["1/2", 0, "1/2"], ["1/2", 0, "-1/2"]],
    "Xnoisy": [["1/2", "1/4", 0], ["1/2", "-1/4", 0]],
    "T": [["1/3", 0, 0], ["2/3", 0, 0]]
  },
  "restrictions": {"noisy": {"kind": "noise", "t": "1/2"}, "simX": {"kind": "sim", "generators": ["X"]}}
})";

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(gptr_model_load_json(kModel, &model_), GPTR_OK) << gptr_last_error(); }
  void TearDown() override { gptr_model_free(model_); }

  // Takes ownership of a report string and parses it.
  static json take(char* report) {
    EXPECT_NE(report, nullptr);
    if (report == nullptr) return json();
    json j = json::parse(report);
    gptr_string_free(report);
    return j;
  }

  gptr_model* model_ = nullptr;
};

TEST_F(CApi, Version) { EXPECT_STRNE(gptr_version(), ""); }

TEST_F(CApi, Validate) {
  char* report = nullptr;
  ASSERT_EQ(gptr_validate(model_, &report), GPTR_OK);
  json j = take(report);
  EXPECT_EQ(j["command"], "validate");
  EXPECT_EQ(j["all_valid"], true);
}

TEST_F(CApi, SimulatePositiveAndNegative) {
  const char* sims[] = {"X"};
  char* report = nullptr;
  ASSERT_EQ(gptr_simulate(model_, "Xnoisy", sims, 1, &report), GPTR_OK);
  json yes = take(report);
  EXPECT_EQ(yes["simulable"], true);
  EXPECT_EQ(yes["verified"], true);

  report = nullptr;
  ASSERT_EQ(gptr_simulate(model_, "Y", sims, 1, &report), GPTR_NEGATIVE);
  json no = take(report);
  EXPECT_EQ(no["simulable"], false);
  EXPECT_EQ(no["verified"], true);
}

TEST_F(CApi, UnknownNameIsUsageError) {
  const char* sims[] = {"Nope"};
  char* report = nullptr;
  EXPECT_EQ(gptr_simulate(model_, "X", sims, 1, &report), GPTR_USAGE);
  EXPECT_EQ(report, nullptr);
  EXPECT_NE(std::string(gptr_last_error()).find("Nope"), std::string::npos);
}

TEST_F(CApi, NullArguments) {
  char* report = nullptr;
  EXPECT_EQ(gptr_validate(nullptr, &report), GPTR_USAGE);
  EXPECT_EQ(gptr_validate(model_, nullptr), GPTR_USAGE);
  gptr_model* m = nullptr;
  EXPECT_EQ(gptr_model_load_json(nullptr, &m), GPTR_USAGE);
}

TEST_F(CApi, BadModelIsValidationError) {
  gptr_model* m = nullptr;
  EXPECT_EQ(gptr_model_load_json("{\"meters\": 3}", &m), GPTR_VALIDATION);
  EXPECT_EQ(m, nullptr);
  EXPECT_EQ(gptr_model_load_file("/nonexistent/model.json", &m), GPTR_VALIDATION);
}

TEST_F(CApi, Classify) {
  char* report = nullptr;
  ASSERT_EQ(gptr_classify(model_, "noisy", 1, 100, &report), GPTR_OK);
  json j = take(report);
  EXPECT_EQ(j["label"], "R3");
  EXPECT_EQ(j["verified"], true);
}

TEST_F(CApi, NTomicNoiseCompat) {
  char* report = nullptr;
  ASSERT_EQ(gptr_ntomic(model_, "X", 2, &report), GPTR_OK);
  EXPECT_EQ(take(report)["certificate"]["verdict"], "certified-n-tomic");

  report = nullptr;
  ASSERT_EQ(gptr_noise(model_, "T", nullptr, &report), GPTR_OK);
  EXPECT_EQ(take(report)["member_for_all_t"], true);

  report = nullptr;
  ASSERT_EQ(gptr_noise(model_, "X", "1/2", &report), GPTR_NEGATIVE);
  EXPECT_EQ(take(report)["member"], false);

  report = nullptr;
  EXPECT_EQ(gptr_noise(model_, "X", "one half", &report), GPTR_USAGE);

  report = nullptr;
  ASSERT_EQ(gptr_compat(model_, "X", "Y", &report), GPTR_NEGATIVE);
  json c = take(report);
  EXPECT_EQ(c["compatible"], false);
  EXPECT_EQ(c["verified"], true);
}

TEST_F(CApi, UnambiguousDiscrimination) {
  char* report = nullptr;
  ASSERT_EQ(gptr_ud_overlap("1/2", 1, &report), GPTR_OK);
  json d = take(report);
  EXPECT_EQ(d["constraint"], "dichotomic");
  EXPECT_EQ(d["optimizer"]["success"], "1/4");

  report = nullptr;
  ASSERT_EQ(gptr_ud_overlap("1/2", 0, &report), GPTR_OK);
  json j = take(report);
  EXPECT_EQ(j["dichotomic_bound"], "1/4");
  EXPECT_EQ(j["unrestricted_optimum"]["exact"], "1 - 1/2*sqrt(2)");
  EXPECT_NEAR(std::stod(j["optimizer"]["success_decimal"].get<std::string>()), 0.292893218813, 1e-6);

  const char* n1[] = {"0", "0", "1"};
  const char* n2[] = {"1", "0", "0"};
  report = nullptr;
  ASSERT_EQ(gptr_ud_bloch(n1, n2, 0, &report), GPTR_OK);
  EXPECT_EQ(take(report)["overlap_sq"], "1/2");

  const char* bad[] = {"1", "1", "0"};
  report = nullptr;
  EXPECT_EQ(gptr_ud_bloch(n1, bad, 0, &report), GPTR_VALIDATION);
  report = nullptr;
  EXPECT_EQ(gptr_ud_overlap("3/2", 0, &report), GPTR_USAGE);
}

}  // namespace
