// Copyright 2026 The Adinkra Heights Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <json.hpp>

#include "adinkra/verify.hpp"

using namespace adinkra;

namespace {

VerifyContext& context() {
  static VerifyContext ctx;
  return ctx;
}

}  // namespace

class VerifySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifySuite, Passes) {
  const SuiteReport r = run_suite(GetParam(), context());
  EXPECT_EQ(r.suite, GetParam());
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(All, VerifySuite,
                         ::testing::Values("counts", "morse", "steps", "theorem", "geometry",
                                           "equivariance"));

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_suite("nope", context()), std::invalid_argument);
}

TEST(Verify, JsonIsStable) {
  const auto a = reports_to_json(run_suites("counts", context()));
  const auto b = reports_to_json(run_suites("counts", context()));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  ASSERT_TRUE(j.is_array() || j.is_object());
}
