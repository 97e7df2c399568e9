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

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adinkra/heights.hpp"
#include "adinkra/jacobian.hpp"

namespace adinkra {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool ok() const;
};

/// Shared state for a verification run: the H^5 catalog and its images are
/// built on first use and reused by later suites.
class VerifyContext {
 public:
  explicit VerifyContext(unsigned threads = 0,
                         std::function<void(std::string_view)> log = nullptr);

  const HeightCatalog& catalog5();
  const std::vector<JacobianImage>& images5();
  unsigned threads() const { return threads_; }
  void log(std::string_view message) const;

 private:
  unsigned threads_;
  std::function<void(std::string_view)> log_;
  std::optional<HeightCatalog> catalog_;
  std::optional<std::vector<JacobianImage>> images_;
};

/// counts, morse, steps, theorem, geometry, equivariance.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, VerifyContext& ctx);
/// "all" runs every suite in suite_names() order.
std::vector<SuiteReport> run_suites(std::string_view name, VerifyContext& ctx);

std::string reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace adinkra
