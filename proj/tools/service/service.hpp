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

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "adinkra/jacobian.hpp"
#include "adinkra/session.hpp"

namespace httplib {
class Server;
}

namespace adinkra::service {

struct Options {
  /// Sessions are loaded from and saved to this file when set.
  std::optional<std::filesystem::path> snapshot;
  unsigned threads = 0;
};

/// JSON-over-HTTP front end for interactive height exploration. Routes are
/// documented in docs/api.md.
class Service {
 public:
  explicit Service(Options options = {});
  ~Service();

  /// Registers every route on `server`.
  void mount(httplib::Server& server);
  SessionStore& store() { return store_; }

 private:
  const CensusResult& census_cache();
  void persist();

  Options options_;
  SessionStore store_;
  std::once_flag census_once_;
  std::unique_ptr<CensusResult> census_;
  std::mutex persist_mu_;
};

/// Blocks serving on host:port until the server is stopped.
int serve(const std::string& host, int port, Options options);

}  // namespace adinkra::service
