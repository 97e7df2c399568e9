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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adinkra/heights.hpp"

namespace adinkra {

struct Move {
  enum class Kind { Lower, Raise };
  Kind kind = Kind::Lower;
  Vertex vertex;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string_view to_string(Move::Kind kind);

/// "fully_extended", "valise" or "inverted_valise". Throws
/// std::invalid_argument for other names.
HeightFn named_height(int n, std::string_view name);

/// A height being steered one move at a time. The current height always
/// validates, and replaying the history from the initial height reproduces it.
class Session {
 public:
  Session(std::string id, HeightFn initial);

  const std::string& id() const { return id_; }
  int dimension() const { return initial_.dimension(); }
  const HeightFn& initial() const { return initial_; }
  const HeightFn& current() const { return current_; }
  const std::vector<Move>& history() const { return history_; }

  /// Throws std::invalid_argument if the vertex is not a legal target.
  void apply(const Move& m);
  HeightFn replay() const;

 private:
  std::string id_;
  HeightFn initial_;
  HeightFn current_;
  std::vector<Move> history_;
};

class SessionNotFound : public std::out_of_range {
 public:
  explicit SessionNotFound(const std::string& id) : std::out_of_range("no session " + id) {}
};

/// Thread-safe session registry. Different sessions proceed in parallel;
/// moves on one session are serialized.
class SessionStore {
 public:
  /// Returns the new session's id.
  std::string create(HeightFn initial);
  /// A consistent copy of the session.
  Session get(const std::string& id) const;
  /// Applies the move and returns the updated copy. If `before` is given it
  /// receives the height the move was applied to.
  Session apply(const std::string& id, const Move& m, HeightFn* before = nullptr);
  bool erase(const std::string& id);
  std::vector<std::string> ids() const;

  /// {"sessions": [{"id", "n", "initial", "history": [{"kind", "vertex"}]}]}.
  /// Current heights are not stored; loading replays the histories.
  std::string snapshot_json() const;
  /// Replaces the store's contents. Throws std::runtime_error on bad input or
  /// a history that does not replay.
  void restore_json(std::string_view text);
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  struct Entry {
    mutable std::mutex mu;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace adinkra
